"""Essential-dimension bounds for finite groups.

Everything here is a bound, never an exact value, except in the abelian and
p-group cases where the essential dimension is known to coincide with the
minimal faithful degree (assuming the base field has enough roots of unity;
that assumption is recorded on every report rather than enforced).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import primes
from .errors import (
    EmptyTable,
    InvalidInput,
    InvalidSpec,
    NotPrime,
    OrderLimitExceeded,
    SearchBoundExceeded,
)
from .groups import DEFAULT_ORDER_LIMIT, FiniteGroup, GroupSpec, construct, unit_group_closure
from .repdim import rdim

ROOTS_OF_UNITY_NOTE = "assumes the base field contains a primitive root of unity of order exponent(G)"


def ed_upper(G: FiniteGroup, *, order_limit: int = DEFAULT_ORDER_LIMIT) -> int:
    """Upper bound: the minimal faithful representation degree."""
    return rdim(G, order_limit=order_limit).total_degree


def ed_lower_sylow(G: FiniteGroup, *, order_limit: int = DEFAULT_ORDER_LIMIT) -> tuple[int, int | None]:
    """Lower bound: max over primes p dividing |G| of the minimal faithful
    degree of a Sylow p-subgroup.  Returns (bound, achieving prime)."""
    if G.order == 1:
        return 0, None
    best, witness = 0, None
    for p in sorted(primes.factorize(G.order)):
        sub = G.sylow(p)
        value = rdim(sub.as_group(), order_limit=order_limit).total_degree
        if value > best:
            best, witness = value, p
    return best, witness


def ed_exact_if_known(G: FiniteGroup, *, order_limit: int = DEFAULT_ORDER_LIMIT) -> int | None:
    """Exact essential dimension when the group is abelian or a p-group;
    None otherwise (never guesses)."""
    if G.order == 1:
        return 0
    if G.is_abelian() or len(primes.factorize(G.order)) == 1:
        return rdim(G, order_limit=order_limit).total_degree
    return None


def semidirect_rdim_lower_bound(q: int, phi_image_size: int) -> int:
    """Lower bound |phi(H)| on the faithful degree of (Z/qZ) x| H for a prime
    power q: a faithful character of the base is forced into an H-orbit of
    that length."""
    if q < 2 or len(primes.factorize(q)) != 1:
        raise InvalidInput(f"q must be a prime power >= 2, got {q}")
    (p, a), = primes.factorize(q).items()
    unit_order = q - q // p
    if phi_image_size < 1 or unit_order % phi_image_size != 0:
        raise InvalidInput(
            f"|phi(H)| = {phi_image_size} does not divide |(Z/{q})^*| = {unit_order}"
        )
    return phi_image_size


@dataclass(frozen=True)
class JordanTable:
    """User-supplied constants j(n) (strong) or weak variants, by dimension.

    The constants are never invented by the toolkit; they come from
    configuration, and reports carry the provenance of which entries fired.
    """

    entries: dict[int, int]
    kind: str = "strong"  # "strong" | "weak"

    def __post_init__(self):
        if self.kind not in ("strong", "weak"):
            raise InvalidInput(f"jordan table kind must be strong or weak, got {self.kind!r}")
        for n, j in self.entries.items():
            if int(n) < 1 or int(j) < 1:
                raise InvalidInput(f"jordan table entries must be >= 1, got {n}: {j}")

    def r_of(self, n: int) -> int:
        return n * self.entries[n]

    @classmethod
    def from_json_file(cls, path: str | Path) -> "JordanTable":
        raw = json.loads(Path(path).read_text())
        kind = raw.pop("kind", "strong")
        entries = {int(k): int(v) for k, v in raw.items()}
        return cls(entries, kind)


@dataclass(frozen=True)
class JordanGapBound:
    """ed(G) > n for every n with rdim(G) > n*j(n); the bound is max(n)+1."""

    bound: int
    entries_used: tuple[int, ...]
    rdim_value: int
    table_kind: str


def ed_lower_from_jordan_table(rdim_value: int, table: JordanTable) -> JordanGapBound:
    """Lower bound on ed from a Jordan-constant table: whenever the group's
    faithful degree exceeds n*j(n), its essential dimension exceeds n."""
    if not table.entries:
        raise EmptyTable("jordan table has no entries")
    fired = tuple(
        n for n in sorted(table.entries) if rdim_value > table.r_of(n)
    )
    bound = (max(fired) + 1) if fired else 1
    return JordanGapBound(bound, fired, rdim_value, table.kind)


@dataclass(frozen=True)
class AbelianFactorReport:
    """Prime-power cyclic decomposition of an abelian group checked against a
    bound: every (q, a) with H = product of (Z/qZ)^a over distinct prime
    powers q must satisfy a <= bound and q <= bound."""

    pairs: tuple[tuple[int, int], ...]
    bound: int
    multiplicities_ok: bool
    prime_powers_ok: bool

    @property
    def ok(self) -> bool:
        return self.multiplicities_ok and self.prime_powers_ok


def check_abelian_factor_bounds(H: FiniteGroup, bound: int) -> AbelianFactorReport:
    pairs = H.primary_decomposition()
    return AbelianFactorReport(
        pairs,
        bound,
        all(a <= bound for _, a in pairs),
        all(q <= bound for q, _ in pairs),
    )


def dirichlet_prime(p: int, n: int, *, cap: int = primes.DEFAULT_PROGRESSION_CAP) -> int:
    """Smallest prime q with q == 1 (mod p^n)."""
    if not primes.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise InvalidInput(f"exponent must be >= 1, got {n}")
    modulus = p**n
    if modulus > 2**40:
        raise InvalidInput(f"p^n = {modulus} is out of the supported range")
    return primes.smallest_prime_in_progression(modulus, cap=cap)


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class EdBoundsReport:
    """Bounds on the essential dimension of one group."""

    group_name: str
    order: int
    ed_lower: int
    ed_upper: int
    ed_exact: int | None
    lower_source: str
    sylow_lower: int = 0
    sylow_prime: int | None = None
    semidirect_lower: int | None = None
    contrapositive_bound: int | None = None
    contrapositive_entries: tuple[int, ...] = ()
    index: int | None = None
    skipped: bool = False
    skip_reason: str | None = None
    notes: str = ROOTS_OF_UNITY_NOTE

    def __post_init__(self):
        if not self.skipped:
            assert self.ed_lower <= self.ed_upper
            if self.ed_exact is not None:
                assert self.ed_lower <= self.ed_exact <= self.ed_upper
                assert self.ed_exact == self.ed_upper


def bounds_report(
    G: FiniteGroup,
    *,
    name: str | None = None,
    jordan_table: JordanTable | None = None,
    semidirect_lower: int | None = None,
    index: int | None = None,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> EdBoundsReport:
    """Assemble every applicable bound for one group."""
    upper = ed_upper(G, order_limit=order_limit)
    sylow_val, sylow_p = ed_lower_sylow(G, order_limit=order_limit)
    exact = ed_exact_if_known(G, order_limit=order_limit)
    contrapositive = None
    if jordan_table is not None:
        contrapositive = ed_lower_from_jordan_table(upper, jordan_table)
    candidates: list[tuple[int, str]] = []
    if exact is not None:
        candidates.append((exact, "exact"))
    candidates.append((sylow_val, "sylow"))
    if semidirect_lower is not None:
        candidates.append((semidirect_lower, "semidirect"))
    if contrapositive is not None:
        candidates.append((contrapositive.bound, "contrapositive"))
    if G.order > 1:
        candidates.append((1, "sylow" if sylow_val >= 1 else "trivial"))
    lower, source = max(candidates, key=lambda c: (c[0], -_SOURCE_RANK[c[1]]))
    return EdBoundsReport(
        group_name=name or G.name,
        order=G.order,
        ed_lower=lower,
        ed_upper=upper,
        ed_exact=exact,
        lower_source=source,
        sylow_lower=sylow_val,
        sylow_prime=sylow_p,
        semidirect_lower=semidirect_lower,
        contrapositive_bound=contrapositive.bound if contrapositive else None,
        contrapositive_entries=contrapositive.entries_used if contrapositive else (),
        index=index,
    )


_SOURCE_RANK = {"exact": 0, "sylow": 1, "semidirect": 2, "contrapositive": 3, "trivial": 4}


# -- families ------------------------------------------------------------------

FAMILY_KINDS = ("semidirect_full_units", "semidirect_custom", "gamma", "dihedral_odd")


@dataclass(frozen=True)
class FamilySpec:
    """A one-parameter family of groups over an index interval."""

    kind: str
    start: int
    stop: int  # inclusive
    p: int | None = None  # for gamma
    units: tuple[int, ...] = ()  # for semidirect_custom

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidInput(f"unknown family kind {self.kind!r}")
        if self.start < 1 or self.stop < self.start:
            raise InvalidInput(f"bad index range {self.start}..{self.stop}")
        if self.kind == "gamma" and (self.p is None or not primes.is_prime(self.p)):
            raise NotPrime(f"gamma families need a prime p, got {self.p}")

    def indices(self) -> list[int]:
        if self.kind == "dihedral_odd":
            return [n for n in range(self.start, self.stop + 1) if n % 2 == 1]
        return list(range(self.start, self.stop + 1))


def _family_row_spec(fs: FamilySpec, n: int) -> tuple[str, GroupSpec, int | None]:
    """(name, group spec, semidirect lower bound or None) for one family index."""
    if fs.kind == "semidirect_full_units":
        units = [u for u in range(1, max(n, 2)) if math.gcd(u, n) == 1] or [1]
        spec = GroupSpec.semidirect_cyclic(n, units)
        bound = None
        if n >= 2 and len(primes.factorize(n)) == 1:
            bound = len(unit_group_closure(n, units))
        return f"semidirect_full_units[n={n}]", spec, bound
    if fs.kind == "semidirect_custom":
        units = sorted({u % n for u in fs.units} - {0}) if n > 1 else []
        spec = GroupSpec.semidirect_cyclic(n, units)
        bound = None
        if n >= 2 and len(primes.factorize(n)) == 1:
            bound = len(unit_group_closure(n, units))
        return f"semidirect_custom[n={n}]", spec, bound
    if fs.kind == "gamma":
        spec = GroupSpec.gamma(fs.p, n)
        return f"gamma[p={fs.p},n={n}]", spec, fs.p**n
    if fs.kind == "dihedral_odd":
        spec = GroupSpec.dihedral(n)
        bound = 2 if n >= 3 and len(primes.factorize(n)) == 1 else None
        return f"dihedral_odd[n={n}]", spec, bound
    raise InvalidInput(f"unknown family kind {fs.kind!r}")


def family_report(
    fs: FamilySpec,
    *,
    jordan_table: JordanTable | None = None,
    order_limit: int = DEFAULT_ORDER_LIMIT,
    prime_cap: int = primes.DEFAULT_PROGRESSION_CAP,
) -> list[EdBoundsReport]:
    """One bounds row per family index; rows that cannot be built inside the
    limits become structured skip records instead of aborting the report."""
    rows: list[EdBoundsReport] = []
    for n in fs.indices():
        try:
            name, spec, semid = _family_row_spec(fs, n)
        except (InvalidInput, InvalidSpec, NotPrime) as exc:
            rows.append(_skip_row(f"{fs.kind}[n={n}]", n, str(exc)))
            continue
        try:
            G = construct(spec, order_limit=order_limit, prime_cap=prime_cap)
        except (InvalidSpec, OrderLimitExceeded, SearchBoundExceeded) as exc:
            rows.append(_skip_row(name, n, str(exc)))
            continue
        rows.append(
            bounds_report(
                G, name=name, jordan_table=jordan_table,
                semidirect_lower=semid, index=n, order_limit=order_limit,
            )
        )
    return rows


def _skip_row(name: str, n: int, reason: str) -> EdBoundsReport:
    return EdBoundsReport(
        group_name=name, order=0, ed_lower=0, ed_upper=0, ed_exact=None,
        lower_source="skipped", index=n, skipped=True, skip_reason=reason,
        notes="",
    )
