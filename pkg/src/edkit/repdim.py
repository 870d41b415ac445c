"""Minimal faithful representation degree as an exact weighted set cover.

A set of irreducibles is faithful exactly when the intersection of their
kernels contains no minimal normal subgroup, so faithfulness is a covering
condition: every minimal normal subgroup must escape the kernel of some
chosen constituent.  The cover is solved exactly by branch and bound over
irreducibles sorted by degree; repeating a constituent never shrinks the
kernel intersection, so distinct constituents suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, character_table
from .errors import InvalidFactors, TooManyIrreducibles
from .groups import DEFAULT_ORDER_LIMIT, FiniteGroup

_BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class RdimCertificate:
    """A degree-minimal faithful multiset of irreducibles (as sorted indices)."""

    total_degree: int
    constituent_indices: tuple[int, ...]


def rdim(G: FiniteGroup, *, order_limit: int = DEFAULT_ORDER_LIMIT) -> RdimCertificate:
    """Exact minimal dimension of a faithful representation, with certificate.

    The trivial group gets an empty certificate of degree 0 (the one case
    where "smallest positive integer" degenerates).
    """
    if G._rdim is not None:
        return G._rdim
    if G.order == 1:
        cert = RdimCertificate(0, ())
        G._rdim = cert
        return cert
    table = character_table(G, order_limit=order_limit)
    kernels = [table.kernel_class_mask(i) for i in range(len(table))]
    minimal_normals = G.minimal_normal_subgroups()
    class_of = table.classes.class_of
    normal_masks = []
    for sub in minimal_normals:
        mask = 0
        for x in sub.member_indices:
            mask |= 1 << class_of[x]
        normal_masks.append(mask)
    t = len(normal_masks)
    full_cover = (1 << t) - 1
    # covers[i]: bit m set when minimal normal m is NOT inside kernel i
    covers = []
    for ker in kernels:
        c = 0
        for m, nm in enumerate(normal_masks):
            if nm & ~ker:
                c |= 1 << m
        covers.append(c)
    degrees = table.degrees()

    best_degree = sum(degrees)
    best_set: tuple[int, ...] = tuple(range(len(degrees)))

    def search(pos: int, covered: int, degree: int, chosen: list[int]) -> None:
        nonlocal best_degree, best_set
        if covered == full_cover:
            if degree < best_degree:
                best_degree = degree
                best_set = tuple(chosen)
            return
        if degree + 1 >= best_degree or pos == len(degrees):
            return
        gain = covers[pos] & ~covered
        if gain:
            chosen.append(pos)
            search(pos + 1, covered | gain, degree + degrees[pos], chosen)
            chosen.pop()
        search(pos + 1, covered, degree, chosen)

    search(0, 0, 0, [])
    cert = RdimCertificate(best_degree, best_set)
    _check_certificate(G, table, kernels, cert)
    G._rdim = cert
    return cert


def _check_certificate(G: FiniteGroup, table: CharacterTable,
                       kernels: list[int], cert: RdimCertificate) -> None:
    """Independent faithfulness/minimality recheck of a search result."""
    inter = frozenset(range(G.order))
    for i in cert.constituent_indices:
        from .chartab import kernel

        inter &= kernel(table, i).member_set()
    assert inter == frozenset({0}), "certificate kernels do not intersect trivially"
    full = (1 << len(table.classes)) - 1
    for drop in cert.constituent_indices:
        mask = full
        for i in cert.constituent_indices:
            if i != drop:
                mask &= kernels[i]
        assert mask != 1, "certificate contains a redundant constituent"
    assert sum(table.degrees()[i] for i in cert.constituent_indices) == cert.total_degree


def rdim_abelian(invariant_factors: tuple[int, ...] | list[int]) -> int:
    """Minimal faithful degree of an abelian group in invariant-factor form:
    one diagonal character per factor."""
    factors = [int(f) for f in invariant_factors]
    for f in factors:
        if f < 2:
            raise InvalidFactors(f"invariant factors must be >= 2, got {f}")
    for a, b in zip(factors, factors[1:]):
        if b % a != 0:
            raise InvalidFactors(f"{a} does not divide {b}: not a divisibility chain")
    return len(factors)


def brute_force_rdim(table: CharacterTable) -> int:
    """Oracle: exhaustive minimum over all subsets of irreducibles whose
    kernel intersection is trivial.  Independent of the cover search (it
    never looks at minimal normal subgroups)."""
    r = len(table)
    if r > _BRUTE_FORCE_LIMIT:
        raise TooManyIrreducibles(f"{r} irreducibles exceeds the brute-force limit")
    if table.group.order == 1:
        return 0
    kernels = [table.kernel_class_mask(i) for i in range(r)]
    degrees = table.degrees()
    full = (1 << len(table.classes)) - 1
    identity_only = 1  # class 0 is the identity class
    best = None
    inter = [full] * (1 << r)
    deg = [0] * (1 << r)
    for mask in range(1, 1 << r):
        low = mask & -mask
        i = low.bit_length() - 1
        inter[mask] = inter[mask ^ low] & kernels[i]
        deg[mask] = deg[mask ^ low] + degrees[i]
        if inter[mask] == identity_only and (best is None or deg[mask] < best):
            best = deg[mask]
    assert best is not None, "no faithful subset found (regular representation is faithful)"
    return best
