"""Finite permutation groups: constructors and structural computations.

Conventions fixed here and inherited by every other module:

* composition is the left action ``(s * t)(x) = s(t(x))``;
* element 0 is the identity, and element indices follow breadth-first
  closure order from the generator sequence (right multiplication by
  generators in the order given), so indexing is deterministic;
* groups and subgroups are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import primes
from .errors import (
    InvalidPermutation,
    InvalidSpec,
    NotAbelian,
    NotPrime,
    OrderLimitExceeded,
    TrivialGroup,
)
from .perm import Permutation

DEFAULT_ORDER_LIMIT = 4096
DEFAULT_JORDAN_LIMIT = 512

# Below this order a full multiplication table is cached on first use.
_TABLE_CACHE_LIMIT = 1024


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes in canonical order (sorted by minimal element index)."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    sizes: tuple[int, ...]
    representatives: tuple[int, ...]
    rep_orders: tuple[int, ...]
    inverse_class: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


class FiniteGroup:
    """Explicitly enumerated permutation group with indexed elements."""

    def __init__(self, element_array: np.ndarray, generator_indices: tuple[int, ...],
                 name: str | None = None):
        # element_array row i = images of element i; row 0 must be the identity.
        arr = np.ascontiguousarray(element_array, dtype=np.int32)
        self._arr = arr
        self._arr.setflags(write=False)
        self.degree = int(arr.shape[1])
        self.order = int(arr.shape[0])
        self._index = {arr[i].tobytes(): i for i in range(self.order)}
        self._generator_indices = generator_indices
        self.name = name or f"group(order={self.order},degree={self.degree})"
        self._inv: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._table: np.ndarray | None = None
        self._classes: ClassData | None = None
        self._center: Subgroup | None = None
        self._is_abelian: bool | None = None
        self._ncl_cache: dict[int, frozenset[int]] = {}
        self._cent_cache: dict[int, frozenset[int]] = {}
        self._chartab = None  # lazily filled by chartab.character_table
        self._rdim = None  # lazily filled by repdim.rdim

    # -- basic element access ------------------------------------------------

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(self.element(i) for i in self._generator_indices)

    @property
    def generator_indices(self) -> tuple[int, ...]:
        return self._generator_indices

    def element(self, i: int) -> Permutation:
        return Permutation(self._arr[i])

    def elements(self) -> range:
        return range(self.order)

    def image_row(self, i: int) -> np.ndarray:
        return self._arr[i]

    def index_of(self, perm: Permutation | np.ndarray) -> int:
        arr = perm if isinstance(perm, np.ndarray) else np.asarray(perm.images, dtype=np.int32)
        key = np.ascontiguousarray(arr, dtype=np.int32).tobytes()
        if key not in self._index:
            raise KeyError("permutation is not an element of this group")
        return self._index[key]

    def __contains__(self, perm: Permutation) -> bool:
        key = np.asarray(perm.images, dtype=np.int32).tobytes()
        return key in self._index

    # -- multiplication ------------------------------------------------------

    def _ensure_table(self) -> np.ndarray | None:
        if self._table is None and self.order <= _TABLE_CACHE_LIMIT:
            n = self.order
            table = np.empty((n, n), dtype=np.int32)
            idx = self._index
            arr = self._arr
            for i in range(n):
                rows = arr[i][arr]  # row j = images of element i * element j
                table[i] = [idx[rows[j].tobytes()] for j in range(n)]
            self._table = table
        return self._table

    def mult(self, i: int, j: int) -> int:
        """Index of element i * element j (element j applied first)."""
        table = self._ensure_table()
        if table is not None:
            return int(table[i, j])
        comp = self._arr[i][self._arr[j]]
        return self._index[comp.tobytes()]

    def mult_many(self, i: int, js: Sequence[int]) -> list[int]:
        """Indices of element i * element j for each j in js."""
        table = self._ensure_table()
        if table is not None:
            return [int(x) for x in table[i, list(js)]]
        rows = self._arr[i][self._arr[list(js)]]
        idx = self._index
        return [idx[rows[k].tobytes()] for k in range(rows.shape[0])]

    def rmult_many(self, js: Sequence[int], i: int) -> list[int]:
        """Indices of element j * element i for each j in js."""
        table = self._ensure_table()
        if table is not None:
            return [int(x) for x in table[list(js), i]]
        rows = self._arr[list(js)][:, self._arr[i]]
        idx = self._index
        return [idx[rows[k].tobytes()] for k in range(rows.shape[0])]

    def inverse(self, i: int) -> int:
        if self._inv is None:
            n, deg = self.order, self.degree
            inv = np.empty(n, dtype=np.int32)
            buf = np.empty(deg, dtype=np.int32)
            for k in range(n):
                buf[self._arr[k]] = np.arange(deg, dtype=np.int32)
                inv[k] = self._index[buf.tobytes()]
            inv.setflags(write=False)
            self._inv = inv
        return int(self._inv[i])

    def conjugate(self, g: int, x: int) -> int:
        """Index of g * x * g^-1."""
        return self.mult(self.mult(g, x), self.inverse(g))

    # -- element/structure data ----------------------------------------------

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = np.array(
                [self.element(k).order() for k in range(self.order)], dtype=np.int64
            )
            self._orders.setflags(write=False)
        return int(self._orders[i])

    def exponent(self) -> int:
        """lcm of all element orders."""
        return math.lcm(*(self.element_order(i) for i in range(self.order)))

    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            gens = self._generator_indices
            self._is_abelian = all(
                self.mult(a, b) == self.mult(b, a) for a in gens for b in gens
            )
        return self._is_abelian

    def conjugacy_classes(self) -> ClassData:
        """Partition into conjugacy classes, canonically ordered."""
        if self._classes is not None:
            return self._classes
        n = self.order
        assigned = [-1] * n
        raw_classes: list[list[int]] = []
        gens = self._generator_indices or (0,)
        for start in range(n):
            if assigned[start] >= 0:
                continue
            cid = len(raw_classes)
            orbit = [start]
            assigned[start] = cid
            queue = [start]
            while queue:
                x = queue.pop()
                for g in gens:
                    y = self.conjugate(g, x)
                    if assigned[y] < 0:
                        assigned[y] = cid
                        orbit.append(y)
                        queue.append(y)
            raw_classes.append(sorted(orbit))
        # BFS scan order already yields classes sorted by minimal element.
        classes = tuple(tuple(c) for c in raw_classes)
        class_of = tuple(assigned)
        reps = tuple(c[0] for c in classes)
        sizes = tuple(len(c) for c in classes)
        rep_orders = tuple(self.element_order(r) for r in reps)
        inverse_class = tuple(class_of[self.inverse(r)] for r in reps)
        cd = ClassData(classes, class_of, sizes, reps, rep_orders, inverse_class)
        self._classes = cd
        return cd

    def centralizer(self, x: int) -> frozenset[int]:
        if x not in self._cent_cache:
            self._cent_cache[x] = frozenset(
                g for g in range(self.order)
                if self.mult(g, x) == self.mult(x, g)
            )
        return self._cent_cache[x]

    def center(self) -> "Subgroup":
        if self._center is None:
            gens = self._generator_indices or (0,)
            members = [
                z for z in range(self.order)
                if all(self.mult(z, g) == self.mult(g, z) for g in gens)
            ]
            self._center = Subgroup(self, tuple(members))
        return self._center

    # -- subgroup machinery ----------------------------------------------------

    def closure_indices(self, seed: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        gens = sorted(set(seed) - {0})
        members = {0}
        members.update(gens)
        frontier = list(members)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mult(x, g)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    def subgroup(self, indices: Iterable[int], *, validate: bool = True) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(indices) | {0})), validate=validate)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,), validate=False)

    def whole_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), validate=False)

    def small_generating_set(self, members: Sequence[int]) -> tuple[int, ...]:
        """Greedy generating set for the subgroup on `members` (deterministic)."""
        gens: list[int] = []
        have: frozenset[int] = frozenset({0})
        for x in sorted(members):
            if x not in have:
                gens.append(x)
                have = self.closure_indices(gens)
                if len(have) == len(members):
                    break
        return tuple(gens)

    def normal_closure(self, x: int) -> frozenset[int]:
        """Smallest normal subgroup containing element x (cached per class)."""
        cd = self.conjugacy_classes()
        cid = cd.class_of[x]
        if cid in self._ncl_cache:
            return self._ncl_cache[cid]
        outer = self._generator_indices or (0,)
        gens = [cd.representatives[cid]]
        members = self.closure_indices(gens)
        while True:
            new = []
            for h in gens:
                for g in outer:
                    c = self.conjugate(g, h)
                    if c not in members:
                        new.append(c)
            if not new:
                break
            gens.extend(new)
            members = self.closure_indices(gens)
        self._ncl_cache[cid] = members
        return members

    def minimal_normal_subgroups(self) -> tuple["Subgroup", ...]:
        """Minimal nontrivial normal subgroups, from per-element normal closures."""
        if self.order == 1:
            raise TrivialGroup("the trivial group has no nontrivial normal subgroups")
        cd = self.conjugacy_classes()
        closures: dict[frozenset[int], None] = {}
        for cid in range(1, len(cd)):
            closures[self.normal_closure(cd.representatives[cid])] = None
        masks = []
        for cl in closures:
            mask = 0
            for i in cl:
                mask |= 1 << i
            masks.append((mask, cl))
        minimal = []
        for mask, cl in masks:
            if not any(
                other != mask and other & mask == other for other, _ in masks
            ):
                minimal.append(cl)
        minimal.sort(key=lambda cl: (len(cl), sorted(cl)))
        return tuple(Subgroup(self, tuple(sorted(cl)), validate=False) for cl in minimal)

    def commutator_subgroup(self) -> "Subgroup":
        """Derived subgroup: normal closure of generator commutators."""
        gens = self._generator_indices
        comms = set()
        for a in gens:
            for b in gens:
                c = self.mult(self.mult(a, b), self.inverse(self.mult(b, a)))
                comms.add(c)
        members = set(self.closure_indices(comms))
        # close under conjugation by generators until normal
        while True:
            extra = {
                self.conjugate(g, x)
                for g in gens
                for x in list(members)
                if self.conjugate(g, x) not in members
            }
            if not extra:
                break
            members = set(self.closure_indices(members | extra))
        return Subgroup(self, tuple(sorted(members)), validate=False)

    def sylow(self, p: int) -> "Subgroup":
        """Sylow p-subgroup: order is exactly the p-part of the group order."""
        if not primes.is_prime(p):
            raise NotPrime(f"{p} is not prime")
        pp = 1
        while self.order % (pp * p) == 0:
            pp *= p
        if pp == 1:
            return self.trivial_subgroup()
        # seed with a maximal-order p-element (ties: minimal index)
        best, best_ord = 0, 1
        for x in range(self.order):
            o = self.element_order(x)
            if o > best_ord and _is_power_of(o, p):
                best, best_ord = x, o
        gens = [best]
        members = self.closure_indices(gens)
        while len(members) < pp:
            normalizer = self._normalizer_of(members, gens)
            adjoined = None
            for y in sorted(normalizer):
                if y not in members and _is_power_of(self.element_order(y), p):
                    adjoined = y
                    break
            if adjoined is None:  # impossible for a non-Sylow p-subgroup
                raise RuntimeError("Sylow ascent failed to find a p-element in the normalizer")
            gens.append(adjoined)
            members = self.closure_indices(gens)
        assert len(members) == pp
        return Subgroup(self, tuple(sorted(members)), validate=False)

    def _normalizer_of(self, members: frozenset[int], gens: Sequence[int]) -> list[int]:
        out = []
        for g in range(self.order):
            if all(self.conjugate(g, h) in members for h in gens):
                out.append(g)
        return out

    def is_normal_set(self, members: frozenset[int] | set[int]) -> bool:
        cd = self.conjugacy_classes()
        hit = {cd.class_of[x] for x in members}
        return sum(cd.sizes[c] for c in hit) == len(members)

    # -- minimal-index abelian subgroups ---------------------------------------

    def abelian_subgroup_of_min_index(
        self, *, require_normal: bool = False, limit: int = DEFAULT_JORDAN_LIMIT
    ) -> "Subgroup":
        """Abelian (optionally normal) subgroup of minimal index.

        Exhaustive backtracking over commuting element sets inside
        centralizer chains, pruned by the best order found.  Every maximal
        abelian subgroup, and every maximum-order normal abelian subgroup,
        contains the center, so the search is rooted there.
        """
        if self.order > limit:
            raise OrderLimitExceeded(
                f"order {self.order} exceeds the abelian-search limit {limit}"
            )
        if self.is_abelian():
            return self.whole_subgroup()
        root = frozenset(self.center().member_indices)
        root_cent = frozenset(range(self.order))
        for z in root:
            root_cent &= self.centralizer(z)

        best: list = [None]  # (order, sorted element tuple)

        def consider(h: frozenset[int]) -> None:
            if require_normal and not self.is_normal_set(h):
                return
            key = (len(h), tuple(sorted(h)))
            if best[0] is None or key[0] > best[0][0] or (
                key[0] == best[0][0] and key[1] < best[0][1]
            ):
                best[0] = key

        visited: set[frozenset[int]] = {root}
        consider(root)

        def extend(h: frozenset[int], cent: frozenset[int]) -> None:
            for c in sorted(cent - h):
                h2 = self.closure_indices(h | {c})
                if h2 in visited:
                    continue
                visited.add(h2)
                cent2 = cent & self.centralizer(c)
                consider(h2)
                if best[0] is not None and len(cent2) < best[0][0]:
                    continue  # no extension inside cent2 can beat the incumbent
                if len(h2) < len(cent2):
                    extend(h2, cent2)

        extend(root, root_cent)
        assert best[0] is not None
        return Subgroup(self, best[0][1], validate=False)

    # -- misc ------------------------------------------------------------------

    def abelian_invariants(self) -> tuple[int, ...]:
        """Invariant factors d_1 | d_2 | ... of an abelian group."""
        if not self.is_abelian():
            raise NotAbelian(f"{self.name} is not abelian")
        if self.order == 1:
            return ()
        primary: dict[int, list[int]] = {}
        orders = [self.element_order(i) for i in range(self.order)]
        for p in primes.factorize(self.order):
            # count elements of order dividing p^k; differences give the
            # number of cyclic factors of order >= p^k
            exps: list[int] = []
            k = 1
            prev = 0
            while True:
                cnt = sum(1 for o in orders if _is_power_of(o, p) and o <= p**k)
                cur = _int_log(cnt, p)
                step = cur - prev
                if step == 0:
                    break
                exps.append(step)
                prev = cur
                k += 1
            # exps[k-1] = number of factors with exponent >= k
            factors = []
            for k, count in enumerate(exps, start=1):
                nxt = exps[k] if k < len(exps) else 0
                factors.extend([p**k] * (count - nxt))
            primary[p] = sorted(factors, reverse=True)
        width = max(len(v) for v in primary.values())
        invariants = []
        for pos in range(width):
            d = 1
            for p, factors in primary.items():
                if pos < len(factors):
                    d *= factors[pos]
            invariants.append(d)
        return tuple(sorted(invariants))

    def primary_decomposition(self) -> tuple[tuple[int, int], ...]:
        """Elementary divisors of an abelian group, as (prime_power, multiplicity)
        pairs with distinct prime powers, sorted ascending."""
        if not self.is_abelian():
            raise NotAbelian(f"{self.name} is not abelian")
        counts: dict[int, int] = {}
        for d in self.abelian_invariants():
            for p, k in primes.factorize(d).items():
                q = p**k
                counts[q] = counts.get(q, 0) + 1
        return tuple(sorted(counts.items()))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _int_log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


class Subgroup:
    """Subgroup of a FiniteGroup, stored as a sorted tuple of element indices."""

    __slots__ = ("parent", "member_indices", "_member_set", "_group_cache")

    def __init__(self, parent: FiniteGroup, member_indices: tuple[int, ...],
                 *, validate: bool = True):
        members = tuple(sorted(set(int(i) for i in member_indices)))
        if not members or members[0] != 0:
            raise InvalidSpec("a subgroup must contain the identity (index 0)")
        mset = frozenset(members)
        if validate:
            for a in members:
                if parent.inverse(a) not in mset:
                    raise InvalidSpec("member set is not closed under inversion")
                for b in members:
                    if parent.mult(a, b) not in mset:
                        raise InvalidSpec("member set is not closed under multiplication")
        if parent.order % len(members) != 0:
            raise InvalidSpec("subgroup order must divide the group order")
        self.parent = parent
        self.member_indices = members
        self._member_set = mset
        self._group_cache: tuple[FiniteGroup, tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return len(self.member_indices)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, i: int) -> bool:
        return i in self._member_set

    def member_set(self) -> frozenset[int]:
        return self._member_set

    def is_abelian(self) -> bool:
        g = self.parent
        m = self.member_indices
        return all(g.mult(a, b) == g.mult(b, a) for a in m for b in m)

    def is_normal(self) -> bool:
        return self.parent.is_normal_set(self._member_set)

    def as_group(self) -> FiniteGroup:
        """Standalone FiniteGroup on the same points; see `to_parent_index`."""
        return self._realize()[0]

    def to_parent_index(self, sub_index: int) -> int:
        """Parent element index of the subgroup-group element `sub_index`."""
        return self._realize()[1][sub_index]

    def _realize(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        if self._group_cache is None:
            parent = self.parent
            gens = parent.small_generating_set(self.member_indices)
            grp = generate_group(
                [parent.element(i) for i in gens],
                parent.degree,
                order_limit=max(DEFAULT_ORDER_LIMIT, parent.order),
                name=f"subgroup(order={self.order}) of {parent.name}",
            )
            assert grp.order == self.order
            to_parent = tuple(
                parent.index_of(grp.image_row(i)) for i in range(grp.order)
            )
            self._group_cache = (grp, to_parent)
        return self._group_cache

    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.parent.element_order(i) for i in self.member_indices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.member_indices == self.member_indices
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.member_indices))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, index={self.index} in {self.parent.name!r})"


# -- construction --------------------------------------------------------------


def generate_group(
    generators: Sequence[Permutation],
    degree: int,
    *,
    order_limit: int = DEFAULT_ORDER_LIMIT,
    name: str | None = None,
) -> FiniteGroup:
    """Close a generator list under composition (breadth-first, deterministic)."""
    if degree < 1:
        raise InvalidSpec(f"degree must be >= 1, got {degree}")
    for g in generators:
        if g.degree != degree:
            raise InvalidSpec(
                f"generator degree {g.degree} does not match group degree {degree}"
            )
    gen_arrs = [np.asarray(g.images, dtype=np.int32) for g in generators]
    identity = np.arange(degree, dtype=np.int32)
    rows = [identity]
    index = {identity.tobytes(): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for garr in gen_arrs:
                comp = rows[i][garr]  # right multiplication: element * generator
                key = comp.tobytes()
                if key not in index:
                    if len(rows) >= order_limit:
                        raise OrderLimitExceeded(
                            f"closure exceeds the order limit {order_limit}"
                        )
                    index[key] = len(rows)
                    rows.append(comp)
                    nxt.append(index[key])
        frontier = nxt
    arr = np.stack(rows) if rows else identity[None, :]
    gen_indices = tuple(index[g.tobytes()] for g in gen_arrs)
    return FiniteGroup(arr, gen_indices, name=name)


@dataclass(frozen=True)
class GroupSpec:
    """Recipe for one of the supported group families."""

    kind: str
    params: dict

    KINDS = (
        "cyclic", "abelian", "dihedral", "symmetric",
        "semidirect_cyclic", "gamma", "explicit",
    )

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("cyclic", {"n": n})

    @classmethod
    def abelian(cls, *factors: int) -> "GroupSpec":
        return cls("abelian", {"factors": list(factors)})

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        return cls("dihedral", {"n": n})

    @classmethod
    def symmetric(cls, n: int) -> "GroupSpec":
        return cls("symmetric", {"n": n})

    @classmethod
    def semidirect_cyclic(cls, n: int, units: Sequence[int]) -> "GroupSpec":
        return cls("semidirect_cyclic", {"n": n, "units": list(units)})

    @classmethod
    def gamma(cls, p: int, n: int) -> "GroupSpec":
        return cls("gamma", {"p": p, "n": n})

    @classmethod
    def explicit(cls, degree: int, generators: Sequence[Sequence[int]]) -> "GroupSpec":
        return cls("explicit", {"degree": degree, "generators": [list(g) for g in generators]})

    def describe(self) -> str:
        p = self.params
        if self.kind == "cyclic":
            return f"cyclic({p['n']})"
        if self.kind == "abelian":
            return "abelian(" + "x".join(str(f) for f in p["factors"]) + ")"
        if self.kind == "dihedral":
            return f"dihedral({p['n']})"
        if self.kind == "symmetric":
            return f"symmetric({p['n']})"
        if self.kind == "semidirect_cyclic":
            units = ",".join(str(u) for u in p["units"])
            return f"semidirect({p['n']};units={units})"
        if self.kind == "gamma":
            return f"gamma(p={p['p']},n={p['n']})"
        if self.kind == "explicit":
            return f"explicit(degree={p['degree']})"
        return f"{self.kind}({p})"


def unit_group_closure(n: int, units: Sequence[int]) -> tuple[int, ...]:
    """Multiplicative closure of the given units modulo n (sorted)."""
    for u in units:
        if math.gcd(int(u) % n if n > 1 else 0, n) != 1 and n > 1:
            raise InvalidSpec(f"unit {u} is not coprime to {n}")
    if n <= 1:
        return (0,) if n == 1 else ()
    have = {1}
    frontier = [1]
    gens = sorted({int(u) % n for u in units})
    while frontier:
        nxt = []
        for x in frontier:
            for u in gens:
                y = x * u % n
                if y not in have:
                    have.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(have))


def _affine_group(n: int, units: Sequence[int], *, order_limit: int,
                  name: str) -> FiniteGroup:
    """Group of maps x -> u*x + b on Z/n generated by x+1 and the given units."""
    if n == 1:
        return generate_group([Permutation([0])], 1, order_limit=order_limit, name=name)
    closed_units = unit_group_closure(n, units)
    projected = n * len(closed_units)
    if projected > order_limit:
        raise OrderLimitExceeded(
            f"{name}: projected order {projected} exceeds the limit {order_limit}"
        )
    gens = [Permutation([(x + 1) % n for x in range(n)])]
    for u in sorted({int(u) % n for u in units} - {1}):
        gens.append(Permutation([u * x % n for x in range(n)]))
    grp = generate_group(gens, n, order_limit=order_limit, name=name)
    assert grp.order == projected
    return grp


def construct(spec: GroupSpec, *, order_limit: int = DEFAULT_ORDER_LIMIT,
              prime_cap: int = primes.DEFAULT_PROGRESSION_CAP) -> FiniteGroup:
    """Build a faithful permutation realization of the spec."""
    kind, p = spec.kind, spec.params
    name = spec.describe()
    if kind == "cyclic":
        n = _positive_int(p.get("n"), "n")
        _check_projected(n, order_limit, name)
        return generate_group(
            [Permutation([(x + 1) % n for x in range(n)])], n,
            order_limit=order_limit, name=name,
        )
    if kind == "abelian":
        factors = p.get("factors")
        if not factors or any(int(f) < 2 for f in factors):
            raise InvalidSpec(f"{name}: factors must all be >= 2")
        factors = [int(f) for f in factors]
        order = math.prod(factors)
        _check_projected(order, order_limit, name)
        degree = sum(factors)
        gens = []
        offset = 0
        for f in factors:
            imgs = list(range(degree))
            for x in range(f):
                imgs[offset + x] = offset + (x + 1) % f
            gens.append(Permutation(imgs))
            offset += f
        return generate_group(gens, degree, order_limit=order_limit, name=name)
    if kind == "dihedral":
        n = _positive_int(p.get("n"), "n")
        _check_projected(2 * n, order_limit, name)
        if n == 1:
            grp = construct(GroupSpec.abelian(2), order_limit=order_limit)
        elif n == 2:
            grp = construct(GroupSpec.abelian(2, 2), order_limit=order_limit)
        else:
            rot = Permutation([(x + 1) % n for x in range(n)])
            flip = Permutation([(n - x) % n for x in range(n)])
            grp = generate_group([rot, flip], n, order_limit=order_limit, name=name)
        grp.name = name
        return grp
    if kind == "symmetric":
        n = _positive_int(p.get("n"), "n")
        _check_projected(math.factorial(n), order_limit, name)
        if n == 1:
            return generate_group([Permutation([0])], 1, order_limit=order_limit, name=name)
        gens = [Permutation([1, 0] + list(range(2, n)))]
        if n > 2:
            gens.append(Permutation([(x + 1) % n for x in range(n)]))
        return generate_group(gens, n, order_limit=order_limit, name=name)
    if kind == "semidirect_cyclic":
        n = _positive_int(p.get("n"), "n")
        units = p.get("units", [])
        return _affine_group(n, units, order_limit=order_limit, name=name)
    if kind == "gamma":
        prime = _positive_int(p.get("p"), "p")
        power = _positive_int(p.get("n"), "n")
        if not primes.is_prime(prime):
            raise InvalidSpec(f"{name}: p must be prime")
        modulus = prime**power
        q = primes.smallest_prime_in_progression(modulus, cap=prime_cap)
        root = primes.smallest_primitive_root(q)
        u = pow(root, (q - 1) // modulus, q)
        grp = _affine_group(q, [u], order_limit=order_limit, name=name)
        assert grp.order == q * modulus
        return grp
    if kind == "explicit":
        degree = _positive_int(p.get("degree"), "degree")
        raw = p.get("generators")
        if raw is None:
            raise InvalidSpec(f"{name}: explicit specs need a generator list")
        gens = [Permutation(images) for images in raw]
        return generate_group(gens, degree, order_limit=order_limit, name=name)
    raise InvalidSpec(f"unknown group kind {kind!r}")


def validate_spec(spec: GroupSpec) -> None:
    """Parameter validation without constructing the group (used at catalog
    load time); raises InvalidSpec on any problem."""
    kind, p = spec.kind, spec.params
    if kind not in GroupSpec.KINDS:
        raise InvalidSpec(f"unknown group kind {kind!r}")
    if kind in ("cyclic", "dihedral", "symmetric"):
        _positive_int(p.get("n"), "n")
    elif kind == "abelian":
        factors = p.get("factors")
        if not factors or any(int(f) < 2 for f in factors):
            raise InvalidSpec(f"{spec.describe()}: factors must all be >= 2")
    elif kind == "semidirect_cyclic":
        n = _positive_int(p.get("n"), "n")
        unit_group_closure(n, p.get("units", []))
    elif kind == "gamma":
        prime = _positive_int(p.get("p"), "p")
        _positive_int(p.get("n"), "n")
        if not primes.is_prime(prime):
            raise InvalidSpec(f"{spec.describe()}: p must be prime")
    elif kind == "explicit":
        degree = _positive_int(p.get("degree"), "degree")
        raw = p.get("generators")
        if raw is None:
            raise InvalidSpec(f"{spec.describe()}: explicit specs need a generator list")
        for images in raw:
            if len(images) != degree:
                raise InvalidSpec(f"{spec.describe()}: generator degree mismatch")
            try:
                Permutation(images)
            except InvalidPermutation as exc:
                raise InvalidSpec(f"{spec.describe()}: {exc}") from exc


def _positive_int(value, label: str) -> int:
    if value is None or int(value) < 1:
        raise InvalidSpec(f"parameter {label!r} must be a positive integer, got {value!r}")
    return int(value)


def _check_projected(order: int, limit: int, name: str) -> None:
    if order > limit:
        raise OrderLimitExceeded(f"{name}: projected order {order} exceeds the limit {limit}")
