"""Monomial embeddings: induce a diagonal representation of an abelian
subgroup up to the whole group.

Given an abelian subgroup A with a minimal faithful set of d linear
characters, the induced representation permutes the lines spanned by the
translated basis vectors, so every image is a monomial matrix: a line
permutation together with one root-of-unity exponent per line.  The result
embeds the group into the finite monomial group mu_e^(ds) x| Sym(ds) with
s = [G:A] and e = exponent(G).  A does not need to be normal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chartab import character_table
from .errors import InvalidInput, NotAbelian, SizeLimitExceeded, UnfaithfulCharacters
from .groups import DEFAULT_ORDER_LIMIT, FiniteGroup, Subgroup
from .perm import Permutation
from .repdim import rdim

DEFAULT_DIMENSION_LIMIT = 4096
FULL_PAIR_CHECK_LIMIT = 512
SAMPLE_FACTOR = 10
_SAMPLE_SEED = 0x5EED


@dataclass(frozen=True)
class MonomialMatrix:
    """Invertible matrix with one nonzero entry per row and column, each a
    power of a fixed root of unity.

    Stored as M = D * P where P permutes basis lines (line l -> pi(l)) and D
    scales line l by zeta^exponents[l]; so M maps basis vector l to
    zeta^exponents[pi(l)] times basis vector pi(l).
    """

    size: int
    root_order: int
    line_permutation: Permutation
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.line_permutation.degree != self.size or len(self.exponents) != self.size:
            raise InvalidInput("monomial matrix shape mismatch")
        if any(not 0 <= x < self.root_order for x in self.exponents):
            raise InvalidInput("exponents must be reduced modulo the root order")

    @classmethod
    def identity(cls, size: int, root_order: int) -> "MonomialMatrix":
        return cls(size, root_order, Permutation.identity(size), (0,) * size)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        if (self.size, self.root_order) != (other.size, other.root_order):
            raise InvalidInput("cannot multiply monomial matrices of different shape")
        pi = self.line_permutation * other.line_permutation
        inv1 = self.line_permutation.inverse()
        e = self.root_order
        exps = tuple(
            (self.exponents[l] + other.exponents[inv1(l)]) % e for l in range(self.size)
        )
        return MonomialMatrix(self.size, e, pi, exps)

    def is_identity(self) -> bool:
        return self.line_permutation.is_identity() and all(x == 0 for x in self.exponents)


@dataclass(frozen=True)
class DiagonalCharacter:
    """Linear character of an abelian group: exponent of zeta_modulus per
    element index (indices refer to the standalone subgroup group)."""

    modulus: int
    exponents: tuple[int, ...]

    def kernel_indices(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.exponents) if t == 0)


@dataclass(frozen=True)
class MonomialRep:
    """Homomorphism into monomial matrices, one image per group element."""

    group: FiniteGroup
    subgroup: Subgroup
    images: tuple[MonomialMatrix, ...]
    basis_labels: tuple[tuple[int, int], ...]  # (coset index, character index)
    coset_count: int
    character_count: int

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    @property
    def root_order(self) -> int:
        return self.images[0].root_order if self.images else 1


def minimal_faithful_characters(A: Subgroup) -> tuple[DiagonalCharacter, ...]:
    """d = rdim(A) linear characters of an abelian subgroup whose kernels
    intersect trivially; values are exponents of a primitive root of unity
    of order exponent(A)."""
    if not A.is_abelian():
        raise NotAbelian("minimal faithful characters require an abelian subgroup")
    grp = A.as_group()
    if grp.order == 1:
        return ()
    cert = rdim(grp)
    table = character_table(grp)
    cd = grp.conjugacy_classes()
    e_a = grp.exponent()
    out = []
    for i in cert.constituent_indices:
        ch = table.irreducibles[i]
        assert ch.degree == 1
        exps = []
        for a in range(grp.order):
            val = ch.values[cd.class_of[a]]
            (j, mult), = val.pairs()
            assert mult == 1
            exps.append(j * (e_a // val.order) % e_a)
        out.append(DiagonalCharacter(e_a, tuple(exps)))
    return tuple(out)


def induce_monomial(
    G: FiniteGroup,
    A: Subgroup,
    chars: tuple[DiagonalCharacter, ...],
    *,
    dimension_limit: int = DEFAULT_DIMENSION_LIMIT,
) -> MonomialRep:
    """Induced monomial representation of dimension [G:A] * len(chars).

    Coset representatives are the minimal element indices in enumeration
    order.  For g with g * rep_i = rep_i' * a (a in A), line (i, j) moves to
    (i', j) and picks up the exponent chars[j](a).
    """
    if A.parent is not G:
        raise InvalidInput("subgroup does not belong to the given group")
    common_kernel = set(range(A.as_group().order))
    for ch in chars:
        common_kernel &= set(ch.kernel_indices())
    if common_kernel != {0} and A.order > 1:
        raise UnfaithfulCharacters(
            "supplied characters do not have trivial common kernel on the subgroup"
        )
    if not chars and G.order > 1:
        raise UnfaithfulCharacters(
            "an empty character list cannot induce a faithful representation "
            "of a nontrivial group"
        )
    d = len(chars)
    s = G.order // A.order
    size = d * s
    if size > dimension_limit:
        raise SizeLimitExceeded(f"dimension {size} exceeds the limit {dimension_limit}")

    e = G.exponent()
    sub_grp = A.as_group()
    sub_index_of = {A.to_parent_index(i): i for i in range(sub_grp.order)}
    scaled = []
    for ch in chars:
        assert e % ch.modulus == 0
        step = e // ch.modulus
        scaled.append(tuple(t * step % e for t in ch.exponents))

    # left cosets g*A, represented by their minimal element
    coset_of = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for a in A.member_indices:
            coset_of[G.mult(x, a)] = cid
    assert len(reps) == s

    labels = tuple((i, j) for i in range(s) for j in range(d))
    if size == 0:  # trivial group, empty character list: the empty representation
        return MonomialRep(G, A, (), labels, s, d)
    images = []
    for g in range(G.order):
        pi = [0] * size
        exps = [0] * size
        for i in range(s):
            h = G.mult(g, reps[i])
            i2 = coset_of[h]
            a_parent = G.mult(G.inverse(reps[i2]), h)
            a = sub_index_of[a_parent]
            for j in range(d):
                pi[i * d + j] = i2 * d + j
                exps[i2 * d + j] = scaled[j][a]
        images.append(MonomialMatrix(size, e, Permutation(pi), tuple(exps)))
    return MonomialRep(
        group=G,
        subgroup=A,
        images=tuple(images),
        basis_labels=labels,
        coset_count=s,
        character_count=d,
    )


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    stage: str | None = None  # "matrix" | "homomorphism" | "kernel" | "dimension"
    witness: tuple[int, int] | None = None
    pairs_checked: int = 0
    sampled: bool = False


def verify_embedding(
    rep: MonomialRep,
    *,
    full_pair_limit: int = FULL_PAIR_CHECK_LIMIT,
    sample_factor: int = SAMPLE_FACTOR,
) -> EmbeddingReport:
    """Independent recheck of a monomial representation.

    Verifies matrix validity, the homomorphism property (all pairs up to
    `full_pair_limit` elements, generator pairs plus seeded sampling of
    10*|G| pairs beyond that), kernel triviality, and the dimension bound
    [G:A] * rdim(A).
    """
    G = rep.group
    n = G.order
    if n == 1 and not rep.images:
        return EmbeddingReport(True, pairs_checked=0)

    for g in range(n):
        M = rep.images[g]
        try:
            MonomialMatrix(M.size, M.root_order, M.line_permutation, M.exponents)
        except InvalidInput:
            return EmbeddingReport(False, "matrix", (g, g))

    checked = 0
    sampled = n > full_pair_limit
    if not sampled:
        pair_iter = ((a, b) for a in range(n) for b in range(n))
    else:
        rng = random.Random(_SAMPLE_SEED)
        gen_pairs = [(g, b) for g in G.generator_indices for b in range(n)]
        extra = [(rng.randrange(n), rng.randrange(n)) for _ in range(sample_factor * n)]
        pair_iter = iter(gen_pairs + extra)
    for a, b in pair_iter:
        if rep.images[a] * rep.images[b] != rep.images[G.mult(a, b)]:
            return EmbeddingReport(False, "homomorphism", (a, b), checked, sampled)
        checked += 1

    for g in range(1, n):
        if rep.images[g].is_identity():
            return EmbeddingReport(False, "kernel", (g, 0), checked, sampled)

    d = rdim(rep.subgroup.as_group()).total_degree
    if rep.dimension > rep.subgroup.index * d:
        return EmbeddingReport(False, "dimension", (rep.dimension, rep.subgroup.index * d),
                               checked, sampled)
    return EmbeddingReport(True, None, None, checked, sampled)
