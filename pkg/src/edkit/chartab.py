"""Exact complex character tables via the Dixon-Schneider method.

The class-multiplication-coefficient matrices are split into common
eigenspaces over a finite field F_P with P == 1 (mod exponent) and
P > 2*ceil(sqrt(|G|)); eigenvector data is then lifted to exact
root-of-unity multiplicity vectors by Fourier inversion over the cyclic
group generated by a fixed root of unity mod P.  Everything downstream of
the lift is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import primes
from .cyclotomic import CyclotomicValue, RootOfUnityReducer
from .errors import InternalPrimeSearchFailure, OrderLimitExceeded, SearchBoundExceeded
from .groups import DEFAULT_ORDER_LIMIT, ClassData, FiniteGroup, Subgroup

_PRIME_SEARCH_CAP = 2_000_000


@dataclass(frozen=True)
class Character:
    """One irreducible character: exact values per conjugacy class."""

    degree: int
    values: tuple[CyclotomicValue, ...]

    def sort_key(self) -> tuple:
        return (self.degree, tuple(v.multiplicities for v in self.values))


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    classes: ClassData
    irreducibles: tuple[Character, ...]

    def __len__(self) -> int:
        return len(self.irreducibles)

    def degrees(self) -> tuple[int, ...]:
        return tuple(ch.degree for ch in self.irreducibles)

    def kernel_class_mask(self, i: int) -> int:
        """Bitmask over class indices where character i equals its degree."""
        ch = self.irreducibles[i]
        mask = 0
        for k, val in enumerate(ch.values):
            if val.is_integer(ch.degree):
                mask |= 1 << k
        return mask

    def linear_count(self) -> int:
        return sum(1 for ch in self.irreducibles if ch.degree == 1)


def character_table(G: FiniteGroup, *, order_limit: int = DEFAULT_ORDER_LIMIT) -> CharacterTable:
    """Complete set of irreducible characters with exact values.

    Output order is deterministic: sorted by degree, then lexicographically
    by the per-class multiplicity data.
    """
    if G._chartab is not None:
        return G._chartab
    if G.order > order_limit:
        raise OrderLimitExceeded(f"order {G.order} exceeds the limit {order_limit}")
    cd = G.conjugacy_classes()
    r = len(cd)
    n = G.order
    e = G.exponent()
    ceil_sqrt = math.isqrt(n - 1) + 1 if n > 1 else 1
    try:
        P = primes.smallest_prime_in_progression(
            e, min_value=2 * ceil_sqrt + 1, cap=_PRIME_SEARCH_CAP
        )
    except SearchBoundExceeded as exc:
        raise InternalPrimeSearchFailure(
            f"no prime == 1 (mod {e}) above {2 * ceil_sqrt} within the search cap"
        ) from exc
    root = primes.smallest_primitive_root(P)
    z = pow(root, (P - 1) // e, P)

    vectors = _common_eigenvectors(G, cd, P)
    table_mod_p, degrees = _normalize(vectors, cd, n, P)
    characters = _lift(G, cd, table_mod_p, degrees, P, z, e)
    characters.sort(key=Character.sort_key)
    table = CharacterTable(G, cd, tuple(characters))
    assert len(table.irreducibles) == r
    assert sum(d * d for d in table.degrees()) == n
    G._chartab = table
    return table


def kernel(table: CharacterTable, i: int) -> Subgroup:
    """Kernel of irreducible i: the union of classes where the value equals
    the degree.  Always a normal subgroup."""
    mask = table.kernel_class_mask(i)
    members: list[int] = []
    for k, cls in enumerate(table.classes.classes):
        if mask >> k & 1:
            members.extend(cls)
    return Subgroup(table.group, tuple(sorted(members)), validate=False)


# -- verification ----------------------------------------------------------------


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    failure_kind: str | None = None  # "degree_sum" | "row" | "column"
    witness: tuple[int, int] | None = None
    max_residual: int = 0
    rows_checked: int = 0
    columns_checked: int = 0


def verify_orthogonality(table: CharacterTable, *, include_columns: bool = True) -> OrthogonalityReport:
    """Exact check of sum(d^2) == |G| plus row (and column) orthogonality.

    Returns a failure report with the first violated pair instead of raising.
    """
    G = table.group
    cd = table.classes
    n = G.order
    r = len(cd)
    degrees = table.degrees()
    if sum(d * d for d in degrees) != n:
        return OrthogonalityReport(False, "degree_sum", (0, 0), abs(sum(d * d for d in degrees) - n))

    e = math.lcm(*(v.order for ch in table.irreducibles for v in ch.values))
    reducer = RootOfUnityReducer(e)
    # sparse (exponent-in-zeta_e, multiplicity) views, plus conjugates
    pairs = []
    conj_pairs = []
    for ch in table.irreducibles:
        row = []
        crow = []
        for val in ch.values:
            step = e // val.order
            pr = tuple((j * step, c) for j, c in val.pairs())
            row.append(pr)
            crow.append(tuple(((-t) % e, c) for t, c in pr))
        pairs.append(row)
        conj_pairs.append(crow)

    sizes = cd.sizes
    rows_checked = 0
    for i in range(r):
        for j in range(i, r):
            acc = np.zeros(e, dtype=np.int64)
            for k in range(r):
                w = sizes[k]
                for t1, c1 in pairs[i][k]:
                    for t2, c2 in conj_pairs[j][k]:
                        acc[(t1 + t2) % e] += w * c1 * c2
            if i == j:
                acc[0] -= n
            rows_checked += 1
            if not reducer.is_zero(acc):
                return OrthogonalityReport(
                    False, "row", (i, j), reducer.max_residual(acc), rows_checked, 0
                )

    columns_checked = 0
    if include_columns:
        for k in range(r):
            for l in range(k, r):
                acc = np.zeros(e, dtype=np.int64)
                for i in range(r):
                    for t1, c1 in pairs[i][k]:
                        for t2, c2 in conj_pairs[i][l]:
                            acc[(t1 + t2) % e] += c1 * c2
                if k == l:
                    acc[0] -= n // sizes[k]
                columns_checked += 1
                if not reducer.is_zero(acc):
                    return OrthogonalityReport(
                        False, "column", (k, l), reducer.max_residual(acc),
                        rows_checked, columns_checked,
                    )
    return OrthogonalityReport(True, None, None, 0, rows_checked, columns_checked)


# -- class matrices and eigenspace splitting --------------------------------------


def _class_matrix(G: FiniteGroup, cd: ClassData, i: int) -> np.ndarray:
    """M[j, k] = number of (x, y) in C_i x C_j with x*y = rep(C_k)."""
    r = len(cd)
    M = np.zeros((r, r), dtype=np.int64)
    inv_members = [G.inverse(x) for x in cd.classes[i]]
    class_of = cd.class_of
    for k in range(r):
        ys = G.rmult_many(inv_members, cd.representatives[k])
        for y in ys:
            M[class_of[y], k] += 1
    return M


def _common_eigenvectors(G: FiniteGroup, cd: ClassData, P: int) -> list[np.ndarray]:
    """Split F_P^r into the common one-dimensional eigenspaces of the class
    matrices, processing matrices in class order with ties broken by class
    index (fully deterministic)."""
    r = len(cd)
    blocks: list[tuple[np.ndarray, list[int]]] = [
        (np.eye(r, dtype=np.int64), list(range(r)))
    ]
    for ci in range(1, r):
        if all(U.shape[1] == 1 for U, _ in blocks):
            break
        M = _class_matrix(G, cd, ci) % P
        new_blocks: list[tuple[np.ndarray, list[int]]] = []
        for U, piv in blocks:
            m = U.shape[1]
            if m == 1:
                new_blocks.append((U, piv))
                continue
            B = (M @ U % P)[piv, :]
            minpoly = _min_poly_mod(B, P)
            roots = _roots_mod(minpoly, P)
            if len(roots) == 1:
                new_blocks.append((U, piv))
                continue
            total = 0
            for lam in roots:
                shifted = B.copy()
                np.fill_diagonal(shifted, (np.diagonal(B) - lam) % P)
                K = _kernel_mod(shifted, P)
                sub = _column_rref(U @ K % P, P)
                total += sub[0].shape[1]
                new_blocks.append(sub)
            assert total == m, "class matrix failed to diagonalize"
        blocks = new_blocks
    assert all(U.shape[1] == 1 for U, _ in blocks), "class algebra failed to split"
    return [U[:, 0] % P for U, _ in blocks]


def _normalize(vectors: list[np.ndarray], cd: ClassData, n: int, P: int) -> tuple[np.ndarray, list[int]]:
    """Turn eigenvectors into mod-P character values and integer degrees."""
    r = len(cd)
    inv_sizes = [pow(s, P - 2, P) for s in cd.sizes]
    table = np.zeros((len(vectors), r), dtype=np.int64)
    degrees: list[int] = []
    for idx, v in enumerate(vectors):
        assert v[0] % P != 0, "eigenvector vanishes at the identity class"
        w = v * pow(int(v[0]), P - 2, P) % P
        c = 0
        for k in range(r):
            c = (c + int(w[k]) * int(w[cd.inverse_class[k]]) * inv_sizes[k]) % P
        dsq = n * pow(c, P - 2, P) % P
        d = _sqrt_mod(dsq, P)
        if d > P // 2:
            d = P - d
        assert 1 <= d <= math.isqrt(n), f"implausible degree {d}"
        degrees.append(d)
        table[idx] = [d * int(w[k]) % P * inv_sizes[k] % P for k in range(r)]
    return table, degrees


def _lift(G: FiniteGroup, cd: ClassData, table_mod_p: np.ndarray, degrees: list[int],
          P: int, z: int, e: int) -> list[Character]:
    """Fourier-invert mod-P values into exact multiplicity vectors per class."""
    nchar = table_mod_p.shape[0]
    r = len(cd)
    values: list[list[CyclotomicValue]] = [[] for _ in range(nchar)]
    for k in range(r):
        m = cd.rep_orders[k]
        rep = cd.representatives[k]
        power_class = [0] * m
        cur = 0
        for t in range(m):
            power_class[t] = cd.class_of[cur]
            cur = G.mult(cur, rep)
        zk_inv = pow(z, (P - 2) * (e // m), P)
        zk_inv_pows = np.array([pow(zk_inv, j, P) for j in range(m)], dtype=np.int64)
        exp_table = np.outer(np.arange(m), np.arange(m)) % m
        W = zk_inv_pows[exp_table]  # W[j, t] = zk^(-j*t)
        vals = table_mod_p[:, power_class]
        inv_m = pow(m, P - 2, P)
        mults = (vals @ W.T % P) * inv_m % P
        for i in range(nchar):
            row = [int(x) for x in mults[i]]
            assert all(0 <= c <= degrees[i] for c in row), "multiplicity lift out of range"
            assert sum(row) == degrees[i], "multiplicity lift does not sum to the degree"
            values[i].append(CyclotomicValue(m, tuple(row)))
    return [
        Character(degrees[i], tuple(values[i]))
        for i in range(nchar)
    ]


# -- mod-P linear algebra -----------------------------------------------------------


def _row_rref(A: np.ndarray, P: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod P; returns (R, pivot column indices)."""
    R = A.copy() % P
    rows, cols = R.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        pivot = -1
        for rr in range(rank, rows):
            if R[rr, c] % P:
                pivot = rr
                break
        if pivot < 0:
            continue
        if pivot != rank:
            R[[rank, pivot]] = R[[pivot, rank]]
        R[rank] = R[rank] * pow(int(R[rank, c]), P - 2, P) % P
        for rr in range(rows):
            if rr != rank and R[rr, c]:
                R[rr] = (R[rr] - R[rr, c] * R[rank]) % P
        pivots.append(c)
        rank += 1
        if rank == rows:
            break
    return R[:rank], pivots


def _column_rref(A: np.ndarray, P: int) -> tuple[np.ndarray, list[int]]:
    """Reduced column echelon form mod P; returns (U, pivot row indices)."""
    R, pivots = _row_rref(A.T % P, P)
    return R.T.copy(), pivots


def _kernel_mod(B: np.ndarray, P: int) -> np.ndarray:
    """Basis (as columns) of the nullspace of B mod P, deterministic."""
    m = B.shape[0]
    R, pivots = _row_rref(B, P)
    free = [c for c in range(m) if c not in pivots]
    K = np.zeros((m, len(free)), dtype=np.int64)
    for out, fc in enumerate(free):
        K[fc, out] = 1
        for prow, pc in enumerate(pivots):
            K[pc, out] = (-int(R[prow, fc])) % P
    return K


def _min_poly_mod(B: np.ndarray, P: int) -> list[int]:
    """Minimal polynomial of B over F_P (ascending coefficients, monic).

    Computed as the lcm of the annihilator polynomials of the Krylov
    sequences of the standard basis vectors, stopping as soon as the degree
    reaches the matrix size.
    """
    m = B.shape[0]
    result = [1]
    for seed in range(m):
        if len(result) - 1 == m:
            break
        v = np.zeros(m, dtype=np.int64)
        v[seed] = 1
        ann = _krylov_annihilator(B, v, P)
        result = _poly_lcm(result, ann, P)
    return result


def _krylov_annihilator(B: np.ndarray, v: np.ndarray, P: int) -> list[int]:
    """Monic polynomial of least degree with p(B) v = 0.

    Advances from the reduced (echelonized) vector at each step; the span of
    the sequence matches the true Krylov span and the combination bookkeeping
    keeps a nonzero top coefficient, so the first dependence found yields the
    minimal annihilator.
    """
    m = B.shape[0]
    basis: list[tuple[np.ndarray, np.ndarray, int]] = []  # (reduced vec, combo, pivot)
    combos_len = m + 2
    cur = v % P
    combo = np.zeros(combos_len, dtype=np.int64)
    combo[0] = 1
    for step in range(m + 1):
        red = cur.copy()
        cmb = combo.copy()
        for bv, bc, piv in basis:
            f = red[piv] % P
            if f:
                red = (red - f * bv) % P
                cmb = (cmb - f * bc) % P
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            poly = [int(x) % P for x in cmb[: step + 1]]
            inv = pow(poly[-1], P - 2, P)
            return [c * inv % P for c in poly]
        piv = int(nz[0])
        inv = pow(int(red[piv]), P - 2, P)
        red_n = red * inv % P
        cmb_n = cmb * inv % P
        basis.append((red_n, cmb_n, piv))
        cur = B @ red_n % P
        combo = np.concatenate(([0], cmb_n[:-1]))
    raise AssertionError("Krylov sequence failed to terminate")


def _poly_trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[int], b: list[int], P: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % P
    return _poly_trim(out)


def _poly_divmod(a: list[int], b: list[int], P: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv = pow(lead, P - 2, P)
    q = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % P
        if c:
            f = c * inv % P
            q[i - db] = f
            for j, bj in enumerate(b):
                a[i - db + j] = (a[i - db + j] - f * bj) % P
    return _poly_trim(q), _poly_trim(a[:db] or [0])


def _poly_gcd(a: list[int], b: list[int], P: int) -> list[int]:
    a, b = list(a), list(b)
    while not (len(b) == 1 and b[0] == 0):
        _, rem = _poly_divmod(a, b, P)
        a, b = b, rem
    inv = pow(a[-1], P - 2, P)
    return [c * inv % P for c in a]


def _poly_lcm(a: list[int], b: list[int], P: int) -> list[int]:
    g = _poly_gcd(a, b, P)
    q, rem = _poly_divmod(_poly_mul(a, b, P), g, P)
    assert rem == [0]
    inv = pow(q[-1], P - 2, P)
    return [c * inv % P for c in q]


def _roots_mod(poly: list[int], P: int) -> list[int]:
    """All roots of poly in F_P by vectorized Horner evaluation; sorted."""
    xs = np.arange(P, dtype=np.int64)
    acc = np.zeros(P, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % P
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _sqrt_mod(a: int, P: int) -> int:
    """Tonelli-Shanks square root mod an odd prime (deterministic)."""
    a %= P
    if a == 0:
        return 0
    assert pow(a, (P - 1) // 2, P) == 1, f"{a} is not a quadratic residue mod {P}"
    if P % 4 == 3:
        return pow(a, (P + 1) // 4, P)
    q, s = P - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    nonresidue = next(x for x in range(2, P) if pow(x, (P - 1) // 2, P) == P - 1)
    c = pow(nonresidue, q, P)
    x = pow(a, (q + 1) // 2, P)
    t = pow(a, q, P)
    m = s
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % P
            i += 1
        b = pow(c, 1 << (m - i - 1), P)
        x = x * b % P
        t = t * b % P * b % P
        c = b * b % P
        m = i
    return x
