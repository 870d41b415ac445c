"""Exact arithmetic on sums of roots of unity stored as multiplicity vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, pi, sin

import numpy as np

from .errors import InvalidInput


@dataclass(frozen=True)
class CyclotomicValue:
    """Sum of m-th roots of unity: multiplicities[j] copies of exp(2*pi*i*j/m).

    Character values are stored this way; the multiplicity sum equals the
    character degree, so equality with an integer d means multiplicities[0]
    is d and every other entry is 0.
    """

    order: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1 or len(self.multiplicities) != self.order:
            raise InvalidInput("multiplicity vector length must equal the root order")
        if any(m < 0 for m in self.multiplicities):
            raise InvalidInput("multiplicities must be non-negative")

    @classmethod
    def integer(cls, n: int, order: int = 1) -> "CyclotomicValue":
        mults = [0] * order
        mults[0] = n
        return cls(order, tuple(mults))

    @classmethod
    def root(cls, order: int, exponent: int, mult: int = 1) -> "CyclotomicValue":
        mults = [0] * order
        mults[exponent % order] = mult
        return cls(order, tuple(mults))

    def weight(self) -> int:
        """Sum of multiplicities (the degree, for a character value)."""
        return sum(self.multiplicities)

    def is_integer(self, n: int) -> bool:
        return self.multiplicities[0] == n and all(
            m == 0 for m in self.multiplicities[1:]
        )

    def conjugate(self) -> "CyclotomicValue":
        m = self.order
        out = [0] * m
        for j, c in enumerate(self.multiplicities):
            out[(-j) % m] = c
        return CyclotomicValue(m, tuple(out))

    def scaled_to(self, order: int) -> "CyclotomicValue":
        """Re-express in the larger root order (order must be a multiple)."""
        if order % self.order != 0:
            raise InvalidInput(f"{self.order} does not divide target order {order}")
        step = order // self.order
        out = [0] * order
        for j, c in enumerate(self.multiplicities):
            out[j * step] = c
        return CyclotomicValue(order, tuple(out))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Sparse (exponent, multiplicity) view, multiplicity > 0 only."""
        return tuple((j, c) for j, c in enumerate(self.multiplicities) if c)

    def complex_value(self) -> complex:
        m = self.order
        return sum(
            c * complex(cos(2 * pi * j / m), sin(2 * pi * j / m))
            for j, c in enumerate(self.multiplicities)
        )

    def root_order(self) -> int:
        """Order of this value as a root of unity; only valid when weight is 1."""
        if self.weight() != 1:
            raise InvalidInput("root_order is defined for single roots of unity only")
        j = next(i for i, c in enumerate(self.multiplicities) if c)
        import math

        return self.order // math.gcd(self.order, j)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial, exact."""
    if n < 1:
        raise InvalidInput("cyclotomic polynomial index must be >= 1")
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (monic-up-to-sign denominator)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        out[i - dn] = q
        for j, dj in enumerate(den):
            num[i - dn + j] -= q * dj
    assert all(c == 0 for c in num), "inexact polynomial division"
    return out


class RootOfUnityReducer:
    """Zero-testing for integer combinations of e-th roots of unity.

    A length-e integer coefficient vector c represents sum(c[t] * zeta_e^t);
    it represents 0 exactly when the e-th cyclotomic polynomial divides
    sum(c[t] * x^t).  Reduction against a precomputed table of x^t mod Phi_e
    turns the test into a single integer matrix-vector product.
    """

    def __init__(self, order: int):
        self.order = order
        phi = cyclotomic_polynomial(order)
        deg = len(phi) - 1
        self.reduced_degree = deg
        rows: list[list[int]] = []
        for t in range(min(deg, order)):
            row = [0] * deg
            row[t] = 1
            rows.append(row)
        for t in range(deg, order):
            prev = rows[t - 1]
            row = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for j in range(deg):
                    row[j] -= top * phi[j]
            rows.append(row)
        table = np.array(rows, dtype=object)
        peak = max((abs(int(v)) for v in table.flat), default=0)
        # int64 is ample for every exponent order reached here; keep the
        # exact object-dtype table if coefficients ever grow too large.
        if peak <= 2**40:
            table = table.astype(np.int64)
        self._table = table

    def reduce(self, coeffs: np.ndarray) -> np.ndarray:
        vec = np.asarray(coeffs)
        if vec.shape != (self.order,):
            raise InvalidInput(f"expected a length-{self.order} coefficient vector")
        if self._table.dtype == object:
            vec = vec.astype(object)
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            return np.zeros(self.reduced_degree, dtype=self._table.dtype)
        if nz.size * 4 < self.order:
            return vec[nz] @ self._table[nz]
        return vec @ self._table

    def is_zero(self, coeffs: np.ndarray) -> bool:
        return not np.any(self.reduce(coeffs))

    def max_residual(self, coeffs: np.ndarray) -> int:
        red = self.reduce(coeffs)
        return int(max((abs(int(v)) for v in red), default=0))
