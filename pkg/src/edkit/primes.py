"""Deterministic primality testing and prime searches in progressions."""

from __future__ import annotations

from .errors import InvalidInput, SearchBoundExceeded

# Strong-pseudoprime witnesses valid for every n below this bound
# (Sorenson & Webster); inputs beyond the bound are rejected rather than
# silently degrading to a probabilistic answer.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

DEFAULT_PROGRESSION_CAP = 1_000_000


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for 0 <= n < DETERMINISTIC_BOUND."""
    n = int(n)
    if n >= DETERMINISTIC_BOUND:
        raise InvalidInput(f"{n} exceeds the deterministic primality range")
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_in_progression(
    modulus: int,
    *,
    min_value: int = 0,
    cap: int = DEFAULT_PROGRESSION_CAP,
) -> int:
    """Smallest prime q with q == 1 (mod modulus) and q >= min_value.

    Scans q = 1 + k*modulus for k = 1, 2, ...; raises SearchBoundExceeded
    once k passes `cap`.
    """
    if modulus < 1:
        raise InvalidInput(f"modulus must be >= 1, got {modulus}")
    for k in range(1, cap + 1):
        q = 1 + k * modulus
        if q >= min_value and is_prime(q):
            return q
    raise SearchBoundExceeded(
        f"no prime == 1 (mod {modulus}) with k <= {cap} (min_value={min_value})"
    )


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the desk-scale sizes here."""
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root modulo a prime p."""
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if p == 2:
        return 1
    prime_factors = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            return g
    raise InvalidInput(f"no primitive root found modulo {p}")  # unreachable for prime p
