"""Permutations of {0, ..., degree-1} with left-action composition."""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import InvalidPermutation


class Permutation:
    """Bijection of {0, ..., degree-1}.

    The product follows the left-action convention used throughout the
    toolkit: ``(s * t)(x) == s(t(x))``, i.e. ``t`` is applied first.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if n < 1:
            raise InvalidPermutation("a permutation needs degree >= 1")
        seen = [False] * n
        for x in imgs:
            if not 0 <= x < n or seen[x]:
                raise InvalidPermutation(f"images {imgs} are not a bijection on 0..{n - 1}")
            seen[x] = True
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Iterable[int]) -> "Permutation":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        imgs = list(range(degree))
        touched = set()
        for cycle in cycles:
            cyc = list(cycle)
            for a in cyc:
                if not 0 <= a < degree or a in touched:
                    raise InvalidPermutation(f"bad or repeated point {a} in cycles")
                touched.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a] = b
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise InvalidPermutation("cannot compose permutations of different degree")
        s = self.images
        return Permutation(tuple(s[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        """Disjoint cycle decomposition, fixed points omitted, each cycle
        starting at its minimal point, cycles sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cur, cyc = start, []
            while not seen[cur]:
                seen[cur] = True
                cyc.append(cur)
                cur = self.images[cur]
            if len(cyc) > 1:
                out.append(cyc)
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles() or [[0]]))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        body = ", ".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation[deg={self.degree}: {body}]"

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)
