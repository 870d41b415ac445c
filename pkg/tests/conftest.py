"""Shared fixtures: the standard corpus of desk-scale groups.

Every catalog kind is represented, all orders are <= 512, and every member
has a nontrivial normal abelian subgroup (so the induced-embedding checks
have a usable witness).  Groups are built once per session.
"""

from __future__ import annotations

import pytest

from edkit.groups import FiniteGroup, GroupSpec, construct

Q8_GENERATORS = [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]
A4_GENERATORS = [[1, 2, 0, 3], [1, 0, 3, 2]]


def _full_units(n: int) -> list[int]:
    import math

    return [u for u in range(1, n) if math.gcd(u, n) == 1]


CORPUS: list[tuple[str, GroupSpec]] = (
    [(f"cyclic{n}", GroupSpec.cyclic(n)) for n in (1, 2, 3, 4, 6, 7, 8, 12, 16, 30, 36, 60, 100)]
    + [
        ("ab_2x2", GroupSpec.abelian(2, 2)),
        ("ab_2x4", GroupSpec.abelian(2, 4)),
        ("ab_3x3", GroupSpec.abelian(3, 3)),
        ("ab_2x2x2", GroupSpec.abelian(2, 2, 2)),
        ("ab_2x4x4", GroupSpec.abelian(2, 4, 4)),
        ("ab_2x6", GroupSpec.abelian(2, 6)),
        ("ab_5x5", GroupSpec.abelian(5, 5)),
        ("ab_2x2x4", GroupSpec.abelian(2, 2, 4)),
    ]
    + [(f"dihedral{n}", GroupSpec.dihedral(n))
       for n in (1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 13, 15, 17, 19, 21, 23, 25)]
    + [(f"sym{n}", GroupSpec.symmetric(n)) for n in (2, 3, 4)]
    + [
        ("sd_5_2", GroupSpec.semidirect_cyclic(5, [2])),
        ("sd_7_2", GroupSpec.semidirect_cyclic(7, [2])),
        ("sd_7_3", GroupSpec.semidirect_cyclic(7, [3])),
        ("sd_8_35", GroupSpec.semidirect_cyclic(8, [3, 5])),
        ("sd_9_2", GroupSpec.semidirect_cyclic(9, [2])),
        ("sd_13_5", GroupSpec.semidirect_cyclic(13, [5])),
        ("sd_15_2", GroupSpec.semidirect_cyclic(15, [2])),
        ("sd_16_3", GroupSpec.semidirect_cyclic(16, [3])),
    ]
    + [(f"holomorph{n}", GroupSpec.semidirect_cyclic(n, _full_units(n)))
       for n in (5, 8, 12, 16, 24, 32)]
    + [
        ("gamma_2_1", GroupSpec.gamma(2, 1)),
        ("gamma_2_2", GroupSpec.gamma(2, 2)),
        ("gamma_2_3", GroupSpec.gamma(2, 3)),
        ("gamma_3_1", GroupSpec.gamma(3, 1)),
        ("gamma_3_2", GroupSpec.gamma(3, 2)),
        ("gamma_5_1", GroupSpec.gamma(5, 1)),
    ]
    + [
        ("quaternion8", GroupSpec.explicit(8, Q8_GENERATORS)),
        ("alternating4", GroupSpec.explicit(4, A4_GENERATORS)),
    ]
)


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, FiniteGroup]]:
    out = []
    for name, spec in CORPUS:
        G = construct(spec)
        G.name = name
        out.append((name, G))
    return out


@pytest.fixture(scope="session")
def corpus_by_name(corpus) -> dict[str, FiniteGroup]:
    return dict(corpus)
