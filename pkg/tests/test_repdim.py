import pytest

from edkit.chartab import character_table, kernel
from edkit.errors import InvalidFactors, TooManyIrreducibles
from edkit.groups import GroupSpec, construct
from edkit.repdim import brute_force_rdim, rdim, rdim_abelian


@pytest.mark.parametrize("spec,expected", [
    (GroupSpec.cyclic(1), 0),
    (GroupSpec.cyclic(2), 1),
    (GroupSpec.cyclic(12), 1),
    (GroupSpec.abelian(2, 2), 2),
    (GroupSpec.abelian(2, 4, 4), 3),
    (GroupSpec.symmetric(3), 2),
    (GroupSpec.semidirect_cyclic(7, [2]), 3),
    (GroupSpec.semidirect_cyclic(5, [2]), 4),
    (GroupSpec.explicit(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]), 2),
])
def test_rdim_values(spec, expected):
    assert rdim(construct(spec)).total_degree == expected


def test_rdim_certificate_faithful_and_minimal(corpus):
    for name, g in corpus:
        cert = rdim(g)
        if g.order == 1:
            assert cert.total_degree == 0 and cert.constituent_indices == ()
            continue
        tab = character_table(g)
        inter = frozenset(range(g.order))
        for i in cert.constituent_indices:
            inter &= kernel(tab, i).member_set()
        assert inter == frozenset({0}), name
        degs = tab.degrees()
        assert sum(degs[i] for i in cert.constituent_indices) == cert.total_degree, name


def test_rdim_matches_brute_force(corpus):
    for name, g in corpus:
        tab = character_table(g)
        if len(tab) > 20:
            with pytest.raises(TooManyIrreducibles):
                brute_force_rdim(tab)
            continue
        assert rdim(g).total_degree == brute_force_rdim(tab), name


def test_rdim_zero_iff_trivial_one_iff_cyclic(corpus):
    for name, g in corpus:
        value = rdim(g).total_degree
        assert (value == 0) == (g.order == 1), name
        is_cyclic = any(g.element_order(i) == g.order for i in range(g.order))
        assert (value == 1) == (is_cyclic and g.order > 1), name


def test_rdim_abelian_matches_search(corpus):
    for name, g in corpus:
        if not g.is_abelian() or g.order == 1:
            continue
        assert rdim(g).total_degree == rdim_abelian(g.abelian_invariants()), name


def test_rdim_abelian_validation():
    assert rdim_abelian([5]) == 1
    assert rdim_abelian([2, 2]) == 2
    assert rdim_abelian([2, 4, 4]) == 3
    with pytest.raises(InvalidFactors):
        rdim_abelian([1, 2])
    with pytest.raises(InvalidFactors):
        rdim_abelian([4, 2])
    with pytest.raises(InvalidFactors):
        rdim_abelian([2, 3])


def test_subgroup_monotonicity_on_sample():
    for spec in (GroupSpec.symmetric(4), GroupSpec.semidirect_cyclic(5, [2]),
                 GroupSpec.dihedral(12)):
        g = construct(spec)
        bound = rdim(g).total_degree
        import edkit.primes as primes

        for p in primes.factorize(g.order):
            sub = g.sylow(p).as_group()
            assert rdim(sub).total_degree <= bound


def test_brute_force_trivial():
    tab = character_table(construct(GroupSpec.cyclic(1)))
    assert brute_force_rdim(tab) == 0
