import math

import pytest

from edkit.errors import InvalidSpec, NotPrime, OrderLimitExceeded, TrivialGroup
from edkit.groups import FiniteGroup, GroupSpec, construct, generate_group, validate_spec
from edkit.perm import Permutation


def brute_force_subgroups(G: FiniteGroup) -> set[frozenset[int]]:
    """All subgroups by closure of incremental element additions (oracle)."""
    subs = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for H in frontier:
            for x in range(G.order):
                if x not in H:
                    H2 = G.closure_indices(H | {x})
                    if H2 not in subs:
                        subs.add(H2)
                        nxt.append(H2)
        frontier = nxt
    return subs


def is_abelian_set(G: FiniteGroup, members) -> bool:
    m = sorted(members)
    return all(G.mult(a, b) == G.mult(b, a) for a in m for b in m)


# -- generation ------------------------------------------------------------------


def test_generate_trivial():
    g = generate_group([Permutation([0])], 1)
    assert g.order == 1 and g.degree == 1


def test_generate_s3():
    g = generate_group([Permutation([1, 2, 0]), Permutation([1, 0, 2])], 3)
    assert g.order == 6


def test_generate_affine20():
    # 5-cycle plus the 4-cycle induced by doubling mod 5
    g = generate_group([Permutation([1, 2, 3, 4, 0]), Permutation([0, 2, 4, 1, 3])], 5)
    assert g.order == 20


def test_generate_identity_is_element_zero():
    g = generate_group([Permutation([1, 0, 2])], 3)
    assert g.element(0).is_identity()
    assert g.mult(0, 1) == 1 and g.mult(1, 0) == 1


def test_order_limit():
    with pytest.raises(OrderLimitExceeded):
        generate_group(
            [Permutation([1, 0] + list(range(2, 10))), Permutation(list(range(1, 10)) + [0])],
            10,
            order_limit=100,
        )


def test_multiplication_matches_composition():
    g = generate_group([Permutation([1, 2, 0]), Permutation([1, 0, 2])], 3)
    for i in range(g.order):
        for j in range(g.order):
            assert g.element(g.mult(i, j)) == g.element(i) * g.element(j)
            assert (g.element(i) * g.element(g.inverse(i))).is_identity()


# -- constructors ----------------------------------------------------------------


def test_construct_cyclic12():
    g = construct(GroupSpec.cyclic(12))
    assert g.order == 12
    assert len(g.generators) == 1 and g.generators[0].order() == 12


def test_construct_semidirect_order():
    g = construct(GroupSpec.semidirect_cyclic(5, [2]))
    assert g.order == 20  # |H| = ord_5(2) = 4


def test_construct_gamma22():
    g = construct(GroupSpec.gamma(2, 2))
    assert g.order == 20 and g.degree == 5  # q = 5 is the smallest prime == 1 mod 4


def test_construct_dihedral_small_cases():
    assert construct(GroupSpec.dihedral(1)).order == 2
    d2 = construct(GroupSpec.dihedral(2))
    assert d2.order == 4 and d2.is_abelian()
    d3 = construct(GroupSpec.dihedral(3))
    assert d3.order == 6 and not d3.is_abelian()


def test_construct_validates_units():
    with pytest.raises(InvalidSpec):
        construct(GroupSpec.semidirect_cyclic(6, [2]))
    with pytest.raises(InvalidSpec):
        validate_spec(GroupSpec.semidirect_cyclic(6, [3]))


def test_construct_faithful_and_order_product(corpus):
    for name, g in corpus:
        # only the identity fixes all points
        for i in range(1, g.order):
            assert not g.element(i).is_identity(), name


# -- conjugacy classes -----------------------------------------------------------


def test_classes_trivial():
    g = construct(GroupSpec.cyclic(1))
    assert len(g.conjugacy_classes()) == 1


def test_classes_s3():
    g = construct(GroupSpec.symmetric(3))
    assert sorted(g.conjugacy_classes().sizes) == [1, 2, 3]


def test_classes_affine20():
    g = construct(GroupSpec.semidirect_cyclic(5, [2]))
    assert sorted(g.conjugacy_classes().sizes) == [1, 4, 5, 5, 5]


def test_class_equation(corpus):
    for name, g in corpus:
        cd = g.conjugacy_classes()
        assert sum(cd.sizes) == g.order, name
        assert all(g.order % s == 0 for s in cd.sizes), name
        assert cd.classes[0] == (0,), name  # identity alone in its class
        # classes closed under conjugation
        for cls in cd.classes[:5]:
            x = cls[0]
            assert all(cd.class_of[g.conjugate(h, x)] == cd.class_of[x]
                       for h in g.generator_indices), name


# -- sylow -----------------------------------------------------------------------


def test_sylow_s3():
    g = construct(GroupSpec.symmetric(3))
    assert g.sylow(3).order == 3
    assert g.sylow(2).order == 2


def test_sylow_affine20_cyclic():
    g = construct(GroupSpec.semidirect_cyclic(5, [2]))
    s2 = g.sylow(2)
    assert s2.order == 4
    assert max(s2.element_orders()) == 4  # cyclic


def test_sylow_not_dividing():
    g = construct(GroupSpec.cyclic(12))
    assert g.sylow(5).order == 1


def test_sylow_rejects_composite():
    g = construct(GroupSpec.cyclic(12))
    with pytest.raises(NotPrime):
        g.sylow(4)


def test_sylow_s4():
    g = construct(GroupSpec.symmetric(4))
    assert g.sylow(2).order == 8
    assert g.sylow(3).order == 3


def test_sylow_exact_p_part(corpus):
    import edkit.primes as primes

    for name, g in corpus:
        for p in primes.factorize(g.order):
            pp = 1
            while g.order % (pp * p) == 0:
                pp *= p
            assert g.sylow(p).order == pp, name


# -- center, normals, exponent ----------------------------------------------------


def test_center_abelian_is_whole():
    g = construct(GroupSpec.abelian(2, 4))
    assert g.center().order == g.order


def test_center_dihedral_odd_trivial():
    for n in (3, 5, 7):
        g = construct(GroupSpec.dihedral(n))
        assert g.center().order == 1
        assert g.order // g.center().order == 2 * n


def test_center_quaternion():
    g = construct(GroupSpec.explicit(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]))
    assert g.order == 8 and g.center().order == 2


def test_minimal_normals_cyclic_prime():
    g = construct(GroupSpec.cyclic(7))
    (m,) = g.minimal_normal_subgroups()
    assert m.order == 7


def test_minimal_normals_v4():
    g = construct(GroupSpec.abelian(2, 2))
    assert [m.order for m in g.minimal_normal_subgroups()] == [2, 2, 2]


def test_minimal_normals_s3():
    g = construct(GroupSpec.symmetric(3))
    (m,) = g.minimal_normal_subgroups()
    assert m.order == 3


def test_minimal_normals_trivial_group_rejected():
    with pytest.raises(TrivialGroup):
        construct(GroupSpec.cyclic(1)).minimal_normal_subgroups()


@pytest.mark.parametrize("spec", [
    GroupSpec.symmetric(4),
    GroupSpec.dihedral(6),
    GroupSpec.explicit(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]),
    GroupSpec.semidirect_cyclic(5, [2]),
    GroupSpec.abelian(2, 2, 2),
])
def test_minimal_normals_against_subgroup_oracle(spec):
    g = construct(spec)
    normals = [
        H for H in brute_force_subgroups(g)
        if len(H) > 1 and g.is_normal_set(H)
    ]
    minimal = {
        H for H in normals
        if not any(K < H for K in normals)
    }
    computed = {m.member_set() for m in g.minimal_normal_subgroups()}
    assert computed == minimal


def test_exponent_values():
    assert construct(GroupSpec.cyclic(1)).exponent() == 1
    assert construct(GroupSpec.symmetric(3)).exponent() == 6
    assert construct(GroupSpec.semidirect_cyclic(5, [2])).exponent() == 20


def test_exponent_divides_order(corpus):
    for name, g in corpus:
        assert g.order % g.exponent() == 0, name


# -- abelian min index -------------------------------------------------------------


def test_abelian_min_index_abelian_group():
    g = construct(GroupSpec.abelian(3, 3))
    assert g.abelian_subgroup_of_min_index().index == 1


@pytest.mark.parametrize("spec", [
    GroupSpec.symmetric(3),
    GroupSpec.symmetric(4),
    GroupSpec.dihedral(6),
    GroupSpec.dihedral(7),
    GroupSpec.explicit(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]),
    GroupSpec.semidirect_cyclic(5, [2]),
    GroupSpec.explicit(4, [[1, 2, 0, 3], [1, 0, 3, 2]]),
])
def test_abelian_min_index_against_subgroup_oracle(spec):
    g = construct(spec)
    subs = brute_force_subgroups(g)
    best_any = max(len(H) for H in subs if is_abelian_set(g, H))
    best_normal = max(len(H) for H in subs if is_abelian_set(g, H) and g.is_normal_set(H))
    weak = g.abelian_subgroup_of_min_index(require_normal=False)
    strong = g.abelian_subgroup_of_min_index(require_normal=True)
    assert weak.order == best_any
    assert strong.order == best_normal
    assert weak.is_abelian()
    assert strong.is_abelian() and strong.is_normal()


def test_abelian_min_index_weak_le_strong(corpus):
    for name, g in corpus:
        weak = g.abelian_subgroup_of_min_index(require_normal=False)
        strong = g.abelian_subgroup_of_min_index(require_normal=True)
        assert weak.index <= strong.index, name
        center = set(g.center().member_indices)
        assert center <= set(weak.member_indices), name
        assert center <= set(strong.member_indices), name


def test_abelian_min_index_limit():
    g = construct(GroupSpec.symmetric(4))
    with pytest.raises(OrderLimitExceeded):
        g.abelian_subgroup_of_min_index(limit=10)


def test_dihedral_odd_strong_witness_is_rotations():
    for n in (3, 5, 9):
        g = construct(GroupSpec.dihedral(n))
        strong = g.abelian_subgroup_of_min_index(require_normal=True)
        assert strong.index == 2
        assert sorted(strong.element_orders())[-1] == n  # the rotation subgroup


# -- invariants, misc ---------------------------------------------------------------


def test_abelian_invariants():
    assert construct(GroupSpec.cyclic(12)).abelian_invariants() == (12,)
    assert construct(GroupSpec.abelian(2, 2)).abelian_invariants() == (2, 2)
    assert construct(GroupSpec.abelian(2, 4, 4)).abelian_invariants() == (2, 4, 4)
    assert construct(GroupSpec.abelian(2, 6)).abelian_invariants() == (2, 6)


def test_primary_decomposition():
    g = construct(GroupSpec.abelian(2, 4))
    assert g.primary_decomposition() == ((2, 1), (4, 1))
    h = construct(GroupSpec.abelian(2, 6))
    assert h.primary_decomposition() == ((2, 2), (3, 1))


def test_subgroup_realization_roundtrip():
    g = construct(GroupSpec.symmetric(4))
    s = g.sylow(2)
    sub = s.as_group()
    assert sub.order == 8
    for i in range(sub.order):
        parent_idx = s.to_parent_index(i)
        assert g.element(parent_idx) == sub.element(i)


def test_commutator_subgroup():
    s3 = construct(GroupSpec.symmetric(3))
    assert s3.commutator_subgroup().order == 3
    s4 = construct(GroupSpec.symmetric(4))
    assert s4.commutator_subgroup().order == 12
    ab = construct(GroupSpec.abelian(2, 4))
    assert ab.commutator_subgroup().order == 1
