import math

import pytest

from edkit.edbounds import (
    AbelianFactorReport,
    EdBoundsReport,
    FamilySpec,
    JordanTable,
    bounds_report,
    check_abelian_factor_bounds,
    dirichlet_prime,
    ed_exact_if_known,
    ed_lower_from_jordan_table,
    ed_lower_sylow,
    ed_upper,
    family_report,
    semidirect_rdim_lower_bound,
)
from edkit.errors import EmptyTable, InvalidInput, NotAbelian, NotPrime
from edkit.groups import GroupSpec, construct
from edkit import primes


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_ed_upper():
    assert ed_upper(construct(GroupSpec.cyclic(9))) == 1
    assert ed_upper(construct(GroupSpec.semidirect_cyclic(5, [2]))) == 4
    assert ed_upper(construct(GroupSpec.abelian(2, 2))) == 2


def test_ed_lower_sylow():
    assert ed_lower_sylow(construct(GroupSpec.semidirect_cyclic(5, [2]))) == (1, 2)
    assert ed_lower_sylow(construct(GroupSpec.abelian(2, 2))) == (2, 2)
    assert ed_lower_sylow(construct(GroupSpec.symmetric(3))) == (1, 2)
    assert ed_lower_sylow(construct(GroupSpec.cyclic(1))) == (0, None)


def test_ed_exact_if_known():
    assert ed_exact_if_known(construct(GroupSpec.abelian(2, 2))) == 2
    assert ed_exact_if_known(construct(GroupSpec.semidirect_cyclic(7, [2]))) is None
    q8 = construct(GroupSpec.explicit(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]))
    assert ed_exact_if_known(q8) == 2  # 2-group: equals its faithful degree


def test_semidirect_lower_bound():
    assert semidirect_rdim_lower_bound(7, 3) == 3
    assert semidirect_rdim_lower_bound(5, 4) == 4
    assert semidirect_rdim_lower_bound(9, 1) == 1
    with pytest.raises(InvalidInput):
        semidirect_rdim_lower_bound(6, 2)  # not a prime power
    with pytest.raises(InvalidInput):
        semidirect_rdim_lower_bound(7, 4)  # 4 does not divide 6


def test_contrapositive_bound():
    jt = JordanTable({1: 1})
    assert ed_lower_from_jordan_table(10, jt).bound == 2
    assert ed_lower_from_jordan_table(10, jt).entries_used == (1,)
    assert ed_lower_from_jordan_table(1, jt).bound == 1
    big = JordanTable({3: 100})
    assert ed_lower_from_jordan_table(10, big).bound == 1  # 10 <= 300: nothing fires
    with pytest.raises(EmptyTable):
        ed_lower_from_jordan_table(5, JordanTable({}))


def test_contrapositive_monotone_in_table():
    base = {1: 1}
    richer = {1: 1, 2: 2, 3: 3}
    for value in (1, 3, 5, 8, 12, 100):
        b1 = ed_lower_from_jordan_table(value, JordanTable(base)).bound
        b2 = ed_lower_from_jordan_table(value, JordanTable(richer)).bound
        assert b2 >= b1


def test_jordan_table_validation():
    with pytest.raises(InvalidInput):
        JordanTable({1: 0})
    with pytest.raises(InvalidInput):
        JordanTable({1: 1}, kind="medium")


def test_factor_bound_checks():
    h = construct(GroupSpec.abelian(2, 4))  # Z/4 x Z/2
    rep = check_abelian_factor_bounds(h, 4)
    assert rep.pairs == ((2, 1), (4, 1)) and rep.ok

    h8 = construct(GroupSpec.cyclic(8))
    rep8 = check_abelian_factor_bounds(h8, 4)
    assert not rep8.prime_powers_ok and rep8.multiplicities_ok

    h32 = construct(GroupSpec.abelian(2, 2, 2, 2, 2))
    rep32 = check_abelian_factor_bounds(h32, 4)
    assert not rep32.multiplicities_ok and rep32.prime_powers_ok

    with pytest.raises(NotAbelian):
        check_abelian_factor_bounds(construct(GroupSpec.symmetric(3)), 2)


def test_dirichlet_prime_values():
    assert dirichlet_prime(2, 2) == 5
    assert dirichlet_prime(2, 3) == 17
    assert dirichlet_prime(3, 2) == 19
    with pytest.raises(NotPrime):
        dirichlet_prime(4, 2)


def test_dirichlet_prime_against_trial_division():
    for p, n in ((2, 1), (2, 4), (3, 3), (5, 2), (7, 1)):
        q = dirichlet_prime(p, n)
        assert trial_division_is_prime(q)
        assert (q - 1) % p**n == 0
        # smallest: no smaller prime in the progression
        m = p**n
        for candidate in range(1 + m, q, m):
            assert not trial_division_is_prime(candidate)


def test_bounds_report_sandwich(corpus):
    for name, g in corpus:
        rep = bounds_report(g, name=name)
        assert rep.ed_lower <= rep.ed_upper, name
        assert rep.sylow_lower <= rep.ed_upper, name
        if rep.ed_exact is not None:
            assert rep.ed_exact == rep.ed_upper, name
            assert rep.sylow_lower <= rep.ed_exact, name


def test_family_semidirect_full_units():
    rows = family_report(FamilySpec("semidirect_full_units", 3, 20))
    assert len(rows) == 18
    by_n = {r.index: r for r in rows}
    assert by_n[5].ed_upper == 4  # rdim of (Z/5) x| (Z/5)^*
    assert by_n[5].sylow_lower == 1
    assert by_n[5].semidirect_lower == 4
    assert not any(r.skipped for r in rows)


def test_family_gamma():
    rows = family_report(FamilySpec("gamma", 1, 3, p=2))
    assert [r.order for r in rows] == [6, 20, 136]
    assert [r.semidirect_lower for r in rows] == [2, 4, 8]
    assert [r.ed_upper for r in rows] == [2, 4, 8]  # rdim meets the bound here


def test_family_dihedral_odd():
    rows = family_report(FamilySpec("dihedral_odd", 3, 15))
    assert [r.index for r in rows] == [3, 5, 7, 9, 11, 13, 15]
    assert all(r.ed_upper == 2 for r in rows)


def test_family_skip_records():
    rows = family_report(FamilySpec("semidirect_full_units", 11, 13), order_limit=100)
    by_n = {r.index: r for r in rows}
    assert by_n[11].skipped and "exceeds" in by_n[11].skip_reason  # order 110
    assert not by_n[12].skipped  # order 48
    assert by_n[13].skipped  # order 156


def test_family_with_jordan_table():
    jt = JordanTable({1: 1})
    rows = family_report(FamilySpec("gamma", 2, 3, p=2), jordan_table=jt)
    for r in rows:
        assert r.contrapositive_bound == 2  # rdim >= 4 > 1*1
        assert r.contrapositive_entries == (1,)
        assert r.ed_lower >= max(r.semidirect_lower, 2)


def test_family_custom_units():
    rows = family_report(FamilySpec("semidirect_custom", 5, 7, units=(2,)))
    by_n = {r.index: r for r in rows}
    assert by_n[5].order == 20
    assert by_n[7].order == 7 * 3  # ord_7(2) = 3
