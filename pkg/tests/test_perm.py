import pytest

from edkit.errors import InvalidPermutation
from edkit.perm import Permutation


def test_identity_and_composition_convention():
    s = Permutation([1, 2, 0])  # 0->1->2->0
    t = Permutation([1, 0, 2])  # swap 0,1
    # (s * t)(x) = s(t(x)): t first
    st = s * t
    assert [st(x) for x in range(3)] == [s(t(x)) for x in range(3)]
    e = Permutation.identity(3)
    assert s * e == s and e * s == s


def test_composition_associative():
    a = Permutation([1, 2, 3, 0])
    b = Permutation([0, 2, 1, 3])
    c = Permutation([3, 1, 2, 0])
    assert (a * b) * c == a * (b * c)


def test_inverse_and_order():
    s = Permutation([1, 2, 0, 4, 3])
    assert (s * s.inverse()).is_identity()
    assert s.order() == 6  # lcm(3, 2)
    assert Permutation.identity(4).order() == 1


def test_from_cycles():
    s = Permutation.from_cycles(5, [0, 1, 2], [3, 4])
    assert s.images == (1, 2, 0, 4, 3)
    assert s.cycles() == [[0, 1, 2], [3, 4]]


def test_invalid_images_rejected():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation([0, 3])
    with pytest.raises(InvalidPermutation):
        Permutation([])


def test_mixed_degree_composition_rejected():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 1]) * Permutation([0, 1, 2])
