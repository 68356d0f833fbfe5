import pytest

from sdmat import (
    GroupValidationError,
    center,
    cyclic_group,
    enumerate_autos,
    enumerate_homs,
    greedy_generators,
    make_group,
    trivial_group,
)
from sdmat.groups import word_sequence


def test_trivial_table():
    g = make_group([[0]])
    assert g.order == 1
    assert g.identity == 0
    assert g.inverses == (0,)


def test_z2_table():
    g = make_group([[0, 1], [1, 0]])
    assert g.order == 2
    assert g.identity == 0
    assert g.inverses == (0, 1)
    assert g.is_abelian


def test_broken_table_rejected():
    # table[1][2] = 1 breaks cancellation; some axiom must be reported
    table = [[0, 1, 2], [1, 2, 1], [2, 0, 1]]
    with pytest.raises(GroupValidationError):
        make_group(table)


def test_non_square_table_rejected():
    with pytest.raises(ValueError):
        make_group([[0, 1], [1, 0], [0, 1]])


def test_out_of_range_entry_rejected():
    with pytest.raises(ValueError):
        make_group([[0, 1], [1, 7]])


def test_identity_detected_anywhere():
    # identity sits at index 1, not index 0
    z2 = [[1, 0], [0, 1]]
    g = make_group(z2)
    assert g.identity == 1


def test_center_abelian_is_everything():
    z3 = cyclic_group(3)
    assert sorted(center(z3)) == [0, 1, 2]


def test_center_s3_trivial(s3):
    zc = center(s3.group)
    assert list(zc) == [s3.group.identity]


def test_center_klein_full(klein):
    assert len(center(klein.group)) == 4


def test_center_d4_order_two(d4):
    assert len(center(d4.group)) == 2


def test_center_elements_commute(s3, d4):
    for P in (s3, d4):
        g = P.group
        for z in center(g):
            assert all(g.mul(z, x) == g.mul(x, z) for x in g.elements())


def test_hom_counts():
    z2, z3, z4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    assert len(enumerate_homs(z3, z2)) == 1
    assert len(enumerate_homs(z4, z2)) == 2
    assert len(enumerate_homs(z2, z2)) == 2


def test_homs_verified_and_sorted():
    z4, z2 = cyclic_group(4), cyclic_group(2)
    homs = enumerate_homs(z4, z2)
    assert [h.image for h in homs] == sorted(h.image for h in homs)
    for h in homs:
        assert h.is_hom


def test_auto_counts():
    assert len(enumerate_autos(cyclic_group(3))) == 2
    assert len(enumerate_autos(trivial_group())) == 1
    for p in (2, 3, 5, 7):
        assert len(enumerate_autos(cyclic_group(p))) == p - 1


def test_aut_klein(klein):
    assert len(enumerate_autos(klein.H)) == 1  # Z2
    assert len(enumerate_autos(klein.group)) == 6


def test_aut_z3_maps():
    z3 = cyclic_group(3)
    images = {a.image for a in enumerate_autos(z3)}
    assert images == {(0, 1, 2), (0, 2, 1)}


def test_greedy_generators_close():
    # the identity seeds the search, so every other element gets one entry
    for n in (1, 2, 5, 6):
        g = cyclic_group(n)
        gens = greedy_generators(g)
        seq = word_sequence(g, gens)
        assert len(seq) == g.order - 1


def test_greedy_generators_s3(s3):
    gens = greedy_generators(s3.group)
    assert len(word_sequence(s3.group, gens)) == 5
    assert len(gens) <= 2
