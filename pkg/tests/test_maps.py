import pytest

from sdmat import (
    DomainMismatch,
    FMap,
    NotBijective,
    build_instance,
    constant_map,
    cyclic_group,
    identity_map,
    is_crossed_hom,
    map_act,
    map_add,
    map_compose,
    map_inverse,
    map_neg,
    map_twist,
    trivial_action,
    twisted_hom_witness,
    zero_map,
)

Z2 = cyclic_group(2, "Z2")
Z3 = cyclic_group(3, "Z3")


def test_add_cancels_neg():
    phi = FMap(Z3, Z3, (1, 2, 0))
    assert map_add(phi, map_neg(phi)) == zero_map(Z3, Z3)


def test_add_id_id_is_squaring():
    doubled = map_add(identity_map(Z3), identity_map(Z3))
    assert doubled.image == (0, 2, 1)


def test_add_id_id_z2_is_zero():
    assert map_add(identity_map(Z2), identity_map(Z2)) == zero_map(Z2, Z2)


def test_neg_zero_and_involution():
    assert map_neg(zero_map(Z2, Z3)) == zero_map(Z2, Z3)
    assert map_neg(identity_map(Z3)).image == (0, 2, 1)
    phi = FMap(Z2, Z3, (2, 1))
    assert map_neg(map_neg(phi)) == phi


def test_compose():
    inv = FMap(Z3, Z3, (0, 2, 1))
    phi = FMap(Z2, Z3, (0, 1))
    assert map_compose(identity_map(Z3), phi) == phi
    assert map_compose(inv, inv) == identity_map(Z3)
    squaring = map_add(identity_map(Z3), identity_map(Z3))
    assert map_compose(squaring, squaring) == identity_map(Z3)


def test_compose_domain_mismatch():
    with pytest.raises(DomainMismatch):
        map_compose(FMap(Z2, Z2, (0, 1)), FMap(Z2, Z3, (0, 1)))


def test_twist_abelian_is_identity_op():
    phi = FMap(Z2, Z3, (0, 2))
    psi = FMap(Z2, Z3, (1, 1))
    assert map_twist(phi, psi) == phi


def test_twist_by_constant_identity():
    phi = FMap(Z3, Z3, (1, 0, 2))
    assert map_twist(phi, zero_map(Z3, Z3)) == phi


def test_twist_in_s3(s3):
    # conjugating a rotation by a reflection inverts it
    G = s3.group
    r = s3.embed_h(1)
    s = s3.embed_k(1)
    r2 = s3.embed_h(2)
    phi = constant_map(G, G, r)
    psi = constant_map(G, G, s)
    assert map_twist(phi, psi) == constant_map(G, G, r2)


def test_map_act_trivial_action():
    act = trivial_action(Z3, Z2)
    phi = FMap(Z2, Z3, (0, 2))
    steer = FMap(Z2, Z2, (1, 0))
    assert map_act(phi, steer, act) == phi


def test_map_act_inversion(s3):
    phi = FMap(s3.K, s3.H, (0, 1))
    steer = identity_map(s3.K)
    acted = map_act(phi, steer, s3.action)
    # k=1 steers through inversion: 1 goes to 2
    assert acted.image == (0, 2)


def test_map_inverse():
    assert map_inverse(identity_map(Z3)) == identity_map(Z3)
    inv = FMap(Z3, Z3, (0, 2, 1))
    assert map_inverse(inv) == inv
    squaring = FMap(Z3, Z3, (0, 2, 1))
    assert map_inverse(squaring) == squaring
    with pytest.raises(NotBijective):
        map_inverse(zero_map(Z3, Z3))


def test_crossed_hom_zero_map(s3):
    assert is_crossed_hom(zero_map(s3.K, s3.H), identity_map(s3.K), s3.action)


def test_crossed_homs_into_z3(s3):
    # with delta = id every pointed map Z2 -> Z3 satisfies the crossed law:
    # beta(1+1) = beta(1) - beta(1) = 0
    ident = identity_map(s3.K)
    for b in range(3):
        beta = FMap(s3.K, s3.H, (0, b))
        assert is_crossed_hom(beta, ident, s3.action)


def test_crossed_hom_must_be_pointed(s3):
    beta = FMap(s3.K, s3.H, (1, 0))
    assert not is_crossed_hom(beta, identity_map(s3.K), s3.action)
    witness = twisted_hom_witness(beta, identity_map(s3.K), s3.action)
    assert witness is not None


def test_fmap_validation():
    with pytest.raises(DomainMismatch):
        FMap(Z2, Z3, (0, 3))
    with pytest.raises(DomainMismatch):
        FMap(Z2, Z3, (0,))
