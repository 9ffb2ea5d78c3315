"""Points, endomorphisms, and affine automorphisms of the product torus."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kummerlab.rings import FieldElem, RingElem, RingId
from kummerlab.torus import (
    LINEAR_ORDER_BOUND,
    TorusAuto,
    TorusEndo,
    TorusPoint,
    UnsupportedAutomorphismError,
    automorphism_order,
    induced_h1_matrix,
    orbit_sum_data,
    symplectic_multiplier,
)

ALL_RINGS = [RingId.RATIONAL_INT, RingId.GAUSSIAN, RingId.EISENSTEIN]


def random_point(rng: random.Random, ring: RingId, level: int = 12) -> TorusPoint:
    def coord() -> FieldElem:
        return FieldElem(
            ring,
            Fraction(rng.randrange(level), level),
            Fraction(rng.randrange(level), level),
        )

    return TorusPoint(coord(), coord())


def random_endo(rng: random.Random, ring: RingId, bound: int = 3) -> TorusEndo:
    def elem() -> RingElem:
        return RingElem(ring, rng.randint(-bound, bound), rng.randint(-bound, bound))

    return TorusEndo([[elem(), elem()], [elem(), elem()]])


def zeta_diag(ring: RingId) -> TorusEndo:
    return TorusEndo.diagonal(RingElem.zeta(ring), RingElem.one(ring))


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_point_vector_round_trip(ring: RingId) -> None:
    rng = random.Random(1122)
    for _ in range(25):
        p = random_point(rng, ring)
        assert TorusPoint.from_vector(ring, p.coords()) == p
        assert all(0 <= c < 1 for c in p.coords())


def test_torsion_levels() -> None:
    ring = RingId.GAUSSIAN
    p = TorusPoint(
        FieldElem(ring, Fraction(1, 4), Fraction(0)),
        FieldElem(ring, Fraction(1, 6), Fraction(1, 2)),
    )
    assert p.torsion_level() == 12
    assert p.is_torsion_of_level(12)
    assert p.is_torsion_of_level(24)
    assert not p.is_torsion_of_level(8)
    assert p.scale(12).is_origin()
    assert not p.scale(6).is_origin()
    assert TorusPoint.origin(ring).torsion_level() == 1


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_point_group_laws(ring: RingId) -> None:
    rng = random.Random(2233)
    origin = TorusPoint.origin(ring)
    for _ in range(25):
        p = random_point(rng, ring)
        q = random_point(rng, ring)
        assert p + q == q + p
        assert p - q == p + (-q)
        assert p + origin == p
        assert p - p == origin
        assert p.scale(3) == p + p + p


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_endo_action_matches_induced_integer_matrix(ring: RingId) -> None:
    # Dual route: the abstract module action and the induced rank-four
    # integer representation must transform coordinates identically.
    rng = random.Random(3344)
    for _ in range(25):
        e = random_endo(rng, ring)
        p = random_point(rng, ring)
        direct = e.apply(p).coords()
        induced = e.induced_matrix().apply(p.coords())
        assert direct == tuple(c % 1 for c in induced)


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_induced_matrix_is_a_ring_homomorphism(ring: RingId) -> None:
    rng = random.Random(4455)
    for _ in range(20):
        a = random_endo(rng, ring)
        b = random_endo(rng, ring)
        assert (a @ b).induced_matrix() == a.induced_matrix() @ b.induced_matrix()
        assert (a + b).induced_matrix() == a.induced_matrix() + b.induced_matrix()
    assert TorusEndo.identity(ring).induced_matrix() == (
        TorusEndo.identity(ring).induced_matrix() ** 1
    )


def test_endo_determinant_multiplicative() -> None:
    rng = random.Random(5566)
    for ring in ALL_RINGS:
        for _ in range(15):
            a = random_endo(rng, ring)
            b = random_endo(rng, ring)
            assert (a @ b).det() == a.det() * b.det()


def test_multiplicative_orders() -> None:
    assert zeta_diag(RingId.EISENSTEIN).multiplicative_order() == 3
    assert zeta_diag(RingId.GAUSSIAN).multiplicative_order() == 4
    minus = TorusEndo.diagonal(
        -RingElem.one(RingId.RATIONAL_INT), -RingElem.one(RingId.RATIONAL_INT)
    )
    assert minus.multiplicative_order() == 2
    ring = RingId.RATIONAL_INT
    rot6 = TorusEndo(
        [
            [RingElem(ring, 1), RingElem(ring, -1)],
            [RingElem(ring, 1), RingElem(ring, 0)],
        ]
    )
    assert rot6.multiplicative_order() == 6
    shear = TorusEndo(
        [
            [RingElem(ring, 1), RingElem(ring, 1)],
            [RingElem(ring, 0), RingElem(ring, 1)],
        ]
    )
    with pytest.raises(UnsupportedAutomorphismError):
        shear.multiplicative_order()
    with pytest.raises(UnsupportedAutomorphismError):
        TorusEndo.zero(ring).multiplicative_order()


def test_automorphism_orders() -> None:
    eis = RingId.EISENSTEIN
    h = zeta_diag(eis)
    origin = TorusPoint.origin(eis)
    assert TorusAuto(h, origin).order() == 3
    # A translation component of exact level nine in the fixed direction
    # stretches the order to nine.
    shift = TorusPoint(
        FieldElem(eis, Fraction(0), Fraction(0)),
        FieldElem(eis, Fraction(1, 9), Fraction(0)),
    )
    assert TorusAuto(h, shift).order() == 9
    assert automorphism_order(TorusAuto(h, shift)) == 9
    # A level-three translation in the same direction sums to zero over
    # the three iterates, so it does not stretch the order at all.
    third = TorusPoint(
        FieldElem(eis, Fraction(0), Fraction(0)),
        FieldElem(eis, Fraction(1, 3), Fraction(0)),
    )
    assert TorusAuto(h, third).order() == 3
    assert TorusAuto.translation_by(third).order() == 3
    assert TorusAuto.identity(eis).order() == 1


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_composition_against_pointwise_action(ring: RingId) -> None:
    rng = random.Random(6677)
    for _ in range(20):
        f = TorusAuto(zeta_diag(ring), random_point(rng, ring))
        g = TorusAuto(zeta_diag(ring) ** 2, random_point(rng, ring))
        p = random_point(rng, ring)
        assert (f * g).apply(p) == f.apply(g.apply(p))


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_power_matches_repeated_composition(ring: RingId) -> None:
    rng = random.Random(7788)
    for _ in range(10):
        psi = TorusAuto(zeta_diag(ring), random_point(rng, ring))
        assert psi**0 == TorusAuto.identity(ring)
        accumulated = psi
        for k in range(1, 6):
            assert psi**k == accumulated
            accumulated = accumulated * psi
    with pytest.raises(ValueError):
        psi ** (-1)


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_orbit_sum_identity(ring: RingId) -> None:
    # orbit_sum_data(auto, l) returns (L, c) with sum of the first l
    # iterate images equal to L(p) + c for every point p.
    rng = random.Random(8899)
    for _ in range(10):
        psi = TorusAuto(zeta_diag(ring), random_point(rng, ring))
        for length in range(1, 5):
            summed, constant = orbit_sum_data(psi, length)
            p = random_point(rng, ring)
            total = TorusPoint.origin(ring)
            image = p
            for _ in range(length):
                total = total + image
                image = psi.apply(image)
            assert total == summed.apply(p) + constant


def test_orbit_sum_trivial_length() -> None:
    ring = RingId.GAUSSIAN
    psi = TorusAuto(zeta_diag(ring), TorusPoint.origin(ring))
    summed, constant = orbit_sum_data(psi, 1)
    assert summed == TorusEndo.identity(ring)
    assert constant.is_origin()


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_symplectic_multiplier_ignores_translation(ring: RingId) -> None:
    rng = random.Random(9911)
    for _ in range(15):
        h = zeta_diag(ring)
        a = random_point(rng, ring)
        assert symplectic_multiplier(TorusAuto(h, a)) == h.det()
    assert symplectic_multiplier(
        TorusAuto(zeta_diag(RingId.EISENSTEIN), TorusPoint.origin(RingId.EISENSTEIN))
    ) == RingElem.zeta(RingId.EISENSTEIN)


def test_induced_h1_matrix_has_finite_order() -> None:
    for ring in ALL_RINGS:
        auto = TorusAuto(zeta_diag(ring), TorusPoint.origin(ring))
        m = induced_h1_matrix(auto)
        order = auto.linear.multiplicative_order()
        assert m**order == m**0
        assert LINEAR_ORDER_BOUND % order == 0
