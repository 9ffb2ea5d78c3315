"""Exact arithmetic in the three quadratic coefficient rings."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kummerlab.rings import (
    FieldElem,
    RingElem,
    RingId,
    RingMismatchError,
    units,
    zeta6,
)

ALL_RINGS = [RingId.RATIONAL_INT, RingId.GAUSSIAN, RingId.EISENSTEIN]


def random_elem(rng: random.Random, ring: RingId, bound: int = 9) -> RingElem:
    return RingElem(ring, rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_field(rng: random.Random, ring: RingId, bound: int = 6) -> FieldElem:
    def coord() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return FieldElem(ring, coord(), coord())


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_ring_axioms_random(ring: RingId) -> None:
    rng = random.Random(101)
    zero = RingElem.zero(ring)
    one = RingElem.one(ring)
    for _ in range(60):
        a = random_elem(rng, ring)
        b = random_elem(rng, ring)
        c = random_elem(rng, ring)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        assert a - b == a + (-b)


def test_generator_orders() -> None:
    zg = RingElem.zeta(RingId.GAUSSIAN)
    assert zg**2 == -RingElem.one(RingId.GAUSSIAN)
    assert zg**4 == RingElem.one(RingId.GAUSSIAN)
    ze = RingElem.zeta(RingId.EISENSTEIN)
    assert ze**3 == RingElem.one(RingId.EISENSTEIN)
    assert ze**2 + ze + RingElem.one(RingId.EISENSTEIN) == RingElem.zero(RingId.EISENSTEIN)


def test_sixth_root_of_unity() -> None:
    u = zeta6()
    assert u == RingElem.one(RingId.EISENSTEIN) + RingElem.zeta(RingId.EISENSTEIN)
    powers = [u**k for k in range(1, 7)]
    assert powers[-1] == RingElem.one(RingId.EISENSTEIN)
    assert all(p != RingElem.one(RingId.EISENSTEIN) for p in powers[:-1])
    for ring in (RingId.RATIONAL_INT, RingId.GAUSSIAN):
        with pytest.raises(ValueError):
            zeta6(ring)


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_conjugation_is_ring_involution(ring: RingId) -> None:
    rng = random.Random(202)
    for _ in range(40):
        a = random_elem(rng, ring)
        b = random_elem(rng, ring)
        assert a.conj().conj() == a
        assert (a + b).conj() == a.conj() + b.conj()
        assert (a * b).conj() == a.conj() * b.conj()


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_norm_multiplicative_and_nonnegative(ring: RingId) -> None:
    rng = random.Random(303)
    for _ in range(40):
        a = random_elem(rng, ring)
        b = random_elem(rng, ring)
        assert a.norm() >= 0
        assert (a * b).norm() == a.norm() * b.norm()
        assert a.norm() == 0 if a.is_zero() else a.norm() > 0


def test_unit_groups() -> None:
    expected = {
        RingId.RATIONAL_INT: 2,
        RingId.GAUSSIAN: 4,
        RingId.EISENSTEIN: 6,
    }
    for ring, count in expected.items():
        group = units(ring)
        assert len(group) == count == ring.unit_count
        assert len(set(group)) == count
        for u in group:
            assert u.norm() == 1
            assert u.is_unit()


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_regular_representation_is_multiplicative(ring: RingId) -> None:
    rng = random.Random(404)

    def matmul(p, q):
        return tuple(
            tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )

    for _ in range(40):
        a = random_elem(rng, ring)
        b = random_elem(rng, ring)
        ra = a.regular_representation()
        rb = b.regular_representation()
        assert (a * b).regular_representation() == matmul(ra, rb)
        det = ra[0][0] * ra[1][1] - ra[0][1] * ra[1][0]
        assert det == a.norm()


def test_rational_ring_folds_generator() -> None:
    ring = RingId.RATIONAL_INT
    assert RingElem(ring, 0, 1) == RingElem.one(ring)
    assert RingElem(ring, 2, 3) == RingElem(ring, 5, 0)
    assert RingElem(ring, 2, 3).y == 0
    folded = FieldElem(ring, Fraction(1, 2), Fraction(1, 3))
    assert folded.y == 0
    assert folded.x == Fraction(5, 6)


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_field_inverse_and_integrality(ring: RingId) -> None:
    rng = random.Random(505)
    one = FieldElem(ring, Fraction(1), Fraction(0))
    for _ in range(40):
        a = random_field(rng, ring)
        if a.x == 0 and a.y == 0:
            continue
        assert a * a.inverse() == one
        assert a.scale(Fraction(6)) == a + a + a + a + a + a
    assert FieldElem(ring, Fraction(2), Fraction(-1)).is_integral()
    assert not FieldElem(ring, Fraction(1, 2), Fraction(0)).is_integral()


@pytest.mark.parametrize("ring", ALL_RINGS)
def test_mod_lattice_reduces_into_unit_box(ring: RingId) -> None:
    rng = random.Random(606)
    for _ in range(40):
        a = random_field(rng, ring)
        r = a.mod_lattice()
        assert 0 <= r.x < 1
        assert 0 <= r.y < 1
        assert (a - r).is_integral()


def test_mixed_ring_arithmetic_is_rejected() -> None:
    a = RingElem.one(RingId.GAUSSIAN)
    b = RingElem.one(RingId.EISENSTEIN)
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * b


def test_ring_tokens_round_trip() -> None:
    for ring in ALL_RINGS:
        assert RingId.from_token(ring.value) is ring
    with pytest.raises(ValueError):
        RingId.from_token("quaternion")
