"""Exact integer matrices and their normal forms."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kummerlab.linalg import (
    IntMatrix,
    elementary_divisors_via_minors,
    hermite_normal_form,
    smith_normal_form,
)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 7) -> IntMatrix:
    return IntMatrix(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def test_smith_form_frozen_example() -> None:
    a = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    u, d, v = smith_normal_form(a)
    assert u @ a @ v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    diagonal = [d[i][i] for i in range(3)]
    assert diagonal == [2, 2, 156]
    assert elementary_divisors_via_minors(a) == [2, 2, 156]


def test_smith_form_random_properties() -> None:
    rng = random.Random(707)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = random_matrix(rng, rows, cols)
        u, d, v = smith_normal_form(a)
        assert u @ a @ v == d
        assert abs(u.det()) == 1
        assert abs(v.det()) == 1
        diagonal = [d[i][i] for i in range(min(rows, cols))]
        assert all(x >= 0 for x in diagonal)
        for first, second in zip(diagonal, diagonal[1:]):
            if first:
                assert second % first == 0
            else:
                assert second == 0
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d[i][j] == 0
        nonzero = [x for x in diagonal if x]
        assert elementary_divisors_via_minors(a) == nonzero


def test_smith_form_zero_matrix() -> None:
    a = IntMatrix.zeros(3, 2)
    u, d, v = smith_normal_form(a)
    assert u @ a @ v == d
    assert d.is_zero()
    assert elementary_divisors_via_minors(a) == []


def test_hermite_form_random_properties() -> None:
    rng = random.Random(808)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = random_matrix(rng, rows, cols)
        u, h = hermite_normal_form(a)
        assert u @ a == h
        assert abs(u.det()) == 1
        pivot_cols = []
        for i in range(rows):
            row = [h[i][j] for j in range(cols)]
            nonzero = [j for j, x in enumerate(row) if x]
            if not nonzero:
                # Zero rows sink to the bottom.
                for k in range(i, rows):
                    assert all(h[k][j] == 0 for j in range(cols))
                break
            pivot = nonzero[0]
            pivot_cols.append(pivot)
            assert h[i][pivot] > 0
            for k in range(i):
                assert 0 <= h[k][pivot] < h[i][pivot]
        assert pivot_cols == sorted(pivot_cols)


def test_hermite_form_frozen_example() -> None:
    a = IntMatrix([[2, 3, 6], [4, 4, 8], [6, 5, 10]])
    u, h = hermite_normal_form(a)
    assert u @ a == h
    assert h == IntMatrix([[2, 1, 2], [0, 2, 4], [0, 0, 0]])


def test_determinant_matches_cofactor_expansion() -> None:
    rng = random.Random(909)

    def cofactor_det(rows: list[list[int]]) -> int:
        size = len(rows)
        if size == 1:
            return rows[0][0]
        total = 0
        for j in range(size):
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            sign = -1 if j % 2 else 1
            total += sign * rows[0][j] * cofactor_det(minor)
        return total

    for _ in range(20):
        size = rng.randint(1, 4)
        a = random_matrix(rng, size, size)
        assert a.det() == cofactor_det([list(row) for row in a.entries])


def test_matrix_ring_operations() -> None:
    rng = random.Random(111)
    for _ in range(20):
        a = random_matrix(rng, 3, 3)
        b = random_matrix(rng, 3, 3)
        identity = IntMatrix.identity(3)
        assert a @ identity == a
        assert identity @ a == a
        assert (a + b) - b == a
        assert (a @ b).transpose() == b.transpose() @ a.transpose()
        assert a**3 == a @ a @ a
        assert a**0 == identity
        assert a.scale(2) == a + a
        assert (a @ b).det() == a.det() * b.det()


def test_block_assembly() -> None:
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix.zeros(2, 2)
    stacked = IntMatrix.block([[a, b], [b, a]])
    assert stacked.rows == 4
    assert stacked.cols == 4
    assert stacked[0][1] == 2
    assert stacked[2][2] == 1
    assert stacked[3][2] == 3
    assert stacked[0][2] == 0


def test_apply_returns_exact_rationals() -> None:
    a = IntMatrix([[2, 1], [0, 3]])
    image = a.apply([Fraction(1, 2), Fraction(1, 3)])
    assert image == (Fraction(4, 3), Fraction(1))
