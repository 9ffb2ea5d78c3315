"""Topological Lefschetz numbers on generalized Kummer varieties.

Given the 4x4 integer matrix ``M`` by which an automorphism of the abelian
surface acts on first homology, the machinery below packages

* the determinant sequence ``det(I - M^s)``,
* the generating series ``F(t) = prod_nu exp(sum_s det(I - M^s)/s * t^(nu*s))``
  whose coefficients count invariant data on punctual strata,
* the census of torsion characters fixed by the dual action, graded by
  exact order, and
* the resulting Lefschetz number on the ``2(n-1)``-dimensional variety:
  the character-weighted sum of series coefficients divided by the torus
  Lefschetz number ``det(I - M)``.

The division is exact whenever ``det(I - M)`` is nonzero; a zero value means
the automorphism has no isolated torus fixed points and the formula does not
apply (the fixed-point-free regime), which raises :class:`DegenerateActionError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .linalg import IntMatrix
from .series import TruncatedSeries

MATRIX_ORDER_BOUND = 24


class DegenerateActionError(ValueError):
    """The torus Lefschetz number vanishes, so the quotient formula is void."""


class NonIntegralLefschetzError(ArithmeticError):
    """The exact-divisibility postcondition failed; indicates a bug."""


def matrix_order(m: IntMatrix, bound: int = MATRIX_ORDER_BOUND) -> int:
    """Multiplicative order of an integer matrix, checked up to ``bound``."""
    if m.rows != m.cols:
        raise ValueError("order is defined for square matrices only")
    identity = IntMatrix.identity(m.rows)
    power = m
    for k in range(1, bound + 1):
        if power == identity:
            return k
        power = power @ m
    raise ValueError(f"matrix has no multiplicative order up to {bound}")


def companion_matrix(tail_coefficients) -> IntMatrix:
    """Companion matrix of the monic polynomial ``x^d + c_{d-1} x^{d-1} + ... + c_0``.

    ``tail_coefficients`` lists ``(c_0, ..., c_{d-1})``.
    """
    coeffs = [int(c) for c in tail_coefficients]
    d = len(coeffs)
    if d == 0:
        raise ValueError("polynomial degree must be positive")
    out = [[0] * d for _ in range(d)]
    for i in range(1, d):
        out[i][i - 1] = 1
    for i in range(d):
        out[i][d - 1] = -coeffs[i]
    return IntMatrix(out)


def det_one_minus_power(m: IntMatrix, s: int) -> int:
    """The exact integer ``det(I - M^s)``."""
    if s < 1:
        raise ValueError("the exponent must be positive")
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    return (IntMatrix.identity(m.rows) - m**s).det()


def kummer_series(m: IntMatrix, truncation: int) -> TruncatedSeries:
    """The generating series built from the determinant sequence of ``M``.

    Expands ``prod_{nu>=1} exp(sum_{s>=1} det(I - M^s)/s * t^(nu*s))`` to the
    requested truncation.  The coefficients are always non-negative integers;
    integrality is asserted before returning.
    """
    matrix_order(m)
    if truncation < 0:
        raise ValueError("truncation order must be non-negative")
    dets = {s: det_one_minus_power(m, s) for s in range(1, truncation + 1)}
    exponent = [Fraction(0)] * (truncation + 1)
    for nu in range(1, truncation + 1):
        for s in range(1, truncation // nu + 1):
            exponent[nu * s] += Fraction(dets[s], s)
    result = TruncatedSeries(exponent).exp()
    assert result.is_integral(), "series coefficients must be integers"
    assert all(c >= 0 for c in result.coefficients)
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        else:
            p += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class CharacterCounts:
    """Counts of dual-torsion characters fixed by the action, by exact order.

    ``counts`` pairs each divisor ``d`` of ``modulus`` with the number of
    invariant characters of exact order ``d``; the trivial character always
    contributes ``(1, 1)``.
    """

    modulus: int
    counts: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def __getitem__(self, divisor: int) -> int:
        return self.as_dict()[divisor]


def invariant_character_counts(m: IntMatrix, n: int) -> CharacterCounts:
    """Census of ``n``-torsion characters fixed by the transposed action.

    A character ``chi`` in ``(Z/n)^4`` is invariant when
    ``(M^T - I) chi == 0 (mod n)``.  With the Smith normal form of
    ``M^T - I`` in hand, the number of invariant characters of order
    dividing ``e`` is a product of gcds, and exact-order counts follow by
    Moebius inversion over the divisors of ``n``.
    """
    if n < 1:
        raise ValueError("the torsion modulus must be positive")
    if m.rows != m.cols or m.rows != 4:
        raise ValueError("a 4x4 homology action is required")
    from .linalg import smith_normal_form

    k = m.transpose() - IntMatrix.identity(4)
    _, d, _ = smith_normal_form(k)
    diag = [d[i][i] for i in range(4)]

    def dividing(e: int) -> int:
        out = 1
        for di in diag:
            out *= gcd(di, e) if di != 0 else e
        return out

    counts = []
    for div in _divisors(n):
        exact = sum(_mobius(div // e) * dividing(e) for e in _divisors(div))
        counts.append((div, exact))
    result = CharacterCounts(n, tuple(counts))
    assert result[1] == 1
    assert result.total() == dividing(n)
    return result


def lefschetz_torus(m: IntMatrix) -> int:
    """Topological Lefschetz number of the action on the abelian surface."""
    if m.rows != m.cols or m.rows != 4:
        raise ValueError("a 4x4 homology action is required")
    return det_one_minus_power(m, 1)


def lefschetz_kummer(m: IntMatrix, n: int) -> int:
    """Topological Lefschetz number on the generalized Kummer variety.

    Sums ``N_d * [t^(n/d)] F`` over the invariant-character census and
    divides by the torus Lefschetz number; the division must be exact.
    """
    if n < 2:
        raise ValueError("the variety parameter must be at least 2")
    base = lefschetz_torus(m)
    if base == 0:
        raise DegenerateActionError(
            "torus Lefschetz number is zero; the quotient formula does not apply"
        )
    series = kummer_series(m, n)
    census = invariant_character_counts(m, n)
    weighted = 0
    for divisor, count in census.counts:
        weighted += count * int(series[n // divisor])
    if weighted % base != 0:
        raise NonIntegralLefschetzError(
            f"{weighted} is not divisible by {base}"
        )
    return weighted // base


def _as_rational_rows(matrix) -> list[list[Fraction]]:
    if matrix is None:
        return []
    rows = [[Fraction(e) for e in row] for row in matrix]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("square matrix required")
    return rows


def _trace_power(rows: list[list[Fraction]], s: int) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(0)
    power = [[Fraction(1) if i == j else Fraction(0) for j in range(size)] for i in range(size)]
    for _ in range(s):
        power = [
            [
                sum((power[i][k] * rows[k][j] for k in range(size)), Fraction(0))
                for j in range(size)
            ]
            for i in range(size)
        ]
    return sum((power[i][i] for i in range(size)), Fraction(0))


def supertrace_sym_series(even, odd, truncation: int) -> TruncatedSeries:
    """Supertrace series of the symmetric algebra of a graded endomorphism.

    For an even endomorphism ``h0`` and an odd one ``h1`` the series equals
    ``exp(sum_s (tr(h0^s) - tr(h1^s))/s * t^s)``; degree ``k`` carries the
    supertrace of the induced map on the degree-``k`` part of the symmetric
    algebra (symmetric powers on even generators, exterior powers with sign
    on odd ones).  An entirely even endomorphism with a single eigenvalue
    ``c`` gives the geometric series of ``c``; an entirely odd one gives the
    polynomial ``1 - c t``.
    """
    if truncation < 0:
        raise ValueError("truncation order must be non-negative")
    even_rows = _as_rational_rows(even)
    odd_rows = _as_rational_rows(odd)
    exponent = [Fraction(0)]
    for s in range(1, truncation + 1):
        sup = _trace_power(even_rows, s) - _trace_power(odd_rows, s)
        exponent.append(sup / s)
    return TruncatedSeries(exponent, truncation).exp()
