"""Solvability of integer-linear systems on the real torus.

The central question: given an integer matrix ``T`` and a rational vector
``c``, does some real vector ``z`` satisfy ``T @ z = c`` modulo ``Z^rows``?
Equivalently, does ``c`` lie in the rational column span of ``T`` plus the
integer lattice?  The decision comes with a checkable artifact either way:

* solvable: a rational witness ``z`` (coordinates reduced into ``[0, 1)``)
  with ``T @ z - c`` integral;
* unsolvable: an integer row functional ``f`` with ``f @ T == 0`` whose
  pairing with ``c`` is not an integer, which is impossible for any member
  of the span plus the lattice.

Because the constants are rational, a solvable system always has a rational
(torsion) witness: denominators can be cleared through the Smith normal form
of ``T``.

:func:`solvable_by_enumeration` re-decides the same question by finite
enumeration alone and exists to cross-validate the normal-form route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .linalg import IntMatrix, elementary_divisors_via_minors, smith_normal_form


class DimensionMismatchError(ValueError):
    """Raised when a constant vector does not match the system's row count."""


@dataclass(frozen=True)
class SolvabilityResult:
    """Outcome of a torus-solvability decision.

    Exactly one of ``witness`` and ``obstruction`` is populated.  The
    obstruction pairs the integer functional with its non-integral value
    on the constants.
    """

    solvable: bool
    witness: tuple[Fraction, ...] | None
    obstruction: tuple[tuple[int, ...], Fraction] | None

    def __bool__(self) -> bool:
        return self.solvable


def _as_fractions(c) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in c)


def torus_system_solvable(system: IntMatrix, constants) -> SolvabilityResult:
    """Decide ``system @ z = constants`` modulo the integer lattice.

    The Smith normal form ``U @ system @ V = D`` turns the question into a
    diagonal one: the transformed constants ``U @ c`` must be integral on
    every row outside the diagonal rank.  Witness and obstruction both fall
    out of the transform data and are re-checked before returning.
    """
    c = _as_fractions(constants)
    if len(c) != system.rows:
        raise DimensionMismatchError(
            f"system has {system.rows} rows but {len(c)} constants were given"
        )
    u, d, v = smith_normal_form(system)
    uc = u.apply(c)
    rank = sum(
        1 for i in range(min(system.rows, system.cols)) if d[i][i] != 0
    )
    for i in range(rank, system.rows):
        if uc[i].denominator != 1:
            functional = u[i]
            assert verify_obstruction(system, c, functional)
            return SolvabilityResult(False, None, (functional, uc[i]))
    w = [uc[i] / d[i][i] for i in range(rank)]
    w += [Fraction(0)] * (system.cols - rank)
    z = tuple(x % 1 for x in v.apply(w))
    assert verify_witness(system, c, z)
    return SolvabilityResult(True, z, None)


def verify_witness(system: IntMatrix, constants, witness) -> bool:
    """Check that ``system @ witness - constants`` is an integer vector."""
    c = _as_fractions(constants)
    z = _as_fractions(witness)
    image = system.apply(z)
    return all((a - b).denominator == 1 for a, b in zip(image, c))


def verify_obstruction(system: IntMatrix, constants, functional) -> bool:
    """Check that ``functional`` kills the column span but not ``constants``."""
    c = _as_fractions(constants)
    f = tuple(int(e) for e in functional)
    if len(f) != system.rows:
        return False
    killed = all(
        sum(f[i] * system[i][j] for i in range(system.rows)) == 0
        for j in range(system.cols)
    )
    pairing = sum((fi * ci for fi, ci in zip(f, c)), Fraction(0))
    return killed and pairing.denominator != 1


def solvable_by_enumeration(system: IntMatrix, constants) -> bool:
    """Brute-force the same decision by finite subgroup closure.

    A solvable system has a rational solution with denominator dividing
    ``q = lcm(denominators of c) * (largest elementary divisor of T)``, so
    solvability is equivalent to ``q*c mod q`` lying in the subgroup of
    ``(Z/q)^rows`` generated by the columns of ``T``.  The elementary
    divisor comes from gcds of minors, not from the Smith normal form under
    test.
    """
    c = _as_fractions(constants)
    if len(c) != system.rows:
        raise DimensionMismatchError(
            f"system has {system.rows} rows but {len(c)} constants were given"
        )
    divisors = [e for e in elementary_divisors_via_minors(system) if e != 0]
    if len(divisors) == system.rows:
        # Full row rank: the rational span is everything.
        return True
    q = lcm(1, *(v.denominator for v in c))
    if divisors:
        q *= divisors[-1]
    target = tuple(int(v * q) % q for v in c)
    group = {(0,) * system.rows}
    if target in group:
        return True
    for j in range(system.cols):
        generator = tuple(system[i][j] % q for i in range(system.rows))
        if generator in group:
            continue
        frontier = group
        while frontier:
            frontier = {
                tuple((x + g) % q for x, g in zip(elem, generator))
                for elem in frontier
            } - group
            group |= frontier
        if target in group:
            return True
    return target in group
