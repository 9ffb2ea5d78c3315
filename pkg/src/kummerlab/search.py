"""Exhaustive search for fixed-point-free natural automorphisms.

The search space for a given ``n`` and ring is the set of pairs ``(h, a)``
where ``h`` is a finite-order linear automorphism of ``E x E`` with entries
of bounded norm and ``a`` is an ``n``-torsion translation.  Two pairs that
differ by conjugation with a translation ``t_b`` induce conjugate maps on
the fibre ``K_n``, so freeness only depends on the orbit of ``a`` under
``a -> a + (I - h) b`` with ``b`` ranging over the ``n``-torsion subgroup.
The search reports one representative per orbit (the first one in scan
order) and skips the rest.

Two sound screens keep the sweep fast.  A nontrivial power with trivial
symplectic multiplier fixes points, so a free pair needs the determinant
of ``h`` to have the same multiplicative order as ``h`` itself, and the
translation must not extend the order beyond that of the linear part.
Only pairs surviving both screens reach the full freeness decision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .enriques import QuotientClassification, classify_free_quotient
from .fixedpoint import FreenessReport, group_acts_freely
from .rings import RingElem, RingId
from .torus import (
    LINEAR_ORDER_BOUND,
    TorusAuto,
    TorusEndo,
    TorusPoint,
    UnsupportedAutomorphismError,
    symplectic_multiplier,
)

MAX_NORM_CAP = 4
LEVEL_CAP = 24


@dataclass(frozen=True)
class SearchResult:
    """One fixed-point-free pair, with its order and quotient type."""

    linear: TorusEndo
    translation: TorusPoint
    order: int
    report: FreenessReport
    classification: QuotientClassification


def ring_elements_up_to_norm(ring: RingId, bound: int) -> list[RingElem]:
    """All ring integers of norm at most ``bound``, in scan order."""
    if bound < 0:
        raise ValueError("norm bound must be non-negative")
    # norm(x + y*zeta) is a positive definite quadratic form, so every
    # element of bounded norm has |x|, |y| <= 2*bound.  Construction
    # canonicalizes coordinates (the rational-integer ring folds the
    # generator away), so a seen-set keeps each element once.
    box = 2 * bound
    found = []
    seen = set()
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            e = RingElem(ring, x, y)
            if e in seen:
                continue
            if e.norm() <= bound:
                seen.add(e)
                found.append(e)
    return found


def _has_finite_order(endo: TorusEndo) -> bool:
    """Whether the matrix is torsion in the matrix group.

    Eigenvalues of a finite-order matrix are roots of unity of degree at
    most four over the rationals that live in a quadratic extension of the
    scalar field, so every achievable order divides 24 and torsion is
    equivalent to the 24th power being the identity (five squarings
    instead of a stepwise order hunt).
    """
    p2 = endo @ endo
    p3 = p2 @ endo
    p6 = p3 @ p3
    p12 = p6 @ p6
    return p12 @ p12 == TorusEndo.identity(endo.ring)


def linear_candidates(ring: RingId, max_norm: int) -> list[TorusEndo]:
    """Finite-order linear automorphisms with entries of norm <= max_norm.

    Candidates must have unit determinant (otherwise they do not act
    invertibly) and multiplicative order within the supported bound.
    """
    if max_norm > MAX_NORM_CAP:
        raise ValueError(f"max_norm is capped at {MAX_NORM_CAP}")
    entries = ring_elements_up_to_norm(ring, max_norm)
    accepted = []
    for p, q, r, s in itertools.product(entries, repeat=4):
        det = p * s - q * r
        if not det.is_unit():
            continue
        endo = TorusEndo(((p, q), (r, s)))
        if not _has_finite_order(endo):
            continue
        endo.multiplicative_order(LINEAR_ORDER_BOUND)
        accepted.append(endo)
    return accepted


def torsion_points(ring: RingId, level: int) -> list[TorusPoint]:
    """All points killed by ``level``, in scan order, without duplicates."""
    if level < 1:
        raise ValueError("level must be positive")
    seen = set()
    points = []
    for i1, i2, i3, i4 in itertools.product(range(level), repeat=4):
        p = TorusPoint.from_vector(
            ring,
            (
                Fraction(i1, level),
                Fraction(i2, level),
                Fraction(i3, level),
                Fraction(i4, level),
            ),
        )
        if p in seen:
            continue
        seen.add(p)
        points.append(p)
    return points


def _conjugacy_class(
    linear: TorusEndo, a: TorusPoint, torsion: list[TorusPoint]
) -> set[TorusPoint]:
    """Orbit of ``a`` under ``a -> a + (I - h) b`` over the torsion group."""
    shift = TorusEndo.identity(linear.ring) - linear
    return {a + shift.apply(b) for b in torsion}


def _conjugacy_deltas(linear: TorusEndo, level: int) -> list[TorusPoint]:
    """The subgroup ``(I - h) E[level]`` as a list of translation offsets.

    Built by closing the images of the four coordinate generators under
    addition, which touches each subgroup element a handful of times
    instead of applying the matrix to every torsion point.
    """
    ring = linear.ring
    shift = TorusEndo.identity(ring) - linear
    unit = Fraction(1, level)
    generators = [
        shift.apply(
            TorusPoint.from_vector(
                ring, tuple(unit if j == i else Fraction(0) for j in range(4))
            )
        )
        for i in range(4)
    ]
    group = {TorusPoint.origin(ring)}
    for g in generators:
        frontier = group
        while frontier:
            frontier = {p + g for p in frontier} - group
            group |= frontier
    return list(group)


def _unit_order(unit: RingElem, bound: int = LINEAR_ORDER_BOUND) -> int:
    one = RingElem.one(unit.ring)
    power = unit
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * unit
    raise AssertionError("unit order must be bounded by the linear order cap")


def _multiplier_order(auto: TorusAuto) -> int:
    order = _unit_order(symplectic_multiplier(auto))
    if auto.order() % order != 0:
        raise AssertionError("multiplier order must divide the group order")
    return order


def run_search(
    n: int,
    ring: RingId,
    *,
    level: int | None = None,
    max_norm: int = 1,
    linears: list[TorusEndo] | None = None,
) -> list[SearchResult]:
    """Enumerate translation-conjugacy classes of free pairs on ``K_n``.

    ``level`` bounds the torsion level of the translation part (default
    ``n``; it must divide ``n`` for the translations to be ``n``-torsion).
    ``linears`` restricts the catalog of linear parts to the given
    matrices instead of the norm-bounded sweep.  The identity map is
    excluded: it generates the trivial group, which acts freely but
    yields no quotient of interest.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if level is None:
        level = n
    if level > LEVEL_CAP:
        raise ValueError(f"level is capped at {LEVEL_CAP}")
    if n % level != 0:
        raise ValueError("level must divide n")
    if linears is None:
        linears = linear_candidates(ring, max_norm)
    else:
        for endo in linears:
            if endo.ring is not ring:
                raise ValueError("restricted linear parts must match the ring")
            if not endo.det().is_unit():
                raise UnsupportedAutomorphismError(
                    "linear part must have unit determinant"
                )
            endo.multiplicative_order(LINEAR_ORDER_BOUND)
    torsion = torsion_points(ring, n)
    candidates = torsion if level == n else torsion_points(ring, level)
    identity = TorusEndo.identity(ring)
    results = []
    for linear in linears:
        order = linear.multiplicative_order()
        if order == 1:
            # Pure translations never survive the multiplier screen.
            continue
        if _unit_order(linear.det()) != order:
            # Some nontrivial power of the linear part is symplectic and
            # translations cannot repair that, so no pair with this
            # linear part acts freely.
            continue
        deltas = _conjugacy_deltas(linear, n)
        summed = TorusEndo.zero(ring)
        power = identity
        for _ in range(order):
            summed = summed + power
            power = power @ linear
        seen: set[TorusPoint] = set()
        for a in candidates:
            if a in seen:
                continue
            seen.update(a + d for d in deltas)
            if a.is_origin():
                # The class of pure linear maps: these fix the zero
                # configuration (the origin taken n times), so they are
                # never free.
                continue
            if not summed.apply(a).is_origin():
                # The translation raises the order past the linear part,
                # so the multiplier screen rejects the pair.
                continue
            auto = TorusAuto(linear, a)
            report = group_acts_freely(auto, n, stop_at_first=True)
            if not report.free:
                continue
            results.append(
                SearchResult(
                    linear=linear,
                    translation=a,
                    order=order,
                    report=report,
                    classification=classify_free_quotient(n, order),
                )
            )
    return results
