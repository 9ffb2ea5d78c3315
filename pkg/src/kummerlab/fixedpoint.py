"""Fixed-point decisions for induced automorphisms on length-``n`` fibers.

A natural automorphism of the abelian surface induces an automorphism of
the generalized Kummer variety, the fiber over zero of the summation map on
length-``n`` configurations.  A fixed point of the induced map is modeled by
an invariant weighted configuration: a multiset of full orbits of the map,
each carried with a multiplicity, whose total length is ``n`` and whose
multiplicity-weighted sum of points is the origin.  Existence of such a
configuration is taken as the defining criterion throughout this module.

Every shape such a configuration can have is an *orbit type*: a multiset of
pairs ``(l, mult)`` with ``l`` dividing the order of the map and
``sum(l * mult) == n``.  Each type produces a linear system over the torus
(orbit closure of each base point, plus the weighted zero-sum condition);
the type admits a configuration exactly when the system is solvable modulo
the period lattice.  The closure constraint only forces the orbit length to
divide ``l``, which is deliberate: a degenerate solution is still a genuine
invariant configuration of total length ``n``, just of a finer type, so the
union over all types decides existence correctly.

Certificates are self-contained: a witness lists the base points of a
solving configuration, an obstruction carries an integer functional that
kills the system's column span but pairs non-integrally with the constants.
Both re-verify through :func:`verify_certificate` without re-running the
normal-form machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import lcm

from .lattice import (
    SolvabilityResult,
    torus_system_solvable,
    verify_obstruction,
)
from .linalg import IntMatrix
from .torus import (
    TORSION_LEVEL_CAP,
    TorusAuto,
    TorusPoint,
    induced_h1_matrix,
    orbit_sum_data,
)


class NotNTorsionError(ValueError):
    """The translation part is not ``n``-torsion, so the map does not descend."""


@dataclass(frozen=True)
class OrbitType:
    """A multiset of ``(orbit length, multiplicity)`` parts, sorted descending."""

    parts: tuple[tuple[int, int], ...]

    def total_length(self) -> int:
        return sum(l * m for l, m in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def orbit_types(n: int, m: int) -> list[OrbitType]:
    """All orbit types of total length ``n`` for a map of order ``m``.

    Parts ``(l, mult)`` range over divisors ``l`` of ``m`` and positive
    multiplicities; two parts with equal ``(l, mult)`` describe distinct
    orbits of the same shape.  Types are emitted exactly once each, in
    descending lexicographic order of their sorted part lists.
    """
    if n < 1:
        raise ValueError("total length must be positive")
    if m < 1:
        raise ValueError("the order must be positive")
    lengths = [l for l in range(1, m + 1) if m % l == 0]
    parts = sorted(
        (
            (l, mult)
            for l in lengths
            for mult in range(1, n // l + 1)
        ),
        reverse=True,
    )
    found: list[OrbitType] = []

    def recurse(start: int, remaining: int, acc: list[tuple[int, int]]) -> None:
        if remaining == 0:
            found.append(OrbitType(tuple(acc)))
            return
        for index in range(start, len(parts)):
            l, mult = parts[index]
            if l * mult > remaining:
                continue
            acc.append((l, mult))
            recurse(index, remaining - l * mult, acc)
            acc.pop()

    recurse(0, n, [])
    return found


class CertificateOutcome(Enum):
    FIXED_POINT = "fixed_point"
    OBSTRUCTED = "obstructed"


@dataclass(frozen=True)
class FreenessCertificate:
    """Re-checkable evidence for one orbit type of one tested power."""

    element_power: int
    orbit_type: OrbitType
    outcome: CertificateOutcome
    witness: tuple[TorusPoint, ...] | None = None
    obstruction: tuple[tuple[int, ...], Fraction] | None = None


@dataclass(frozen=True)
class FixedPointReport:
    found: bool
    certificates: tuple[FreenessCertificate, ...]

    def __bool__(self) -> bool:
        return self.found

    def first_witness(self) -> FreenessCertificate | None:
        for cert in self.certificates:
            if cert.outcome is CertificateOutcome.FIXED_POINT:
                return cert
        return None


@dataclass(frozen=True)
class PowerTest:
    power: int
    report: FixedPointReport


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    order: int
    tested: tuple[PowerTest, ...]

    def __bool__(self) -> bool:
        return self.free


def orbit_system(
    auto: TorusAuto,
    orbit_type: OrbitType,
    cache: dict | None = None,
) -> tuple[IntMatrix, tuple[Fraction, ...]]:
    """Assemble the integer system deciding the given orbit type.

    One unknown point (four coordinates) per part.  Rows: for each part,
    the orbit-closure condition ``(M^l - I) z = -t_l`` with ``t_l`` the
    translation part of the ``l``-th iterate; then four rows for the
    multiplicity-weighted zero-sum condition built from the orbit-sum data.
    Passing the same ``cache`` dict across calls for one automorphism
    reuses the per-length expansions instead of recomputing them.
    """
    if cache is None:
        cache = {}
    m4 = cache.get("induced")
    if m4 is None:
        m4 = cache["induced"] = induced_h1_matrix(auto)
    identity = IntMatrix.identity(4)
    zero4 = IntMatrix.zeros(4, 4)
    k = len(orbit_type.parts)

    closure_blocks: dict[int, IntMatrix] = {}
    sum_matrices: dict[int, IntMatrix] = {}
    iterate_translations: dict[int, tuple[Fraction, ...]] = {}
    orbit_constants: dict[int, tuple[Fraction, ...]] = {}
    for l, _ in orbit_type.parts:
        if l in sum_matrices:
            continue
        entry = cache.get(l)
        if entry is None:
            l_endo, c_point = orbit_sum_data(auto, l)
            entry = (
                m4**l - identity,
                l_endo.induced_matrix(),
                (auto**l).translation.coords(),
                c_point.coords(),
            )
            cache[l] = entry
        closure_blocks[l], sum_matrices[l] = entry[0], entry[1]
        iterate_translations[l], orbit_constants[l] = entry[2], entry[3]

    block_rows: list[list[IntMatrix]] = []
    constants: list[Fraction] = []
    for i, (l, _) in enumerate(orbit_type.parts):
        row = [zero4] * k
        row[i] = closure_blocks[l]
        block_rows.append(row)
        constants.extend(-v for v in iterate_translations[l])
    sum_row = [
        sum_matrices[l].scale(mult) for l, mult in orbit_type.parts
    ]
    block_rows.append(sum_row)
    weighted = [Fraction(0)] * 4
    for l, mult in orbit_type.parts:
        for j in range(4):
            weighted[j] += mult * orbit_constants[l][j]
    constants.extend(-v for v in weighted)
    return IntMatrix.block(block_rows), tuple(constants)


def _require_descends(auto: TorusAuto, n: int) -> None:
    if n < 2:
        raise ValueError("the configuration length must be at least 2")
    if not auto.translation.is_torsion_of_level(n):
        raise NotNTorsionError(
            f"translation part is not {n}-torsion; the map does not act on the fiber"
        )


def has_fixed_point(
    auto: TorusAuto,
    n: int,
    element_power: int = 1,
    stop_at_first: bool = False,
) -> FixedPointReport:
    """Decide whether the induced automorphism fixes some configuration.

    Runs the solvability decision for every orbit type in canonical order
    and returns one certificate per type; ``element_power`` only labels the
    certificates when the map under test is a power of another one.  With
    ``stop_at_first`` the scan stops at the first solvable type, so a
    positive report may carry fewer certificates than there are types; a
    negative one always carries all of them.
    """
    _require_descends(auto, n)
    order = auto.order()
    certificates: list[FreenessCertificate] = []
    cache: dict = {}
    for orbit_type in orbit_types(n, order):
        system, constants = orbit_system(auto, orbit_type, cache)
        result: SolvabilityResult = torus_system_solvable(system, constants)
        if result.solvable:
            coords = result.witness
            points = tuple(
                TorusPoint.from_vector(auto.ring, coords[4 * i : 4 * i + 4])
                for i in range(len(orbit_type.parts))
            )
            certificates.append(
                FreenessCertificate(
                    element_power,
                    orbit_type,
                    CertificateOutcome.FIXED_POINT,
                    witness=points,
                )
            )
            if stop_at_first:
                break
        else:
            certificates.append(
                FreenessCertificate(
                    element_power,
                    orbit_type,
                    CertificateOutcome.OBSTRUCTED,
                    obstruction=result.obstruction,
                )
            )
    found = any(
        c.outcome is CertificateOutcome.FIXED_POINT for c in certificates
    )
    return FixedPointReport(found, tuple(certificates))


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        else:
            p += 1
    if m > 1:
        out.append(m)
    return out


def group_acts_freely(
    auto: TorusAuto, n: int, stop_at_first: bool = False
) -> FreenessReport:
    """Decide freeness of the cyclic group generated by the induced map.

    In a cyclic group every nontrivial element powers into an element of
    prime order, and fixed loci only grow under powering, so it suffices to
    test the powers ``auto**(order/p)`` for the primes ``p`` dividing the
    order.  The trivial group acts freely vacuously.  ``stop_at_first``
    abandons the sweep as soon as one power is caught fixing a
    configuration, leaving later powers untested in the report.
    """
    _require_descends(auto, n)
    order = auto.order()
    tested: list[PowerTest] = []
    free = True
    for p in _prime_factors(order):
        power = order // p
        report = has_fixed_point(
            auto**power, n, element_power=power, stop_at_first=stop_at_first
        )
        tested.append(PowerTest(power, report))
        if report.found:
            free = False
            if stop_at_first:
                break
    return FreenessReport(free, order, tuple(tested))


def verify_certificate(auto: TorusAuto, n: int, certificate: FreenessCertificate) -> bool:
    """Re-check a certificate against the base automorphism.

    Witnesses are verified by direct orbit expansion (no normal forms);
    obstructions by re-assembling the system and pairing the functional.
    """
    element = auto**certificate.element_power
    if certificate.orbit_type.total_length() != n:
        return False
    if certificate.outcome is CertificateOutcome.FIXED_POINT:
        if certificate.witness is None or len(certificate.witness) != len(
            certificate.orbit_type.parts
        ):
            return False
        total = TorusPoint.origin(auto.ring)
        for (l, mult), base in zip(certificate.orbit_type.parts, certificate.witness):
            point = base
            orbit_sum = TorusPoint.origin(auto.ring)
            for _ in range(l):
                orbit_sum = orbit_sum + point
                point = element.apply(point)
            if point != base:
                return False
            total = total + orbit_sum.scale(mult)
        return total.is_origin()
    if certificate.obstruction is None:
        return False
    functional, _ = certificate.obstruction
    system, constants = orbit_system(element, certificate.orbit_type)
    return verify_obstruction(system, constants, functional)


def brute_force_fixed_point(auto: TorusAuto, n: int, level: int) -> bool:
    """Search configurations supported on level-``level`` torsion directly.

    Enumerates every orbit of the map through the level grid, deduplicates
    by (orbit length, orbit sum) and runs an unbounded-knapsack reachability
    over total lengths up to ``n``.  True iff some multiset of orbits with
    multiplicities reaches total length ``n`` with sum at the origin.  This
    shares no code with the normal-form decision and serves as its oracle.
    """
    _require_descends(auto, n)
    if level < 1 or level > TORSION_LEVEL_CAP:
        raise ValueError(f"level must lie in 1..{TORSION_LEVEL_CAP}")
    modulus = lcm(level, auto.translation.torsion_level())
    scale = modulus // level
    matrix = induced_h1_matrix(auto).entries
    shift = tuple(
        int(v * modulus) % modulus for v in auto.translation.coords()
    )

    def step(v: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        return tuple(
            (sum(matrix[i][j] * v[j] for j in range(4)) + shift[i]) % modulus
            for i in range(4)
        )

    seen: set[tuple[int, int, int, int]] = set()
    coins: set[tuple[int, tuple[int, int, int, int]]] = set()
    for idx in product(range(level), repeat=4):
        start = tuple(x * scale for x in idx)
        if start in seen:
            continue
        orbit = [start]
        current = step(start)
        while current != start:
            orbit.append(current)
            current = step(current)
        seen.update(orbit)
        orbit_sum = tuple(sum(col) % modulus for col in zip(*orbit))
        coins.add((len(orbit), orbit_sum))

    zero = (0, 0, 0, 0)
    reachable: list[set[tuple[int, int, int, int]]] = [set() for _ in range(n + 1)]
    reachable[0].add(zero)
    for length, orbit_sum in sorted(coins):
        if length > n:
            continue
        for total in range(length, n + 1):
            previous = reachable[total - length]
            if previous:
                reachable[total] |= {
                    tuple((x + y) % modulus for x, y in zip(elem, orbit_sum))
                    for elem in previous
                }
    return zero in reachable[n]
