"""Points and automorphisms of the self-product torus attached to a ring.

The surface under study is ``A = E x E`` where ``E`` is the complex torus
with period lattice spanned by ``{1, zeta}``.  A point of ``A`` therefore
has four rational coordinates (two per factor, in the ``{1, zeta}`` basis),
each reduced into ``[0, 1)``.  The automorphisms handled here are the
natural ones, a lattice-linear map with unit determinant followed by a
torsion translation.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .linalg import IntMatrix
from .rings import FieldElem, RingElem, RingId, _check_same_ring

TORSION_LEVEL_CAP = 1000
LINEAR_ORDER_BOUND = 24


class UnsupportedAutomorphismError(ValueError):
    """Raised for maps outside the supported catalog (non-unit determinant,
    infinite order, or mixed rings)."""


class TorusPoint:
    """A point of ``E x E`` with both factor coordinates reduced mod lattice."""

    __slots__ = ("_ring", "_first", "_second")

    def __init__(self, first: FieldElem, second: FieldElem) -> None:
        _check_same_ring(first, second)
        self._ring = first.ring
        self._first = first.mod_lattice()
        self._second = second.mod_lattice()
        if self.torsion_level() > TORSION_LEVEL_CAP:
            raise ValueError(
                f"torsion level exceeds the supported cap {TORSION_LEVEL_CAP}"
            )

    @classmethod
    def origin(cls, ring: RingId) -> "TorusPoint":
        return cls(FieldElem.zero(ring), FieldElem.zero(ring))

    @classmethod
    def from_vector(cls, ring: RingId, vector) -> "TorusPoint":
        x1, y1, x2, y2 = (Fraction(v) for v in vector)
        return cls(FieldElem(ring, x1, y1), FieldElem(ring, x2, y2))

    @property
    def ring(self) -> RingId:
        return self._ring

    @property
    def first(self) -> FieldElem:
        return self._first

    @property
    def second(self) -> FieldElem:
        return self._second

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self._first.x, self._first.y, self._second.x, self._second.y)

    def torsion_level(self) -> int:
        """Smallest ``N >= 1`` with ``N * p`` equal to the origin."""
        return lcm(*(v.denominator for v in self.coords()))

    def is_torsion_of_level(self, level: int) -> bool:
        if level < 1:
            raise ValueError("torsion level must be positive")
        return all((v * level).denominator == 1 for v in self.coords())

    def scale(self, k: int) -> "TorusPoint":
        return TorusPoint(self._first.scale(k), self._second.scale(k))

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        if not isinstance(other, TorusPoint):
            return NotImplemented
        return TorusPoint(self._first + other._first, self._second + other._second)

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        if not isinstance(other, TorusPoint):
            return NotImplemented
        return TorusPoint(self._first - other._first, self._second - other._second)

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(-self._first, -self._second)

    def is_origin(self) -> bool:
        return self._first.is_zero() and self._second.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusPoint):
            return NotImplemented
        return (
            self._ring is other._ring
            and self._first == other._first
            and self._second == other._second
        )

    def __hash__(self) -> int:
        return hash((self._ring, self._first, self._second))

    def __repr__(self) -> str:
        return f"TorusPoint{self.coords()!r}"


class TorusEndo:
    """A 2x2 matrix over the ring, acting factor-wise on ``E x E``."""

    __slots__ = ("_ring", "_entries", "_order_cache")

    def __init__(self, entries) -> None:
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("torus endomorphisms are 2x2 matrices")
        flat = [e for row in rows for e in row]
        if not all(isinstance(e, RingElem) for e in flat):
            raise TypeError("matrix entries must be ring elements")
        for e in flat[1:]:
            _check_same_ring(flat[0], e)
        self._ring = flat[0].ring
        self._entries = rows
        self._order_cache: int | None = None

    @classmethod
    def identity(cls, ring: RingId) -> "TorusEndo":
        one, zero = RingElem.one(ring), RingElem.zero(ring)
        return cls([[one, zero], [zero, one]])

    @classmethod
    def zero(cls, ring: RingId) -> "TorusEndo":
        z = RingElem.zero(ring)
        return cls([[z, z], [z, z]])

    @classmethod
    def diagonal(cls, d1: RingElem, d2: RingElem) -> "TorusEndo":
        _check_same_ring(d1, d2)
        z = RingElem.zero(d1.ring)
        return cls([[d1, z], [z, d2]])

    @property
    def ring(self) -> RingId:
        return self._ring

    @property
    def entries(self) -> tuple[tuple[RingElem, ...], ...]:
        return self._entries

    def __getitem__(self, i: int) -> tuple[RingElem, ...]:
        return self._entries[i]

    def __add__(self, other: "TorusEndo") -> "TorusEndo":
        if not isinstance(other, TorusEndo):
            return NotImplemented
        _check_same_ring(self, other)
        return TorusEndo(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __sub__(self, other: "TorusEndo") -> "TorusEndo":
        if not isinstance(other, TorusEndo):
            return NotImplemented
        _check_same_ring(self, other)
        return TorusEndo(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __matmul__(self, other: "TorusEndo") -> "TorusEndo":
        if not isinstance(other, TorusEndo):
            return NotImplemented
        _check_same_ring(self, other)
        a, b = self._entries, other._entries
        return TorusEndo(
            [
                [
                    a[i][0] * b[0][j] + a[i][1] * b[1][j]
                    for j in range(2)
                ]
                for i in range(2)
            ]
        )

    def __pow__(self, exponent: int) -> "TorusEndo":
        if exponent < 0:
            raise ValueError("negative endomorphism powers are not supported")
        result = TorusEndo.identity(self._ring)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def det(self) -> RingElem:
        return (
            self._entries[0][0] * self._entries[1][1]
            - self._entries[0][1] * self._entries[1][0]
        )

    def apply(self, point: TorusPoint) -> TorusPoint:
        _check_same_ring(self, point)
        p1, p2 = point.first, point.second
        rows = self._entries
        return TorusPoint(
            rows[0][0].to_field() * p1 + rows[0][1].to_field() * p2,
            rows[1][0].to_field() * p1 + rows[1][1].to_field() * p2,
        )

    def induced_matrix(self) -> IntMatrix:
        """The 4x4 integer matrix on first homology.

        Each ring entry is replaced by its 2x2 regular representation on the
        basis ``{1, zeta}``, so composition of endomorphisms corresponds to
        products of induced matrices.
        """
        blocks = [
            [
                IntMatrix(self._entries[i][j].regular_representation())
                for j in range(2)
            ]
            for i in range(2)
        ]
        return IntMatrix.block(blocks)

    def multiplicative_order(self, bound: int = LINEAR_ORDER_BOUND) -> int:
        if self._order_cache is not None and self._order_cache <= bound:
            return self._order_cache
        power = self
        for k in range(1, bound + 1):
            if power == TorusEndo.identity(self._ring):
                self._order_cache = k
                return k
            power = power @ self
        raise UnsupportedAutomorphismError(
            f"linear part has no multiplicative order up to {bound}"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusEndo):
            return NotImplemented
        return self._ring is other._ring and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._ring, self._entries))

    def __repr__(self) -> str:
        return f"TorusEndo({[[e for e in row] for row in self._entries]!r})"


class TorusAuto:
    """A natural automorphism: unit-determinant linear part, then a translation."""

    __slots__ = ("_linear", "_translation", "_linear_order", "_order_cache")

    def __init__(self, linear: TorusEndo, translation: TorusPoint) -> None:
        _check_same_ring(linear, translation)
        if not linear.det().is_unit():
            raise UnsupportedAutomorphismError(
                "linear part must have unit determinant"
            )
        self._linear = linear
        self._translation = translation
        self._linear_order = linear.multiplicative_order()
        self._order_cache: int | None = None

    @classmethod
    def identity(cls, ring: RingId) -> "TorusAuto":
        return cls(TorusEndo.identity(ring), TorusPoint.origin(ring))

    @classmethod
    def translation_by(cls, point: TorusPoint) -> "TorusAuto":
        return cls(TorusEndo.identity(point.ring), point)

    @property
    def ring(self) -> RingId:
        return self._linear.ring

    @property
    def linear(self) -> TorusEndo:
        return self._linear

    @property
    def translation(self) -> TorusPoint:
        return self._translation

    def apply(self, point: TorusPoint) -> TorusPoint:
        return self._linear.apply(point) + self._translation

    def __mul__(self, other: "TorusAuto") -> "TorusAuto":
        """Composition, ``(self * other)(p) == self(other(p))``."""
        if not isinstance(other, TorusAuto):
            return NotImplemented
        return TorusAuto(
            self._linear @ other._linear,
            self._linear.apply(other._translation) + self._translation,
        )

    def __pow__(self, exponent: int) -> "TorusAuto":
        """The ``exponent``-th iterate, ``(t_a h)^e = t_{sum h^j a} h^e``."""
        if exponent < 0:
            raise ValueError("negative automorphism powers are not supported")
        if exponent == 0:
            return TorusAuto.identity(self.ring)
        total = self._translation
        image = self._translation
        for _ in range(exponent - 1):
            image = self._linear.apply(image)
            total = total + image
        return TorusAuto(self._linear**exponent, total)

    def order(self) -> int:
        """Order as a group element.

        The linear part has some order ``m0``; the power ``self**(j*m0)`` is
        the translation by ``j`` times ``S(a)`` where ``S`` sums the first
        ``m0`` powers of the linear part, so the full order is ``m0`` times
        the torsion level of ``S(a)``.
        """
        if self._order_cache is not None:
            return self._order_cache
        m0 = self._linear_order
        s = TorusEndo.zero(self.ring)
        power = TorusEndo.identity(self.ring)
        for _ in range(m0):
            s = s + power
            power = power @ self._linear
        residue = s.apply(self._translation)
        self._order_cache = m0 * residue.torsion_level()
        return self._order_cache

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusAuto):
            return NotImplemented
        return (
            self._linear == other._linear
            and self._translation == other._translation
        )

    def __hash__(self) -> int:
        return hash((self._linear, self._translation))

    def __repr__(self) -> str:
        return f"TorusAuto({self._linear!r}, {self._translation!r})"


def automorphism_order(auto: TorusAuto) -> int:
    return auto.order()


def orbit_sum_data(auto: TorusAuto, length: int) -> tuple[TorusEndo, TorusPoint]:
    """Linear map and constant of the length-``length`` orbit sum.

    For every point ``p`` the sum of the first ``length`` iterates satisfies
    ``sum_j auto^j(p) = L(p) + c`` where ``L`` sums the powers of the linear
    part and ``c`` sums the translation parts of the iterates.
    """
    if length < 1:
        raise ValueError("orbit length must be positive")
    ring = auto.ring
    l_sum = TorusEndo.zero(ring)
    c_sum = TorusPoint.origin(ring)
    power = TorusAuto.identity(ring)
    for _ in range(length):
        l_sum = l_sum + power.linear
        c_sum = c_sum + power.translation
        power = auto * power
    return l_sum, c_sum


def induced_h1_matrix(auto: TorusAuto) -> IntMatrix:
    """Action of the linear part on the rank-four first homology lattice."""
    return auto.linear.induced_matrix()


def symplectic_multiplier(auto: TorusAuto) -> RingElem:
    """Determinant of the linear part over the ring; the factor by which the
    automorphism rescales the holomorphic symplectic form."""
    return auto.linear.det()
