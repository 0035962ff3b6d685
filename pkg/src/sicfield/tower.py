"""Exact arithmetic in the degree-16 number field Q(u, r).

The field is presented as a tower. The inner generator u satisfies

    u^8 = 2u^6 + 2u^4 + 2u^2 - 1,

so Q(u) has degree 8 with power basis 1, u, ..., u^7. On top of it the
outer generator r satisfies the quadratic

    r^2 + c r + 1 = 0,    c = 2 / (u + 1/u),

so every element is written uniquely as a + b r with a, b in Q(u). The
16 rational coordinates of an element are the u-power coefficients of a
followed by those of b.

u embeds as the unit-modulus complex number
(sqrt5 - 1)/(2 sqrt2) + i sqrt(sqrt5 + 1)/2 and r as the real number
-(sqrt5 + 1)/(2 sqrt2) - sqrt(sqrt5 - 1)/2, the root of its quadratic
with absolute value greater than 1. All arithmetic here is exact; the
embedding is the only place floating point enters.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import mpmath

from .linalg import solve
from .polynomials import RatPoly

Scalar = Union[int, Fraction]

#: minimal polynomial of u over Q: t^8 - 2t^6 - 2t^4 - 2t^2 + 1
U_MIN_POLY = RatPoly([1, 0, -2, 0, -2, 0, -2, 0, 1])

#: minimal polynomial of x = u + 1/u over Q: t^4 - 6t^2 + 4
X_MIN_POLY = RatPoly([4, 0, -6, 0, 1])

# 1/u = 2u + 2u^3 + 2u^5 - u^7, read off the minimal polynomial.
_INV_U_POLY = RatPoly([0, 2, 0, 2, 0, 2, 0, -1])

_X_POLY = RatPoly.monomial(1) + _INV_U_POLY

# c = 2/x = 3x - x^3/2, read off x^4 - 6x^2 + 4 = 0.
_C_POLY = (3 * _X_POLY - _X_POLY**3 / 2) % U_MIN_POLY

if (_C_POLY * _X_POLY) % U_MIN_POLY != RatPoly([2]):
    raise AssertionError("tower bootstrap failed: c * x != 2")

_INV_U_POWERS = tuple(
    _INV_U_POLY**k % U_MIN_POLY for k in range(8)
)


def _pad8(poly: RatPoly) -> tuple[Fraction, ...]:
    cs = list(poly.coeffs) + [Fraction(0)] * (8 - len(poly.coeffs))
    return tuple(cs)


def _as_scalar(value: object) -> Fraction | None:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    return None


class FieldElement:
    """An element of Q(u, r), held as 16 exact rational coordinates.

    Coordinates 0..7 are the u-power coefficients of the Q(u) part,
    coordinates 8..15 those of the coefficient of r.
    """

    __slots__ = ("coords",)

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Scalar]) -> None:
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != 16:
            raise ValueError("a field element has exactly 16 coordinates")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Scalar) -> FieldElement:
        return cls((Fraction(value),) + (Fraction(0),) * 15)

    @classmethod
    def from_u_poly(cls, poly: RatPoly | Sequence[Scalar]) -> FieldElement:
        if not isinstance(poly, RatPoly):
            poly = RatPoly(poly)
        return cls(_pad8(poly % U_MIN_POLY) + (Fraction(0),) * 8)

    @classmethod
    def from_parts(cls, u_part: RatPoly, r_part: RatPoly) -> FieldElement:
        return cls(_pad8(u_part % U_MIN_POLY) + _pad8(r_part % U_MIN_POLY))

    @classmethod
    def zero(cls) -> FieldElement:
        return _ZERO

    @classmethod
    def one(cls) -> FieldElement:
        return _ONE

    # -- views ---------------------------------------------------------

    @property
    def u_part(self) -> RatPoly:
        return RatPoly(self.coords[:8])

    @property
    def r_part(self) -> RatPoly:
        return RatPoly(self.coords[8:])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    # -- ring structure --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.coords == other.coords
        q = _as_scalar(other)
        if q is not None:
            return self == FieldElement.from_rational(q)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("FieldElement", self.coords))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> FieldElement:
        return FieldElement(-c for c in self.coords)

    def __add__(self, other: FieldElement | Scalar) -> FieldElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(a + b for a, b in zip(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | Scalar) -> FieldElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(a - b for a, b in zip(self.coords, other.coords))

    def __rsub__(self, other: Scalar) -> FieldElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: FieldElement | Scalar) -> FieldElement:
        q = _as_scalar(other)
        if q is not None:
            return FieldElement(c * q for c in self.coords)
        if not isinstance(other, FieldElement):
            return NotImplemented
        a, b = self.u_part, self.r_part
        c, d = other.u_part, other.r_part
        bd = (b * d) % U_MIN_POLY
        # r^2 = -1 - (2/x) r
        u_out = (a * c) % U_MIN_POLY - bd
        r_out = (a * d + b * c) % U_MIN_POLY - (_C_POLY * bd) % U_MIN_POLY
        return FieldElement.from_parts(u_out, r_out)

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement | Scalar) -> FieldElement:
        q = _as_scalar(other)
        if q is not None:
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(c / q for c in self.coords)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> FieldElement:
        q = _as_scalar(other)
        if q is None:
            return NotImplemented
        return self.inverse() * q

    def __pow__(self, n: int) -> FieldElement:
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        """Multiplicative inverse, by solving the multiplication map."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        columns = [(self * b).coords for b in _basis()]
        matrix = [[columns[k][row] for k in range(16)] for row in range(16)]
        rhs = [Fraction(1)] + [Fraction(0)] * 15
        return FieldElement(solve(matrix, rhs))

    def conjugate(self) -> FieldElement:
        """Complex conjugation: u maps to 1/u, r is real and fixed."""
        a, b = self.coords[:8], self.coords[8:]
        u_out = RatPoly.zero()
        r_out = RatPoly.zero()
        for k in range(8):
            if a[k]:
                u_out = u_out + a[k] * _INV_U_POWERS[k]
            if b[k]:
                r_out = r_out + b[k] * _INV_U_POWERS[k]
        return FieldElement.from_parts(u_out, r_out)

    # -- display -----------------------------------------------------------

    def __complex__(self) -> complex:
        return embed(self)

    def __str__(self) -> str:
        a, b = self.u_part, self.r_part
        if b.is_zero():
            return a.format("u")
        if a.is_zero():
            return f"({b.format('u')})*r"
        return f"({a.format('u')}) + ({b.format('u')})*r"

    def __repr__(self) -> str:
        return f"<FieldElement {self}>"


def _coerce(value: object) -> FieldElement | None:
    if isinstance(value, FieldElement):
        return value
    q = _as_scalar(value)
    if q is not None:
        return FieldElement.from_rational(q)
    return None


_ZERO = FieldElement((0,) * 16)
_ONE = FieldElement((1,) + (0,) * 15)


@lru_cache(maxsize=1)
def _basis() -> tuple[FieldElement, ...]:
    out = []
    for k in range(16):
        coords = [Fraction(0)] * 16
        coords[k] = Fraction(1)
        out.append(FieldElement(coords))
    return tuple(out)


def substitute(elem: FieldElement, image_u: FieldElement,
               image_r: FieldElement) -> FieldElement:
    """Extend u -> image_u, r -> image_r linearly over the monomial basis."""
    return substitute_with_powers(elem, _u_image_powers(image_u), image_r)


def defining_relations_hold(image_u: FieldElement,
                            image_r: FieldElement) -> bool:
    """Whether the pair of images satisfies the tower's two relations,
    i.e. extends to a field automorphism."""
    if not U_MIN_POLY(image_u).is_zero():
        return False
    c = _C_POLY(image_u)
    return (image_r * image_r + c * image_r + 1).is_zero()


def _u_image_powers(image_u: FieldElement) -> tuple[FieldElement, ...]:
    powers = [_ONE]
    for _ in range(7):
        powers.append(powers[-1] * image_u)
    return tuple(powers)


def substitute_with_powers(elem: FieldElement,
                           u_powers: Sequence[FieldElement],
                           image_r: FieldElement) -> FieldElement:
    a, b = elem.coords[:8], elem.coords[8:]
    u_out = _ZERO
    r_coeff = _ZERO
    for k in range(8):
        if a[k]:
            u_out = u_out + u_powers[k] * a[k]
        if b[k]:
            r_coeff = r_coeff + u_powers[k] * b[k]
    if r_coeff.is_zero():
        return u_out
    return u_out + r_coeff * image_r


# -- named constants --------------------------------------------------------

CONSTANT_NAMES = (
    "u", "r", "x", "i", "tau", "sqrt2", "sqrt5", "isqrt_sqrt5p1",
    "u1", "u2", "u3", "u4", "u5",
)


@lru_cache(maxsize=1)
def _constants() -> dict[str, FieldElement]:
    u = FieldElement.from_u_poly(RatPoly.monomial(1))
    inv_u = FieldElement.from_u_poly(_INV_U_POLY)
    r = FieldElement((0,) * 8 + (1,) + (0,) * 7)
    c = FieldElement.from_u_poly(_C_POLY)
    inv_r = -(r + c)  # r^2 + c r + 1 = 0 gives 1/r = -(r + c)
    x = u + inv_u
    sqrt5 = 3 - x * x
    isqrt = u - inv_u  # i * sqrt(sqrt5 + 1)
    sqrt2 = -(x * isqrt * isqrt) / 2
    i = -(isqrt * (r - inv_r)) / 2
    tau = -(1 + i) * sqrt2 / 2
    u2 = isqrt * sqrt2 / 2
    u3 = (sqrt5 - 1) * sqrt2 / 4 + isqrt / 2
    return {
        "u": u,
        "r": r,
        "x": x,
        "i": i,
        "tau": tau,
        "sqrt2": sqrt2,
        "sqrt5": sqrt5,
        "isqrt_sqrt5p1": isqrt,
        "u1": 1 + sqrt2,
        "u2": u2,
        "u3": u3,
        "u4": x + (3 - sqrt5) / 2 * u2,
        "u5": u2 + u3,
    }


def constant(name: str) -> FieldElement:
    """Look up a named constant of the field.

    Valid names are listed in CONSTANT_NAMES. u1..u5 are the five
    cyclotomic-style units attached to the dimension-4 fiducial.
    """
    try:
        return _constants()[name]
    except KeyError:
        known = ", ".join(CONSTANT_NAMES)
        raise ValueError(f"unknown constant {name!r}; known names: {known}") from None


# -- the complex embedding ---------------------------------------------------


def _embed_generators_double() -> tuple[complex, complex]:
    s5 = math.sqrt(5.0)
    s2 = math.sqrt(2.0)
    u = complex((s5 - 1) / (2 * s2), math.sqrt(s5 + 1) / 2)
    r = complex(-(s5 + 1) / (2 * s2) - math.sqrt(s5 - 1) / 2, 0.0)
    return u, r


_U_COMPLEX, _R_COMPLEX = _embed_generators_double()


def _horner(coeffs: Sequence, z):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def embed(elem: FieldElement, dps: int | None = None):
    """Numerical value of an element under the defining embedding.

    With dps=None this returns a Python complex computed in double
    precision. With an integer dps it returns an mpmath.mpc computed at
    that many decimal digits.
    """
    if dps is None:
        a = [float(c) for c in elem.coords[:8]]
        b = [float(c) for c in elem.coords[8:]]
        return _horner(a, _U_COMPLEX) + _horner(b, _U_COMPLEX) * _R_COMPLEX
    with mpmath.workdps(dps):
        s5 = mpmath.sqrt(5)
        s2 = mpmath.sqrt(2)
        u = mpmath.mpc((s5 - 1) / (2 * s2), mpmath.sqrt(s5 + 1) / 2)
        r = mpmath.mpc(-(s5 + 1) / (2 * s2) - mpmath.sqrt(s5 - 1) / 2, 0)
        a = [mpmath.mpf(c.numerator) / c.denominator for c in elem.coords[:8]]
        b = [mpmath.mpf(c.numerator) / c.denominator for c in elem.coords[8:]]
        return _horner(a, u) + _horner(b, u) * r
