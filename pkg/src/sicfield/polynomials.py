"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class RatPoly:
    """Immutable polynomial over Q, stored dense, lowest power first.

    Trailing zero coefficients are stripped on construction, so two equal
    polynomials always compare equal coefficient-wise. The zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar]) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def zero(cls) -> RatPoly:
        return cls(())

    @classmethod
    def one(cls) -> RatPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> RatPoly:
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other: RatPoly | Scalar) -> RatPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other: RatPoly | Scalar) -> RatPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> RatPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: RatPoly | Scalar) -> RatPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> RatPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        q = Fraction(other)
        return RatPoly(c / q for c in self.coeffs)

    def __pow__(self, n: int) -> RatPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = RatPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: RatPoly) -> tuple[RatPoly, RatPoly]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dn = len(dcs) - 1
        lead = dcs[-1]
        quot = [Fraction(0)] * max(len(rem) - dn, 0)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - dn] = q
            for j in range(dn + 1):
                rem[k - dn + j] -= q * dcs[j]
        return RatPoly(quot), RatPoly(rem)

    def __mod__(self, divisor: RatPoly) -> RatPoly:
        return divmod(self, divisor)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule at any value supporting + and *."""
        if not self.coeffs:
            if isinstance(x, (int, Fraction)):
                return Fraction(0)
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def monic(self) -> RatPoly:
        if self.is_zero():
            raise ValueError("zero polynomial cannot be made monic")
        return self / self.coeffs[-1]

    def primitive(self) -> RatPoly:
        """Integer-coefficient multiple with content 1 and positive lead."""
        if self.is_zero():
            return self
        denom = 1
        for c in self.coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in self.coeffs]
        content = 0
        for n in ints:
            content = gcd(content, n)
        if ints[-1] < 0:
            content = -content
        return RatPoly(n // content for n in ints)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def reversed(self) -> RatPoly:
        """Coefficients in reverse order, i.e. t^deg * p(1/t)."""
        return RatPoly(tuple(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return bool(self.coeffs) and self.coeffs == tuple(reversed(self.coeffs))

    def format(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                tpow = var if power == 1 else f"{var}^{power}"
                if mag == 1:
                    body = tpow
                elif mag.denominator == 1:
                    body = f"{mag}{tpow}"
                else:
                    body = f"{mag}*{tpow}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"


def _coerce(value: RatPoly | Scalar) -> RatPoly | None:
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RatPoly((value,))
    return None


def palindromic_lift(p: RatPoly, n: int | None = None) -> RatPoly:
    """Return t^n * p(t + 1/t), the palindromic lift of p.

    If z is a root of the lift then z + 1/z is a root of p, which is how a
    degree-n minimal polynomial of a real trace is promoted to the
    degree-2n minimal polynomial of the algebraic number on the unit side.
    """
    if n is None:
        n = p.degree
    if n != p.degree:
        raise ValueError("lift order must equal the degree")
    if n < 0:
        raise ValueError("cannot lift the zero polynomial")
    # t^n p(t + 1/t) = sum_k p_k t^(n-k) (t^2 + 1)^k
    shifted = RatPoly((1, 0, 1))
    out = RatPoly.zero()
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        out = out + RatPoly.monomial(n - k, c) * shifted**k
    return out


def from_roots(roots: Sequence[Scalar]) -> RatPoly:
    out = RatPoly.one()
    for root in roots:
        out = out * RatPoly((-Fraction(root), 1))
    return out
