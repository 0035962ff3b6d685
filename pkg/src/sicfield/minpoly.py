"""Minimal polynomials of tower elements, unit and integrality tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import nullspace
from .polynomials import RatPoly, palindromic_lift
from .tower import FieldElement

__all__ = [
    "MinimalPolynomial",
    "minimal_polynomial",
    "is_algebraic_integer",
    "is_unit",
    "palindromic_lift",
    "palindrome_reduce",
    "verify_split",
]


@dataclass(frozen=True)
class MinimalPolynomial:
    """Monic and primitive-integer forms of a minimal polynomial."""

    monic: RatPoly
    primitive: RatPoly
    degree: int

    def __str__(self) -> str:
        return self.primitive.format()


def minimal_polynomial(a: FieldElement) -> MinimalPolynomial:
    """Minimal polynomial of a over Q, found as the first linear
    dependence among the powers 1, a, a^2, ...

    The tower has degree 16, so the loop always terminates and the
    degree found divides 16.
    """
    powers = [FieldElement.one()]
    for degree in range(1, 17):
        powers.append(powers[-1] * a)
        matrix = [
            [powers[k].coords[row] for k in range(degree + 1)]
            for row in range(16)
        ]
        kernel = nullspace(matrix)
        if not kernel:
            continue
        v = kernel[0]
        # the first dependence must involve the top power
        assert v[degree] != 0
        monic = RatPoly(v) / v[degree]
        return MinimalPolynomial(monic, monic.primitive(), degree)
    raise AssertionError("no dependence found within the tower degree")


def is_algebraic_integer(a: FieldElement) -> bool:
    """True when the monic minimal polynomial has integer coefficients."""
    return minimal_polynomial(a).monic.has_integer_coefficients()


def is_unit(a: FieldElement) -> bool:
    """True for algebraic integers whose norm is +-1, i.e. whose monic
    minimal polynomial has integer coefficients and constant term +-1."""
    monic = minimal_polynomial(a).monic
    return monic.has_integer_coefficients() and abs(monic.coefficient(0)) == 1


def palindrome_reduce(p: RatPoly) -> RatPoly:
    """Invert the palindromic lift: find q with t^n q(t + 1/t) = p.

    Requires p palindromic of even degree 2n. Peels coefficients from the
    top down, one per power of t + 1/t.
    """
    if p.degree < 2 or p.degree % 2 != 0:
        raise ValueError("palindrome reduction needs even degree at least 2")
    if not p.is_palindromic():
        raise ValueError("polynomial is not palindromic")
    n = p.degree // 2
    shifted = RatPoly((1, 0, 1))
    remainder = p
    out = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = remainder.coefficient(n + k)
        if c == 0:
            continue
        out[k] = c
        remainder = remainder - c * RatPoly.monomial(n - k) * shifted**k
    if not remainder.is_zero():
        raise ValueError("polynomial is not a palindromic lift")
    return RatPoly(out)


def verify_split(p: RatPoly, roots: Sequence[FieldElement]) -> bool:
    """Check exactly that p(t) = lead * prod (t - root) over the tower."""
    if p.is_zero() or len(roots) != p.degree:
        return False
    product = [FieldElement.one()]
    for root in roots:
        next_coeffs = [FieldElement.zero() for _ in range(len(product) + 1)]
        for k, c in enumerate(product):
            next_coeffs[k + 1] = next_coeffs[k + 1] + c
            next_coeffs[k] = next_coeffs[k] - c * root
        product = next_coeffs
    target = p.monic()
    return all(
        c == FieldElement.from_rational(target.coefficient(k))
        for k, c in enumerate(product)
    )
