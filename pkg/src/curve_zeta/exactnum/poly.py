"""Dense univariate polynomials with exact rational coefficients."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from sympy import Poly, QQ, Symbol

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

_T = Symbol("t")


def _trim(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one variable; ``coefficients[i]`` multiplies ``t**i``.

    The tuple never ends in a zero entry, so the zero polynomial is the empty
    tuple and structural equality is polynomial equality.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, value: Scalar) -> "UniPoly":
        return cls((value,))

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "UniPoly":
        """Return ``slope * t + intercept``."""
        return cls((intercept, slope))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "UniPoly":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    @property
    def valuation(self) -> int:
        """Multiplicity of the root ``t = 0``; -1 for the zero polynomial."""
        for index, coeff in enumerate(self.coefficients):
            if coeff != 0:
                return index
        return -1

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coefficients)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UniPoly(product)

    def scale(self, factor: Scalar) -> "UniPoly":
        factor = Fraction(factor)
        return UniPoly(c * factor for c in self.coefficients)

    def __call__(self, point: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        value = Fraction(0)
        for coeff in reversed(self.coefficients):
            value = value * point + coeff
        return value

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coefficients) if i > 0)

    def reciprocal(self) -> "UniPoly":
        """Return ``t**deg * p(1/t)`` (coefficient list read backwards)."""
        return UniPoly(tuple(reversed(self.coefficients)))

    def divide_by_root(self, root: Scalar) -> Tuple["UniPoly", Fraction]:
        """Synthetic division by ``(t - root)``.

        Returns:
            Quotient and remainder; the remainder equals ``self(root)``.
        """
        if self.is_zero:
            return UniPoly(), Fraction(0)
        root = Fraction(root)
        carry = Fraction(0)
        quotient = []
        for coeff in reversed(self.coefficients):
            carry = carry * root + coeff
            quotient.append(carry)
        remainder = quotient.pop()
        return UniPoly(tuple(reversed(quotient))), remainder

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` integral and primitive."""
        if self.is_zero:
            return Fraction(0)
        denominators = math.lcm(*(c.denominator for c in self.coefficients))
        numerators = math.gcd(
            *(c.numerator * (denominators // c.denominator) for c in self.coefficients)
        )
        return Fraction(numerators, denominators)

    def monic(self) -> "UniPoly":
        """Scale to leading coefficient 1; zero stays zero."""
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def to_sympy(self) -> Poly:
        """The same polynomial as a sympy ``Poly`` over QQ."""
        return Poly(list(reversed(self.coefficients)) or [0], _T, domain=QQ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "UniPoly":
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return cls(coeffs)

    def render(self, variable: str = "s") -> str:
        """Human-readable form, highest degree first."""
        if self.is_zero:
            return "0"
        parts = []
        for degree in range(self.degree, -1, -1):
            coeff = self.coefficients[degree]
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if degree == 0:
                body = str(magnitude)
            else:
                power = variable if degree == 1 else f"{variable}^{degree}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor of two polynomials.

    ``poly_gcd(p, 0)`` is the monic associate of ``p`` and ``poly_gcd(0, 0)``
    is the zero polynomial.
    """
    if p.is_zero and q.is_zero:
        return UniPoly()
    result = UniPoly.from_sympy(p.to_sympy().gcd(q.to_sympy()))
    logger.debug(f"gcd({p.render('t')}, {q.render('t')}) = {result.render('t')}")
    return result.monic()


def poly_from_ints(coefficients: Sequence[int]) -> UniPoly:
    """Polynomial from integer coefficients, constant term first."""
    return UniPoly(tuple(Fraction(c) for c in coefficients))
