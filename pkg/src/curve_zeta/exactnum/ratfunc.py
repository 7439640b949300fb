"""Rational functions in s whose denominators split into integer linear factors.

Every denominator that turns up in the Newton-polygon formula for the
topological zeta function is a product of factors ``N*s + nu`` with integer
``N`` and ``nu``. Keeping the factors instead of an expanded polynomial lets
poles, orders and residues be read off exactly, without root finding.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple

from .poly import Scalar, UniPoly

logger = logging.getLogger(__name__)


class ResidueError(ValueError):
    """Raised when a simple-pole residue is requested at a pole of another order."""
    pass


@dataclass(frozen=True, order=True)
class LinFactor:
    """The linear form ``N*s + nu`` with ``N >= 0`` and ``nu > 0``."""

    N: int
    nu: int

    def __post_init__(self) -> None:
        if self.N < 0 or self.nu <= 0:
            raise ValueError(f"Invalid linear factor {self.N}s + {self.nu}")

    @property
    def root(self) -> Optional[Fraction]:
        """The zero ``-nu/N``, or None for a constant factor."""
        if self.N == 0:
            return None
        return Fraction(-self.nu, self.N)

    def __call__(self, point: Scalar) -> Fraction:
        return self.N * Fraction(point) + self.nu

    def as_poly(self) -> UniPoly:
        return UniPoly.linear(self.N, self.nu)

    def render(self) -> str:
        if self.N == 0:
            return str(self.nu)
        slope = "s" if self.N == 1 else f"{self.N}s"
        return f"{slope} + {self.nu}"


def normalize_factor(N: int, nu: int) -> Tuple[Fraction, Optional[LinFactor]]:
    """Split ``N*s + nu`` into a scalar and a primitive factor.

    Returns:
        ``(c, factor)`` with ``N*s + nu == c * factor``; ``factor`` is None
        when the form is the constant ``c``.

    Raises:
        ZeroDivisionError: If the form is identically zero
        ValueError: If the root of the form is not negative
    """
    if N == 0 and nu == 0:
        raise ZeroDivisionError("Linear factor 0*s + 0 in a denominator")
    sign = 1
    if N < 0 or (N == 0 and nu < 0):
        N, nu, sign = -N, -nu, -1
    if N == 0:
        return Fraction(sign * nu), None
    content = math.gcd(N, nu)
    N, nu = N // content, nu // content
    if nu <= 0:
        raise ValueError(f"Linear factor {N}s + {nu} has a non-negative root")
    return Fraction(sign * content), LinFactor(N, nu)


def _expand(factors: Iterable[LinFactor]) -> UniPoly:
    return reduce(lambda acc, f: acc * f.as_poly(), factors, UniPoly.constant(1))


@dataclass(frozen=True)
class FactoredRatFunc:
    """``numerator / prod(denominator)`` kept in canonical form.

    Canonical means: every factor is primitive with ``N > 0``, constants are
    folded into the numerator, no factor vanishes together with the
    numerator, and factors are sorted. Two canonical values are equal exactly
    when the functions are equal.
    """

    numerator: UniPoly
    denominator: Tuple[LinFactor, ...] = ()

    def __post_init__(self) -> None:
        numerator = self.numerator
        factors: List[LinFactor] = []
        for raw in self.denominator:
            N, nu = (raw.N, raw.nu) if isinstance(raw, LinFactor) else raw
            scalar, factor = normalize_factor(N, nu)
            numerator = numerator.scale(1 / scalar)
            if factor is not None:
                factors.append(factor)

        if numerator.is_zero:
            factors = []
        counts = Counter(factors)
        for factor in list(counts):
            root = factor.root
            while counts[factor] and numerator(root) == 0:
                quotient, _ = numerator.divide_by_root(root)
                numerator = quotient.scale(Fraction(1, factor.N))
                counts[factor] -= 1

        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", tuple(sorted(counts.elements())))

    @classmethod
    def zero(cls) -> "FactoredRatFunc":
        return cls(UniPoly())

    @classmethod
    def constant(cls, value: Scalar) -> "FactoredRatFunc":
        return cls(UniPoly.constant(value))

    @classmethod
    def from_structured(
        cls, numerator_coeffs: Sequence[Scalar], factors: Sequence[Sequence[int]]
    ) -> "FactoredRatFunc":
        return cls(UniPoly(tuple(Fraction(c) for c in numerator_coeffs)),
                   tuple((int(N), int(nu)) for N, nu in factors))

    def to_structured(self) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
        return list(self.numerator.coefficients), [(f.N, f.nu) for f in self.denominator]

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def poles(self) -> List[Tuple[Fraction, int]]:
        """Distinct denominator roots with multiplicities, ascending."""
        counts = Counter(f.root for f in self.denominator)
        return sorted(counts.items())

    def __add__(self, other: "FactoredRatFunc") -> "FactoredRatFunc":
        return rf_add(self, other)

    def __sub__(self, other: "FactoredRatFunc") -> "FactoredRatFunc":
        return rf_add(self, rf_neg(other))

    def __mul__(self, other: "FactoredRatFunc") -> "FactoredRatFunc":
        return rf_mul(self, other)

    def __neg__(self) -> "FactoredRatFunc":
        return rf_neg(self)

    def render(self) -> str:
        """Display with integer numerator coefficients and factored denominator."""
        if self.is_zero:
            return "0"
        content = self.numerator.content()
        primitive = self.numerator.scale(1 / content)
        p, q = content.numerator, content.denominator

        terms = sum(1 for c in primitive.coefficients if c != 0)
        if primitive.degree == 0:
            numerator = str(p * int(primitive(0)))
        elif terms == 1:
            numerator = primitive.render() if p == 1 else f"{p}{primitive.render()}"
        else:
            wrapped = f"({primitive.render()})"
            numerator = wrapped if p == 1 else f"{p}{wrapped}"

        groups = sorted(Counter(self.denominator).items())
        pieces = [str(q)] if q != 1 else []
        for factor, power in groups:
            pieces.append(f"({factor.render()})" + (f"^{power}" if power > 1 else ""))
        if not pieces:
            return numerator
        denominator = "".join(pieces)
        if len(pieces) > 1:
            denominator = f"({denominator})"
        return f"{numerator} / {denominator}"

    def __str__(self) -> str:
        return self.render()


def rf_add(f: FactoredRatFunc, g: FactoredRatFunc) -> FactoredRatFunc:
    """Exact sum over the least common multiple of the two denominators."""
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    f_counts, g_counts = Counter(f.denominator), Counter(g.denominator)
    common = f_counts | g_counts
    numerator = (f.numerator * _expand((common - f_counts).elements())
                 + g.numerator * _expand((common - g_counts).elements()))
    return FactoredRatFunc(numerator, tuple(common.elements()))


def rf_mul(f: FactoredRatFunc, g: FactoredRatFunc) -> FactoredRatFunc:
    """Product; common factors cancel on canonicalization."""
    return FactoredRatFunc(f.numerator * g.numerator, f.denominator + g.denominator)


def rf_neg(f: FactoredRatFunc) -> FactoredRatFunc:
    """Negation."""
    return FactoredRatFunc(-f.numerator, f.denominator)


def rf_scale(f: FactoredRatFunc, factor: Scalar) -> FactoredRatFunc:
    """Multiply by a rational constant."""
    return FactoredRatFunc(f.numerator.scale(factor), f.denominator)


def rf_sum(terms: Iterable[FactoredRatFunc]) -> FactoredRatFunc:
    """Sum of ``terms``, zero when empty."""
    return reduce(rf_add, terms, FactoredRatFunc.zero())


def rf_evaluate(f: FactoredRatFunc, point: Scalar) -> Fraction:
    """Evaluate at a rational point.

    Raises:
        ZeroDivisionError: If ``point`` is a pole of ``f``
    """
    value = f.numerator(point)
    for factor in f.denominator:
        value /= factor(point)
    return value


def rf_pole_order(f: FactoredRatFunc, s0: Scalar) -> int:
    """Number of denominator factors vanishing at ``s0``; 0 when not a pole."""
    s0 = Fraction(s0)
    return sum(1 for factor in f.denominator if factor.root == s0)


def rf_residue_simple(f: FactoredRatFunc, s0: Scalar) -> Fraction:
    """Residue of ``f`` at a simple pole ``s0``.

    Raises:
        ResidueError: If ``s0`` is not a pole of order one
    """
    s0 = Fraction(s0)
    order = rf_pole_order(f, s0)
    if order != 1:
        raise ResidueError(f"Pole order at {s0} is {order}, expected 1")
    value = f.numerator(s0)
    for factor in f.denominator:
        if factor.root == s0:
            value /= factor.N
        else:
            value /= factor(s0)
    return value
