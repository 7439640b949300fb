"""Support points of a polynomial in x and y."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

Point = Tuple[int, int]


@dataclass(frozen=True, order=True)
class SupportPoint:
    """A term ``coeff * x**x * y**y`` with nonzero coefficient."""

    x: int
    y: int
    coeff: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"Negative exponent in support point ({self.x}, {self.y})")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError(f"Zero coefficient at ({self.x}, {self.y})")

    @property
    def exponent(self) -> Point:
        return (self.x, self.y)


def support_from_mapping(terms: Dict[Point, object]) -> Tuple[SupportPoint, ...]:
    """Build a sorted support from ``{(x, y): coeff}``, dropping zero terms."""
    return tuple(
        sorted(SupportPoint(x, y, Fraction(c)) for (x, y), c in terms.items() if Fraction(c) != 0)
    )


def support_from_exponents(exponents: Iterable[Point]) -> Tuple[SupportPoint, ...]:
    """Support with all coefficients equal to one."""
    return tuple(sorted(SupportPoint(x, y) for x, y in exponents))
