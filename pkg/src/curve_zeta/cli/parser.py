"""Polynomial expressions in x and y with rational coefficients.

Grammar (whitespace is insignificant)::

    expr   := [sign] term (sign term)*
    term   := coeff [['*'] factor]* | factor (['*'] factor)*
    coeff  := digits ['/' digits]
    factor := ('x' | 'y') ['^' digits]
"""

import logging
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import DefaultDict, Dict, Iterable, List, Optional, Tuple

from ..geometry import Point, SupportPoint

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<var>[xy])
  | (?P<sign>[-+−])
  | (?P<op>[*/^])
""", re.VERBOSE)


class ParseError(ValueError):
    """Raised for malformed input, with the 0-based position of the problem."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into tokens, ending with an ``end`` token."""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"Unexpected character {text[position]!r}", position)
        kind = match.lastgroup or ""
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        token = self.current
        if token.kind == kind and (text is None or token.text == text):
            return self.advance()
        return None

    def expect_number(self, what: str) -> int:
        token = self.current
        if token.kind == "sign" and token.text != "+":
            raise ParseError(f"Negative {what}", token.position)
        if token.kind != "number":
            raise ParseError(f"Expected {what}", token.position)
        return int(self.advance().text)

    def expression(self) -> List[Tuple[Fraction, Point, int]]:
        terms = []
        sign = self.sign(optional=True)
        terms.append(self.term(sign))
        while self.current.kind != "end":
            sign = self.sign(optional=False)
            terms.append(self.term(sign))
        return terms

    def sign(self, optional: bool) -> int:
        token = self.accept("sign")
        if token is None:
            if optional:
                return 1
            raise ParseError(f"Expected '+' or '-' before {self.current.text!r}", self.current.position)
        return 1 if token.text == "+" else -1

    def term(self, sign: int) -> Tuple[Fraction, Point, int]:
        start = self.current.position
        coefficient = Fraction(sign)
        have_coefficient = False
        if self.current.kind == "number":
            numerator = int(self.advance().text)
            denominator = 1
            if self.accept("op", "/"):
                position = self.current.position
                denominator = self.expect_number("denominator")
                if denominator == 0:
                    raise ParseError("Zero denominator", position)
            coefficient *= Fraction(numerator, denominator)
            have_coefficient = True

        x = y = 0
        factors = 0
        while True:
            star = self.accept("op", "*")
            if self.current.kind != "var":
                if star is not None:
                    raise ParseError("Expected x or y after '*'", self.current.position)
                break
            variable = self.advance().text
            exponent = 1
            if self.accept("op", "^"):
                exponent = self.expect_number("exponent")
            if variable == "x":
                x += exponent
            else:
                y += exponent
            factors += 1
        if not have_coefficient and factors == 0:
            raise ParseError(f"Expected a term, found {self.current.text or 'end of input'!r}",
                             self.current.position)
        return coefficient, (x, y), start


def parse_polynomial(text: str) -> List[SupportPoint]:
    """Parse ``text`` into its support, merging like terms.

    Returns:
        Support points sorted by exponent

    Raises:
        ParseError: On a syntax error, a negative exponent, a constant term,
            or when every term cancels
    """
    terms = _Parser(text).expression()
    merged: DefaultDict[Point, Fraction] = defaultdict(Fraction)
    first_seen: Dict[Point, int] = {}
    for coefficient, exponent, position in terms:
        merged[exponent] += coefficient
        first_seen.setdefault(exponent, position)

    support = [SupportPoint(x, y, c) for (x, y), c in sorted(merged.items()) if c != 0]
    if not support:
        raise ParseError("f is zero", 0)
    if support[0].exponent == (0, 0):
        raise ParseError("f(0) ≠ 0 required", first_seen[(0, 0)])
    logger.debug(f"Parsed {text!r} into {len(support)} terms")
    return support


def _render_term(point: SupportPoint) -> Tuple[int, str]:
    factors = []
    for variable, exponent in (("x", point.x), ("y", point.y)):
        if exponent == 1:
            factors.append(variable)
        elif exponent > 1:
            factors.append(f"{variable}^{exponent}")
    magnitude = abs(point.coeff)
    if magnitude != 1 or not factors:
        factors.insert(0, str(magnitude))
    return (1 if point.coeff > 0 else -1), "*".join(factors)


def render_polynomial(support: Iterable[SupportPoint]) -> str:
    """Canonical text: descending total degree, then descending power of x."""
    ordered = sorted(support, key=lambda p: (-(p.x + p.y), -p.x))
    if not ordered:
        return "0"
    pieces = []
    for i, point in enumerate(ordered):
        sign, body = _render_term(point)
        if i == 0:
            pieces.append(body if sign > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if sign > 0 else f" - {body}")
    return "".join(pieces)
