"""Exact rationals and sign-consistent continued fractions.

Tangle slopes and diagram coordinates are plain :class:`fractions.Fraction`
values.  The expansion produced here is the unique one whose terms all carry
the sign of the value, with every interior term of absolute value at least 1
and the last term of absolute value at least 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Fraction",
    "ContinuedFraction",
    "reduce",
    "continued_fraction",
    "eval_continued_fraction",
    "mirror",
    "format_fraction",
    "parse_fraction",
    "is_integral",
]

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def reduce(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator.

    A zero denominator is rejected; the point at infinity only exists as a
    diagram vertex (see :meth:`montesinos.diagram.Vertex.infinity`).
    """
    if den == 0:
        if num == 0:
            raise ValueError("0/0 is not a rational number")
        raise ValueError(f"{num}/0 is infinite; use the diagram vertex <inf> instead")
    return Fraction(num, den)


def is_integral(r: Fraction) -> bool:
    return r.denominator == 1


@dataclass(frozen=True)
class ContinuedFraction:
    """Terms ``(z_1, ..., z_k)`` of ``z_1 + 1/(z_2 + 1/(... + 1/z_k))``."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a continued fraction needs at least one term")
        object.__setattr__(self, "terms", tuple(int(z) for z in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __neg__(self) -> "ContinuedFraction":
        return ContinuedFraction(tuple(-z for z in self.terms))

    def __str__(self) -> str:
        return "(" + ",".join(str(z) for z in self.terms) + ")"

    @property
    def value(self) -> Fraction:
        return eval_continued_fraction(self)

    def crossings(self) -> int:
        return sum(abs(z) for z in self.terms)

    def is_sign_consistent(self) -> bool:
        """Check the boundary conditions that make the expansion unique."""
        t = self.terms
        if len(t) < 2:
            return False
        sign = 1 if t[-1] > 0 else -1
        s = [sign * z for z in t]
        return s[0] >= 0 and all(z >= 1 for z in s[1:-1]) and s[-1] >= 2


@lru_cache(maxsize=None)
def _positive_terms(p: int, q: int) -> tuple[int, ...]:
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    if len(terms) > 1 and terms[-1] == 1:
        terms.pop()
        terms[-1] += 1
    return tuple(terms)


def continued_fraction(r: Fraction) -> ContinuedFraction:
    """Unique sign-consistent expansion of a non-integral fraction.

    >>> str(continued_fraction(Fraction(47, 36)))
    '(1,3,3,1,2)'
    >>> str(continued_fraction(Fraction(-2, 3)))
    '(0,-1,-2)'
    """
    r = Fraction(r)
    if r.denominator == 1:
        raise ValueError(f"{format_fraction(r)} is integral; no tangle expansion")
    terms = _positive_terms(abs(r.numerator), r.denominator)
    if r < 0:
        terms = tuple(-z for z in terms)
    return ContinuedFraction(terms)


def eval_continued_fraction(cf: ContinuedFraction | Iterable[int]) -> Fraction:
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for z in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDivisionError("continued fraction has a vanishing tail")
        value = z + 1 / value
    return value


def mirror(r: Fraction) -> Fraction:
    """The mirror-image tangle slope."""
    return -Fraction(r)


def format_fraction(r: Fraction | int) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return reduce(num, den)
