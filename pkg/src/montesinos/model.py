"""Montesinos tuples: knot-ness checks and reduction to a minimal-diagram form."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import format_fraction, parse_fraction

__all__ = [
    "InvalidTuple",
    "IntegralTangle",
    "InfiniteTangle",
    "TooFewTangles",
    "NotAKnot",
    "FormKind",
    "MontesinosTuple",
    "ReducedForm",
    "validate_knot",
    "check_knot",
    "normalize",
    "is_alternating_form",
    "parse_tuple",
    "format_tuple",
]


class InvalidTuple(ValueError):
    """Base class for tuples that do not describe a Montesinos knot."""

    code = "InvalidTuple"


class IntegralTangle(InvalidTuple):
    code = "IntegralTangle"


class InfiniteTangle(InvalidTuple):
    code = "InfiniteTangle"


class TooFewTangles(InvalidTuple):
    code = "TooFewTangles"


class NotAKnot(InvalidTuple):
    """The tuple closes up to a link with more than one component."""

    code = "NotAKnot"


class FormKind(enum.Enum):
    ALL_POSITIVE = "AllPositive"
    ALL_NEGATIVE = "AllNegative"
    MIXED = "Mixed"


def _as_fractions(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(r if type(r) is Fraction else Fraction(r) for r in values)


def _is_one_component(tangles: Sequence[Fraction]) -> bool:
    even_dens = sum(1 for r in tangles if r.denominator % 2 == 0)
    if even_dens == 1:
        return True
    if even_dens == 0:
        odd_nums = sum(1 for r in tangles if r.numerator % 2)
        return odd_nums % 2 == 1
    return False


def check_knot(tangles: Sequence[Fraction]) -> None:
    """Raise the matching :class:`InvalidTuple` subclass, or return None."""
    for r in tangles:
        if r.denominator == 0:
            raise InfiniteTangle("1/0 tangles are not allowed")
        if r.denominator == 1:
            raise IntegralTangle(f"tangle {format_fraction(r)} is integral")
    if len(tangles) < 3:
        raise TooFewTangles(f"need at least 3 tangles, got {len(tangles)}")
    if not _is_one_component(tangles):
        raise NotAKnot(
            "parity conditions fail: " + format_tuple(tangles) + " is a multi-component link"
        )


@dataclass(frozen=True)
class MontesinosTuple:
    """A validated tuple ``(R_1, ..., R_N)`` describing a Montesinos knot."""

    tangles: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tangles", _as_fractions(self.tangles))
        check_knot(self.tangles)

    def __len__(self) -> int:
        return len(self.tangles)

    def __iter__(self):
        return iter(self.tangles)

    def __neg__(self) -> "MontesinosTuple":
        return MontesinosTuple(tuple(-r for r in self.tangles))

    def __str__(self) -> str:
        return format_tuple(self.tangles)

    def total(self) -> Fraction:
        return sum(self.tangles, Fraction(0))


@dataclass(frozen=True)
class ReducedForm:
    """A tuple whose natural diagram is a reduced Montesinos diagram.

    Either every tangle has one sign, or the signs are mixed and every
    tangle lies strictly between -1 and 1.
    """

    tangles: tuple[Fraction, ...]
    kind: FormKind

    @classmethod
    def from_tangles(cls, tangles: Iterable[Fraction]) -> "ReducedForm":
        tangles = _as_fractions(tangles)
        kind = cls._classify(tangles)
        if kind is None:
            raise ValueError(f"{format_tuple(tangles)} is not in reduced form")
        return cls(tangles, kind)

    def __post_init__(self) -> None:
        expected = ReducedForm._classify(self.tangles)
        if expected is not self.kind:
            raise ValueError(
                f"{format_tuple(self.tangles)} is not of kind {self.kind.value}"
            )

    @staticmethod
    def _classify(tangles: Sequence[Fraction]) -> FormKind | None:
        # integer tests only; this sits on the sweep hot path
        nums = [r.numerator for r in tangles]
        if all(p > 0 for p in nums):
            return FormKind.ALL_POSITIVE
        if all(p < 0 for p in nums):
            return FormKind.ALL_NEGATIVE
        if all(abs(r.numerator) < r.denominator for r in tangles):
            return FormKind.MIXED
        return None

    def __len__(self) -> int:
        return len(self.tangles)

    def __iter__(self):
        return iter(self.tangles)

    def __neg__(self) -> "ReducedForm":
        return ReducedForm.from_tangles(-r for r in self.tangles)

    def __str__(self) -> str:
        return format_tuple(self.tangles)

    def as_tuple(self) -> MontesinosTuple:
        return MontesinosTuple(self.tangles)


def validate_knot(tangles: Iterable[Fraction] | str) -> MontesinosTuple:
    if isinstance(tangles, str):
        tangles = parse_tuple(tangles)
    return MontesinosTuple(tuple(tangles))


def normalize(t: MontesinosTuple | Sequence[Fraction]) -> ReducedForm:
    """Shift integer parts between tangles (shifts summing to zero) into reduced form.

    A tuple that is already one-signed, or mixed with every entry of modulus
    below 1, is returned as it is.  Otherwise, with ``f_j = R_j - floor(R_j)``
    and ``e = sum floor(R_j)``:
    ``e >= 0`` puts all of ``e`` on the first tangle (all positive);
    ``e <= -N`` makes every entry ``f_j - 1`` and puts the remaining
    ``e + N`` on the first tangle (all negative); otherwise the first
    ``|e|`` entries become ``f_j - 1`` (mixed signs, all of modulus < 1).
    Tangle order is kept.
    """
    tangles = t.tangles if isinstance(t, MontesinosTuple) else _as_fractions(t)
    if any(r.denominator == 1 for r in tangles):
        raise IntegralTangle("normalize needs non-integral tangles")
    if ReducedForm._classify(tangles) is not None:
        return ReducedForm.from_tangles(tangles)
    n = len(tangles)
    floors = [math.floor(r) for r in tangles]
    parts = [r - f for r, f in zip(tangles, floors)]
    e0 = sum(floors)
    if e0 >= 0:
        out = [parts[0] + e0, *parts[1:]]
    elif e0 <= -n:
        out = [f - 1 for f in parts]
        out[0] += e0 + n
    else:
        k = -e0
        out = [f - 1 if j < k else f for j, f in enumerate(parts)]
    return ReducedForm.from_tangles(out)


def is_alternating_form(r: ReducedForm) -> bool:
    return r.kind is not FormKind.MIXED


def parse_tuple(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1/2,1/3,-2/3"``; surrounding parentheses are tolerated."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    fields = [f for f in body.split(",") if f.strip()]
    out = []
    for f in fields:
        s = f.strip()
        if s.replace(" ", "") in ("1/0", "-1/0", "inf", "oo"):
            raise InfiniteTangle("1/0 tangles are not allowed")
        out.append(parse_fraction(s))
    return tuple(out)


def format_tuple(tangles: Iterable[Fraction]) -> str:
    return ",".join(format_fraction(r) for r in tangles)
