"""End-to-end check of ``2 cr(K) >= tau_max - tau_min`` and batch sweeps over tuple families."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .crossing import crossing_number
from .model import MontesinosTuple, is_alternating_form, validate_knot
from .rationals import format_fraction
from .systems import twist_bounds

__all__ = [
    "TheoremRecord",
    "SweepSummary",
    "check_theorem",
    "tangle_values",
    "iter_tuples",
    "sweep",
    "summarize",
]


@dataclass(frozen=True)
class TheoremRecord:
    tuple: MontesinosTuple
    crossing: int
    bound: Fraction
    alternating: bool
    holds: bool
    equality: bool

    def to_dict(self) -> dict:
        return {
            "tuple": str(self.tuple),
            "crossing": self.crossing,
            "bound": format_fraction(self.bound),
            "alternating": self.alternating,
            "holds": self.holds,
            "equality": self.equality,
        }

    @property
    def violation(self) -> bool:
        """True when an invariant the theorem guarantees fails on this record."""
        return not self.holds or (self.alternating and not self.equality)


def check_theorem(t: Iterable[Fraction] | MontesinosTuple | str) -> TheoremRecord:
    """Compare twice the crossing number with the twist-bound width.

    Raises an :class:`InvalidTuple` subclass for inputs that are not knots.
    """
    if not isinstance(t, MontesinosTuple):
        t = validate_knot(t)
    report = crossing_number(t)
    bound = twist_bounds(report.reduced).width
    twice = 2 * report.total
    return TheoremRecord(
        tuple=t,
        crossing=report.total,
        bound=bound,
        alternating=is_alternating_form(report.reduced),
        holds=twice >= bound,
        equality=twice == bound,
    )


def tangle_values(max_den: int, max_int: int = 0) -> list[Fraction]:
    """Non-integral fractions with denominator <= max_den and |trunc(R)| <= max_int, ascending."""
    if max_den < 2:
        raise ValueError("max_den must be at least 2")
    if max_int < 0:
        raise ValueError("max_int must be nonnegative")
    bound = max_int + 1
    vals = {
        Fraction(p, q)
        for q in range(2, max_den + 1)
        for p in range(-bound * q + 1, bound * q)
        if math.gcd(p, q) == 1
    }
    return sorted(vals)


def iter_tuples(
    max_den: int,
    n_tangles: int,
    max_int: int = 0,
    values: Iterable[Fraction] | None = None,
) -> Iterator[MontesinosTuple]:
    """Every valid knot tuple over the value grid, in lexicographic order."""
    if n_tangles < 3:
        raise ValueError("n_tangles must be at least 3")
    vals = list(values) if values is not None else tangle_values(max_den, max_int)
    for r in vals:
        if r.denominator == 1:
            raise ValueError(f"grid value {format_fraction(r)} is integral")
    # (even denominator, odd numerator) per value; the knot test only needs these counts
    parity = [(r.denominator % 2 == 0, r.numerator % 2 == 1) for r in vals]
    for idx in itertools.product(range(len(vals)), repeat=n_tangles):
        even = sum(parity[i][0] for i in idx)
        if even == 1 or (even == 0 and sum(parity[i][1] for i in idx) % 2 == 1):
            yield MontesinosTuple(tuple(vals[i] for i in idx))


def sweep(
    max_den: int,
    n_tangles: int,
    max_int: int = 0,
    values: Iterable[Fraction] | None = None,
) -> Iterator[TheoremRecord]:
    for t in iter_tuples(max_den, n_tangles, max_int, values):
        yield check_theorem(t)


@dataclass
class SweepSummary:
    records: int = 0
    holds: int = 0
    equality: int = 0
    alternating: int = 0
    violations: list[TheoremRecord] = field(default_factory=list)

    def add(self, rec: TheoremRecord) -> None:
        self.records += 1
        self.holds += rec.holds
        self.equality += rec.equality
        self.alternating += rec.alternating
        if rec.violation:
            self.violations.append(rec)

    def to_dict(self) -> dict:
        return {
            "summary": True,
            "records": self.records,
            "holds": self.holds,
            "equality": self.equality,
            "alternating": self.alternating,
            "violations": len(self.violations),
        }


def summarize(records: Iterable[TheoremRecord]) -> SweepSummary:
    s = SweepSummary()
    for rec in records:
        s.add(rec)
    return s
