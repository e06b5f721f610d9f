"""Crossing numbers from reduced Montesinos diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .model import MontesinosTuple, ReducedForm, normalize, validate_knot
from .rationals import continued_fraction, format_fraction

__all__ = ["CrossingReport", "tangle_crossings", "crossing_number"]


@lru_cache(maxsize=65536)
def tangle_crossings(r: Fraction) -> int:
    """Crossings of the alternating diagram of the rational tangle ``r``."""
    return continued_fraction(Fraction(r)).crossings()


@dataclass(frozen=True)
class CrossingReport:
    per_tangle: tuple[int, ...]
    total: int
    reduced: ReducedForm

    def to_dict(self) -> dict:
        return {
            "per_tangle": list(self.per_tangle),
            "total": self.total,
            "reduced": [format_fraction(r) for r in self.reduced.tangles],
        }


def crossing_number(t: MontesinosTuple | Iterable[Fraction] | str) -> CrossingReport:
    """Crossing number of ``K(t)``, counted on the diagram of its reduced form."""
    if not isinstance(t, MontesinosTuple):
        t = validate_knot(t)
    reduced = normalize(t)
    per = tuple(tangle_crossings(r) for r in reduced.tangles)
    return CrossingReport(per, sum(per), reduced)
