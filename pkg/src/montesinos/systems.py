"""Edgepath systems over all tangles of a Montesinos tuple, and their twists."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .diagram import (
    Direction,
    Edgepath,
    PathType,
    enumerate_basic_edgepaths,
    is_minimal,
    monotone_basic_edgepath,
)
from .model import FormKind, MontesinosTuple, ReducedForm, normalize, validate_knot
from .rationals import format_fraction

__all__ = [
    "InconsistentSystem",
    "EdgepathSystem",
    "TwistBounds",
    "system_twist",
    "monotone_path",
    "monotone_system",
    "twist_bounds",
    "diameter_bound",
    "iter_systems",
    "enumerate_systems",
    "type_ii_options",
]


class InconsistentSystem(ValueError):
    """Left endpoints do not share a u-coordinate or their v-coordinates do not sum to 0."""


@dataclass(frozen=True)
class EdgepathSystem:
    """One edgepath per tangle.

    Unless ``formal`` is set, the system must be gluing consistent: all left
    endpoints share their u-coordinate and their v-coordinates sum to zero.
    ``system_type`` is None only for formal systems that fail that test.
    """

    paths: tuple[Edgepath, ...]
    formal: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        if not self.paths:
            raise ValueError("an edgepath system needs at least one edgepath")
        if not self.formal and not self.is_consistent():
            raise InconsistentSystem(
                "system "
                + " | ".join(str(p) for p in self.paths)
                + " is not gluing consistent"
            )

    def is_consistent(self) -> bool:
        ends = [p.endpoint for p in self.paths]
        u0 = ends[0][0]
        return all(u == u0 for u, _ in ends) and sum(v for _, v in ends) == 0

    @property
    def system_type(self) -> PathType | None:
        if not self.is_consistent():
            return None
        return PathType.from_u(self.paths[0].endpoint[0])

    @property
    def twist(self) -> Fraction:
        return sum((p.twist for p in self.paths), Fraction(0))

    def __len__(self) -> int:
        return len(self.paths)

    def __str__(self) -> str:
        return " | ".join(str(p) for p in self.paths)

    def to_dict(self) -> dict:
        t = self.system_type
        return {
            "type": t.value if t is not None else None,
            "twist": format_fraction(self.twist),
            "paths": [str(p) for p in self.paths],
        }


def system_twist(s: EdgepathSystem) -> Fraction:
    """Sum of the edgepath twists.

    Every non-formal system was checked for gluing consistency when built,
    so only formal systems can reach here inconsistent, and those are allowed.
    """
    if not s.formal and not s.is_consistent():
        raise InconsistentSystem(str(s))
    return s.twist


@lru_cache(maxsize=65536)
def monotone_path(r: Fraction, direction: Direction, completion: PathType) -> Edgepath:
    """Monotone basic edgepath from ``<r>`` completed to type II (at <0>) or III (at <inf>)."""
    basic = monotone_basic_edgepath(r, direction)
    if completion is PathType.III:
        path = basic.append_infinity()
    elif completion is PathType.II:
        z = basic.vertices[-1].value.numerator
        path = basic.append_vertical(-z) if z else basic
        if not path.is_monotone(direction):
            raise ValueError(
                f"{format_fraction(r)}: vertical run to <0> breaks {direction.value} monotonicity"
            )
    else:
        raise ValueError("monotone completions are of type II or III")
    if not is_minimal(path):
        raise AssertionError(f"{path} is not minimal")
    return path


def _completion(kind: FormKind, direction: Direction) -> PathType:
    if kind is FormKind.ALL_POSITIVE and direction is Direction.DECREASING:
        return PathType.II
    if kind is FormKind.ALL_NEGATIVE and direction is Direction.INCREASING:
        return PathType.II
    return PathType.III


def monotone_system(t: ReducedForm, direction: Direction | str) -> EdgepathSystem:
    """The monotonically increasing or decreasing extremal system of a reduced tuple.

    Mixed-sign tuples complete every path with an infinity edge.  For a
    one-signed tuple the direction running towards ``<0>`` (decreasing for
    positive tangles, increasing for negative ones) is continued along
    vertical edges to ``<0>``; the other direction gets infinity edges.
    """
    if not isinstance(t, ReducedForm):
        raise TypeError("monotone_system needs a ReducedForm; call normalize() first")
    if isinstance(direction, str):
        direction = Direction.parse(direction)
    completion = _completion(t.kind, direction)
    return EdgepathSystem(tuple(monotone_path(r, direction, completion) for r in t.tangles))


@dataclass(frozen=True)
class TwistBounds:
    tau_min: Fraction
    tau_max: Fraction
    witness_min: EdgepathSystem
    witness_max: EdgepathSystem

    @property
    def width(self) -> Fraction:
        return self.tau_max - self.tau_min

    def to_dict(self) -> dict:
        return {
            "tau_min": format_fraction(self.tau_min),
            "tau_max": format_fraction(self.tau_max),
            "witness_min": self.witness_min.to_dict(),
            "witness_max": self.witness_max.to_dict(),
        }


def _as_reduced(t) -> ReducedForm:
    if isinstance(t, ReducedForm):
        return t
    if not isinstance(t, MontesinosTuple):
        t = validate_knot(t)
    return normalize(t)


def twist_bounds(t: MontesinosTuple | ReducedForm | Iterable[Fraction] | str) -> TwistBounds:
    """Twists of the increasing (lower bound) and decreasing (upper bound) systems."""
    reduced = _as_reduced(t)
    lo = monotone_system(reduced, Direction.INCREASING)
    hi = monotone_system(reduced, Direction.DECREASING)
    bounds = TwistBounds(lo.twist, hi.twist, lo, hi)
    if bounds.tau_min > bounds.tau_max:
        raise AssertionError(f"twist bounds out of order for {reduced}")
    return bounds


def diameter_bound(t) -> Fraction:
    """``tau_max - tau_min``, an upper bound for the boundary-slope diameter."""
    return twist_bounds(t).width


@lru_cache(maxsize=8192)
def _type_iii_options(r: Fraction) -> tuple[Edgepath, ...]:
    return tuple(p.append_infinity() for p in enumerate_basic_edgepaths(r))


@lru_cache(maxsize=8192)
def type_ii_options(r: Fraction, max_vertical: int) -> tuple[Edgepath, ...]:
    """Minimal type II edgepaths: a basic edgepath plus at most ``max_vertical`` vertical edges."""
    out = []
    for basic in enumerate_basic_edgepaths(r):
        for steps in range(-max_vertical, max_vertical + 1):
            path = basic.append_vertical(steps) if steps else basic
            if is_minimal(path):
                out.append(path)
    out.sort(key=Edgepath.sort_key)
    return tuple(out)


def _type_ii_systems(options: Sequence[Sequence[Edgepath]]) -> Iterator[EdgepathSystem]:
    *head, last = options
    by_end: dict[Fraction, list[Edgepath]] = defaultdict(list)
    for p in last:
        by_end[p.endpoint[1]].append(p)
    for prefix in itertools.product(*head):
        need = -sum(p.endpoint[1] for p in prefix)
        for p in by_end.get(need, ()):
            yield EdgepathSystem(prefix + (p,))


def iter_systems(
    t: ReducedForm,
    max_vertical: int = 3,
    types: Iterable[PathType | str] = (PathType.III, PathType.II),
) -> Iterator[EdgepathSystem]:
    """Type III systems from every choice of basic edgepaths, then gluing-consistent type II ones.

    Order is the product order over each tangle's sorted options; type III
    systems come first.
    """
    t = _as_reduced(t)
    if max_vertical < 0:
        raise ValueError("max_vertical must be nonnegative")
    wanted = {PathType(x) if isinstance(x, str) else x for x in types}
    if PathType.III in wanted:
        for paths in itertools.product(*(_type_iii_options(r) for r in t.tangles)):
            yield EdgepathSystem(paths)
    if PathType.II in wanted:
        yield from _type_ii_systems([type_ii_options(r, max_vertical) for r in t.tangles])


def enumerate_systems(
    t: ReducedForm,
    max_vertical: int = 3,
    types: Iterable[PathType | str] = (PathType.III, PathType.II),
) -> list[EdgepathSystem]:
    return list(iter_systems(t, max_vertical, types))
