"""The planar edgepath diagram for Montesinos tangles and single-tangle edgepaths.

Vertices are ``<p/q>`` at ``((q-1)/q, p/q)``, the circle vertices ``o(p/q)``
at ``(1, p/q)`` and ``<inf>`` at ``(-1, 0)``.  Two angle vertices are joined
when their determinant is +-1.  Edgepaths are stored in traversal order,
starting at ``<R>`` and moving leftwards; their text form lists the vertices
left to right, e.g. ``<1>--<1/2>--<2/5>``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .rationals import format_fraction, parse_fraction

__all__ = [
    "VertexKind",
    "Vertex",
    "EdgeKind",
    "Edge",
    "Direction",
    "PathType",
    "Edgepath",
    "INFINITY",
    "vertex_coords",
    "adjacent",
    "edge_kind",
    "rational_point",
    "farey_parents",
    "segment_slope",
    "is_minimal",
    "enumerate_basic_edgepaths",
    "monotone_basic_edgepath",
    "edgepath_length",
    "edgepath_twist",
    "classify_type",
    "parse_edgepath",
]

Point = tuple[Fraction, Fraction]


class VertexKind(enum.Enum):
    ANGLE = "angle"
    CIRCLE = "circle"
    INFINITY = "infinity"


@dataclass(frozen=True, slots=True)
class Vertex:
    kind: VertexKind
    value: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind is VertexKind.INFINITY:
            if self.value is not None:
                raise ValueError("<inf> carries no value")
        else:
            if self.value is None:
                raise ValueError(f"{self.kind.value} vertex needs a value")
            object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def angle(cls, r) -> "Vertex":
        return cls(VertexKind.ANGLE, Fraction(r))

    @classmethod
    def circle(cls, r) -> "Vertex":
        return cls(VertexKind.CIRCLE, Fraction(r))

    @classmethod
    def infinity(cls) -> "Vertex":
        return cls(VertexKind.INFINITY)

    @property
    def is_infinity(self) -> bool:
        return self.kind is VertexKind.INFINITY

    @property
    def is_integer(self) -> bool:
        return self.kind is VertexKind.ANGLE and self.value.denominator == 1

    @property
    def coords(self) -> Point:
        return vertex_coords(self)

    def sort_key(self) -> tuple:
        order = {VertexKind.ANGLE: 0, VertexKind.CIRCLE: 1, VertexKind.INFINITY: 2}
        return (order[self.kind], self.value if self.value is not None else Fraction(0))

    def __str__(self) -> str:
        if self.kind is VertexKind.INFINITY:
            return "<inf>"
        if self.kind is VertexKind.CIRCLE:
            return f"o({format_fraction(self.value)})"
        return f"<{format_fraction(self.value)}>"


INFINITY = Vertex.infinity()


def vertex_coords(x: Vertex) -> Point:
    if x.kind is VertexKind.INFINITY:
        return (Fraction(-1), Fraction(0))
    q = x.value.denominator
    if x.kind is VertexKind.CIRCLE:
        return (Fraction(1), x.value)
    return (Fraction(q - 1, q), x.value)


class EdgeKind(enum.Enum):
    NON_INFINITY = "non-infinity"
    INFINITY = "infinity"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


def _det(a: Fraction, b: Fraction) -> int:
    return a.numerator * b.denominator - a.denominator * b.numerator


def edge_kind(x: Vertex, y: Vertex) -> EdgeKind | None:
    """Kind of the edge joining ``x`` and ``y``, or None if they are not joined."""
    kx, ky = x.kind, y.kind
    if kx is VertexKind.ANGLE and ky is VertexKind.ANGLE:
        if abs(_det(x.value, y.value)) != 1:
            return None
        if x.value.denominator == 1 and y.value.denominator == 1:
            return EdgeKind.VERTICAL
        return EdgeKind.NON_INFINITY
    if VertexKind.INFINITY in (kx, ky):
        other = y if kx is VertexKind.INFINITY else x
        if other.is_integer:
            return EdgeKind.INFINITY
        return None
    if {kx, ky} == {VertexKind.ANGLE, VertexKind.CIRCLE} and x.value == y.value:
        return EdgeKind.HORIZONTAL
    return None


def adjacent(x: Vertex, y: Vertex) -> bool:
    return edge_kind(x, y) is not None


@dataclass(frozen=True)
class Edge:
    """An edge traversed from ``start`` towards ``end``.

    ``length < 1`` marks a partial edge stopping at the rational point
    ``length*<end> + (1-length)*<start>``.
    """

    start: Vertex
    end: Vertex
    length: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "length", Fraction(self.length))
        if self.kind is None:
            raise ValueError(f"{self.start} and {self.end} are not joined by an edge")
        if not 0 < self.length <= 1:
            raise ValueError(f"edge length must lie in (0, 1], got {self.length}")
        if self.length < 1 and self.kind is EdgeKind.HORIZONTAL:
            raise ValueError("horizontal edges carry constant edgepaths, not partial edges")

    @property
    def kind(self) -> EdgeKind | None:
        return edge_kind(self.start, self.end)

    @property
    def is_partial(self) -> bool:
        return self.length < 1

    @property
    def sign(self) -> int | None:
        """+1 if v increases along the traversal, -1 if it decreases."""
        if self.kind in (EdgeKind.INFINITY, EdgeKind.HORIZONTAL):
            return None
        return 1 if self.end.value > self.start.value else -1

    @property
    def twist(self) -> Fraction:
        s = self.sign
        return Fraction(0) if s is None else -2 * s * self.length

    @property
    def endpoint(self) -> Point:
        if not self.is_partial:
            return self.end.coords
        k, m = self.length.numerator, self.length.denominator
        return rational_point(self, k, m)


def rational_point(e: Edge, k: int, m: int) -> Point:
    """Coordinates of ``k/m <end> + (m-k)/m <start>`` on ``e``.

    Angle-angle edges weight the endpoints by ``k*q`` and ``(m-k)*s``;
    infinity edges interpolate linearly.  On a horizontal edge ``k`` plays
    the role of ``l`` in ``m/(m+l) <p/q> + l/(m+l) o(p/q)``.
    """
    kind = e.kind
    if kind is EdgeKind.HORIZONTAL:
        l = k
        if l < 1 or m < 1:
            raise ValueError("horizontal rational points need l >= 1 and m >= 1")
        angle = e.start if e.start.kind is VertexKind.ANGLE else e.end
        (ua, va), (uc, vc) = angle.coords, (Fraction(1), angle.value)
        w = Fraction(m, m + l)
        return (w * ua + (1 - w) * uc, w * va + (1 - w) * vc)
    if m < 2 or not 1 <= k <= m - 1:
        raise ValueError(f"rational point needs m >= 2 and 1 <= k <= m-1, got k={k}, m={m}")
    far, near = e.end, e.start
    (uf, vf), (un, vn) = far.coords, near.coords
    if kind is EdgeKind.INFINITY:
        w = Fraction(k, m)
    else:
        wf = k * far.value.denominator
        wn = (m - k) * near.value.denominator
        w = Fraction(wf, wf + wn)
    return (w * uf + (1 - w) * un, w * vf + (1 - w) * vn)


@lru_cache(maxsize=65536)
def farey_parents(r: Fraction) -> tuple[Fraction, Fraction]:
    """The two Farey neighbours of ``r`` with smaller denominator, as (lower, upper)."""
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    if q < 2:
        raise ValueError(f"{format_fraction(r)} is integral; it has no Farey parents")
    b = pow(p % q, -1, q)
    a = (p * b - 1) // q
    return Fraction(a, b), Fraction(p - a, q - b)


def segment_slope(x: Vertex, y: Vertex) -> Fraction:
    (ux, vx), (uy, vy) = x.coords, y.coords
    if ux == uy:
        raise ZeroDivisionError("vertical segment has no finite slope")
    return (vy - vx) / (uy - ux)


class Direction(enum.Enum):
    INCREASING = "inc"
    DECREASING = "dec"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.INCREASING else -1

    @classmethod
    def parse(cls, text: str) -> "Direction":
        t = text.strip().lower()
        if t in ("inc", "increasing", "+"):
            return cls.INCREASING
        if t in ("dec", "decreasing", "-"):
            return cls.DECREASING
        raise ValueError(f"unknown direction {text!r}")


class PathType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"

    @classmethod
    def from_u(cls, u: Fraction) -> "PathType":
        if u > 0:
            return cls.I
        if u == 0:
            return cls.II
        return cls.III


@dataclass(frozen=True)
class Edgepath:
    """A non-constant edgepath, or a constant one on the horizontal edge at ``<R>``.

    ``vertices[0]`` is ``<R>``; the path moves right to left (u never
    increases).  ``final_length`` below 1 makes the last edge partial.
    ``constant = (m, l)`` marks the constant edgepath at
    ``m/(m+l) <R> + l/(m+l) o(R)``.
    """

    vertices: tuple[Vertex, ...]
    final_length: Fraction = Fraction(1)
    constant: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "final_length", Fraction(self.final_length))
        if not vs:
            raise ValueError("an edgepath needs a starting vertex")
        if vs[0].kind is not VertexKind.ANGLE:
            raise ValueError("edgepaths start at an angle vertex <R>")
        if self.constant is not None:
            m, l = self.constant
            if len(vs) != 1 or m < 1 or l < 1:
                raise ValueError("a constant edgepath is one rational point with m, l >= 1")
            if self.final_length != 1:
                raise ValueError("a constant edgepath has no partial edge")
            return
        if not 0 < self.final_length <= 1:
            raise ValueError("final_length must lie in (0, 1]")
        if len(vs) == 1 and self.final_length != 1:
            raise ValueError("a single-vertex path has no edge to shorten")
        for a, b in zip(vs, vs[1:]):
            kind = edge_kind(a, b)
            if kind is None or kind is EdgeKind.HORIZONTAL:
                raise ValueError(f"no usable edge between {a} and {b}")
            if b.coords[0] > a.coords[0]:
                raise ValueError(f"edge {a}--{b} runs left to right")

    @classmethod
    def from_values(cls, values: Iterable, final_length=Fraction(1)) -> "Edgepath":
        """Build from fractions in traversal order; ``None`` stands for <inf>."""
        vs = tuple(INFINITY if v is None else Vertex.angle(v) for v in values)
        return cls(vs, final_length)

    @classmethod
    def constant_at(cls, r, m: int = 1, l: int = 1) -> "Edgepath":
        return cls((Vertex.angle(r),), Fraction(1), (m, l))

    @property
    def start(self) -> Fraction:
        return self.vertices[0].value

    @property
    def is_constant(self) -> bool:
        return self.constant is not None

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        n = len(vs) - 1
        return tuple(
            Edge(vs[i], vs[i + 1], self.final_length if i == n - 1 else Fraction(1))
            for i in range(n)
        )

    @cached_property
    def endpoint(self) -> Point:
        """Coordinates of the left endpoint."""
        if self.constant is not None:
            m, l = self.constant
            horizontal = Edge(self.vertices[0], Vertex.circle(self.start))
            return rational_point(horizontal, l, m)
        if len(self.vertices) == 1:
            return self.vertices[0].coords
        return self.edges[-1].endpoint

    @cached_property
    def length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    @cached_property
    def length_u_nonneg(self) -> Fraction:
        """Length of the part of the path lying in ``u >= 0``."""
        return sum((e.length for e in self.edges if e.kind is not EdgeKind.INFINITY), Fraction(0))

    @cached_property
    def twist(self) -> Fraction:
        return sum((e.twist for e in self.edges), Fraction(0))

    @property
    def path_type(self) -> PathType:
        return PathType.from_u(self.endpoint[0])

    @property
    def is_basic(self) -> bool:
        return (
            self.constant is None
            and self.final_length == 1
            and self.vertices[-1].is_integer
            and not any(e.kind is EdgeKind.VERTICAL for e in self.edges)
        )

    def is_monotone(self, direction: Direction) -> bool:
        return all(e.sign in (None, direction.sign) for e in self.edges)

    def has_vertical(self) -> bool:
        return any(e.kind is EdgeKind.VERTICAL for e in self.edges)

    def append_vertical(self, steps: int) -> "Edgepath":
        """Continue a path ending at ``<z>`` to ``<z + steps>`` along vertical edges."""
        last = self.vertices[-1]
        if not last.is_integer or self.final_length != 1 or self.constant is not None:
            raise ValueError("vertical edges continue from an integer vertex")
        z = last.value.numerator
        step = 1 if steps > 0 else -1
        extra = tuple(Vertex.angle(z + step * i) for i in range(1, abs(steps) + 1))
        return Edgepath(self.vertices + extra)

    def append_infinity(self) -> "Edgepath":
        last = self.vertices[-1]
        if not last.is_integer or self.final_length != 1 or self.constant is not None:
            raise ValueError("an infinity edge continues from an integer vertex")
        return Edgepath(self.vertices + (INFINITY,))

    def basic_part(self) -> "Edgepath":
        """Drop trailing vertical and infinity edges."""
        vs = list(self.vertices)
        while len(vs) > 1 and (vs[-1].is_infinity or (vs[-1].is_integer and vs[-2].is_integer)):
            vs.pop()
        return Edgepath(tuple(vs))

    def sort_key(self) -> tuple:
        return (
            tuple(v.sort_key() for v in self.vertices),
            self.final_length,
            self.constant or (0, 0),
        )

    def __str__(self) -> str:
        if self.constant is not None:
            m, l = self.constant
            r = format_fraction(self.start)
            return f"{m}/{m + l}<{r}>+{l}/{m + l}o({r})"
        tokens = [str(v) for v in self.vertices]
        if self.final_length != 1:
            k, m = self.final_length.numerator, self.final_length.denominator
            far, near = self.vertices[-1], self.vertices[-2]
            tokens[-1] = f"({k}/{m}{far}+{m - k}/{m}{near})"
        return "--".join(reversed(tokens))


def is_minimal(path: Edgepath) -> bool:
    """No immediate retracing and no two successive edges on a common triangle."""
    vs = path.vertices
    for a, b, c in zip(vs, vs[1:], vs[2:]):
        if a == c or adjacent(a, c):
            return False
    return True


def _is_triangle_step(prev: Fraction, candidate: Fraction) -> bool:
    return abs(_det(prev, candidate)) == 1


@lru_cache(maxsize=4096)
def _basic_value_paths(r: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    out: list[tuple[Fraction, ...]] = []
    stack: list[tuple[Fraction, ...]] = [(r,)]
    while stack:
        path = stack.pop()
        cur = path[-1]
        if cur.denominator == 1:
            out.append(path)
            continue
        for nxt in farey_parents(cur):
            if len(path) >= 2 and _is_triangle_step(path[-2], nxt):
                continue
            stack.append(path + (nxt,))
    out.sort()
    return tuple(out)


def enumerate_basic_edgepaths(r) -> list[Edgepath]:
    """All minimal basic edgepaths from ``<r>``, sorted by their traversal values."""
    r = Fraction(r)
    if r.denominator == 1:
        raise ValueError(f"{format_fraction(r)} is integral")
    return [Edgepath.from_values(p) for p in _basic_value_paths(r)]


@lru_cache(maxsize=65536)
def _monotone_values(r: Fraction, direction: Direction) -> tuple[Fraction, ...]:
    path = [r]
    while path[-1].denominator != 1:
        lower, upper = farey_parents(path[-1])
        path.append(upper if direction is Direction.INCREASING else lower)
    return tuple(path)


def monotone_basic_edgepath(r, direction: Direction | str) -> Edgepath:
    """The unique basic edgepath from ``<r>`` all of whose edges have one sign."""
    if isinstance(direction, str):
        direction = Direction.parse(direction)
    r = Fraction(r)
    if r.denominator == 1:
        return Edgepath((Vertex.angle(r),))
    path = Edgepath.from_values(_monotone_values(r, direction))
    if not is_minimal(path):
        raise AssertionError(f"monotone walk from {format_fraction(r)} is not minimal")
    return path


def edgepath_length(path: Edgepath) -> Fraction:
    return path.length


def edgepath_twist(path: Edgepath) -> Fraction:
    return path.twist


def classify_type(path: Edgepath) -> PathType:
    return path.path_type


_VERTEX_RE = re.compile(r"<([^<>]+)>|o\(([^()]+)\)")
_PARTIAL_RE = re.compile(
    r"^\((\d+)/(\d+)\s*<([^<>]+)>\s*\+\s*(\d+)/(\d+)\s*<([^<>]+)>\)$"
)


def _parse_vertex(token: str) -> Vertex:
    token = token.strip()
    if token in ("<inf>", "<1/0>", "<oo>"):
        return INFINITY
    m = _VERTEX_RE.fullmatch(token)
    if m is None:
        raise ValueError(f"not a diagram vertex: {token!r}")
    if m.group(1) is not None:
        return Vertex.angle(parse_fraction(m.group(1)))
    return Vertex.circle(parse_fraction(m.group(2)))


def parse_edgepath(text: str) -> Edgepath:
    """Inverse of ``str(Edgepath)`` for non-constant edgepaths."""
    tokens = [t.strip() for t in text.split("--")]
    final_length = Fraction(1)
    m = _PARTIAL_RE.match(tokens[0])
    if m is not None:
        k, den, far, _, _, near = m.groups()
        final_length = Fraction(int(k), int(den))
        tokens[0] = f"<{far}>"
        if len(tokens) < 2 or _parse_vertex(tokens[1]) != _parse_vertex(f"<{near}>"):
            raise ValueError(f"partial edge does not continue from {near}")
    vertices = tuple(_parse_vertex(t) for t in reversed(tokens))
    return Edgepath(vertices, final_length)
