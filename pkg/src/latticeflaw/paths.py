"""Lattice paths with East/North steps and their geometry relative to a linear boundary.

A path is stored as a string over ``{"E", "N"}`` and always starts at the
origin.  A :class:`BoundarySpec` ``(a, b, g)`` fixes the endpoint ``(g*a, g*b)``
and the boundary line through the origin and the endpoint.  The *elevation*
of a point ``(i, j)`` is ``j*a - i*b``: zero on the boundary, positive above,
negative below.

Subpaths produced by :func:`split` are standalone paths translated back to the
origin.  A subpath that starts and ends on the boundary of its parent is itself
a member of ``N(h)`` for the same slope, and its elevations agree with the
parent's; the helpers that take ``(a, b)`` rather than a full spec exist for
exactly that situation (including the empty path).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

EAST = "E"
NORTH = "N"


class PathError(ValueError):
    """A path is not a member of the path set it is being used with."""


@dataclass(frozen=True)
class BoundarySpec:
    """Slope parameters ``a``, ``b`` (coprime) and scaling factor ``g``."""

    a: int
    b: int
    g: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "g"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(
                f"a and b must be coprime (gcd({self.a}, {self.b}) = "
                f"{math.gcd(self.a, self.b)}); the boundary counts assume gcd(a, b) = 1"
            )

    @property
    def endpoint(self) -> tuple[int, int]:
        return (self.g * self.a, self.g * self.b)

    @property
    def length(self) -> int:
        """Number of steps of every path in ``N(g)``, ``g(a+b)``."""
        return self.g * (self.a + self.b)

    @property
    def max_flaws(self) -> int:
        return self.length - 1

    def with_g(self, g: int) -> BoundarySpec:
        return BoundarySpec(self.a, self.b, g)


class PathPoint(NamedTuple):
    i: int
    j: int
    index: int


@dataclass(frozen=True)
class LatticePath:
    """An immutable sequence of unit steps starting at ``(0, 0)``."""

    steps: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.steps, str):
            raise TypeError("steps must be a string over {'E', 'N'}")
        bad = set(self.steps) - {EAST, NORTH}
        if bad:
            raise ValueError(f"invalid step symbols {sorted(bad)!r}; expected only 'E' and 'N'")

    @classmethod
    def parse(cls, text: str) -> LatticePath:
        return cls(text.strip().upper())

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: LatticePath) -> LatticePath:
        return concat(self, other)

    @property
    def east_count(self) -> int:
        return self.steps.count(EAST)

    @property
    def north_count(self) -> int:
        return self.steps.count(NORTH)

    @property
    def end(self) -> tuple[int, int]:
        return (self.east_count, self.north_count)

    def points(self) -> list[PathPoint]:
        """All ``len(self) + 1`` points, in path order."""
        i = j = 0
        out = [PathPoint(0, 0, 0)]
        for index, step in enumerate(self.steps, start=1):
            if step == EAST:
                i += 1
            else:
                j += 1
            out.append(PathPoint(i, j, index))
        return out

    def is_member(self, spec: BoundarySpec) -> bool:
        return self.end == spec.endpoint

    def to_json(self, spec: BoundarySpec) -> str:
        return json.dumps({"steps": self.steps, "a": spec.a, "b": spec.b, "g": spec.g})

    @classmethod
    def from_json(cls, text: str) -> tuple[LatticePath, BoundarySpec]:
        data = json.loads(text)
        return cls(data["steps"]), BoundarySpec(data["a"], data["b"], data["g"])


def require_member(p: LatticePath, spec: BoundarySpec) -> None:
    if not p.is_member(spec):
        raise PathError(
            f"path {p.steps!r} ends at {p.end}, not at {spec.endpoint}; "
            f"it is not in N({spec.g}) for (a, b) = ({spec.a}, {spec.b})"
        )


def spec_of(p: LatticePath, a: int, b: int) -> BoundarySpec:
    """The spec ``(a, b, h)`` under which ``p`` is a member of ``N(h)``."""
    i, j = p.end
    if i == 0 or i % a or j != (i // a) * b:
        raise PathError(f"path {p.steps!r} does not end on a lattice point of slope {b}/{a}")
    return BoundarySpec(a, b, i // a)


def point_at(p: LatticePath, index: int) -> PathPoint:
    if not 0 <= index <= len(p):
        raise IndexError(f"point index {index} out of range for a path of {len(p)} steps")
    prefix = p.steps[:index]
    return PathPoint(prefix.count(EAST), prefix.count(NORTH), index)


def elevation(pt: PathPoint | tuple[int, int], spec: BoundarySpec) -> int:
    i, j = pt[0], pt[1]
    return j * spec.a - i * spec.b


def elevations(p: LatticePath, a: int, b: int) -> list[int]:
    """Elevation of every point of ``p`` w.r.t. slope ``b/a``, in path order."""
    e = 0
    out = [0]
    for step in p.steps:
        e += a if step == NORTH else -b
        out.append(e)
    return out


def count_flaws(p: LatticePath, a: int, b: int) -> int:
    e = flaws = 0
    for step in p.steps:
        if step == NORTH:
            e += a
        else:
            e -= b
        if e > 0:
            flaws += 1
    return flaws


def flaw_points(p: LatticePath, spec: BoundarySpec) -> list[PathPoint]:
    require_member(p, spec)
    pts = p.points()
    return [pt for pt, e in zip(pts, elevations(p, spec.a, spec.b)) if e > 0]


def flaw_count(p: LatticePath, spec: BoundarySpec) -> int:
    require_member(p, spec)
    return count_flaws(p, spec.a, spec.b)


def boundary_points(p: LatticePath, spec: BoundarySpec) -> list[PathPoint]:
    require_member(p, spec)
    pts = p.points()
    return [pt for pt, e in zip(pts, elevations(p, spec.a, spec.b)) if e == 0]


def interior_boundary_points(p: LatticePath, spec: BoundarySpec) -> list[PathPoint]:
    return boundary_points(p, spec)[1:-1]


def nonterminal_boundary_points(p: LatticePath, spec: BoundarySpec) -> list[PathPoint]:
    return boundary_points(p, spec)[:-1]


def below_points(p: LatticePath, spec: BoundarySpec) -> list[PathPoint]:
    require_member(p, spec)
    pts = p.points()
    return [pt for pt, e in zip(pts, elevations(p, spec.a, spec.b)) if e < 0]


def extreme_points(p: LatticePath, a: int, b: int, sign: int) -> tuple[int | None, list[PathPoint]]:
    """Points strictly on one side of the boundary with elevation closest to zero.

    ``sign=-1`` gives the highest points below (HPBs), ``sign=+1`` the lowest
    points above (LPAs).  Returns ``(None, [])`` when no point lies on that side.
    """
    elev = elevations(p, a, b)
    side = [e for e in elev if e * sign > 0]
    if not side:
        return None, []
    best = max(side) if sign < 0 else min(side)
    pts = p.points()
    return best, [pt for pt, e in zip(pts, elev) if e == best]


def hpbs(p: LatticePath, spec: BoundarySpec) -> tuple[int | None, list[PathPoint]]:
    """Highest points below the boundary: ``(shared elevation, points)``."""
    require_member(p, spec)
    return extreme_points(p, spec.a, spec.b, -1)


def lpas(p: LatticePath, spec: BoundarySpec) -> tuple[int | None, list[PathPoint]]:
    """Lowest points above the boundary: ``(shared elevation, points)``."""
    require_member(p, spec)
    return extreme_points(p, spec.a, spec.b, +1)


def concat(p1: LatticePath, p2: LatticePath, *rest: LatticePath) -> LatticePath:
    return LatticePath(p1.steps + p2.steps + "".join(r.steps for r in rest))


def split(p: LatticePath, index: int) -> tuple[LatticePath, LatticePath]:
    if not 0 <= index <= len(p):
        raise IndexError(f"split index {index} out of range for a path of {len(p)} steps")
    return LatticePath(p.steps[:index]), LatticePath(p.steps[index:])


@dataclass(frozen=True)
class SplitDecomposition:
    parts: tuple[LatticePath, ...]
    split_indices: tuple[int, ...]

    def join(self) -> LatticePath:
        return LatticePath("".join(part.steps for part in self.parts))


def split_at(p: LatticePath, *indices: int) -> SplitDecomposition:
    """Cut ``p`` at the given (non-decreasing) step indices."""
    cuts = (0, *indices, len(p))
    if any(x > y for x, y in zip(cuts, cuts[1:])) or not 0 <= min(cuts) <= max(cuts) <= len(p):
        raise IndexError(f"split indices {indices} are not ordered within 0..{len(p)}")
    parts = tuple(LatticePath(p.steps[x:y]) for x, y in zip(cuts, cuts[1:]))
    return SplitDecomposition(parts, tuple(indices))


def rotate180(p: LatticePath) -> LatticePath:
    """Reverse the step order (rotation about the midpoint of the boundary)."""
    return LatticePath(p.steps[::-1])
