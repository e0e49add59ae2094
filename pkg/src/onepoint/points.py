"""Lattice point classification, enumeration, and counting.

Single points are classified through exact rational barycentric
coordinates.  Bulk enumeration works on the integer forms of the same
functionals: each barycentric functional times the positive hull
determinant has integer coefficients, so sign conditions on lattice points
become pure integer comparisons.  Scans walk the vertex bounding box one
axis short and solve the remaining axis as an integer interval, which keeps
even million-point boxes cheap.

Every scan is guarded by a candidate cap: when the bounding box holds more
candidates than the cap allows, the scan refuses up front instead of
grinding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .simplex import LatticeSimplex, barycentric_of, normalized_volume

Vector = tuple[int, ...]

DEFAULT_CAP = 10**8


class EnumerationCapError(RuntimeError):
    """A bounding-box scan would exceed the configured candidate cap."""

    def __init__(self, cap: int, required: int):
        super().__init__(
            f"bounding box holds {required} candidate points, "
            f"above the enumeration cap of {cap}"
        )
        self.cap = cap
        self.required = required


@dataclass(frozen=True)
class PointClass:
    """Classification of a point against a full-dimensional simplex.

    ``kind`` is one of "interior", "boundary", "outside".  For boundary
    points ``minimal_face`` lists the vertex indexes whose barycentric
    coordinate vanishes: the inclusion-minimal face containing the point
    keeps exactly the other vertices.
    """

    kind: str
    minimal_face: tuple[int, ...] | None = None


@dataclass(frozen=True)
class InteriorCensus:
    """All interior lattice points, in lexicographic order."""

    points: tuple[Vector, ...]
    scanned_box: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BlichfeldtCheck:
    dim: int
    volume: Fraction
    count: int
    slack: Fraction
    passed: bool


def classify_point(simplex: LatticeSimplex, point: Sequence[Fraction | int]) -> PointClass:
    """Classify a rational point by the signs of its barycentric coordinates."""
    coords = barycentric_of(simplex, point)
    if any(x < 0 for x in coords):
        return PointClass("outside")
    zeros = tuple(i for i, x in enumerate(coords) if x == 0)
    if zeros:
        return PointClass("boundary", zeros)
    return PointClass("interior")


def _vertex_box(vertices: Sequence[Vector]) -> tuple[tuple[int, int], ...]:
    return tuple(
        (min(v[c] for v in vertices), max(v[c] for v in vertices))
        for c in range(len(vertices[0]))
    )


def _box_candidates(box: Sequence[tuple[int, int]]) -> int:
    total = 1
    for lo, hi in box:
        total *= hi - lo + 1
    return total


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scan(
    simplex: LatticeSimplex,
    box: tuple[tuple[int, int], ...],
    zero_rows: frozenset[int],
    strict: bool,
    cap: int,
    collect: bool,
) -> int | list[Vector]:
    """Count or collect lattice points meeting barycentric sign conditions.

    Rows in ``zero_rows`` must vanish; all other rows must be positive when
    ``strict`` else nonnegative.  The longest box axis is solved as an
    integer interval, the rest are walked directly.
    """
    required = _box_candidates(box)
    if required > cap:
        raise EnumerationCapError(cap, required)
    rows = simplex.functional_rows
    d = simplex.ambient_dim
    scan_axis = max(range(d), key=lambda a: box[a][1] - box[a][0])
    prefix_axes = [a for a in range(d) if a != scan_axis]
    # (scan coefficient, prefix coefficients, adjusted constant) per row;
    # strict "value > 0" on integers is "value - 1 >= 0"
    prepared = []
    for idx, (coeffs, const) in enumerate(rows):
        if idx in zero_rows:
            mode = "eq"
            offset = const
        else:
            mode = "ge"
            offset = const - 1 if strict else const
        prepared.append((mode, coeffs[scan_axis], [coeffs[a] for a in prefix_axes], offset))
    scan_lo, scan_hi = box[scan_axis]
    found: list[Vector] = []
    count = 0
    ranges = [range(box[a][0], box[a][1] + 1) for a in prefix_axes]
    for prefix in itertools.product(*ranges):
        lo, hi = scan_lo, scan_hi
        alive = True
        for mode, c, pcoeffs, offset in prepared:
            base = offset + sum(p * x for p, x in zip(pcoeffs, prefix))
            if mode == "eq":
                if c == 0:
                    if base != 0:
                        alive = False
                        break
                else:
                    q, r = divmod(-base, c)
                    if r:
                        alive = False
                        break
                    lo = max(lo, q)
                    hi = min(hi, q)
            elif c > 0:
                lo = max(lo, _ceil_div(-base, c))
            elif c < 0:
                hi = min(hi, (-base) // c)
            elif base < 0:
                alive = False
                break
            if lo > hi:
                alive = False
                break
        if not alive:
            continue
        if collect:
            for t in range(lo, hi + 1):
                point = [0] * d
                for a, val in zip(prefix_axes, prefix):
                    point[a] = val
                point[scan_axis] = t
                found.append(tuple(point))
        else:
            count += hi - lo + 1
    if collect:
        found.sort()
        return found
    return count


@lru_cache(maxsize=None)
def enumerate_interior(simplex: LatticeSimplex, cap: int = DEFAULT_CAP) -> InteriorCensus:
    """Enumerate every interior lattice point of a full-dimensional simplex.

    Scans the componentwise vertex bounding box, refusing with
    :class:`EnumerationCapError` when the box holds more candidates than
    ``cap``.  Points come back in lexicographic order.
    """
    simplex._require_full()
    box = _vertex_box(simplex.vertices)
    points = _scan(simplex, box, frozenset(), strict=True, cap=cap, collect=True)
    return InteriorCensus(tuple(points), box)


@lru_cache(maxsize=None)
def _count_face_points(simplex: LatticeSimplex, omitted: frozenset[int], cap: int) -> int:
    kept = [j for j in range(len(simplex.vertices)) if j not in omitted]
    if not kept:
        raise ValueError("at least one vertex must remain on the face")
    box = _vertex_box([simplex.vertices[j] for j in kept])
    return _scan(simplex, box, omitted, strict=False, cap=cap, collect=False)


def count_face_points(
    simplex: LatticeSimplex, omitted: Iterable[int] = (), cap: int = DEFAULT_CAP
) -> int:
    """Count lattice points on the closed face omitting the given vertexes.

    With no omissions this is the full closure count.  The scan covers the
    face's own vertex bounding box and tests the omitted barycentric
    functionals for zero, the rest for nonnegativity.
    """
    simplex._require_full()
    dropped = frozenset(omitted)
    if any(i < 0 or i >= len(simplex.vertices) for i in dropped):
        raise ValueError("face indexes out of range")
    return _count_face_points(simplex, dropped, cap)


def is_onepoint(simplex: LatticeSimplex, cap: int = DEFAULT_CAP) -> Vector | None:
    """The unique interior lattice point, or None if there is not exactly one."""
    census = enumerate_interior(simplex, cap)
    if len(census.points) == 1:
        return census.points[0]
    return None


def blichfeldt_check(simplex: LatticeSimplex, count: int) -> BlichfeldtCheck:
    """Check the lattice point bound count <= dim + dim! * volume.

    ``count`` is the simplex's number of lattice points, supplied by the
    caller (see :func:`count_face_points`).  Uses the intrinsic dimension,
    so embedded faces are measured within their own affine hulls.  The
    slack is a nonnegative integer whenever the bound holds.
    """
    if count < simplex.dim + 1:
        raise ValueError("a simplex has at least dim + 1 lattice points")
    volume = normalized_volume(simplex)
    slack = simplex.dim + factorial(simplex.dim) * volume - count
    return BlichfeldtCheck(simplex.dim, volume, count, slack, slack >= 0)


__all__ = [
    "DEFAULT_CAP",
    "BlichfeldtCheck",
    "EnumerationCapError",
    "InteriorCensus",
    "PointClass",
    "blichfeldt_check",
    "classify_point",
    "count_face_points",
    "enumerate_interior",
    "is_onepoint",
]
