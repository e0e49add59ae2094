"""Lattice simplices, barycentric coordinates, and exact volumes.

The central object is :class:`LatticeSimplex`: an ordered tuple of
affinely independent integer vertices.  A simplex may be full-dimensional
(d+1 vertices in Z^d) or embedded (fewer vertices, e.g. a face of a larger
simplex).  Full-dimensional simplices carry exact barycentric machinery:
the affine functionals that evaluate to 1 on one vertex and 0 on the
others.  :class:`RatSimplex` is the rational-vertex analogue, needed for
sections of a simplex through an interior point.

Normalized volume is measured against the lattice induced on the simplex's
own affine hull, so segments, faces, and full bodies all get exact rational
volumes that are invariant under unimodular affine maps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, lcm, prod
from typing import Iterable, Sequence

from .exact import (
    RatMatrix,
    RatVector,
    det_int,
    int_matrix,
    invert_rat,
    rank_rat,
    rat_matrix,
    snf_divisors,
    solve_rat,
)

Vector = tuple[int, ...]


class SimplexParseError(ValueError):
    """A simplex text document failed to parse or validate."""


def _freeze_int_vertices(vertices: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    frozen = []
    for vertex in vertices:
        row = []
        for x in vertex:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"vertex coordinate {x!r} is not an exact integer")
            row.append(x)
        frozen.append(tuple(row))
    return tuple(frozen)


def _validate_shape(vertices: tuple[tuple, ...]) -> None:
    if not vertices:
        raise ValueError("a simplex needs at least one vertex")
    ambient = len(vertices[0])
    if ambient < 1:
        raise ValueError("ambient dimension must be at least 1")
    if any(len(v) != ambient for v in vertices):
        raise ValueError("vertices have unequal coordinate counts")
    if len(vertices) > ambient + 1:
        raise ValueError("too many vertices for the ambient dimension")
    if len(set(vertices)) != len(vertices):
        raise ValueError("vertices are not distinct")
    edges = [[x - vertices[0][c] for c, x in enumerate(v)] for v in vertices[1:]]
    if edges and rank_rat(edges) != len(edges):
        raise ValueError("vertices are affinely dependent")


@dataclass(frozen=True)
class LatticeSimplex:
    """An ordered simplex with integer vertices, possibly embedded in Z^d."""

    vertices: tuple[Vector, ...]

    def __init__(self, vertices: Iterable[Sequence[int]]):
        frozen = _freeze_int_vertices(vertices)
        _validate_shape(frozen)
        object.__setattr__(self, "vertices", frozen)

    @property
    def dim(self) -> int:
        """Intrinsic dimension: one less than the vertex count."""
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def hull_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Columns are the vertices, bottom row is all ones (full-dim only)."""
        self._require_full()
        d = self.dim
        rows = [tuple(v[r] for v in self.vertices) for r in range(d)]
        rows.append(tuple(1 for _ in self.vertices))
        return tuple(rows)

    @cached_property
    def _hull_inverse(self) -> RatMatrix:
        return invert_rat(self.hull_matrix)

    @cached_property
    def functional_rows(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Integer forms of the barycentric functionals, for fast scans.

        Row i is (coeffs, const) with coeffs . x + const == bary_i(x) * D
        for a fixed positive integer D (the absolute hull determinant), so
        sign tests on lattice points never touch Fractions.
        """
        absdet = abs(det_int(self.hull_matrix))
        rows = []
        for inv_row in self._hull_inverse:
            scaled = [x * absdet for x in inv_row]
            ints = [int(x) for x in scaled]
            if any(a != b for a, b in zip(ints, scaled)):
                raise AssertionError("adjugate rows must be integral")
            rows.append((tuple(ints[:-1]), ints[-1]))
        return tuple(rows)

    def _require_full(self) -> None:
        if not self.is_full_dimensional:
            raise ValueError(
                f"operation needs a full-dimensional simplex, got a "
                f"{self.dim}-simplex in Z^{self.ambient_dim}"
            )


@dataclass(frozen=True)
class RatSimplex:
    """An ordered simplex with rational vertices."""

    vertices: tuple[RatVector, ...]

    def __init__(self, vertices: Iterable[Sequence[Fraction | int]]):
        frozen = tuple(tuple(Fraction(x) for x in v) for v in vertices)
        _validate_shape(frozen)
        object.__setattr__(self, "vertices", frozen)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])


def barycentric_of(simplex: LatticeSimplex, point: Sequence[Fraction | int]) -> RatVector:
    """Exact barycentric coordinates of a rational point.

    The returned tuple pairs with the simplex's vertex order and sums to
    exactly 1.  Requires a full-dimensional simplex.
    """
    simplex._require_full()
    if len(point) != simplex.ambient_dim:
        raise ValueError("point dimension does not match the simplex")
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    coords = tuple(
        sum(c * y for c, y in zip(row, rhs)) for row in simplex._hull_inverse
    )
    assert sum(coords) == 1
    return coords


def affine_coordinates(
    simplex: LatticeSimplex | RatSimplex, point: Sequence[Fraction | int]
) -> RatVector | None:
    """Barycentric coordinates within the simplex's own affine hull.

    Works for embedded simplices by solving the (overdetermined) system of
    vertex columns plus the all-ones row.  Returns None when the point lies
    outside the affine hull.
    """
    if len(point) != simplex.ambient_dim:
        raise ValueError("point dimension does not match the simplex")
    columns = [list(v) + [1] for v in simplex.vertices]
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    return solve_rat(list(zip(*columns)), rhs)


def check_barycentric(coords: Sequence[Fraction | int]) -> RatVector:
    """Validate a positive barycentric vector (sums to 1, dimension >= 1)."""
    frozen = tuple(Fraction(x) for x in coords)
    if len(frozen) < 2:
        raise ValueError("need at least two barycentric coordinates")
    if sum(frozen) != 1:
        raise ValueError("barycentric coordinates must sum to exactly 1")
    if any(x <= 0 for x in frozen):
        raise ValueError("barycentric coordinates must all be positive")
    return frozen


def _complement(count: int, omitted: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dropped = sorted(set(omitted))
    if any(i < 0 or i >= count for i in dropped):
        raise ValueError(f"vertex indexes must lie in [0, {count})")
    kept = tuple(i for i in range(count) if i not in set(dropped))
    if not kept:
        raise ValueError("at least one vertex must remain")
    return tuple(dropped), kept


def face_of(simplex: LatticeSimplex, omitted: Iterable[int]) -> LatticeSimplex:
    """The face spanned by all vertices except the omitted ones."""
    _, kept = _complement(len(simplex.vertices), omitted)
    return LatticeSimplex(tuple(simplex.vertices[j] for j in kept))


def normalized_volume(simplex: LatticeSimplex | RatSimplex) -> Fraction:
    """Volume against the lattice induced on the simplex's affine hull.

    For an integer k-simplex this is the product of the Smith normal form
    divisors of its edge matrix divided by k!.  Rational vertices are
    scaled to a common denominator first and the scale divided back out.
    A single vertex has volume 1 by convention.
    """
    k = simplex.dim
    if k == 0:
        return Fraction(1)
    base = simplex.vertices[0]
    edges = [tuple(x - b for x, b in zip(v, base)) for v in simplex.vertices[1:]]
    scale = lcm(*(Fraction(x).denominator for row in edges for x in row))
    scaled = [[int(x * scale) for x in row] for row in edges]
    divisors = snf_divisors(scaled)
    assert len(divisors) == k
    return Fraction(prod(divisors), factorial(k)) / scale**k


def section_simplex(
    simplex: LatticeSimplex, coords: Sequence[Fraction | int], omitted: Iterable[int]
) -> RatSimplex:
    """Slice through an interior point, parallel to the face keeping ``kept``.

    ``coords`` are the barycentric coordinates of an interior point.  The
    section pins the omitted barycentric functionals at their values on
    that point; its vertices are one affine step from each kept vertex:

        sum(coords[i] * p_i for omitted i) + (sum of kept coords) * p_j
    """
    bary = check_barycentric(coords)
    if len(bary) != len(simplex.vertices):
        raise ValueError("barycentric length does not match the vertex count")
    dropped, kept = _complement(len(simplex.vertices), omitted)
    kept_weight = sum(bary[j] for j in kept)
    offset = [Fraction(0)] * simplex.ambient_dim
    for i in dropped:
        for c, x in enumerate(simplex.vertices[i]):
            offset[c] += bary[i] * x
    vertices = [
        tuple(off + kept_weight * x for off, x in zip(offset, simplex.vertices[j]))
        for j in kept
    ]
    return RatSimplex(vertices)


def translate(simplex: LatticeSimplex, shift: Sequence[int]) -> LatticeSimplex:
    if len(shift) != simplex.ambient_dim:
        raise ValueError("shift dimension does not match")
    return LatticeSimplex(
        tuple(tuple(x + s for x, s in zip(v, shift)) for v in simplex.vertices)
    )


def linear_image(simplex: LatticeSimplex, matrix: Sequence[Sequence[int]]) -> LatticeSimplex:
    """Apply an integer linear map (rows act on column vectors)."""
    m = int_matrix(matrix)
    return LatticeSimplex(
        tuple(tuple(sum(c * x for c, x in zip(row, v)) for row in m) for v in simplex.vertices)
    )


class _Inexact:
    """Marker for any non-integer numeric literal met while parsing."""

    def __init__(self, literal: str):
        self.literal = literal


def parse_simplex_text(text: str) -> LatticeSimplex:
    """Parse the simplex exchange format.

    The document is a JSON object with fields ``dim`` (an integer) and
    ``vertices`` (a list of dim+1 integer vectors of length dim, order
    preserved).  Any fractional coordinate is a parse error.
    """
    try:
        doc = json.loads(text, parse_float=_Inexact)
    except json.JSONDecodeError as err:
        raise SimplexParseError(
            f"invalid document at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    if not isinstance(doc, dict):
        raise SimplexParseError("top level must be an object with dim and vertices")
    for field in ("dim", "vertices"):
        if field not in doc:
            raise SimplexParseError(f"missing field {field!r}")
    unknown = sorted(set(doc) - {"dim", "vertices"})
    if unknown:
        raise SimplexParseError(f"unknown field {unknown[0]!r}")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise SimplexParseError("field 'dim': expected an integer")
    if dim < 1:
        raise SimplexParseError("field 'dim': must be at least 1")
    vertices = doc["vertices"]
    if not isinstance(vertices, list):
        raise SimplexParseError("field 'vertices': expected a list")
    if len(vertices) != dim + 1:
        raise SimplexParseError(
            f"field 'vertices': expected {dim + 1} vertices, got {len(vertices)}"
        )
    frozen = []
    for i, vertex in enumerate(vertices):
        if not isinstance(vertex, list) or len(vertex) != dim:
            raise SimplexParseError(
                f"field 'vertices[{i}]': expected a vector of length {dim}"
            )
        row = []
        for j, x in enumerate(vertex):
            if isinstance(x, _Inexact):
                raise SimplexParseError(
                    f"field 'vertices[{i}][{j}]': fractional coordinate {x.literal}"
                )
            if isinstance(x, bool) or not isinstance(x, int):
                raise SimplexParseError(
                    f"field 'vertices[{i}][{j}]': expected an integer, got {x!r}"
                )
            row.append(x)
        frozen.append(tuple(row))
    return LatticeSimplex(tuple(frozen))


def simplex_to_text(simplex: LatticeSimplex) -> str:
    """Serialize to the exchange format (see :func:`parse_simplex_text`)."""
    simplex._require_full()
    doc = {"dim": simplex.dim, "vertices": [list(v) for v in simplex.vertices]}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
