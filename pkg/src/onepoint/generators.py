"""Extremal families, canonical forms, and the planar atlas.

The doubly exponential growth in this package is witnessed, not just
bounded: the Zaks-Perles-Wills simplices built from the Sylvester
sequence realize volumes within striking distance of the upper bounds.
This module constructs them, the two centrally placed families that make
the coordinate lower bound tight, a canonical form for planar triangles
under unimodular affine maps, and a complete atlas of the planar
one-point triangles up to that equivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .bounds import (
    chain_decompose,
    check_all_partitions,
    coordinate_lower_bounds,
    interior_coordinates,
)
from .exact import IntMatrix, col_hnf, det_int, ext_gcd, mat_vec, transpose
from .points import DEFAULT_CAP, count_face_points, enumerate_interior
from .simplex import LatticeSimplex, normalized_volume

Vector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# the Sylvester sequence 2, 3, 7, 43, ...


@dataclass(frozen=True)
class SylvesterSequence:
    """Leading terms, 1-indexed in the classical numbering: terms[k] = t_{k+1}."""

    terms: tuple[int, ...]


def sylvester(count: int) -> SylvesterSequence:
    """First ``count`` terms of t_1 = 2, t_{k+1} = t_k^2 - t_k + 1.

    Construction re-checks the identities everything downstream leans on:
    each term is one more than the product of all earlier terms, the terms
    are sandwiched as 2^(2^(k-2)) <= t_k <= 2^(2^(k-1)) (lower bound tested
    squared to stay in integers), and the reciprocals complete to a unit
    fraction via 1/(t_{count+1} - 1).
    """
    if count < 1:
        raise ValueError("at least one term is required")
    terms = [2]
    while len(terms) <= count:
        terms.append(terms[-1] * (terms[-1] - 1) + 1)
    product = 1
    for k, term in enumerate(terms, start=1):
        if term != product + 1:
            raise AssertionError(f"term {k} breaks the product identity")
        product *= term
        if term > 2 ** (2 ** (k - 1)) or term**2 < 2 ** (2 ** (k - 1)):
            raise AssertionError(f"term {k} escapes its doubly exponential bracket")
    if sum(Fraction(1, t) for t in terms[:count]) + Fraction(1, terms[count] - 1) != 1:
        raise AssertionError("reciprocals do not complete to a unit fraction")
    return SylvesterSequence(tuple(terms[:count]))


# ---------------------------------------------------------------------------
# extremal families


def zpw_simplex(dim: int, verify: bool = True, cap: int = DEFAULT_CAP) -> LatticeSimplex:
    """The Zaks-Perles-Wills simplex: conv{0, t_1 e_1, ..., t_d e_d}.

    Its unique interior lattice point is the all-ones vector, and its
    volume grows doubly exponentially with the dimension.  With ``verify``
    the interior census is enumerated and checked; from dimension 6 on the
    census blows past any practical cap, so callers wanting the raw
    simplex pass ``verify=False``.
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    terms = sylvester(dim).terms
    vertices = [(0,) * dim]
    for i, t in enumerate(terms):
        vertices.append(tuple(t if c == i else 0 for c in range(dim)))
    simplex = LatticeSimplex(tuple(vertices))
    if verify:
        census = enumerate_interior(simplex, cap)
        if census.points != ((1,) * dim,):
            raise AssertionError(f"interior census {census.points} is not the all-ones point")
    return simplex


def canonical_examples(
    dim: int, verify: bool = True, cap: int = DEFAULT_CAP
) -> tuple[LatticeSimplex, LatticeSimplex]:
    """The two families whose interior point sits at the centroid.

    Returns the dilated standard simplex conv{0, (d+1)e_1, ..., (d+1)e_d}
    and the reflected simplex conv{-(1,...,1), e_1, ..., e_d}.  Both have
    exactly one interior lattice point with all barycentric coordinates
    equal to 1/(d+1), which makes the coordinate lower bound tight at the
    leading position.
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    scaled = [(0,) * dim]
    for i in range(dim):
        scaled.append(tuple(dim + 1 if c == i else 0 for c in range(dim)))
    dilated = LatticeSimplex(tuple(scaled))
    mirrored = [(-1,) * dim]
    for i in range(dim):
        mirrored.append(tuple(1 if c == i else 0 for c in range(dim)))
    reflected = LatticeSimplex(tuple(mirrored))
    if verify:
        for simplex, inner in ((dilated, (1,) * dim), (reflected, (0,) * dim)):
            census = enumerate_interior(simplex, cap)
            if census.points != (inner,):
                raise AssertionError(f"interior census {census.points} is not {{{inner}}}")
            _, bary = interior_coordinates(simplex, cap)
            if any(b != Fraction(1, dim + 1) for b in bary):
                raise AssertionError("interior point is not the centroid")
    return dilated, reflected


# ---------------------------------------------------------------------------
# canonical form for planar triangles


@dataclass(frozen=True)
class CanonicalForm:
    """A canonical representative plus the map that reaches it.

    ``simplex`` is the representative; ``linear`` and ``offset`` describe
    the unimodular affine map x -> linear @ x + offset carrying the input
    onto it (up to vertex order).
    """

    simplex: LatticeSimplex
    linear: IntMatrix
    offset: Vector


def _canonical_at(vertices: tuple[Vector, ...], anchor: Vector) -> tuple[
    tuple[Vector, ...], IntMatrix, Vector
]:
    # minimize the column-style Hermite form of the anchored vertex rows
    # over all vertex orders; column operations are coordinate changes
    translated = tuple(
        tuple(v[c] - anchor[c] for c in range(len(anchor))) for v in vertices
    )
    best = None
    for perm in itertools.permutations(range(len(vertices))):
        rows = tuple(translated[p] for p in perm)
        h, v = col_hnf(rows)
        if best is None or h < best[0]:
            best = (h, v)
    assert best is not None
    h, v = best
    linear = transpose(v)
    offset = tuple(-x for x in mat_vec(linear, anchor))
    if abs(det_int(linear)) != 1:
        raise AssertionError("canonicalizing map is not unimodular")
    mapped = sorted(tuple(a + b for a, b in zip(mat_vec(linear, w), offset)) for w in vertices)
    if mapped != sorted(h):
        raise AssertionError("canonicalizing map does not reproduce the form")
    return h, linear, offset


def normal_form_2d(simplex: LatticeSimplex, cap: int = DEFAULT_CAP) -> CanonicalForm:
    """Canonical representative of a planar simplex under lattice symmetry.

    Two triangles related by a unimodular linear map plus an integer
    translation get the same form.  The lexicographically smallest
    interior lattice point is moved to the origin first, so for the
    one-point family the form is a complete invariant of the equivalence
    class.
    """
    if simplex.dim != 2 or not simplex.is_full_dimensional:
        raise ValueError("only full-dimensional planar simplices have a normal form here")
    census = enumerate_interior(simplex, cap)
    if not census.points:
        raise ValueError("simplex has no interior lattice point to anchor at")
    form, linear, offset = _canonical_at(simplex.vertices, census.points[0])
    return CanonicalForm(LatticeSimplex(form), linear, offset)


# ---------------------------------------------------------------------------
# the planar atlas


@dataclass(frozen=True)
class AtlasClass:
    form: LatticeSimplex
    volume: Fraction
    point_count: int
    coordinates: RatVector
    min_slack: Fraction


@dataclass(frozen=True)
class Atlas2D:
    radius: int
    classes: tuple[AtlasClass, ...]
    max_volume: Fraction
    max_point_count: int


def _points_on_line(v: Vector, target: int, radius: int) -> Iterator[Vector]:
    # integer points w in the radius box with det(v, w) = target
    a, b = v
    g, s, t = ext_gcd(-b, a)
    if target % g:
        return
    x, y = s * (target // g), t * (target // g)
    dx, dy = a // g, b // g
    lo: int | None = None
    hi: int | None = None
    for base, step in ((x, dx), (y, dy)):
        if step > 0:
            first, last = -((radius + base) // step), (radius - base) // step
        elif step < 0:
            first, last = -((radius - base) // -step), (radius + base) // -step
        elif abs(base) > radius:
            return
        else:
            continue
        lo = first if lo is None else max(lo, first)
        hi = last if hi is None else min(hi, last)
    if lo is None or hi is None:
        return
    for k in range(lo, hi + 1):
        yield (x + k * dx, y + k * dy)


def onepoint_triangle_atlas(box_radius: int = 30, cap: int = DEFAULT_CAP) -> Atlas2D:
    """Every planar one-point triangle up to lattice symmetry, verified.

    Sweeps triangles (v0, v1, v2) with vertices in the given box, the
    origin strictly inside, and v0 the lexicographically smallest vertex.
    Writing the pairwise determinants of consecutive vertices as positive
    integers, their sum is the doubled area, which for a single interior
    point cannot exceed 27; the sweep runs over all splits of that budget.
    A doubled-area-equals-boundary-count filter keeps exactly the
    one-interior-point triangles, each surviving triangle is folded into
    its canonical form, and every class is then re-verified from scratch:
    interior census of size one, all partition inequalities, coordinate
    lower bounds, and the chain bounds.
    """
    if box_radius < 9:
        raise ValueError("a box radius below 9 cannot reach every class")
    r = box_radius
    forms: set[tuple[Vector, ...]] = set()
    candidates = [
        (x, y) for x in range(-r, r + 1) for y in range(-r, r + 1) if (x, y) != (0, 0)
    ]
    for v0 in candidates:
        ax, ay = v0
        for d2 in range(1, 26):
            budget = 27 - d2
            for v1 in _points_on_line(v0, d2, r):
                if v1 <= v0:
                    continue
                bx, by = v1
                edge01 = gcd(bx - ax, by - ay)
                bound = r * d2
                for u in range(1, budget):
                    px, py = u * ax, u * ay
                    lo, hi = 1, budget - u
                    # clamp t so v2 = -(u v0 + t v1)/d2 stays inside the box
                    for pc, vc in ((px, bx), (py, by)):
                        if vc > 0:
                            lo = max(lo, -((bound + pc) // vc))
                            hi = min(hi, (bound - pc) // vc)
                        elif vc < 0:
                            lo = max(lo, -((bound - pc) // -vc))
                            hi = min(hi, (bound + pc) // -vc)
                        elif abs(pc) > bound:
                            lo = hi + 1
                    for t in range(lo, hi + 1):
                        nx, ny = -(px + t * bx), -(py + t * by)
                        if nx % d2 or ny % d2:
                            continue
                        v2 = (nx // d2, ny // d2)
                        if v2 <= v0:
                            continue
                        cx, cy = v2
                        boundary = (
                            edge01 + gcd(cx - bx, cy - by) + gcd(ax - cx, ay - cy)
                        )
                        if u + t + d2 != boundary:
                            continue
                        form, _, _ = _canonical_at((v0, v1, v2), (0, 0))
                        forms.add(form)
    classes = []
    for form in forms:
        member = LatticeSimplex(form)
        census = enumerate_interior(member, cap)
        if census.points != ((0, 0),):
            raise AssertionError(f"class {form} fails the census: {census.points}")
        _, bary = interior_coordinates(member, cap)
        report = check_all_partitions(bary)
        if not (
            report.passed
            and coordinate_lower_bounds(member, cap).passed
            and chain_decompose(member, cap).passed
        ):
            raise AssertionError(f"class {form} violates a bound it must satisfy")
        classes.append(
            AtlasClass(
                member,
                normalized_volume(member),
                count_face_points(member, (), cap),
                tuple(sorted(bary, reverse=True)),
                report.min_slack,
            )
        )
    classes.sort(key=lambda c: (c.volume, c.point_count, c.form.vertices))
    return Atlas2D(
        box_radius,
        tuple(classes),
        max(c.volume for c in classes),
        max(c.point_count for c in classes),
    )
