"""Inequality systems and volume bounds around a single interior point.

The heart of the package: for a full-dimensional lattice simplex whose
interior holds exactly one lattice point, the barycentric coordinates of
that point obey, for every split of the vertex indexes into two nonempty
sides, the inequality

    sum of coordinates on one side  >=  product of coordinates on the other.

Everything else here builds on that: the reduced system on sorted
coordinates, the equivalent determinant form, lower bounds on the sorted
coordinates, bounds along the chain of faces spanned by the heaviest
vertices, face volume bounds from coordinate products, the exact volume law
for parallel sections, and corpus-level extremal summaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial, floor, prod
from typing import Iterable, Sequence

from .exact import RatMatrix, det_rat, rat_matrix
from .points import DEFAULT_CAP, EnumerationCapError, count_face_points, enumerate_interior
from .simplex import (
    LatticeSimplex,
    barycentric_of,
    check_barycentric,
    face_of,
    normalized_volume,
    section_simplex,
)

Vector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# partitions of the vertex index set


@dataclass(frozen=True)
class PartitionRecord:
    """One partition check: sum side, product side, values, slack."""

    sum_side: tuple[int, ...]
    product_side: tuple[int, ...]
    sum_value: Fraction
    product_value: Fraction
    slack: Fraction


@dataclass(frozen=True)
class InequalityReport:
    records: tuple[PartitionRecord, ...]
    passed: bool
    min_slack: Fraction
    worst: PartitionRecord


def _split(count: int, sum_side: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left = tuple(sorted(set(sum_side)))
    if any(i < 0 or i >= count for i in left):
        raise ValueError(f"partition indexes must lie in [0, {count})")
    right = tuple(i for i in range(count) if i not in set(left))
    if not left or not right:
        raise ValueError("both partition sides must be nonempty")
    return left, right


def partition_slack(coords: Sequence[Fraction | int], sum_side: Iterable[int]) -> Fraction:
    """Sum over one side minus product over the other; negative means violated."""
    bary = check_barycentric(coords)
    left, right = _split(len(bary), sum_side)
    return sum(bary[i] for i in left) - prod((bary[j] for j in right), start=Fraction(1))


def check_all_partitions(coords: Sequence[Fraction | int]) -> InequalityReport:
    """Evaluate every proper two-sided partition, in sum-side bitmask order."""
    bary = check_barycentric(coords)
    n = len(bary)
    records = []
    for mask in range(1, 2**n - 1):
        left = tuple(i for i in range(n) if mask >> i & 1)
        right = tuple(i for i in range(n) if not mask >> i & 1)
        sum_value = sum(bary[i] for i in left)
        product_value = prod((bary[j] for j in right), start=Fraction(1))
        records.append(
            PartitionRecord(left, right, sum_value, product_value, sum_value - product_value)
        )
    worst = min(records, key=lambda r: r.slack)
    return InequalityReport(tuple(records), worst.slack >= 0, worst.slack, worst)


@dataclass(frozen=True)
class SortedBarycentrics:
    """Coordinates in descending order plus the original indexes.

    ``order[k]`` is the original index of the k-th largest coordinate;
    ties keep their original relative order.
    """

    coords: RatVector
    order: tuple[int, ...]


def sort_barycentric(coords: Sequence[Fraction | int]) -> SortedBarycentrics:
    bary = check_barycentric(coords)
    order = tuple(sorted(range(len(bary)), key=lambda i: (-bary[i], i)))
    return SortedBarycentrics(tuple(bary[i] for i in order), order)


def reduced_system(sorted_coords: SortedBarycentrics) -> tuple[Fraction, ...]:
    """Slacks of the surviving inequalities after sorting.

    On descending coordinates only the splits into a leading block and its
    tail matter; entry j is the slack of tail-sum minus leading-product for
    the block ending at j.  All entries nonnegative is equivalent to the
    full partition system passing.
    """
    coords = sorted_coords.coords
    if any(a < b for a, b in zip(coords, coords[1:])):
        raise ValueError("coordinates must be sorted in descending order")
    d = len(coords) - 1
    slacks = []
    running = Fraction(1)
    tail = sum(coords)
    for j in range(d):
        running *= coords[j]
        tail -= coords[j]
        slacks.append(tail - running)
    return tuple(slacks)


def partition_matrix(coords: Sequence[Fraction | int], sum_side: Iterable[int]) -> RatMatrix:
    """The system matrix attached to a partition.

    For a product side of size t this is (t+1) x (t+1): reciprocal
    coordinates on the diagonal, -1 down the last column and across the
    last row, and 1 in the corner.  Its determinant equals the sum/product
    ratio of the partition, which is the bridge between the inequality and
    the constructive second-point certificate.
    """
    bary = check_barycentric(coords)
    _, right = _split(len(bary), sum_side)
    t = len(right)
    rows = []
    for k, j in enumerate(right):
        row = [Fraction(0)] * (t + 1)
        row[k] = 1 / bary[j]
        row[t] = Fraction(-1)
        rows.append(row)
    rows.append([Fraction(-1)] * t + [Fraction(1)])
    return rat_matrix(rows)


def partition_ratio(coords: Sequence[Fraction | int], sum_side: Iterable[int]) -> Fraction:
    """Sum/product ratio of a partition; the inequality holds iff >= 1.

    Computed by the closed formula and cross-checked, every call, against
    the exact determinant of :func:`partition_matrix`.
    """
    bary = check_barycentric(coords)
    left, right = _split(len(bary), sum_side)
    ratio = sum(bary[i] for i in left) / prod((bary[j] for j in right), start=Fraction(1))
    explicit = det_rat(partition_matrix(bary, left))
    if ratio != explicit:
        raise AssertionError(
            f"ratio formula {ratio} disagrees with the system determinant {explicit}"
        )
    return ratio


# ---------------------------------------------------------------------------
# membership helpers


def unique_interior_point(simplex: LatticeSimplex, cap: int = DEFAULT_CAP) -> Vector:
    census = enumerate_interior(simplex, cap)
    if len(census.points) != 1:
        raise ValueError(
            f"simplex has {len(census.points)} interior lattice points, expected exactly 1"
        )
    return census.points[0]


def interior_coordinates(
    simplex: LatticeSimplex, cap: int = DEFAULT_CAP
) -> tuple[Vector, RatVector]:
    """The unique interior lattice point and its barycentric coordinates."""
    point = unique_interior_point(simplex, cap)
    return point, barycentric_of(simplex, point)


# ---------------------------------------------------------------------------
# lower bounds on sorted coordinates


@dataclass(frozen=True)
class LowerBoundEntry:
    position: int
    value: Fraction
    bound: Fraction
    tight: bool
    ok: bool


@dataclass(frozen=True)
class LowerBoundReport:
    entries: tuple[LowerBoundEntry, ...]
    recursion_slacks: tuple[Fraction, ...]
    order: tuple[int, ...]
    passed: bool


def coordinate_lower_bounds(
    simplex: LatticeSimplex, cap: int = DEFAULT_CAP
) -> LowerBoundReport:
    """Doubly exponential lower bounds on the sorted coordinates.

    For a one-point simplex of dimension d the k-th largest barycentric
    coordinate of the interior point is at least (d+1)^(-2^k).  Also checks
    the relaxed recursion (d+1) * coords[k+1] >= prod(coords[:k+1]) that
    drives the bound.
    """
    _, bary = interior_coordinates(simplex, cap)
    sorted_coords = sort_barycentric(bary)
    d = simplex.dim
    entries = []
    for k, value in enumerate(sorted_coords.coords):
        bound = Fraction(1, (d + 1) ** (2**k))
        entries.append(LowerBoundEntry(k, value, bound, value == bound, value >= bound))
    slacks = []
    running = Fraction(1)
    for k in range(d):
        running *= sorted_coords.coords[k]
        slacks.append((d + 1) * sorted_coords.coords[k + 1] - running)
    passed = all(e.ok for e in entries) and all(s >= 0 for s in slacks)
    return LowerBoundReport(tuple(entries), tuple(slacks), sorted_coords.order, passed)


# ---------------------------------------------------------------------------
# the chain of heaviest faces


@dataclass(frozen=True)
class ChainLevel:
    level: int
    omitted: tuple[int, ...]
    volume: Fraction
    volume_bound: Fraction
    count: int
    count_bound: int
    ok: bool


@dataclass(frozen=True)
class ChainReport:
    levels: tuple[ChainLevel, ...]
    order: tuple[int, ...]
    passed: bool


def chain_decompose(simplex: LatticeSimplex, cap: int = DEFAULT_CAP) -> ChainReport:
    """Bound the faces spanned by the vertices with the largest coordinates.

    Level i keeps the i+1 heaviest vertices (by the interior point's
    barycentric coordinates, descending).  Both the normalized volume and
    the lattice point count of that face are bounded doubly exponentially
    in i, uniformly over the whole one-point family of dimension d.
    """
    _, bary = interior_coordinates(simplex, cap)
    sorted_coords = sort_barycentric(bary)
    d = simplex.dim
    levels = []
    for i in range(1, d + 1):
        omitted = tuple(sorted(sorted_coords.order[i + 1 :]))
        face = face_of(simplex, omitted)
        volume = normalized_volume(face)
        volume_bound = Fraction((d + 1) ** (2**i - 1), factorial(i))
        count = count_face_points(simplex, omitted, cap)
        count_bound = i + (d + 1) ** (2**i - 1)
        ok = volume <= volume_bound and count <= count_bound
        levels.append(ChainLevel(i, omitted, volume, volume_bound, count, count_bound, ok))
    return ChainReport(tuple(levels), sorted_coords.order, all(l.ok for l in levels))


@dataclass(frozen=True)
class LowerChainLevel:
    level: int
    volume: Fraction
    volume_identity_ok: bool
    volume_bound: Fraction
    count: int
    count_ok: bool
    ok: bool


@dataclass(frozen=True)
class LowerChainReport:
    dim: int
    levels: tuple[LowerChainLevel, ...]
    passed: bool


def zpw_lower_chain(dim: int, cap: int = DEFAULT_CAP) -> LowerChainReport:
    """Matching lower bounds along the Zaks-Perles-Wills chain.

    Level i of the chain keeps the origin and the first i axis vertices.
    Its normalized volume is exactly (t_{i+1} - 1)/i! in terms of the
    Sylvester sequence, hence at least (2^(2^(i-1)) - 1)/i!, and its
    lattice point count squared is at least 2^(2^(i-1)).
    """
    # local import: the generators module itself leans on this module
    from .generators import sylvester, zpw_simplex

    if dim < 1:
        raise ValueError("dimension must be at least 1")
    terms = sylvester(dim + 1).terms
    simplex = zpw_simplex(dim, verify=False)
    levels = []
    for i in range(1, dim + 1):
        omitted = tuple(range(i + 1, dim + 1))
        volume = normalized_volume(face_of(simplex, omitted))
        identity_ok = volume == Fraction(terms[i] - 1, factorial(i))
        volume_bound = Fraction(2 ** (2 ** (i - 1)) - 1, factorial(i))
        count = count_face_points(simplex, omitted, cap)
        count_ok = count >= terms[i - 1] and count**2 >= 2 ** (2 ** (i - 1))
        ok = identity_ok and volume >= volume_bound and count_ok
        levels.append(
            LowerChainLevel(i, volume, identity_ok, volume_bound, count, count_ok, ok)
        )
    return LowerChainReport(dim, tuple(levels), all(l.ok for l in levels))


# ---------------------------------------------------------------------------
# face volume bounds and the section law


@dataclass(frozen=True)
class FaceVolumeBound:
    omitted: tuple[int, ...]
    weight_set: tuple[int, ...]
    bound: Fraction
    face_volume: Fraction
    slack: Fraction
    passed: bool


def face_volume_bound(
    simplex: LatticeSimplex,
    omitted: Iterable[int],
    weight_set: Iterable[int],
    cap: int = DEFAULT_CAP,
) -> FaceVolumeBound:
    """Bound a face's volume by reciprocal coordinate products.

    ``omitted`` spans the face (those vertices are dropped), ``weight_set``
    is disjoint from it and together they cover all but exactly one index.
    The face's normalized volume is at most
    1 / (|weight_set|! * prod(coords over weight_set)).
    """
    _, bary = interior_coordinates(simplex, cap)
    dropped = tuple(sorted(set(omitted)))
    weights = tuple(sorted(set(weight_set)))
    if set(dropped) & set(weights):
        raise ValueError("face indexes and weight indexes must be disjoint")
    if len(dropped) + len(weights) != simplex.dim:
        raise ValueError("face and weight indexes must cover all but one vertex")
    bound = Fraction(1) / (
        factorial(len(weights)) * prod((bary[n] for n in weights), start=Fraction(1))
    )
    volume = normalized_volume(face_of(simplex, dropped))
    slack = bound - volume
    return FaceVolumeBound(dropped, weights, bound, volume, slack, slack >= 0)


@dataclass(frozen=True)
class SectionVolumeCheck:
    omitted: tuple[int, ...]
    kept_weight: Fraction
    section_volume: Fraction
    face_volume: Fraction
    predicted: Fraction
    passed: bool


def section_volume_check(
    simplex: LatticeSimplex,
    coords: Sequence[Fraction | int],
    omitted: Iterable[int],
) -> SectionVolumeCheck:
    """Exact volume law for the section through an interior point.

    The slice pinning the omitted coordinates at the interior point's
    values is a rescaled copy of the parallel face: its volume equals
    (sum of kept coordinates)^(face dim) times the face volume.
    """
    bary = check_barycentric(coords)
    dropped = tuple(sorted(set(omitted)))
    kept = tuple(j for j in range(len(bary)) if j not in set(dropped))
    if not kept:
        raise ValueError("at least one vertex must be kept")
    section = section_simplex(simplex, bary, dropped)
    section_volume = normalized_volume(section)
    face_volume = normalized_volume(face_of(simplex, dropped))
    kept_weight = sum(bary[j] for j in kept)
    predicted = kept_weight ** (len(kept) - 1) * face_volume
    return SectionVolumeCheck(
        dropped, kept_weight, section_volume, face_volume, predicted,
        section_volume == predicted,
    )


# ---------------------------------------------------------------------------
# the symmetric parallelotope around the interior point


@dataclass(frozen=True)
class ParallelotopeCheck:
    center: Vector
    omitted_index: int
    extents: tuple[Fraction, ...]
    volume: Fraction
    interior_count: int
    passed: bool


def parallelotope_check(
    simplex: LatticeSimplex, omit: int = 0, cap: int = DEFAULT_CAP
) -> ParallelotopeCheck:
    """The box spanned by doubled coordinates around the interior point.

    In the frame where the omitted vertex is the origin and the edges to
    the other vertices are the axes, the box is the product of [0, 2c_n]
    over the interior point's coordinates c_n.  It is centrally symmetric
    about the interior point, so with exactly one interior lattice point
    its normalized volume cannot exceed 2^d.
    """
    point, bary = interior_coordinates(simplex, cap)
    d = simplex.dim
    if not 0 <= omit <= d:
        raise ValueError("omitted vertex index out of range")
    axes = tuple(n for n in range(d + 1) if n != omit)
    extents = tuple(2 * bary[n] for n in axes)
    volume = (
        normalized_volume(simplex)
        * factorial(d)
        * 2**d
        * prod((bary[n] for n in axes), start=Fraction(1))
    )
    base = simplex.vertices[omit]
    corners = []
    for picks in itertools.product((0, 1), repeat=d):
        corner = [Fraction(x) for x in base]
        for chosen, n, extent in zip(picks, axes, extents):
            if chosen:
                for c in range(d):
                    corner[c] += extent * (simplex.vertices[n][c] - base[c])
        corners.append(corner)
    box = tuple(
        (ceil(min(c[i] for c in corners)), floor(max(c[i] for c in corners)))
        for i in range(d)
    )
    candidates = prod(hi - lo + 1 for lo, hi in box)
    if candidates > cap:
        raise EnumerationCapError(cap, candidates)
    # 0 < row(x) < 2 row(p) in the integer functional forms, per kept axis
    rows = simplex.functional_rows
    doubled = []
    for n in axes:
        coeffs, const = rows[n]
        doubled.append((coeffs, const, 2 * (sum(c * x for c, x in zip(coeffs, point)) + const)))
    count = 0
    for candidate in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        for coeffs, const, top in doubled:
            value = sum(c * x for c, x in zip(coeffs, candidate)) + const
            if not 0 < value < top:
                break
        else:
            count += 1
    passed = count == 1 and volume <= 2**d
    return ParallelotopeCheck(point, omit, extents, volume, count, passed)


# ---------------------------------------------------------------------------
# corpus extremes


@dataclass(frozen=True)
class DimensionExtremes:
    dim: int
    members: int
    max_volume: Fraction
    max_point_count: int
    min_coordinate: Fraction
    volume_bound: Fraction
    coordinate_bound: Fraction
    comparison_coordinate_bound: Fraction
    passed: bool


def corpus_extremes(
    corpus: Sequence[LatticeSimplex], cap: int = DEFAULT_CAP
) -> tuple[DimensionExtremes, ...]:
    """Extremal volume and coordinate statistics of verified one-point simplices.

    Groups the corpus by dimension.  Reports the largest normalized volume
    and lattice point count, the smallest barycentric coordinate, and the
    doubly exponential bounds they must respect.  The much smaller
    comparison bound 14^(-2^(d+1)) known from dimension-uniform arguments
    is included for context only.
    """
    by_dim: dict[int, list[LatticeSimplex]] = {}
    for index, member in enumerate(corpus):
        if not member.is_full_dimensional:
            raise ValueError(f"corpus member {index} is not full-dimensional")
        by_dim.setdefault(member.dim, []).append(member)
    summaries = []
    for d in sorted(by_dim):
        max_volume = Fraction(0)
        max_count = 0
        min_coord: Fraction | None = None
        for member in by_dim[d]:
            _, bary = interior_coordinates(member, cap)
            max_volume = max(max_volume, normalized_volume(member))
            max_count = max(max_count, count_face_points(member, (), cap))
            smallest = min(bary)
            min_coord = smallest if min_coord is None else min(min_coord, smallest)
        assert min_coord is not None
        volume_bound = Fraction((d + 1) ** (2**d - 1), factorial(d))
        coordinate_bound = Fraction(1, (d + 1) ** (2**d))
        summaries.append(
            DimensionExtremes(
                d,
                len(by_dim[d]),
                max_volume,
                max_count,
                min_coord,
                volume_bound,
                coordinate_bound,
                Fraction(1, 14 ** (2 ** (d + 1))),
                max_volume <= volume_bound and min_coord >= coordinate_bound,
            )
        )
    return tuple(summaries)
