import random
from fractions import Fraction

import pytest

import onepoint as op
from onepoint.exact import det_rat


ZPW2 = op.LatticeSimplex(((0, 0), (2, 0), (0, 3)))
ZPW3 = op.LatticeSimplex(((0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 7)))
TRI3 = op.LatticeSimplex(((0, 0), (3, 0), (0, 3)))
WIDE = op.LatticeSimplex(((0, 0), (7, 0), (0, 2)))

ZPW2_COORDS = (Fraction(1, 6), Fraction(1, 2), Fraction(1, 3))
WIDE_COORDS = (Fraction(5, 14), Fraction(1, 7), Fraction(1, 2))


def test_partition_slack_frozen():
    assert op.partition_slack(ZPW2_COORDS, (0,)) == Fraction(0)
    centroid = (Fraction(1, 3),) * 3
    assert op.partition_slack(centroid, (0,)) == Fraction(1, 3) - Fraction(1, 9)
    assert op.partition_slack(WIDE_COORDS, (1,)) == Fraction(-1, 28)
    with pytest.raises(ValueError):
        op.partition_slack(ZPW2_COORDS, ())
    with pytest.raises(ValueError):
        op.partition_slack(ZPW2_COORDS, (0, 1, 2))


def test_check_all_partitions_order_and_worst():
    report = op.check_all_partitions(WIDE_COORDS)
    assert len(report.records) == 6
    assert report.records[0].sum_side == (0,)
    assert report.records[1].sum_side == (1,)
    assert report.records[2].sum_side == (0, 1)
    assert not report.passed
    assert report.min_slack == Fraction(-1, 28)
    assert report.worst.sum_side == (1,)
    good = op.check_all_partitions(ZPW2_COORDS)
    assert good.passed and good.min_slack == 0


def test_sort_barycentric():
    coords = op.sort_barycentric(ZPW2_COORDS)
    assert coords.coords == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
    assert coords.order == (1, 2, 0)
    ties = op.sort_barycentric((Fraction(1, 3),) * 3)
    assert ties.order == (0, 1, 2)


def test_reduced_system_frozen():
    zpw = op.sort_barycentric(op.barycentric_of(ZPW3, (1, 1, 1)))
    assert op.reduced_system(zpw) == (0, 0, 0)
    centroid = op.sort_barycentric((Fraction(1, 3),) * 3)
    assert op.reduced_system(centroid) == (Fraction(1, 3), Fraction(2, 9))
    half = op.sort_barycentric((Fraction(1, 2), Fraction(1, 2)))
    assert op.reduced_system(half) == (Fraction(0),)
    with pytest.raises(ValueError):
        op.reduced_system(op.SortedBarycentrics(ZPW2_COORDS, (0, 1, 2)))


def test_partition_matrix_frozen():
    sorted_coords = op.sort_barycentric(ZPW2_COORDS).coords  # (1/2, 1/3, 1/6)
    matrix = op.partition_matrix(sorted_coords, (2,))
    assert matrix == (
        (Fraction(2), Fraction(0), Fraction(-1)),
        (Fraction(0), Fraction(3), Fraction(-1)),
        (Fraction(-1), Fraction(-1), Fraction(1)),
    )
    assert det_rat(matrix) == 1


def test_partition_ratio_frozen():
    sorted_coords = op.sort_barycentric(ZPW2_COORDS).coords
    assert op.partition_ratio(sorted_coords, (2,)) == 1
    assert op.partition_ratio(sorted_coords, (0,)) == 9
    assert op.partition_ratio(WIDE_COORDS, (1,)) == Fraction(4, 5)
    assert op.partition_ratio((Fraction(1, 2), Fraction(1, 2)), (0,)) == 1


def random_barycentric(rng, parts):
    weights = [rng.randint(1, 30) for _ in range(parts)]
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def test_ratio_equals_system_determinant_on_random_coordinates(rng):
    for _ in range(120):
        coords = random_barycentric(rng, rng.randint(2, 5))
        n = len(coords)
        for mask in range(1, 2**n - 1):
            side = [i for i in range(n) if mask >> i & 1]
            ratio = op.partition_ratio(coords, side)
            assert ratio == det_rat(op.partition_matrix(coords, side))


def test_reduced_system_equivalent_to_full(rng):
    hits = 0
    for _ in range(150):
        coords = random_barycentric(rng, rng.randint(2, 5))
        full = op.check_all_partitions(coords).passed
        reduced = all(s >= 0 for s in op.reduced_system(op.sort_barycentric(coords)))
        assert full == reduced
        hits += not full
    assert hits > 0  # the sample must exercise both outcomes


def test_unique_interior_point():
    assert op.unique_interior_point(ZPW2) == (1, 1)
    with pytest.raises(ValueError):
        op.unique_interior_point(WIDE)


def test_coordinate_lower_bounds_frozen():
    report = op.coordinate_lower_bounds(ZPW3)
    assert report.passed
    assert report.order == (1, 2, 3, 0)
    values = tuple(e.value for e in report.entries)
    assert values == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7), Fraction(1, 42))
    bounds = tuple(e.bound for e in report.entries)
    assert bounds == (
        Fraction(1, 4),
        Fraction(1, 16),
        Fraction(1, 256),
        Fraction(1, 65536),
    )
    assert report.recursion_slacks == (
        Fraction(5, 6),
        Fraction(17, 42),
        Fraction(1, 14),
    )
    centroid = op.coordinate_lower_bounds(TRI3)
    assert centroid.entries[0].tight
    assert [e.bound for e in centroid.entries] == [
        Fraction(1, 3),
        Fraction(1, 9),
        Fraction(1, 81),
    ]


def test_chain_decompose_frozen():
    report = op.chain_decompose(ZPW3)
    assert report.passed
    level1, level2, level3 = report.levels
    assert level1.omitted == (0, 3)
    assert (level1.volume, level1.volume_bound) == (1, 4)
    assert (level1.count, level1.count_bound) == (2, 5)
    assert level2.volume == Fraction(1, 2)
    assert level3.volume == 7
    assert level3.count == 24
    line = op.chain_decompose(op.LatticeSimplex(((0,), (2,))))
    assert line.levels[0].volume == 2 and line.levels[0].volume_bound == 2


def test_zpw_lower_chain_frozen():
    report = op.zpw_lower_chain(2)
    assert report.passed
    first, second = report.levels
    assert first.volume == 2 and first.volume_bound == 1 and first.count == 3
    assert second.volume == 3 and second.volume_bound == Fraction(3, 2)
    assert second.count == 7
    assert all(level.volume_identity_ok for level in report.levels)
    for d in (1, 3, 4, 5):
        assert op.zpw_lower_chain(d).passed


def test_face_volume_bound_frozen():
    tight = op.face_volume_bound(TRI3, (), (1, 2))
    assert tight.bound == Fraction(9, 2) and tight.slack == 0
    loose = op.face_volume_bound(ZPW2, (), (0, 2))
    assert loose.bound == 9 and loose.face_volume == 3 and loose.slack == 6
    edge = op.face_volume_bound(ZPW2, (1,), (2,))
    assert edge.bound == 3 and edge.face_volume == 3 and edge.slack == 0
    with pytest.raises(ValueError):
        op.face_volume_bound(ZPW2, (0,), (0,))
    with pytest.raises(ValueError):
        op.face_volume_bound(ZPW2, (0,), ())


def test_section_volume_frozen():
    bary = op.barycentric_of(TRI3, (1, 1))
    check = op.section_volume_check(TRI3, bary, (0,))
    assert check.section_volume == 2 and check.predicted == 2 and check.passed
    coords = op.barycentric_of(ZPW2, (1, 1))
    slanted = op.section_volume_check(ZPW2, coords, (0,))
    assert slanted.section_volume == Fraction(5, 6)
    assert slanted.face_volume == 1
    assert slanted.kept_weight == Fraction(5, 6)
    assert slanted.passed
    whole = op.section_volume_check(ZPW2, coords, ())
    assert whole.section_volume == op.normalized_volume(ZPW2)
    assert whole.passed


def test_parallelotope_frozen():
    box = op.parallelotope_check(ZPW2)
    assert box.volume == 4 and box.interior_count == 1 and box.passed
    reflected = op.canonical_examples(3)[1]
    small = op.parallelotope_check(reflected)
    assert small.volume == Fraction(1, 2) and small.passed
    for omit in range(3):
        assert op.parallelotope_check(ZPW2, omit).passed


def test_corpus_extremes_frozen():
    summary = op.corpus_extremes([ZPW2, TRI3])
    assert len(summary) == 1
    d2 = summary[0]
    assert d2.dim == 2 and d2.members == 2
    assert d2.max_volume == Fraction(9, 2)
    assert d2.max_point_count == 10
    assert d2.min_coordinate == Fraction(1, 6)
    assert d2.volume_bound == Fraction(27, 2)
    assert d2.coordinate_bound == Fraction(1, 81)
    assert d2.comparison_coordinate_bound == Fraction(1, 14**8)
    assert d2.passed
    with pytest.raises(ValueError):
        op.corpus_extremes([op.face_of(ZPW2, (0,))])
