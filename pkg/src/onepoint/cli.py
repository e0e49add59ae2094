"""Command line front end.

Every subcommand reads simplices in the JSON exchange format, works in
exact rational arithmetic, and reports either human-readable lines or a
single machine-readable JSON document (``--format structured``).  Exit
codes: 0 when all checks pass (or a query completes), 1 when a
mathematical check fails, 2 on usage or parse errors, 3 when an
enumeration refuses to run above the candidate cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .bounds import (
    chain_decompose,
    check_all_partitions,
    coordinate_lower_bounds,
    corpus_extremes,
    face_volume_bound,
    parallelotope_check,
    reduced_system,
    section_volume_check,
    sort_barycentric,
)
from .certificate import second_interior_point
from .generators import canonical_examples, onepoint_triangle_atlas, sylvester, zpw_simplex
from .points import DEFAULT_CAP, EnumerationCapError, enumerate_interior
from .simplex import (
    LatticeSimplex,
    SimplexParseError,
    barycentric_of,
    normalized_volume,
    parse_simplex_text,
)


def _frac(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _jsonable(value: Any) -> Any:
    """Exact JSON image: fractions become strings, never floats."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return _frac(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _load(path: str) -> LatticeSimplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SimplexParseError(f"cannot read {path}: {exc}") from exc
    return parse_simplex_text(text)


def _parse_point(text: str, dim: int, lattice: bool) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != dim:
        raise ValueError(f"point needs {dim} comma-separated coordinates, got {len(parts)}")
    try:
        coords = tuple(Fraction(part.strip()) for part in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point {text!r}: {exc}") from exc
    if lattice and any(c.denominator != 1 for c in coords):
        raise ValueError(f"point {text!r} must have integer coordinates")
    return coords


def _point_arg(coords: tuple[Fraction, ...]) -> list[Fraction | int]:
    return [int(c) if c.denominator == 1 else c for c in coords]


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, payload, human lines)

Handled = tuple[int, dict[str, Any], list[str]]


def _cmd_verify(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    census = enumerate_interior(simplex, args.cap)
    count = len(census.points)
    passed = count == 1
    payload = {
        "interior_count": count,
        "interior_points": [list(p) for p in census.points],
        "scanned_box": [list(side) for side in census.scanned_box],
        "passed": passed,
    }
    lines = [f"interior lattice points: {count}"]
    for point in census.points[:20]:
        lines.append(f"  {point}")
    if count > 20:
        lines.append(f"  ... {count - 20} more")
    lines.append(f"one-point member: {'yes' if passed else 'no'}")
    return (0 if passed else 1), payload, lines


def _cmd_bary(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    point = _parse_point(args.point, simplex.ambient_dim, lattice=False)
    coords = barycentric_of(simplex, _point_arg(point))
    if all(c > 0 for c in coords):
        kind = "interior"
    elif any(c < 0 for c in coords):
        kind = "outside"
    else:
        kind = "boundary"
    payload = {
        "point": list(point),
        "coordinates": list(coords),
        "classification": kind,
        "lattice_point": all(c.denominator == 1 for c in point),
        "passed": True,
    }
    lines = [
        f"point: ({', '.join(_frac(c) for c in point)})",
        f"coordinates: ({', '.join(_frac(c) for c in coords)})",
        f"classification: {kind}",
    ]
    return 0, payload, lines


def _interior_start(simplex: LatticeSimplex, cap: int) -> tuple[int, ...] | None:
    census = enumerate_interior(simplex, cap)
    return census.points[0] if census.points else None


def _cmd_ineq(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    if args.point is not None:
        coords = barycentric_of(
            simplex, _point_arg(_parse_point(args.point, simplex.ambient_dim, lattice=False))
        )
        if any(c <= 0 for c in coords):
            raise ValueError("the partition system needs a point strictly inside")
    else:
        start = _interior_start(simplex, args.cap)
        if start is None:
            return 1, {"passed": False, "reason": "no interior lattice point"}, [
                "no interior lattice point to test"
            ]
        coords = barycentric_of(simplex, start)
    report = check_all_partitions(coords)
    reduced = reduced_system(sort_barycentric(coords))
    payload = {
        "coordinates": list(coords),
        "partitions": [
            {
                "sum_side": list(r.sum_side),
                "product_side": list(r.product_side),
                "sum": r.sum_value,
                "product": r.product_value,
                "slack": r.slack,
            }
            for r in report.records
        ],
        "min_slack": report.min_slack,
        "reduced_slacks": list(reduced),
        "passed": report.passed,
    }
    worst = report.worst
    lines = [
        f"partitions checked: {len(report.records)}",
        f"reduced slacks: ({', '.join(_frac(s) for s in reduced)})",
        f"minimal slack: {_frac(report.min_slack)} at sum side {list(worst.sum_side)}",
    ]
    if report.passed:
        lines.append("all partition inequalities hold")
    else:
        lines.append(
            f"violated: sum over {list(worst.sum_side)} is {_frac(worst.sum_value)}, "
            f"product over {list(worst.product_side)} is {_frac(worst.product_value)}"
        )
    return (0 if report.passed else 1), payload, lines


def _require_member(simplex: LatticeSimplex, cap: int) -> tuple[int, ...] | None:
    census = enumerate_interior(simplex, cap)
    return census.points[0] if len(census.points) == 1 else None


def _cmd_bounds(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    member = _require_member(simplex, args.cap)
    if member is None:
        return 1, {"passed": False, "reason": "not a one-point simplex"}, [
            "the simplex does not have exactly one interior lattice point"
        ]
    lower = coordinate_lower_bounds(simplex, args.cap)
    d = simplex.dim
    faces = []
    for excluded in range(d + 1):
        rest = [i for i in range(d + 1) if i != excluded]
        for mask in range(2**d):
            weight_set = tuple(rest[k] for k in range(d) if mask >> k & 1)
            omitted = tuple(i for i in rest if i not in weight_set)
            faces.append(face_volume_bound(simplex, omitted, weight_set, args.cap))
    box = parallelotope_check(simplex, 0, args.cap)
    coords = barycentric_of(simplex, member)
    sections = []
    for mask in range(2 ** (d + 1) - 1):
        omitted = tuple(i for i in range(d + 1) if mask >> i & 1)
        sections.append(section_volume_check(simplex, coords, omitted))
    passed = (
        lower.passed
        and all(f.passed for f in faces)
        and box.passed
        and all(s.passed for s in sections)
    )
    payload = {
        "coordinate_bounds": {
            "entries": [
                {
                    "position": e.position,
                    "value": e.value,
                    "bound": e.bound,
                    "tight": e.tight,
                    "ok": e.ok,
                }
                for e in lower.entries
            ],
            "recursion_slacks": list(lower.recursion_slacks),
            "order": list(lower.order),
            "passed": lower.passed,
        },
        "face_volume_bounds": [
            {
                "omitted": list(f.omitted),
                "weight_set": list(f.weight_set),
                "bound": f.bound,
                "face_volume": f.face_volume,
                "slack": f.slack,
                "passed": f.passed,
            }
            for f in faces
        ],
        "parallelotope": {
            "center": list(box.center),
            "omitted_index": box.omitted_index,
            "volume": box.volume,
            "interior_count": box.interior_count,
            "passed": box.passed,
        },
        "sections": [
            {
                "omitted": list(s.omitted),
                "section_volume": s.section_volume,
                "face_volume": s.face_volume,
                "predicted": s.predicted,
                "passed": s.passed,
            }
            for s in sections
        ],
        "passed": passed,
    }
    worst_entry = min(lower.entries, key=lambda e: e.value / e.bound)
    lines = [
        f"sorted coordinate bounds: {'ok' if lower.passed else 'VIOLATED'} "
        f"(closest at position {worst_entry.position}: "
        f"{_frac(worst_entry.value)} vs {_frac(worst_entry.bound)})",
        f"face volume bounds: {sum(f.passed for f in faces)}/{len(faces)} hold",
        f"parallelotope: volume {_frac(box.volume)} <= {2**d}, "
        f"interior count {box.interior_count}",
        f"sections: {sum(s.passed for s in sections)}/{len(sections)} match exactly",
        f"all bounds hold: {'yes' if passed else 'no'}",
    ]
    return (0 if passed else 1), payload, lines


def _cmd_chain(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    if _require_member(simplex, args.cap) is None:
        return 1, {"passed": False, "reason": "not a one-point simplex"}, [
            "the simplex does not have exactly one interior lattice point"
        ]
    report = chain_decompose(simplex, args.cap)
    payload = {
        "order": list(report.order),
        "levels": [
            {
                "level": l.level,
                "omitted": list(l.omitted),
                "volume": l.volume,
                "volume_bound": l.volume_bound,
                "count": l.count,
                "count_bound": l.count_bound,
                "ok": l.ok,
            }
            for l in report.levels
        ],
        "passed": report.passed,
    }
    lines = [f"vertex order by coordinate: {list(report.order)}"]
    for level in report.levels:
        lines.append(
            f"level {level.level}: volume {_frac(level.volume)} <= "
            f"{_frac(level.volume_bound)}, points {level.count} <= {level.count_bound}"
            f"{'' if level.ok else '  VIOLATED'}"
        )
    lines.append(f"chain bounds hold: {'yes' if report.passed else 'no'}")
    return (0 if report.passed else 1), payload, lines


def _cmd_cert(args: argparse.Namespace) -> Handled:
    simplex = _load(args.file)
    if args.point is not None:
        start = tuple(
            int(c) for c in _parse_point(args.point, simplex.ambient_dim, lattice=True)
        )
    else:
        found = _interior_start(simplex, args.cap)
        if found is None:
            return 1, {"passed": False, "reason": "no interior lattice point"}, [
                "no interior lattice point to start from"
            ]
        start = found
    cert = second_interior_point(simplex, start)
    if cert is None:
        payload = {"start": list(start), "found": False, "passed": True}
        lines = [
            f"start: {start}",
            "every partition inequality holds; no second point of this shape exists",
        ]
        return 0, payload, lines
    payload = {
        "start": list(cert.start),
        "found": True,
        "sum_side": list(cert.sum_side),
        "product_side": list(cert.product_side),
        "ratio": cert.ratio,
        "weights": list(cert.weights),
        "weight_order": list(cert.weight_order),
        "total": cert.total,
        "anchor": list(cert.anchor),
        "point": list(cert.point),
        "passed": True,
    }
    lines = [
        f"start: {cert.start}",
        f"violated partition: sum side {list(cert.sum_side)}, "
        f"product side {list(cert.product_side)} (ratio {_frac(cert.ratio)})",
        f"weights {list(cert.weights)} on vertices {list(cert.weight_order)}, "
        f"total {cert.total}",
        f"anchor: ({', '.join(_frac(c) for c in cert.anchor)})",
        f"second interior point: {cert.point}",
    ]
    return 0, payload, lines


def _simplex_payload(simplex: LatticeSimplex, cap: int) -> dict[str, Any]:
    census = enumerate_interior(simplex, cap)
    return {
        "dim": simplex.dim,
        "vertices": [list(v) for v in simplex.vertices],
        "interior_point": list(census.points[0]),
        "volume": normalized_volume(simplex),
        "coordinates": list(barycentric_of(simplex, census.points[0])),
    }


def _cmd_gen(args: argparse.Namespace) -> Handled:
    d = args.dim
    if d < 1:
        raise ValueError("dimension must be at least 1")
    wanted = args.family
    payload: dict[str, Any] = {"dim": d, "families": {}, "passed": True}
    lines: list[str] = []
    if wanted in ("zpw", "all"):
        payload["sylvester"] = list(sylvester(d).terms)
        simplex = zpw_simplex(d, verify=True, cap=args.cap)
        payload["families"]["zpw"] = _simplex_payload(simplex, args.cap)
    if wanted in ("dilated", "reflected", "all"):
        dilated, reflected = canonical_examples(d, verify=True, cap=args.cap)
        if wanted in ("dilated", "all"):
            payload["families"]["dilated"] = _simplex_payload(dilated, args.cap)
        if wanted in ("reflected", "all"):
            payload["families"]["reflected"] = _simplex_payload(reflected, args.cap)
    for name, info in payload["families"].items():
        lines.append(
            f"{name}: vertices {info['vertices']}, volume {_frac(info['volume'])}, "
            f"interior point {info['interior_point']}"
        )
    return 0, payload, lines


def _cmd_atlas2d(args: argparse.Namespace) -> Handled:
    atlas = onepoint_triangle_atlas(args.radius, args.cap)
    payload = {
        "radius": atlas.radius,
        "class_count": len(atlas.classes),
        "max_volume": atlas.max_volume,
        "max_point_count": atlas.max_point_count,
        "classes": [
            {
                "vertices": [list(v) for v in c.form.vertices],
                "volume": c.volume,
                "point_count": c.point_count,
                "coordinates": list(c.coordinates),
                "min_slack": c.min_slack,
            }
            for c in atlas.classes
        ],
        "passed": True,
    }
    lines = [f"equivalence classes within radius {atlas.radius}: {len(atlas.classes)}"]
    for c in atlas.classes:
        lines.append(
            f"  volume {_frac(c.volume)}, {c.point_count} lattice points, "
            f"vertices {[list(v) for v in c.form.vertices]}"
        )
    lines.append(
        f"largest volume {_frac(atlas.max_volume)}, "
        f"largest point count {atlas.max_point_count}"
    )
    return 0, payload, lines


def _cmd_report(args: argparse.Namespace) -> Handled:
    corpus = []
    for path in args.files:
        simplex = _load(path)
        census = enumerate_interior(simplex, args.cap)
        if len(census.points) != 1:
            return 1, {"passed": False, "reason": f"{path} is not a one-point simplex"}, [
                f"{path}: {len(census.points)} interior lattice points, expected 1"
            ]
        corpus.append(simplex)
    extremes = corpus_extremes(corpus, args.cap)
    payload = {
        "files": list(args.files),
        "dimensions": [
            {
                "dim": e.dim,
                "members": e.members,
                "max_volume": e.max_volume,
                "max_point_count": e.max_point_count,
                "min_coordinate": e.min_coordinate,
                "volume_bound": e.volume_bound,
                "coordinate_bound": e.coordinate_bound,
                "comparison_coordinate_bound": e.comparison_coordinate_bound,
                "passed": e.passed,
            }
            for e in extremes
        ],
        "passed": all(e.passed for e in extremes),
    }
    lines = []
    for e in extremes:
        lines.append(
            f"dimension {e.dim} ({e.members} members): "
            f"max volume {_frac(e.max_volume)} <= {_frac(e.volume_bound)}, "
            f"max points {e.max_point_count}, "
            f"min coordinate {_frac(e.min_coordinate)} >= {_frac(e.coordinate_bound)}"
        )
        lines.append(
            f"  dimension-uniform comparison bound: "
            f"{_frac(e.comparison_coordinate_bound)}"
        )
    passed = all(e.passed for e in extremes)
    lines.append(f"all extremal bounds hold: {'yes' if passed else 'no'}")
    return (0 if passed else 1), payload, lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onepoint",
        description="Exact geometry of lattice simplices with one interior lattice point.",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        help="refuse enumerations with more candidate points than this",
    )
    parser.add_argument(
        "--format",
        choices=("human", "structured"),
        default="human",
        help="human lines or one JSON document",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="census the interior lattice points")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bary", help="barycentric coordinates of a point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="comma-separated, fractions allowed")
    p.set_defaults(handler=_cmd_bary)

    p = sub.add_parser("ineq", help="check all partition inequalities")
    p.add_argument("file")
    p.add_argument("--point", help="interior point to test (default: lex-min interior)")
    p.set_defaults(handler=_cmd_ineq)

    p = sub.add_parser("bounds", help="coordinate, face volume, and section checks")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("chain", help="bounds along the heaviest-face chain")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_chain)

    p = sub.add_parser("cert", help="construct a second interior point if one must exist")
    p.add_argument("file")
    p.add_argument("--point", help="interior lattice point to start from")
    p.set_defaults(handler=_cmd_cert)

    p = sub.add_parser("gen", help="build the extremal families")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument(
        "--family", choices=("zpw", "dilated", "reflected", "all"), default="all"
    )
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("atlas2d", help="all planar one-point triangles up to symmetry")
    p.add_argument("--radius", type=int, default=30)
    p.set_defaults(handler=_cmd_atlas2d)

    p = sub.add_parser("report", help="extremal statistics of a verified corpus")
    p.add_argument("files", nargs="+")
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload, lines = args.handler(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SimplexParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": args.command,
        "config": {"cap": args.cap, "format": args.format},
        **payload,
    }
    if args.format == "structured":
        print(json.dumps(_jsonable(doc), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
