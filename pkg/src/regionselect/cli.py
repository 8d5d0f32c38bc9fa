"""Command-line front end: analyze, solve, tanglize, foldcheck, unlink, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .board import LampBoard, board_from_link, board_from_pattern, load_board
from .crease import parse_fold
from .foldability import check_flat_foldable_necessary
from .game import changeable, ineffective_sets, new_game, solve_game
from .gf2 import bits_to_indices
from .link import parse_pd
from .planar import DiagramError
from .tangle import TangleError, generalized_tanglize, tangle_report, tanglize
from .unlink import (
    circled_unlink_number_over_circles,
    classical_unlink_number,
    proper_link_check,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _sniff_board(text: str) -> LampBoard:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "diagram" in data:
            return load_board(text)
        if "vertices_coords" in data:
            return board_from_pattern(parse_fold(text))
        raise DiagramError("unrecognized JSON input; need a board or FOLD file")
    return board_from_link(parse_pd(text))


def _emit(data: dict, fmt: str, text_renderer) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        text_renderer(data)


def cmd_analyze(args: argparse.Namespace) -> int:
    board = _sniff_board(_read(args.path))
    game = new_game(board)
    sol = solve_game(game)
    report: dict = {
        "sites": board.site_count,
        "regions": board.region_count,
        "solvable": sol.solvable,
        "kernel_dimension": len(ineffective_sets(game)),
        "changeable": {},
    }
    if not sol.solvable:
        report["certificate"] = [
            board.site_labels[i] for i in bits_to_indices(sol.certificate)
        ]
    for i in range(board.site_count):
        yes, _w, _c = changeable(game, i)
        report["changeable"][board.site_labels[i]] = yes
    from .crease import CreasePattern

    if isinstance(board.diagram, CreasePattern):
        fold = check_flat_foldable_necessary(board.diagram)
        report["flat_foldable_necessary"] = {
            "passes": fold.passes,
            "note": "necessary conditions only",
        }
        try:
            t = generalized_tanglize(board.diagram)
            report["tangle"] = tangle_report(t, board.lamps)
        except TangleError:
            try:
                t = tanglize(board.diagram)
                report["tangle"] = tangle_report(t, board.lamps)
            except TangleError as exc:
                report["tangle"] = {"error": str(exc)}

    def render(r: dict) -> None:
        print(f"sites: {r['sites']}  regions: {r['regions']}")
        print(f"solvable from current lamps: {r['solvable']}")
        if not r["solvable"]:
            print(f"  certificate rows: {', '.join(r['certificate'])}")
        print(f"ineffective-set dimension: {r['kernel_dimension']}")
        for label, yes in r["changeable"].items():
            print(f"  {label}: {'changeable' if yes else 'unchangeable'}")
        if "tangle" in r and "error" not in r["tangle"]:
            t = r["tangle"]
            comps = ", ".join(c["label"] for c in t["components"])
            print(f"tangle components: {comps}")
            print(f"even components: {', '.join(t['even_components']) or 'none'}")
        if "flat_foldable_necessary" in r:
            print(
                "flat-foldability (necessary conditions): "
                + ("pass" if r["flat_foldable_necessary"]["passes"] else "fail")
            )

    _emit(report, args.format, render)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    board = _sniff_board(_read(args.path))
    game = new_game(board)
    sol = solve_game(game)
    if sol.solvable:
        data = {
            "solvable": True,
            "regions": [board.region_labels[i] for i in sol.region_ids()],
        }
        _emit(data, args.format, lambda d: print("select:", ", ".join(d["regions"]) or "(nothing)"))
        return 0
    data = {
        "solvable": False,
        "certificate": [board.site_labels[i] for i in bits_to_indices(sol.certificate)],
    }
    if args.certificate:
        _emit(data, args.format, lambda d: print("unsolvable; certificate rows:", ", ".join(d["certificate"])))
        return 0
    print("unsolvable (use --certificate for the row certificate)", file=sys.stderr)
    return 1


def cmd_tanglize(args: argparse.Namespace) -> int:
    pattern = parse_fold(_read(args.path))
    try:
        t = generalized_tanglize(pattern)
    except TangleError:
        t = tanglize(pattern)
    report = tangle_report(t)

    def render(r: dict) -> None:
        for comp in r["components"]:
            kind = "closed" if comp["closed"] else "open"
            print(f"{comp['label']}: {kind}, {comp['edges']} edges")
        if r["contacts"]:
            for c in r["contacts"]:
                print(f"contact at vertex {c['vertex']}: {c['through']} ({c['interior_edges']} edges)")
        print("reducible crossings:", r["reducible_crossings"] or "none")
        print("nesting:", r["nesting"] or "none")
        print("even components:", ", ".join(r["even_components"]) or "none")

    _emit(report, args.format, render)
    return 0


def cmd_foldcheck(args: argparse.Namespace) -> int:
    pattern = parse_fold(_read(args.path))
    rep = check_flat_foldable_necessary(pattern)
    data = {
        "passes": rep.passes,
        "note": "necessary conditions only, not sufficient",
        "vertices": [
            {
                "vertex": v.vertex,
                "degree": v.degree,
                "even_degree": v.even_degree,
                "alternating_sums": list(v.alternating_sums),
                "angle_sums_ok": v.angle_sums_ok,
                "passes": v.passes,
            }
            for v in rep.vertices
        ],
    }

    def render(d: dict) -> None:
        for v in d["vertices"]:
            s1, s2 = v["alternating_sums"]
            print(
                f"vertex {v['vertex']}: degree {v['degree']} "
                f"({'even' if v['even_degree'] else 'odd'}), "
                f"alternating sums {s1:.3f}/{s2:.3f} -> "
                + ("ok" if v["passes"] else "fail")
            )
        print("overall:", "pass" if d["passes"] else "fail", "(necessary conditions only)")

    _emit(data, args.format, render)
    return 0 if rep.passes else 1


def cmd_unlink(args: argparse.Namespace) -> int:
    diagram = parse_pd(_read(args.path))
    proper = proper_link_check(diagram)
    classical = classical_unlink_number(diagram, args.budget)
    circled, circle = circled_unlink_number_over_circles(diagram, args.budget)
    data = {
        "crossings": diagram.crossing_count,
        "components": diagram.component_count(),
        "proper": proper.proper,
        "u_upper": classical.count,
        "u_circled_upper": circled.count,
        "witness_moves": list(circled.changed_crossings),
        "witness_regions": list(circled.regions),
        "circle_transits": None if circle is None else len(circle.transits),
        "certificate": None
        if circled.certificate is None
        else [m.kind for m in circled.certificate.moves],
        "note": "unlinking numbers are certified upper bounds",
    }

    def render(d: dict) -> None:
        print(f"crossings: {d['crossings']}, components: {d['components']}")
        print(f"proper link: {d['proper']}")
        print(f"classical unlinking number (upper bound): {d['u_upper']}")
        print(f"circled unlinking number (upper bound): {d['u_circled_upper']}")
        if d["u_circled_upper"] is not None:
            where = "no circle" if d["circle_transits"] is None else f"a circle with {d['circle_transits']} transits"
            print(f"  achieved with {where}; crossings changed: {d['witness_moves']}")

    _emit(data, args.format, render)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    if args.static_dir:
        os.environ["REGSEL_STATIC_DIR"] = args.static_dir
    port = args.port or int(os.environ.get("REGSEL_PORT", "8765"))
    uvicorn.run(create_app(), host=args.host, port=port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regionselect",
        description="Region Select games on knot diagrams and crease patterns",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("path", help="input file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="solvability and changeability report")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="region set lighting every lamp")
    common(p)
    p.add_argument("--certificate", action="store_true",
                   help="exit 0 with the row certificate when unsolvable")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tanglize", help="strand decomposition of a crease pattern")
    common(p)
    p.set_defaults(func=cmd_tanglize)

    p = sub.add_parser("foldcheck", help="necessary flat-foldability conditions")
    common(p)
    p.set_defaults(func=cmd_foldcheck)

    p = sub.add_parser("unlink", help="unlinking numbers of a link diagram")
    common(p)
    p.add_argument("--budget", type=int, default=3)
    p.set_defaults(func=cmd_unlink)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", default=None)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
