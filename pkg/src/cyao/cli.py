"""Command-line entry point: ``cyao {generate,build,analyze,verify,sweep,plot}``.

Exit status: 0 success, 1 usage or parse error, 2 certificate failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from . import io as fio
from .certificates import certificate_suite
from .errors import CYaoError
from .generators import GenSpec, generate, perturb
from .geometry import TAU, EPS_ANG
from .graphs import build_cyao
from .spanner import dilation_upper_bound, spanning_ratio

log = logging.getLogger("cyao")

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_IO = 0, 1, 2, 3

KIND_ALIASES = {"uniform": "uniform-random"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _angle(value: float, unit: str) -> float:
    return math.radians(value) if unit == "deg" else value


def _theta(value: float, unit: str) -> float:
    th = _angle(value, unit)
    if not 0 < th <= TAU + EPS_ANG:
        raise UsageError(f"theta must lie in (0, 2pi] radians, got {th!r}")
    return min(th, TAU)


def _floats(text: str) -> list:
    try:
        vals = [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of numbers, got {text!r}") from None
    if not vals:
        raise UsageError("empty list")
    return vals


def _emit(text: str, out) -> None:
    if out is None or str(out) == "-":
        sys.stdout.write(text)
    else:
        fio.atomic_write(out, text)


def _gen_params(args) -> dict:
    params = {}
    for name in ("r", "epsilon", "m", "n", "delta"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    if getattr(args, "alpha", None) is not None:
        params["alpha"] = _angle(args.alpha, args.unit)
    return params


def cmd_generate(args) -> int:
    kind = KIND_ALIASES.get(args.kind, args.kind)
    if kind == "perturbed":
        if args.input is None or args.delta is None:
            raise UsageError("perturbed needs --input and --delta")
        pts = perturb(fio.read_points(args.input), args.delta, args.seed)
    else:
        pts = generate(GenSpec(kind, _gen_params(args), seed=args.seed))
    _emit(fio.points_to_csv(pts), args.out)
    return EXIT_OK


def cmd_build(args) -> int:
    theta = _theta(args.theta, args.unit)
    pts = fio.read_points(args.points)
    graph = build_cyao(pts, theta)
    _emit(fio.graph_to_json(graph, theta), args.out)
    return EXIT_OK


def _bound_for(theta):
    if theta is None or theta > 2 * math.pi / 3 + EPS_ANG:
        return None
    return dilation_upper_bound(theta)


def cmd_analyze(args) -> int:
    pts = fio.read_points(args.points)
    graph, theta = fio.read_graph(args.graph)
    fio.check_sizes(graph, pts)
    rep = spanning_ratio(graph, pts)
    _emit(fio.report_to_json(rep, theta, _bound_for(theta)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    certs = certificate_suite(samples=args.samples, seed=args.seed)
    _emit("".join(c.to_json() + "\n" for c in certs), args.out)
    failed = [c.name for c in certs if not c.passed]
    for name in failed:
        log.error("certificate failed: %s", name)
    return EXIT_CERT if failed else EXIT_OK


def cmd_sweep(args) -> int:
    from .figures import plot_sweep
    from .sweep import run_sweep

    kind = KIND_ALIASES.get(args.kind, args.kind)
    values = _floats(args.values)
    thetas = [_theta(v, args.unit) for v in _floats(args.thetas)]
    if kind in ("two-segments", "uniform-random"):
        values = [int(v) for v in values]
    rows = run_sweep(kind, values, thetas, seeds=args.seeds, fixed=_gen_params(args))
    _emit(fio.sweep_to_csv(rows), args.out)
    if args.figure and args.out not in (None, "-"):
        plot_sweep(rows, Path(args.out).with_suffix(".png"), title=f"cY(θ) on {kind}")
    return EXIT_OK


def cmd_plot(args) -> int:
    from .svg import render_svg

    pts = fio.read_points(args.points)
    graph = None
    if args.graph:
        graph, _ = fio.read_graph(args.graph)
        fio.check_sizes(graph, pts)
    ab = ((0.0, 0.0), (1.0, 0.0))
    if args.ab:
        c = _floats(args.ab)
        if len(c) != 4:
            raise UsageError("--ab needs ax,ay,bx,by")
        ab = ((c[0], c[1]), (c[2], c[3]))
    cone = _theta(args.cones, args.unit) if args.cones is not None else None
    svg = render_svg(pts, graph, inductive=args.inductive or (), ab=ab, cone_theta=cone, named_t=args.named)
    _emit(svg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyao", description="Continuous Yao graphs: build, measure, certify.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def unit(sp):
        sp.add_argument("--unit", choices=("rad", "deg"), default="rad", help="unit of angle arguments")

    def gen_args(sp):
        sp.add_argument("--r", type=float, help="ellipse stretch (ellipse-chain)")
        sp.add_argument("--epsilon", type=float, help="aperture excess over pi (double-polygon)")
        sp.add_argument("--alpha", type=float, help="segment angle (two-segments)")
        sp.add_argument("--m", type=int, help="points per segment (two-segments)")
        sp.add_argument("--n", type=int, help="number of points (uniform)")
        sp.add_argument("--delta", type=float, help="perturbation half-width (perturbed)")
        unit(sp)

    g = sub.add_parser("generate", help="write a point set as CSV")
    g.add_argument("--kind", required=True,
                   choices=("ellipse-chain", "double-polygon", "two-segments", "uniform", "uniform-random", "perturbed"))
    gen_args(g)
    g.add_argument("--input", help="base point CSV (perturbed)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="build cY(theta) and write the edge list")
    b.add_argument("--points", required=True)
    b.add_argument("--theta", type=float, required=True)
    unit(b)
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="spanning ratio and connectivity report")
    a.add_argument("--points", required=True)
    a.add_argument("--graph", required=True)
    a.add_argument("-o", "--out")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the certificate suite (JSON lines)")
    v.add_argument("--samples", type=int, default=10_000, help="boundary samples per region")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("-o", "--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="tabulate measurements over parameters and apertures")
    s.add_argument("--kind", required=True, choices=("ellipse-chain", "double-polygon", "two-segments",
                                                     "uniform", "uniform-random"))
    s.add_argument("--values", required=True, help="comma-separated values of the swept parameter")
    s.add_argument("--thetas", required=True, help="comma-separated apertures")
    s.add_argument("--seeds", type=int, default=1, help="average uniform sets over this many seeds")
    gen_args(s)
    s.add_argument("--no-figure", dest="figure", action="store_false",
                   help="skip the PNG written next to the table")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_sweep)

    pl = sub.add_parser("plot", help="draw points, edges and overlays as SVG")
    pl.add_argument("--points", required=True)
    pl.add_argument("--graph")
    pl.add_argument("--inductive", type=float, action="append", metavar="T",
                    help="overlay the inductive-set boundary for parameter T (repeatable)")
    pl.add_argument("--ab", help="ax,ay,bx,by for the overlays (default 0,0,1,0)")
    pl.add_argument("--cones", type=float, metavar="THETA", help="overlay cones C_ab and C_ba")
    pl.add_argument("--named", type=float, metavar="T", help="mark the named points at T")
    unit(pl)
    pl.add_argument("-o", "--out")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"cyao: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cyao: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cyao: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CYaoError as exc:
        print(f"cyao: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
