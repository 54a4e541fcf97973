"""Command-line interface: ``a3btile <command> [options]``.

Exit codes: 0 success, 1 validation failure, 2 invalid arguments,
3 numeric failure (closure, propagation or root finding).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .errors import A3bError
from .generator import (
    SPORADIC_IDS,
    apply_flips,
    build_emt,
    count_flip_tilings,
    enumerate_flip_tilings,
    q_table,
    sporadic,
)
from .geometry_realizer import (
    emt_coordinates,
    export_json,
    export_obj,
    load_json,
    realize_by_propagation,
)
from .quad_family import ModuliPoint, emt_quad, flip_case, moduli_point_quad, t_interval
from .tiling_model import census_string, validate, vertex_census, with_declared_vectors
from .trig_kernel import ANGLE_NAMES, Quadrilateral, check_f, check_quad

EXIT_OK, EXIT_INVALID, EXIT_ARGS, EXIT_NUMERIC = 0, 1, 2, 3


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _quad_lines(q: Quadrilateral) -> List[str]:
    ang = " ".join(f"{k}={fmt(v)}" for k, v in zip(ANGLE_NAMES, q.theta))
    return [f"f={q.f}", ang, f"a={fmt(q.edges.a)} b={fmt(q.edges.b)}"]


def _report_lines(rep) -> List[str]:
    out = []
    for c in rep.checks:
        out.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail and not c.passed else ""))
    return out


def _write(path: Optional[str], data: bytes) -> None:
    if path:
        Path(path).write_bytes(data)


def cmd_quad(args, out) -> int:
    q = emt_quad(check_f(args.f), args.beta)
    rep = check_quad(q, args.tol)
    lines = _quad_lines(q)
    lines.append(f"residual angle_sum={fmt(rep.angle_sum)} eq4={fmt(rep.eq4)}")
    if rep.cos_a is None:
        lines.append("residual cos_a=skipped")
    else:
        lines.append(f"residual cos_a={fmt(rep.cos_a[0])},{fmt(rep.cos_a[1])}")
    lines.append(f"residual r7={fmt(rep.coolsaet[0])} r8={fmt(rep.coolsaet[1])}")
    lines.append("check_quad " + ("PASS" if rep.passed else "FAIL " + ",".join(rep.failures)))
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if rep.passed else EXIT_INVALID


def _finish(t, q, mesh, args, out) -> int:
    rep = validate(t, q)
    out.write("\n".join(_quad_lines(q)) + "\n")
    out.write(f"census {census_string(vertex_census(t))}\n")
    out.write("\n".join(_report_lines(rep)) + "\n")
    _write(getattr(args, "json", None), export_json(t, q, mesh))
    if getattr(args, "obj", None):
        _write(args.obj, export_obj(mesh, args.segments))
    return EXIT_OK if rep.passed else EXIT_INVALID


def cmd_emt(args, out) -> int:
    f = check_f(args.f)
    q = emt_quad(f, args.beta)
    t = with_declared_vectors(build_emt(f))
    return _finish(t, q, emt_coordinates(f, args.beta), args, out)


def _flip_quad(f: int, m: int) -> Quadrilateral:
    fc = flip_case(f, m)
    q = emt_quad(f, float(fc.beta))
    return dataclasses.replace(q, exact=(None, fc.beta, q.exact[2], None))


def cmd_flips(args, out) -> int:
    f = check_f(args.f)
    specs = enumerate_flip_tilings(f, args.m)
    if args.count:
        ns = sorted({s.n for s in specs})
        parts = [f"n={n}:{count_flip_tilings(f, args.m, n)}" for n in ns]
        out.write(" ".join(parts + [f"total:{len(specs)}"]) + "\n")
    if args.list or not (args.count or args.emit_all):
        for s in specs:
            out.write(f"n={s.n} gaps={','.join(map(str, s.gaps))}\n")
    if args.emit_all:
        d = Path(args.emit_all)
        d.mkdir(parents=True, exist_ok=True)
        q = _flip_quad(f, args.m)
        worst = EXIT_OK
        for i, s in enumerate(specs):
            t = with_declared_vectors(apply_flips(f, args.m, s.gaps))
            if not validate(t, q).passed:
                worst = EXIT_INVALID
            mesh = realize_by_propagation(t, q)
            name = f"flip_f{f}_m{args.m}_n{s.n}_{i:03d}.json"
            (d / name).write_bytes(export_json(t, q, mesh))
            out.write(f"wrote {d / name}\n")
        return worst
    return EXIT_OK


def cmd_sporadic(args, out) -> int:
    q, tilings = sporadic(args.name)
    t = with_declared_vectors(tilings[0])
    mesh = realize_by_propagation(t, q)
    out.write(f"name {args.name}\n")
    return _finish(t, q, mesh, args, out)


def cmd_verify(args, out) -> int:
    tf = load_json(Path(args.json).read_bytes())
    rep = validate(tf.tiling, tf.quad, args.tol)
    out.write("\n".join(_report_lines(rep)) + "\n")
    out.write(("valid" if rep.passed else "invalid: " + ",".join(rep.failed)) + "\n")
    return EXIT_OK if rep.passed else EXIT_INVALID


def cmd_counts(args, out) -> int:
    a, b, c = q_table(check_f(args.f))
    out.write(f"Q1={a} Q2={b} Q3={c}\n")
    return EXIT_OK


def cmd_moduli(args, out) -> int:
    f = check_f(args.f)
    if args.samples < 1:
        raise argparse.ArgumentTypeError("samples must be >= 1")
    lo, hi = t_interval(f)
    out.write("t,beta,a,b,alpha,delta\n")
    for i in range(args.samples):
        t = lo + (i + 1) * (hi - lo) / (args.samples + 1)
        q = moduli_point_quad(ModuliPoint(f, t))
        al, be, _, de = q.theta
        out.write(",".join(fmt(x) for x in (t, be, q.edges.a, q.edges.b, al, de)) + "\n")
    return EXIT_OK


def cmd_realize(args, out) -> int:
    tf = load_json(Path(args.json).read_bytes())
    mesh = realize_by_propagation(tf.tiling, tf.quad)
    Path(args.obj).write_bytes(export_obj(mesh, args.segments))
    out.write(f"placements {len(mesh.placements)} discrepancy {fmt(mesh.discrepancy)}\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise argparse.ArgumentTypeError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="a3btile", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("quad", help="earth-map quadrilateral and its residuals")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(func=cmd_quad)

    s = sub.add_parser("emt", help="2-layer earth map tiling")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--json")
    s.add_argument("--obj")
    s.add_argument("--segments", type=int, default=8)
    s.set_defaults(func=cmd_emt)

    s = sub.add_parser("flips", help="flip modifications of the earth map")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--list", action="store_true")
    s.add_argument("--count", action="store_true")
    s.add_argument("--emit-all", metavar="DIR")
    s.set_defaults(func=cmd_flips)

    s = sub.add_parser("sporadic", help="one of the five sporadic tilings")
    s.add_argument("--name", required=True, choices=SPORADIC_IDS)
    s.add_argument("--json")
    s.add_argument("--obj")
    s.add_argument("--segments", type=int, default=8)
    s.set_defaults(func=cmd_sporadic)

    s = sub.add_parser("verify", help="run the validator on a JSON tiling")
    s.add_argument("--json", required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("counts", help="number of flip-admitting quadrilaterals")
    s.add_argument("--f", type=int, required=True)
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("moduli", help="sample the moduli curve as CSV")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--samples", type=int, required=True)
    s.set_defaults(func=cmd_moduli)

    s = sub.add_parser("realize", help="place a JSON tiling on the sphere and write OBJ")
    s.add_argument("--json", required=True)
    s.add_argument("--obj", required=True)
    s.add_argument("--segments", type=int, default=8)
    s.set_defaults(func=cmd_realize)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "segments", 1) < 1:
            raise argparse.ArgumentTypeError("segments must be >= 1")
        return args.func(args, out)
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except ArithmeticError as e:
        err.write(f"numeric failure: {e}\n")
        return EXIT_NUMERIC
    except (argparse.ArgumentTypeError, ValueError, KeyError, OSError, json.JSONDecodeError, A3bError) as e:
        err.write(f"error: {e}\n")
        return EXIT_ARGS


def main() -> None:
    sys.exit(run())
