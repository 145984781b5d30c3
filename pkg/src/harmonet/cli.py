"""Command-line interface.

Usage::

    harmonet eof GRAPH [--omega W] [--temp T] [--pair I,J]
    harmonet sweep GRAPH (--omega-range LO:HI:STEPS | --temp-range LO:HI:STEPS) ...
    harmonet threshold GRAPH [--omega W] [--pair I,J]
    harmonet tables {1,2,3} [--omega-sat W]
    harmonet lattice-inf --d D --omega W [--tol TOL]

GRAPH is ``path:N``, ``ring:N``, ``complete:N``, ``lattice:D:SIDE`` or one of
the five solid names.  Every command writes CSV (default) or JSON lines to
stdout; diagnostics go to stderr.

Exit codes: 0 success, 2 bad input, 3 asymmetric pair, 4 numerical failure,
5 pair not entangled at T = 0.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import reference_values as ref
from .closedform import QuadratureSpec, eof_infinite_lattice
from .errors import AsymmetricPair, NotEntangledAtZero, NumericalError
from .gaussian import DEFAULT_SYM_TOL, eof_from_delta, eof_pair, threshold_temperature
from .graphs import Graph, Solid, distance_classes, make_platonic, parse_graph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ASYMMETRIC = 3
EXIT_NUMERICAL = 4
EXIT_NOT_ENTANGLED = 5

DEFAULT_OMEGA_SAT = 1e4
OMEGA_SAT_ENV = "HARMONET_OMEGA_SAT"

RUN_FIELDS = ("graph", "omega", "temperature", "i", "j", "delta", "eof_ebits", "eof_centi_ebits")


@dataclass(frozen=True)
class RunRecord:
    graph: str
    omega: float
    temperature: float
    i: int
    j: int
    delta: float
    eof_ebits: float
    eof_centi_ebits: float


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _InputError(message)


class _InputError(Exception):
    pass


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    return value


def write_records(rows, fields, fmt, out=None):
    """Write dict rows as CSV (header always present) or JSON lines."""
    out = out or sys.stdout
    if fmt == "json":
        for row in rows:
            out.write(json.dumps({k: row[k] for k in fields}) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_fmt(row[k]) for k in fields])


def _beta(temperature: float) -> float:
    return math.inf if temperature == 0 else 1.0 / temperature


def run_point(g: Graph, omega: float, temperature: float, i: int, j: int, sym_tol: float = DEFAULT_SYM_TOL) -> RunRecord:
    if temperature < 0 or not math.isfinite(temperature):
        raise ValueError(f"temperature must be finite and >= 0, got {temperature}")
    res = eof_pair(g, omega, _beta(temperature), i, j, sym_tol)
    return RunRecord(g.name, float(omega), float(temperature), i, j, res.delta, res.eof, 100.0 * res.eof)


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair must look like I,J, got {text!r}") from None
    return i, j


def _graph(text: str) -> Graph:
    try:
        return parse_graph(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_range(text: str, spacing: str) -> np.ndarray:
    """``LO:HI:STEPS`` -> grid of STEPS points, inclusive of both ends."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must look like LO:HI:STEPS, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"range must look like LO:HI:STEPS, got {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or steps < 1 or hi < lo:
        raise ValueError(f"bad range {text!r}: need finite LO <= HI and STEPS >= 1")
    if steps == 1:
        return np.array([lo])
    if spacing == "geometric":
        if lo <= 0:
            raise ValueError(f"geometric range needs LO > 0, got {lo}")
        return np.geomspace(lo, hi, steps)
    return np.linspace(lo, hi, steps)


def omega_saturation(flag: float | None) -> float:
    if flag is not None:
        return flag
    env = os.environ.get(OMEGA_SAT_ENV)
    if env:
        try:
            value = float(env)
        except ValueError:
            raise ValueError(f"{OMEGA_SAT_ENV} must be a number, got {env!r}") from None
        if not math.isfinite(value) or value <= 0:
            raise ValueError(f"{OMEGA_SAT_ENV} must be positive, got {env!r}")
        return value
    return DEFAULT_OMEGA_SAT


# --- commands -------------------------------------------------------------


def cmd_eof(args):
    i, j = args.pair
    rec = run_point(args.graph, args.omega, args.temp, i, j, args.sym_tol)
    write_records([asdict(rec)], RUN_FIELDS, args.format)


def cmd_sweep(args):
    i, j = args.pair
    if (args.omega_range is None) == (args.temp_range is None):
        raise ValueError("give exactly one of --omega-range / --temp-range")
    if args.omega_range is not None:
        points = [(float(w), args.temp) for w in parse_range(args.omega_range, args.spacing)]
    else:
        points = [(args.omega, float(t)) for t in parse_range(args.temp_range, args.spacing)]

    def work(p):
        return asdict(run_point(args.graph, p[0], p[1], i, j, args.sym_tol))

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(work, points))
    else:
        rows = [work(p) for p in points]
    write_records(rows, RUN_FIELDS, args.format)


def cmd_threshold(args):
    i, j = args.pair
    t_star = threshold_temperature(args.graph, args.omega, i, j, args.sym_tol)
    res = eof_pair(args.graph, args.omega, 1.0 / t_star, i, j, args.sym_tol)
    row = {
        "graph": args.graph.name,
        "omega": float(args.omega),
        "i": i,
        "j": j,
        "threshold_temperature": t_star,
        "delta_at_threshold": res.delta,
    }
    write_records([row], tuple(row), args.format)


def table1_rows(omega_sat: float) -> list[dict]:
    meanfield = {n: 100 * eof_from_delta(math.sqrt((n - 2) / n)).eof for n, *_ in ref.TABLE1.values()}
    rows = []
    for solid, (n, mf_pub, einf_pub, emax_pub) in ref.TABLE1.items():
        g = make_platonic(solid)
        einf = 100 * eof_pair(g, omega_sat, math.inf, 0, 1).eof
        mf = meanfield[n]
        note = ""
        if abs(mf - mf_pub) > 0.05:
            match = min(meanfield, key=lambda k: abs(meanfield[k] - mf_pub))
            note = f"printed mean-field value matches N={match}, not N={n}"
        rows.append(
            {
                "polyhedron": solid,
                "N": n,
                "meanfield_derived": mf,
                "meanfield_published": mf_pub,
                "einf_derived": einf,
                "einf_published": einf_pub,
                "einf_abs_diff": abs(einf - einf_pub),
                "emax_published": emax_pub,
                "note": note,
            }
        )
    return rows


def table2_rows(omega_sat: float) -> list[dict]:
    rows = []
    for solid in Solid:
        g = make_platonic(solid)
        published = ref.TABLE2[solid.value]
        for dist, verts in sorted(distance_classes(g, 0).items()):
            j = verts[0]
            value = 100 * eof_pair(g, omega_sat, math.inf, 0, j).eof
            pub = published[dist - 1]
            rows.append(
                {
                    "polyhedron": solid.value,
                    "distance": dist,
                    "i": 0,
                    "j": j,
                    "einf_derived": value,
                    "einf_published": pub,
                    "abs_diff": abs(value - pub),
                }
            )
    return rows


def table3_rows(omega_sat: float, tol: float = 1e-7) -> list[dict]:
    rows = []
    for d, (einf_pub, emax_pub) in ref.TABLE3.items():
        value = 100 * eof_infinite_lattice(d, omega_sat, QuadratureSpec(d, tol)).eof
        rows.append(
            {
                "d": d,
                "einf_derived": value,
                "einf_published": einf_pub,
                "abs_diff": abs(value - einf_pub),
                "emax_published": emax_pub,
            }
        )
    return rows


def cmd_tables(args):
    omega_sat = omega_saturation(args.omega_sat)
    builders = {1: table1_rows, 2: table2_rows, 3: table3_rows}
    rows = builders[args.which](omega_sat)
    print(f"# table {args.which} at omega = {omega_sat:g} (centi-ebits)", file=sys.stderr)
    write_records(rows, tuple(rows[0]), args.format)


def cmd_lattice_inf(args):
    res = eof_infinite_lattice(args.d, args.omega, QuadratureSpec(args.d, args.tol, args.max_depth))
    rec = RunRecord(f"lattice-inf:{args.d}", float(args.omega), 0.0, 0, 1, res.delta, res.eof, 100.0 * res.eof)
    write_records([asdict(rec)], RUN_FIELDS, args.format)


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="harmonet", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, pair=True):
        if pair:
            p.add_argument("--pair", type=_pair, default=(0, 1), help="vertex pair I,J (default 0,1)")
            p.add_argument("--sym-tol", type=float, default=DEFAULT_SYM_TOL, help="relative mode-symmetry tolerance")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("eof", help="EoF of one vertex pair")
    p.add_argument("graph", type=_graph)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--temp", type=float, default=0.0, help="temperature; 0 means ground state")
    common(p)
    p.set_defaults(func=cmd_eof)

    p = sub.add_parser("sweep", help="EoF over a grid of frequencies or temperatures")
    p.add_argument("graph", type=_graph)
    p.add_argument("--omega", type=float, default=1.0, help="fixed omega for --temp-range")
    p.add_argument("--temp", type=float, default=0.0, help="fixed temperature for --omega-range")
    p.add_argument("--omega-range", metavar="LO:HI:STEPS")
    p.add_argument("--temp-range", metavar="LO:HI:STEPS")
    p.add_argument("--spacing", choices=("geometric", "linear"), default="geometric")
    p.add_argument("--jobs", type=int, default=1, help="worker threads; output order is fixed")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("threshold", help="temperature above which the pair is separable")
    p.add_argument("graph", type=_graph)
    p.add_argument("--omega", type=float, default=1.0)
    common(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("tables", help="recompute a saturation table")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--omega-sat", type=float, default=None, help=f"saturation omega (default ${OMEGA_SAT_ENV} or 1e4)")
    common(p, pair=False)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("lattice-inf", help="adjacent-site EoF on an infinite lattice")
    p.add_argument("--d", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--max-depth", type=int, default=50)
    common(p, pair=False)
    p.set_defaults(func=cmd_lattice_inf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except _InputError as exc:
        print(f"harmonet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AsymmetricPair as exc:
        print(f"harmonet: asymmetric pair: {exc}", file=sys.stderr)
        return EXIT_ASYMMETRIC
    except NotEntangledAtZero as exc:
        print(f"harmonet: not entangled: {exc}", file=sys.stderr)
        return EXIT_NOT_ENTANGLED
    except (NumericalError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"harmonet: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"harmonet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
