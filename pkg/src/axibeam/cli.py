"""Command-line front end: weights, metric tables, pattern samples, t-design reports.

Output goes to stdout or a file as CSV (default) or JSON.  Both formats carry
the same payload: a provenance block, a column list, and rows.  Floats are
printed with 12 significant digits so repeated runs are byte-identical and the
two formats round-trip through each other.

Exit codes: 0 ok / t-design passed, 1 t-design failed, 2 argument validation,
3 file or parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .designs import (
    Normalization,
    WeightVector,
    basic,
    cap,
    cap_trapezoid,
    inphase,
    max_re,
    maxflat,
    supercardioid,
    supercardioid_approx,
)
from .errors import AxibeamError, NormError, ParseError
from .metrics import compute_metrics, eval_pattern
from .sampling import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    PLATONIC_NAMES,
    circle_nodes,
    load_nodes,
    tdesign_check,
)
from .ultraspherical import Dimension

DESIGN_NAMES = (
    "basic",
    "maxre",
    "supercard",
    "supercard-approx",
    "inphase",
    "maxflat",
    "cap",
    "cap-trapezoid",
)

_DB_FLOOR = -120.0


class _CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _fmt(value) -> str:
    """Shortest decimal form within 12 significant digits; ints stay ints."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return str(value)


def _json_cell(value):
    if isinstance(value, bool) or isinstance(value, (int, np.integer)):
        return value if isinstance(value, bool) else int(value)
    if isinstance(value, (float, np.floating)):
        return float(format(float(value), ".12g"))
    return value


def _render_csv(provenance: dict, columns: list, rows: list) -> str:
    lines = [f"# {key}: {_fmt(val)}" for key, val in provenance.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _render_json(provenance: dict, columns: list, rows: list) -> str:
    obj = {
        "provenance": {k: _json_cell(v) for k, v in provenance.items()},
        "columns": list(columns),
        "rows": [[_json_cell(cell) for cell in row] for row in rows],
    }
    return json.dumps(obj, indent=2) + "\n"


def _emit(ns, provenance: dict, columns: list, rows: list) -> None:
    text = (_render_json if ns.format == "json" else _render_csv)(provenance, columns, rows)
    if ns.out == "stdout":
        sys.stdout.write(text)
    else:
        try:
            with open(ns.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise _CliError(f"cannot write {ns.out}: {exc}", code=3) from exc


def _provenance(ns, command: str, **extra) -> dict:
    prov = {"tool": "axibeam", "version": __version__, "command": command}
    prov.update(extra)
    return prov


def _dim(ns) -> Dimension:
    try:
        return Dimension(ns.dim)
    except AxibeamError as exc:
        raise _CliError(str(exc)) from exc


def _cap_x0(ns) -> float:
    given = [ns.cap_x0 is not None, ns.cap_angle_deg is not None]
    if sum(given) != 1:
        raise _CliError("cap design needs exactly one of --cap-x0 / --cap-angle-deg")
    if ns.cap_x0 is not None:
        return ns.cap_x0
    return math.cos(math.radians(ns.cap_angle_deg) / 2.0)


def _design_weights(ns, order: int, dim: Dimension):
    """Build the requested design; returns (WeightVector, extras for provenance)."""
    name = ns.design
    extras: dict = {}
    if name == "basic":
        vec = basic(order, dim)
    elif name == "maxre":
        sol = max_re(order, dim)
        vec = sol.weights
        extras["r_e_max"] = sol.r_e_max
        extras["newton_iterations"] = sol.iterations
    elif name == "supercard":
        vec = supercardioid(order, dim)
    elif name == "supercard-approx":
        vec = supercardioid_approx(order, dim)
    elif name == "inphase":
        vec = inphase(order, dim)
    elif name == "maxflat":
        if ns.flat_l is None:
            raise _CliError("maxflat design needs --flat-l")
        vec = maxflat(order, ns.flat_l, dim)
        extras["flat_l"] = ns.flat_l
    elif name == "cap":
        x0 = _cap_x0(ns)
        vec = cap(order, x0, dim)
        extras["cap_x0"] = x0
    elif name == "cap-trapezoid":
        if ns.spacing_deg is None:
            raise _CliError("cap-trapezoid design needs --spacing-deg")
        vec = cap_trapezoid(order, ns.spacing_deg, dim)
        extras["spacing_deg"] = ns.spacing_deg
    else:  # pragma: no cover - argparse restricts choices
        raise _CliError(f"unknown design {name!r}")
    if ns.norm is not None:
        vec = vec.normalized(Normalization(ns.norm))
    return vec, extras


def _cmd_weights(ns) -> int:
    dim = _dim(ns)
    try:
        vec, extras = _design_weights(ns, ns.order, dim)
    except AxibeamError as exc:
        raise _CliError(str(exc)) from exc
    prov = _provenance(
        ns,
        "weights",
        design=ns.design,
        order=ns.order,
        dim=dim.d,
        normalization=vec.normalization.value,
        **extras,
    )
    rows = [(n, float(a)) for n, a in enumerate(vec.a)]
    _emit(ns, prov, ["n", "a_n"], rows)
    return 0


def _parse_orders(ns) -> list:
    if ns.orders is not None:
        text = ns.orders
        sep = ".." if ".." in text else (":" if ":" in text else None)
        try:
            if sep is not None:
                lo, hi = (int(p) for p in text.split(sep, 1))
                orders = list(range(lo, hi + 1))
            else:
                orders = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise _CliError(f"cannot parse --orders {text!r}") from exc
        if not orders or any(o < 0 for o in orders):
            raise _CliError(f"invalid order range {text!r}")
        return orders
    if ns.order is None:
        raise _CliError("metrics needs --order or --orders")
    return [ns.order]


def _read_weights_file(path, dim: Dimension) -> WeightVector:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}", code=3) from exc
    values = {}
    header_seen = False
    for lineno, line in enumerate(lines, 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if not header_seen:
            cols = [c.strip() for c in body.split(",")]
            if cols != ["n", "a_n"]:
                raise _CliError(f"{path}: line {lineno}: expected header n,a_n", code=3)
            header_seen = True
            continue
        parts = body.split(",")
        try:
            values[int(parts[0])] = float(parts[1])
        except (ValueError, IndexError) as exc:
            raise _CliError(f"{path}: line {lineno}: bad row {body!r}", code=3) from exc
    if not header_seen or not values:
        raise _CliError(f"{path}: no weight rows", code=3)
    order = max(values)
    if sorted(values) != list(range(order + 1)):
        raise _CliError(f"{path}: degrees must cover 0..{order} without gaps", code=3)
    a = np.array([values[n] for n in range(order + 1)])
    return WeightVector(dim, a, Normalization.RAW)


def _spread_deg(value) -> float:
    if value is None:
        return float("nan")
    return math.degrees(math.acos(min(1.0, max(-1.0, value))))


def _metric_row(label: str, order: int, vec: WeightVector) -> tuple:
    met = compute_metrics(vec)
    return (
        label,
        order,
        met.q,
        _spread_deg(met.r_v),
        _spread_deg(met.r_e),
        10.0 * math.log10(met.fbr),
    )


def _cmd_metrics(ns) -> int:
    dim = _dim(ns)
    columns = ["design", "order", "q", "rv_spread_deg", "re_spread_deg", "fbr_db"]
    rows = []
    if ns.weights_file is not None:
        vec = _read_weights_file(ns.weights_file, dim)
        rows.append(_metric_row(ns.weights_file, vec.order, vec))
        prov = _provenance(ns, "metrics", source=ns.weights_file, dim=dim.d)
    else:
        if ns.design is None:
            raise _CliError("metrics needs --design or --weights-file")
        orders = _parse_orders(ns)
        try:
            for order in orders:
                vec, _ = _design_weights(ns, order, dim)
                rows.append(_metric_row(ns.design, order, vec))
        except AxibeamError as exc:
            raise _CliError(str(exc)) from exc
        prov = _provenance(ns, "metrics", design=ns.design, dim=dim.d)
    _emit(ns, prov, columns, rows)
    return 0


def _cmd_pattern(ns) -> int:
    dim = _dim(ns)
    if ns.samples < 2:
        raise _CliError("--samples must be >= 2")
    try:
        vec, extras = _design_weights(ns, ns.order, dim)
    except AxibeamError as exc:
        raise _CliError(str(exc)) from exc
    phi = np.linspace(0.0, 180.0, ns.samples)
    x = np.cos(np.radians(phi))
    g = np.atleast_1d(eval_pattern(vec, x))
    g_axis = eval_pattern(vec, 1.0)
    rows = []
    for p, xi, gi in zip(phi, x, g):
        ratio = abs(gi / g_axis)
        db = _DB_FLOOR if ratio == 0.0 else max(20.0 * math.log10(ratio), _DB_FLOOR)
        rows.append((float(p), float(xi), float(gi), float(db)))
    prov = _provenance(
        ns,
        "pattern",
        design=ns.design,
        order=ns.order,
        dim=dim.d,
        normalization=vec.normalization.value,
        samples=ns.samples,
        **extras,
    )
    _emit(ns, prov, ["phi_deg", "x", "g", "db"], rows)
    return 0


def _cmd_tdesign(ns) -> int:
    sources = [ns.builtin is not None, ns.circle is not None, ns.nodes_file is not None]
    if sum(sources) != 1:
        raise _CliError("tdesign needs exactly one of --builtin / --circle / --nodes-file")
    if ns.builtin is not None:
        from .sampling import platonic

        nodes = platonic(ns.builtin)
    elif ns.circle is not None:
        if ns.circle < 1:
            raise _CliError("--circle needs at least one node")
        nodes = circle_nodes(ns.circle, math.radians(ns.offset_deg))
    else:
        try:
            nodes = load_nodes(ns.nodes_file, dim=ns.node_dim)
        except (ParseError, NormError, OSError) as exc:
            raise _CliError(str(exc), code=3) from exc
    if ns.t < 0:
        raise _CliError("--t must be >= 0")
    report = tdesign_check(nodes, ns.t, trials=ns.trials, seed=ns.seed)
    prov = _provenance(
        ns,
        "tdesign",
        source=nodes.label,
        node_count=nodes.count,
        node_dim=nodes.dim,
        t=report.t_claimed,
        trials=ns.trials,
        seed=ns.seed,
        max_abs_error=report.max_abs_error,
        passed=report.passed,
    )
    rows = [(n + 1, err) for n, err in enumerate(report.per_degree_errors)]
    _emit(ns, prov, ["degree", "max_abs_error"], rows)
    return 0 if report.passed else 1


def _add_common(sub, with_design: bool = True) -> None:
    sub.add_argument("--dim", type=float, default=3.0, help="space dimension D >= 2 (real)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default="stdout", help="output path or 'stdout'")
    if with_design:
        sub.add_argument("--design", choices=DESIGN_NAMES)
        sub.add_argument("--norm", choices=("a0", "g1", "raw"), default=None,
                         help="re-normalize the weights (default: design natural)")
        sub.add_argument("--flat-l", type=int, default=None,
                         help="maxflat: flatness degrees L at x = 1 (0 <= L <= N-1)")
        sub.add_argument("--cap-x0", type=float, default=None,
                         help="cap: boundary x0 in (-1, 1)")
        sub.add_argument("--cap-angle-deg", type=float, default=None,
                         help="cap: full opening angle; x0 = cos(angle/2)")
        sub.add_argument("--spacing-deg", type=float, default=None,
                         help="cap-trapezoid: average node spacing angle")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="axibeam",
        description="Axisymmetric directivity design: weights, metrics, patterns, t-designs.",
    )
    parser.add_argument("--version", action="version", version=f"axibeam {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_w = subs.add_parser("weights", help="emit design weights a_0..a_N")
    _add_common(p_w)
    p_w.add_argument("--order", type=int, required=True, help="design order N >= 0")
    p_w.set_defaults(func=_cmd_weights)

    p_m = subs.add_parser("metrics", help="emit Q / rV / rE / FBR per design order")
    _add_common(p_m)
    p_m.add_argument("--order", type=int, default=None)
    p_m.add_argument("--orders", default=None, help="order range, e.g. 1..5 or 1,3,5")
    p_m.add_argument("--weights-file", default=None,
                     help="CSV with header n,a_n instead of --design")
    p_m.set_defaults(func=_cmd_metrics)

    p_p = subs.add_parser("pattern", help="sample the pattern over 0..180 degrees")
    _add_common(p_p)
    p_p.add_argument("--order", type=int, required=True)
    p_p.add_argument("--samples", type=int, default=181)
    p_p.set_defaults(func=_cmd_pattern)

    p_t = subs.add_parser("tdesign", help="verify a node set as a spherical/circular t-design")
    _add_common(p_t, with_design=False)
    p_t.add_argument("--builtin", choices=PLATONIC_NAMES, default=None)
    p_t.add_argument("--circle", type=int, default=None, help="equiangular ring with L nodes")
    p_t.add_argument("--offset-deg", type=float, default=0.0, help="ring rotation offset")
    p_t.add_argument("--nodes-file", default=None)
    p_t.add_argument("--node-dim", type=int, choices=(2, 3), default=None,
                     help="force the ambient dimension of a 2-column nodes file")
    p_t.add_argument("--t", type=int, required=True)
    p_t.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p_t.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_t.set_defaults(func=_cmd_tdesign)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except _CliError as exc:
        print(f"axibeam: {exc}", file=sys.stderr)
        return exc.code
    except AxibeamError as exc:
        print(f"axibeam: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
