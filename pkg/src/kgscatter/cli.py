# cli.py
"""Command-line front door.

Subcommands:
  potential   emit V(x) profile samples           (CSV: x,V)
  scatter     emit an R/T energy sweep            (CSV: E,R,T,defect)
  bound       emit the bound-state table          (CSV: n,E,residual,nodes)
  validate    analytic-vs-oracle comparison report (JSON)

Parameters come from flags, optionally seeded by a JSON config file
(--config); flags override file values.  --lambda, --q, --alpha (and --v0
for wells) accept comma-separated lists; multiple sets are emitted in
long format with a trailing `params` column, cartesian-product order.
Numbers are printed with 17 significant digits so CSV round-trips
losslessly, and identical configs produce byte-identical output.

Exit codes: 0 success, 2 config error, 3 computation error,
4 validation tolerance breach.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .bound_states import find_bound_states
from .errors import BadRange, KgscatterError
from .ode_oracle import find_bound_states_numeric, integrate_scattering
from .potential import PotentialParams, WellParams, profile
from .scattering import solve_matching, sweep

__all__ = ["main", "cmd_potential", "cmd_scatter", "cmd_bound", "cmd_validate"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_COMPUTE = 3
EXIT_VALIDATE = 4

_RT_TOL = 1e-5        # analytic vs oracle, absolute on R and T
_UNITARITY_TOL = 1e-8
_PAIRING_TOL = 1e-6   # bound-state pairing gap, fraction of m


class _ConfigError(Exception):
    """Invalid run configuration (maps to exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved per-invocation configuration (flags over config file)."""

    mass: float
    alpha: List[float]
    q: List[float]
    lam: Optional[List[float]]
    v0: Optional[List[float]]
    emin: float
    emax: float
    en: int
    xmin: float
    xmax: float
    xn: int
    out: Optional[str]
    format: str
    keep_going: bool
    no_oracle: bool


# ---------------------------------------------------------------------------
# config plumbing
# ---------------------------------------------------------------------------
def _load_file_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ConfigError(f"cannot read config {path}: {exc}")
    if not isinstance(data, dict):
        raise _ConfigError(f"config {path} must hold a JSON object")
    return data


def _pick(ns, file_cfg: dict, attr: str, default=None):
    # flag wins; then the config file (dashed or underscored key); then default
    v = getattr(ns, attr, None)
    if v is not None:
        return v
    for key in (attr, attr.replace("_", "-"), "lambda" if attr == "lam" else attr):
        if key in file_cfg:
            return file_cfg[key]
    return default


def _as_float_list(v, name: str) -> Optional[List[float]]:
    if v is None:
        return None
    if isinstance(v, (int, float)):
        return [float(v)]
    if isinstance(v, (list, tuple)):
        items = list(v)
    else:
        items = [s for s in str(v).split(",") if s.strip()]
    if not items:
        raise _ConfigError(f"--{name}: empty list")
    try:
        return [float(x) for x in items]
    except (TypeError, ValueError):
        raise _ConfigError(f"--{name}: expected numbers, got {v!r}")


def _as_float(v, name: str, default: float) -> float:
    if v is None:
        return default
    try:
        return float(v)
    except (TypeError, ValueError):
        raise _ConfigError(f"--{name}: expected a number, got {v!r}")


def _as_int(v, name: str, default: int) -> int:
    if v is None:
        return default
    try:
        return int(v)
    except (TypeError, ValueError):
        raise _ConfigError(f"--{name}: expected an integer, got {v!r}")


def _resolve(ns) -> RunConfig:
    fc = _load_file_config(getattr(ns, "config", None))
    mass = _as_float(_pick(ns, fc, "mass"), "mass", 1.0)
    return RunConfig(
        mass=mass,
        alpha=_as_float_list(_pick(ns, fc, "alpha"), "alpha") or [1.0],
        q=_as_float_list(_pick(ns, fc, "q"), "q") or [1.0],
        lam=_as_float_list(_pick(ns, fc, "lam"), "lambda"),
        v0=_as_float_list(_pick(ns, fc, "v0"), "v0"),
        emin=_as_float(_pick(ns, fc, "emin"), "emin", mass + 0.05),
        emax=_as_float(_pick(ns, fc, "emax"), "emax", 4.0 * mass),
        en=_as_int(_pick(ns, fc, "en"), "en", 200),
        xmin=_as_float(_pick(ns, fc, "xmin"), "xmin", -5.0),
        xmax=_as_float(_pick(ns, fc, "xmax"), "xmax", 5.0),
        xn=_as_int(_pick(ns, fc, "xn"), "xn", 201),
        out=_pick(ns, fc, "out"),
        format=str(_pick(ns, fc, "format", "csv")),
        keep_going=bool(_pick(ns, fc, "keep_going", False)),
        no_oracle=bool(_pick(ns, fc, "no_oracle", False)),
    )


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------
def _fmt(x: float) -> str:
    return "%.17g" % x


def _json_num(x: float):
    # strict JSON has no NaN/Inf
    return x if math.isfinite(x) else None


def _deliver(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(
    cfg: RunConfig,
    command: str,
    columns: Sequence[str],
    str_rows: List[List[str]],
    obj_rows: List[dict],
    meta_params: dict,
) -> str:
    if cfg.format == "json":
        doc = {
            "meta": {
                "command": command,
                "version": __version__,
                "params": meta_params,
                "tolerances": {
                    "rt_abs": _RT_TOL,
                    "unitarity": _UNITARITY_TOL,
                    "pairing": _PAIRING_TOL,
                },
            },
            "rows": obj_rows,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if cfg.format != "csv":
        raise _ConfigError(f"--format must be csv or json, got {cfg.format!r}")
    lines = [",".join(columns)]
    lines.extend(",".join(cells) for cells in str_rows)
    return "\n".join(lines) + "\n"


def _set_id(tag: str, value: float, q: float, alpha: float) -> str:
    return f"{tag}={value:g};q={q:g};alpha={alpha:g}"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------
def cmd_potential(cfg: RunConfig) -> int:
    if cfg.lam is not None and cfg.v0 is not None:
        raise _ConfigError("set either --lambda or --v0, not both")
    if not (cfg.xmin < cfg.xmax):
        raise _ConfigError(f"need xmin < xmax, got [{cfg.xmin}, {cfg.xmax}]")
    if cfg.xn < 2:
        raise _ConfigError(f"need xn >= 2, got {cfg.xn}")

    if cfg.v0 is not None:
        tag, values = "v0", cfg.v0
    else:
        tag, values = "lam", (cfg.lam if cfg.lam is not None else [2.0])

    sets = list(product(values, cfg.q, cfg.alpha))
    multi = len(sets) > 1
    columns = ["x", "V"] + (["params"] if multi else [])
    str_rows: List[List[str]] = []
    obj_rows: List[dict] = []
    for value, q, alpha in sets:
        if tag == "v0":
            params = WellParams(v0=value, q=q, alpha=alpha, mass=cfg.mass)
        else:
            params = PotentialParams(lam=value, q=q, alpha=alpha, mass=cfg.mass)
        sid = _set_id(tag, value, q, alpha)
        for x, v in profile(params, cfg.xmin, cfg.xmax, cfg.xn):
            cells = [_fmt(x), _fmt(v)]
            obj = {"x": x, "V": v}
            if multi:
                cells.append(sid)
                obj["params"] = sid
            str_rows.append(cells)
            obj_rows.append(obj)

    meta = {
        "mass": cfg.mass, "q": cfg.q, "alpha": cfg.alpha, tag: list(values),
        "xmin": cfg.xmin, "xmax": cfg.xmax, "xn": cfg.xn,
    }
    _deliver(_render(cfg, "potential", columns, str_rows, obj_rows, meta), cfg.out)
    return EXIT_OK


def cmd_scatter(cfg: RunConfig) -> int:
    lams = cfg.lam if cfg.lam is not None else [2.0]
    if cfg.en < 1:
        raise _ConfigError(f"empty energy grid (en={cfg.en})")
    if not (cfg.emin > cfg.mass):
        raise _ConfigError(f"need emin > mass, got emin={cfg.emin}, mass={cfg.mass}")
    if not (cfg.emin <= cfg.emax):
        raise _ConfigError(f"need emin <= emax, got [{cfg.emin}, {cfg.emax}]")
    e_grid = [float(e) for e in np.linspace(cfg.emin, cfg.emax, cfg.en)]

    sets = list(product(lams, cfg.q, cfg.alpha))
    multi = len(sets) > 1
    columns = ["E", "R", "T", "defect"] + (["params"] if multi else [])
    str_rows: List[List[str]] = []
    obj_rows: List[dict] = []
    failed = 0
    max_defect = 0.0
    for lam, q, alpha in sets:
        p = PotentialParams(lam=lam, q=q, alpha=alpha, mass=cfg.mass)
        sid = _set_id("lam", lam, q, alpha)
        for E, R, T, defect in sweep(p, e_grid):
            if math.isnan(R):
                failed += 1
            else:
                max_defect = max(max_defect, defect)
            cells = [_fmt(E), _fmt(R), _fmt(T), _fmt(defect)]
            obj = {"E": E, "R": _json_num(R), "T": _json_num(T),
                   "defect": _json_num(defect)}
            if multi:
                cells.append(sid)
                obj["params"] = sid
            str_rows.append(cells)
            obj_rows.append(obj)

    meta = {
        "mass": cfg.mass, "q": cfg.q, "alpha": cfg.alpha, "lam": list(lams),
        "emin": cfg.emin, "emax": cfg.emax, "en": cfg.en,
    }
    _deliver(_render(cfg, "scatter", columns, str_rows, obj_rows, meta), cfg.out)
    print(
        f"scatter: {len(str_rows)} points, {failed} failed, "
        f"max unitarity defect {max_defect:.3g}",
        file=sys.stderr,
    )
    if failed and not cfg.keep_going:
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_bound(cfg: RunConfig) -> int:
    if cfg.v0 is None:
        raise _ConfigError("bound mode needs --v0")
    sets = list(product(cfg.v0, cfg.q, cfg.alpha))
    multi = len(sets) > 1
    columns = ["n", "E", "residual", "nodes"] + (["params"] if multi else [])
    str_rows: List[List[str]] = []
    obj_rows: List[dict] = []
    lost_any = 0
    for v0, q, alpha in sets:
        w = WellParams(v0=v0, q=q, alpha=alpha, mass=cfg.mass)
        result = find_bound_states(w, cross_validate=not cfg.no_oracle)
        lost_any += len(result.lost)
        sid = _set_id("v0", v0, q, alpha)
        for n, (E, res, nodes) in enumerate(
            zip(result.energies, result.residuals, result.node_counts)
        ):
            cells = [str(n), _fmt(E), _fmt(res), str(nodes)]
            obj = {"n": n, "E": E, "residual": res, "nodes": nodes}
            if multi:
                cells.append(sid)
                obj["params"] = sid
            str_rows.append(cells)
            obj_rows.append(obj)

    meta = {"mass": cfg.mass, "q": cfg.q, "alpha": cfg.alpha, "v0": list(cfg.v0)}
    _deliver(_render(cfg, "bound", columns, str_rows, obj_rows, meta), cfg.out)
    if lost_any:
        print(f"bound: {lost_any} bracket(s) lost", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    """Built-in analytic-vs-oracle battery; exit 0 iff all within tolerance."""
    battery = [(2.0, 1.0, 1.0), (1.5, 2.5, 0.8), (3.0, 0.7, 2.0), (0.0, 1.0, 1.0)]
    e_grid = np.linspace(1.05, 3.5, 15)
    mass = 1.0

    max_defect = 0.0
    max_r_err: Optional[float] = None if cfg.no_oracle else 0.0
    max_t_err: Optional[float] = None if cfg.no_oracle else 0.0
    for lam, q, alpha in battery:
        p = PotentialParams(lam=lam, q=q, alpha=alpha, mass=mass)
        for E in e_grid:
            res = solve_matching(float(E), p)
            max_defect = max(max_defect, res.unitarity_defect)
            if not cfg.no_oracle:
                r_o, t_o = integrate_scattering(float(E), p)
                max_r_err = max(max_r_err, abs(res.reflection - r_o))
                max_t_err = max(max_t_err, abs(res.transmission - t_o))

    pairing = None
    if not cfg.no_oracle:
        w = WellParams(v0=10.0, q=1.0, alpha=1.0, mass=mass)
        analytic = find_bound_states(w, cross_validate=False)
        o_energies, o_nodes = find_bound_states_numeric(w)
        count_ok = len(analytic.energies) == len(o_energies)
        max_gap = 0.0
        if count_ok and analytic.energies:
            max_gap = max(
                abs(a - b) for a, b in zip(analytic.energies, o_energies)
            )
        pairing = {
            "analytic_count": len(analytic.energies),
            "oracle_count": len(o_energies),
            "max_gap": max_gap,
            "oracle_nodes": o_nodes,
        }

    ok = max_defect < _UNITARITY_TOL
    if not cfg.no_oracle:
        ok = ok and max_r_err < _RT_TOL and max_t_err < _RT_TOL
        ok = ok and pairing["analytic_count"] == pairing["oracle_count"]
        ok = ok and pairing["max_gap"] < _PAIRING_TOL * mass
        ok = ok and pairing["oracle_nodes"] == sorted(pairing["oracle_nodes"])

    report = {
        "version": __version__,
        "tolerances": {
            "rt_abs": _RT_TOL,
            "unitarity": _UNITARITY_TOL,
            "pairing": _PAIRING_TOL,
        },
        "max_R_err": max_r_err,
        "max_T_err": max_t_err,
        "max_unitarity_defect": max_defect,
        "bound_state_pairing": pairing,
        "pass": ok,
    }
    _deliver(json.dumps(report, sort_keys=True, indent=2) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_VALIDATE


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------
def _add_common(sp, *, grids: str) -> None:
    sp.add_argument("--mass", help="particle mass m (default 1)")
    sp.add_argument("--alpha", help="inverse range; comma list allowed")
    sp.add_argument("--q", help="deformation parameter; comma list allowed")
    sp.add_argument("--out", help="output path (default stdout)")
    sp.add_argument("--format", choices=("csv", "json"), help="output format")
    sp.add_argument("--config", help="JSON config file; flags override it")
    if "e" in grids:
        sp.add_argument("--emin", help="energy grid start (> mass)")
        sp.add_argument("--emax", help="energy grid end")
        sp.add_argument("--en", help="energy grid size")
    if "x" in grids:
        sp.add_argument("--xmin", help="x grid start")
        sp.add_argument("--xmax", help="x grid end")
        sp.add_argument("--xn", help="x grid size")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgscatter",
        description="Scattering and bound states of the deformed hyperbolic "
        "barrier/well in the relativistic wave equation.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    sp = sub.add_parser("potential", help="emit V(x) profile samples")
    _add_common(sp, grids="x")
    sp.add_argument("--lambda", dest="lam", help="barrier height parameter; comma list")
    sp.add_argument("--v0", help="well depth (alternative to --lambda); comma list")
    sp.set_defaults(func=cmd_potential)

    sp = sub.add_parser("scatter", help="emit an R/T energy sweep")
    _add_common(sp, grids="e")
    sp.add_argument("--lambda", dest="lam", help="barrier height parameter; comma list")
    sp.add_argument("--keep-going", action="store_true", default=None,
                    help="exit 0 even if some grid points fail")
    sp.set_defaults(func=cmd_scatter)

    sp = sub.add_parser("bound", help="emit the bound-state table")
    _add_common(sp, grids="")
    sp.add_argument("--v0", help="well depth; comma list allowed")
    sp.add_argument("--no-oracle", action="store_true", default=None,
                    help="skip the shooting-integration cross-check")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("validate", help="analytic-vs-oracle comparison report")
    sp.add_argument("--out", help="output path (default stdout)")
    sp.add_argument("--config", help="JSON config file; flags override it")
    sp.add_argument("--no-oracle", action="store_true", default=None,
                    help="report analytic-only fields, oracle fields null")
    sp.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_CONFIG
        return EXIT_OK if code == 0 else EXIT_CONFIG
    if getattr(ns, "command", None) is None or not hasattr(ns, "func"):
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = _resolve(ns)
        return ns.func(cfg)
    except (_ConfigError, BadRange, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except KgscatterError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
