"""Command-line front end.

Subcommands
-----------
constraints   derived constants for a parameter set
spectrum      exact level table for example 1 (Rosen-Morse) or 2 (Poschl-Teller)
wavefunction  sampled bound state, optionally with the upper spinor component
sweep         relativistic energy of one level swept over a model parameter
verify        named self-checks with residuals (exit 2 on any failure)

Parameters may come from flags or from a flat ``key = value`` config file
(``--config``); flags override the file, unknown keys are hard errors.
Output is CSV (default) or JSON with a ``meta``/``rows`` layout; floats are
serialized with 17 significant digits so they round-trip exactly.

Exit codes: 0 success, 1 invalid configuration, 2 verification failure,
3 numerical failure (overflow, poles, solver non-convergence).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

from . import verify as verify_mod
from .errors import ConvergenceError, PoleError, SingularityError
from .model import BetaMode, ModelParams, derived_constants_from_params
from .numerics import Grid
from .susy import gpt_solve, gpt_solve_from_params, rm2_solve, rm2_solve_from_params
from .wavefunctions import gpt_wavefunction, rm2_wavefunction


class CliError(Exception):
    """Invalid configuration; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


MODEL_KEYS = ("omega", "alpha", "gamma", "beta", "delta", "c", "m1", "m2")


def _add_model_opts(p: _Parser):
    for key in MODEL_KEYS:
        p.add_argument(f"--{key}", type=float, default=None)
    p.add_argument("--beta-mode", dest="beta_mode", default=None,
                   choices=[m.value for m in BetaMode])


def _add_family_opts(p: _Parser):
    p.add_argument("--example", type=int, choices=(1, 2), default=None,
                   help="1 = Rosen-Morse (cosh profile), 2 = Poschl-Teller (coth)")
    p.add_argument("--v0", type=float, default=None)
    p.add_argument("--v1", type=float, default=None)
    p.add_argument("--v2", type=float, default=None)
    p.add_argument("--sp-a", dest="sp_a", type=float, default=None,
                   help="superpotential tanh strength (half-line family)")
    p.add_argument("--sp-b", dest="sp_b", type=float, default=None,
                   help="superpotential coth strength (half-line family)")


def _add_grid_opts(p: _Parser):
    p.add_argument("--grid-points", dest="grid_points", type=int, default=None)
    p.add_argument("--x-min", dest="x_min", type=float, default=None)
    p.add_argument("--x-max", dest="x_max", type=float, default=None)


def _add_output_opts(p: _Parser):
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--output", default=None)
    p.add_argument("--config", default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="pdmdirac", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constraints", help="derived constants")
    _add_model_opts(p)
    _add_output_opts(p)

    p = sub.add_parser("spectrum", help="exact level table")
    _add_model_opts(p)
    _add_family_opts(p)
    _add_output_opts(p)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)

    p = sub.add_parser("wavefunction", help="sampled bound state")
    _add_model_opts(p)
    _add_family_opts(p)
    _add_grid_opts(p)
    _add_output_opts(p)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--with-spinor", dest="with_spinor",
                   action=argparse.BooleanOptionalAction, default=None)

    p = sub.add_parser("sweep", help="level energy over a parameter range")
    _add_model_opts(p)
    _add_family_opts(p)
    _add_output_opts(p)
    p.add_argument("--param", default=None, choices=MODEL_KEYS)
    p.add_argument("--from", dest="sweep_from", type=float, default=None)
    p.add_argument("--to", dest="sweep_to", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--level", type=int, default=None)

    p = sub.add_parser("verify", help="self-check suites")
    _add_output_opts(p)
    p.add_argument("--suite", default=None,
                   choices=sorted(verify_mod.SUITES) + ["all"])
    p.add_argument("--tolerance-scale", dest="tolerance_scale", type=float,
                   default=None)
    return parser


_BOOL_KEYS = {"with_spinor"}
_INT_KEYS = {"n_max", "level", "steps", "grid_points", "example"}
_STR_KEYS = {"beta_mode", "format", "output", "param", "suite", "command"}


def _cast(key: str, raw: str):
    if key in _BOOL_KEYS:
        if raw.lower() in ("true", "1", "yes"):
            return True
        if raw.lower() in ("false", "0", "no"):
            return False
        raise CliError(f"config key {key!r}: expected a boolean, got {raw!r}")
    if key in _INT_KEYS:
        return int(raw)
    if key in _STR_KEYS:
        return raw
    return float(raw)


def _load_config(path: str, known: set[str]) -> dict:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CliError(f"cannot read config file: {exc}") from exc
    for lineno, line in enumerate(lines, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise CliError(f"{path}:{lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in text.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise CliError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = _cast(key, raw)
        except ValueError as exc:
            raise CliError(f"{path}:{lineno}: bad value for {key!r}: {raw!r}") from exc
    return out


def _merge_config(args: argparse.Namespace) -> dict:
    """Defaults <- config file <- explicit flags, as a plain dict."""
    ns = vars(args).copy()
    if ns.get("config"):
        known = {k for k in ns if k != "config"}
        file_vals = _load_config(ns["config"], known)
        for key, val in file_vals.items():
            if ns.get(key) is None:
                ns[key] = val
    defaults = {"format": "csv", "n_max": 5, "level": 0, "with_spinor": False,
                "suite": "all", "tolerance_scale": 1.0,
                "delta": 1.0, "c": 1.0, "m1": 0.0}
    for key, val in defaults.items():
        if key in ns and ns[key] is None:
            ns[key] = val
    return ns


def _require(ns: dict, *keys: str):
    missing = [k for k in keys if ns.get(k) is None]
    if missing:
        raise CliError(f"missing required option(s): "
                       + ", ".join("--" + k.replace("_", "-") for k in missing))


def _model_params(ns: dict) -> ModelParams:
    _require(ns, "omega", "alpha", "gamma", "m2")
    beta = ns.get("beta")
    if ns.get("beta_mode") is None:
        # literal when beta was given, the omega/alpha closed form otherwise
        mode = BetaMode.LITERAL if beta is not None else BetaMode.COUPLING
    else:
        mode = BetaMode(ns["beta_mode"])
    if mode is BetaMode.LITERAL and beta is None:
        raise CliError("literal beta-mode requires --beta")
    ns["beta_mode"] = mode.value  # resolved mode lands in the emitted meta
    try:
        return ModelParams(omega=ns["omega"], alpha=ns["alpha"], gamma=ns["gamma"],
                           beta=0.0 if beta is None else beta, delta=ns["delta"],
                           c=ns["c"], m1=ns["m1"], m2=ns["m2"], beta_mode=mode)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if not math.isfinite(value):
            return ""
        return format(value, ".17g")
    return str(value)


def _emit(ns: dict, meta: dict, columns: list[str], rows: list[dict]) -> str:
    if ns["format"] == "json":
        clean_rows = []
        for row in rows:
            clean = {}
            for key in columns:
                val = row.get(key)
                if isinstance(val, float) and not math.isfinite(val):
                    val = None
                clean[key] = val
            clean_rows.append(clean)
        return json.dumps({"meta": meta, "rows": clean_rows}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(key)) for key in columns])
    return buf.getvalue()


def _write(ns: dict, text: str):
    if ns.get("output"):
        with open(ns["output"], "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(ns: dict, command: str) -> dict:
    keep = {k: v for k, v in sorted(ns.items())
            if k not in ("output", "config") and v is not None}
    keep["command"] = command
    return keep


def _resolve_mode(ns: dict) -> str:
    direct_rm2 = any(ns.get(k) is not None for k in ("v0", "v1", "v2"))
    direct_gpt = any(ns.get(k) is not None for k in ("sp_a", "sp_b"))
    if direct_rm2 and direct_gpt:
        raise CliError("give either --v0/--v1/--v2 or --sp-a/--sp-b, not both")
    if ns.get("example") is not None and (direct_rm2 or direct_gpt):
        raise CliError("direct-coefficient mode excludes --example")
    if direct_rm2:
        return "rm2"
    if direct_gpt:
        return "gpt"
    if ns.get("example") == 1:
        return "example1"
    if ns.get("example") == 2:
        return "example2"
    raise CliError("select --example 1|2 or direct coefficients "
                   "(--v0/--v1/--v2 or --sp-a/--sp-b)")


def _solve_spectrum(ns: dict, mode: str, n_max: int):
    if mode == "rm2":
        _require(ns, "v0", "v1", "v2")
        return rm2_solve(ns["v0"], ns["v1"], ns["v2"], n_max=n_max)
    if mode == "gpt":
        _require(ns, "sp_a", "sp_b")
        return gpt_solve(ns["sp_a"], ns["sp_b"], ns["c"], n_max=n_max,
                         delta=ns["delta"], gamma=ns.get("gamma") or 0.0,
                         m2=ns.get("m2") or 1.0)
    params = _model_params(ns)
    if mode == "example1":
        return rm2_solve_from_params(params, n_max=n_max)
    return gpt_solve_from_params(params, n_max=n_max)


def _spectrum_rows(solution) -> list[dict]:
    rows = []
    for lv in solution.spectrum:
        if lv.e_bar is None:
            rows.append({"n": lv.n, "e_bar": None, "e_re": None, "e_im": None,
                         "is_real": lv.is_real, "admissible": lv.admissible,
                         "status": "pole"})
            continue
        rows.append({"n": lv.n, "e_bar": lv.e_bar, "e_re": lv.e_rel.real,
                     "e_im": lv.e_rel.imag, "is_real": lv.is_real,
                     "admissible": lv.admissible, "status": ""})
    return rows


def cmd_constraints(ns: dict) -> int:
    params = _model_params(ns)
    try:
        sol = derived_constants_from_params(params)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    row = {"sigma": sol.sigma, "beta": sol.beta, "epsilon": sol.epsilon,
           "e_squared": sol.e_squared, "m1_plus": sol.m1_plus,
           "m1_minus": sol.m1_minus,
           "status": "" if sol.has_m1 else "m1-absent"}
    cols = ["sigma", "beta", "epsilon", "e_squared", "m1_plus", "m1_minus", "status"]
    _write(ns, _emit(ns, _meta(ns, "constraints"), cols, [row]))
    return 0


def cmd_spectrum(ns: dict) -> int:
    mode = _resolve_mode(ns)
    sol = _solve_spectrum(ns, mode, ns["n_max"])
    cols = ["n", "e_bar", "e_re", "e_im", "is_real", "admissible", "status"]
    _write(ns, _emit(ns, _meta(ns, "spectrum"), cols, _spectrum_rows(sol)))
    return 0


def _default_grid(ns: dict, mode: str) -> Grid:
    c = ns["c"]
    if mode in ("rm2", "example1"):
        x_min, x_max = -15.0, 15.0
    else:
        x_min, x_max = 1e-3 / c, 20.0 / c
    if ns.get("x_min") is not None:
        x_min = ns["x_min"]
    if ns.get("x_max") is not None:
        x_max = ns["x_max"]
    return Grid(x_min, x_max, ns.get("grid_points") or 6000)


def cmd_wavefunction(ns: dict) -> int:
    mode = _resolve_mode(ns)
    try:
        grid = _default_grid(ns, mode)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    n = ns["level"]
    params = _model_params(ns) if (mode.startswith("example") or ns["with_spinor"]) else None
    if mode in ("rm2", "example1"):
        if mode == "example1":
            from .susy import rm2_coefficients_from_params
            coeffs = rm2_coefficients_from_params(params)
            v1, v2 = coeffs.v1, coeffs.v2
        else:
            _require(ns, "v1", "v2")
            v1, v2 = ns["v1"], ns["v2"]
        try:
            state = rm2_wavefunction(n, v1, v2, grid)
            spin = (rm2_wavefunction(n, v1, v2, grid, with_spinor=True, params=params)
                    if ns["with_spinor"] else None)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        if mode == "example2":
            from .susy import gpt_params_ab
            a, b = gpt_params_ab(params)
        else:
            _require(ns, "sp_a", "sp_b")
            a, b = ns["sp_a"], ns["sp_b"]
        try:
            state = gpt_wavefunction(n, a, b, ns["c"], grid)
            spin = (gpt_wavefunction(n, a, b, ns["c"], grid, with_spinor=True,
                                     params=params)
                    if ns["with_spinor"] else None)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    cols = ["x", "phi"] + (["spinor"] if spin is not None else [])
    rows = []
    for i, x in enumerate(grid.points):
        row = {"x": float(x), "phi": float(state.samples[i])}
        if spin is not None:
            row["spinor"] = float(spin.samples[i])
        rows.append(row)
    _write(ns, _emit(ns, _meta(ns, "wavefunction"), cols, rows))
    return 0


def _sweep_point(ns: dict, mode: str, value: float, level: int) -> dict:
    point = dict(ns)
    point[ns["param"]] = value
    row = {ns["param"]: value, "e_re": None, "e_im": None,
           "is_real": None, "admissible": None, "status": ""}
    try:
        sol = _solve_spectrum(point, mode, level)
        lv = sol.spectrum.levels[level]
        if lv.e_bar is None:
            row["status"] = "pole"
            return row
        if not (math.isfinite(lv.e_rel.real) and math.isfinite(lv.e_rel.imag)):
            row["status"] = "overflow"
            return row
        row.update({"e_re": lv.e_rel.real, "e_im": lv.e_rel.imag,
                    "is_real": lv.is_real, "admissible": lv.admissible})
    except OverflowError:
        row["status"] = "overflow"
    except (PoleError, SingularityError, ZeroDivisionError):
        row["status"] = "pole"
    except (ValueError, CliError) as exc:
        row["status"] = f"invalid: {exc}"
    return row


def cmd_sweep(ns: dict) -> int:
    mode = _resolve_mode(ns)
    _require(ns, "param", "sweep_from", "sweep_to", "steps")
    if ns["steps"] < 2:
        raise CliError("--steps must be at least 2")
    level = ns["level"]
    span = ns["sweep_to"] - ns["sweep_from"]
    values = [ns["sweep_from"] + span * i / (ns["steps"] - 1)
              for i in range(ns["steps"])]
    # per-point warnings (inadmissible regions etc.) are carried by the row
    # flags; the filter is set here once because it is process-global state
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with ThreadPoolExecutor(max_workers=8) as pool:
            rows = list(pool.map(lambda v: _sweep_point(ns, mode, v, level),
                                 values))
    cols = [ns["param"], "e_re", "e_im", "is_real", "admissible", "status"]
    _write(ns, _emit(ns, _meta(ns, "sweep"), cols, rows))
    return 0


def cmd_verify(ns: dict) -> int:
    names = sorted(verify_mod.SUITES) if ns["suite"] == "all" else [ns["suite"]]
    results, all_ok = verify_mod.run_suites(names, ns["tolerance_scale"])
    if ns["format"] == "json":
        rows = [{"suite": s, "name": c.name, "value": c.value, "tol": c.tol,
                 "passed": ok} for s, c, ok in results]
        cols = ["suite", "name", "value", "tol", "passed"]
        _write(ns, _emit(ns, _meta(ns, "verify"), cols, rows))
    else:
        lines = []
        for s, c, ok in results:
            tag = "PASS" if ok else "FAIL"
            lines.append(f"[{tag}] {s}: {c.name}  "
                         f"(value {c.value:.3e}, tol {c.tol:.1e})")
        lines.append(f"{'all checks passed' if all_ok else 'FAILURES present'}")
        _write(ns, "\n".join(lines) + "\n")
    return 0 if all_ok else 2


COMMANDS = {
    "constraints": cmd_constraints,
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        ns = _merge_config(args)
        return COMMANDS[ns["command"]](ns)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OverflowError, ConvergenceError, SingularityError, PoleError,
            ZeroDivisionError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
