"""Command-line front end.

Subcommands::

    jspectra analyze MANIFEST [--out report.json] [--seed S] ...
    jspectra certify MANIFEST [--out cert.json]
    jspectra qnr MANIFEST --out points.csv [--samples N] [--seed S]
    jspectra example ex1 --n 64 --emit DIR [--param w=2]

A manifest is a JSON object with exactly one of ``matrices`` (paths of the
Matrix Market files for A, B, D, relative to the manifest) or ``example``
(builder name plus config), and optional analysis settings ``b_grid``,
``gamma0``, ``num_eigs``, ``seed`` and ``samples``.  Unknown keys are
rejected.  Exit codes: 0 success, 1 input error, 2 a check failed.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys
import tempfile
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np
import scipy.io
import scipy.sparse

from . import __version__, enclosure, examples, krein, qnr, vareig
from .errors import InputError, JSpectraError
from .model import BlockSystem, build_system
from .tolerances import tol, tolerance_scale

SCHEMA_ID = "jspectra/1"
DEFAULT_SAMPLES = 200
WITNESS_TRIALS = 20

_NUMBER_LIST = {"type": "array", "items": {"type": "number"}}
_PROFILE = {
    "oneOf": [
        {"type": "number"},
        _NUMBER_LIST,
        {"type": "object", "additionalProperties": False, "required": ["file"],
         "properties": {"file": {"type": "string"}}},
        {"type": "object", "additionalProperties": False, "required": ["kind", "value"],
         "properties": {"kind": {"const": "constant"}, "value": {"type": "number"}}},
        {"type": "object", "additionalProperties": False, "required": ["kind"],
         "properties": {"kind": {"const": "step"}, "left": {"type": "number"},
                        "right": {"type": "number"}, "at": {"type": "number"}}},
        {"type": "object", "additionalProperties": False, "required": ["kind"],
         "properties": {"kind": {"const": "sin"}, "amplitude": {"type": "number"},
                        "frequency": {"type": "number"}, "offset": {"type": "number"}}},
    ]
}
MANIFEST_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "matrices": {
            "type": "object", "additionalProperties": False, "required": ["A", "B", "D"],
            "properties": {k: {"type": "string"} for k in "ABD"},
        },
        "example": {
            "type": "object", "additionalProperties": False, "required": ["name", "config"],
            "properties": {
                "name": {"enum": sorted(examples.BUILDERS)},
                "config": {
                    "type": "object", "additionalProperties": False, "required": ["n"],
                    "properties": {"n": {"type": "integer"},
                                   **{k: _PROFILE for k in ("u", "w", "q", "v")}},
                },
            },
        },
        "b_grid": _NUMBER_LIST,
        "gamma0": {"type": "number"},
        "num_eigs": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "samples": {"type": "integer", "minimum": 1},
    },
    "oneOf": [{"required": ["matrices"]}, {"required": ["example"]}],
}


class CheckFailed(JSpectraError):
    """A certificate or consistency check did not pass (exit code 2)."""


# --- serialization ---------------------------------------------------------

def _plain(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def _emit(obj: Any, out: io.StringIO, indent: int = 0) -> None:
    pad = "  " * (indent + 1)
    if obj is None:
        out.write("null")
    elif isinstance(obj, bool):
        out.write("true" if obj else "false")
    elif isinstance(obj, int):
        out.write(str(obj))
    elif isinstance(obj, float):
        out.write(format(obj, ".17g") if math.isfinite(obj) else "null")
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.write("{}")
            return
        out.write("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.write(f"{pad}{json.dumps(k)}: ")
            _emit(v, out, indent + 1)
            out.write(",\n" if i < len(obj) - 1 else "\n")
        out.write("  " * indent + "}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            out.write("[")
            for i, v in enumerate(obj):
                if i:
                    out.write(", ")
                _emit(v, out, indent)
            out.write("]")
            return
        out.write("[\n")
        for i, v in enumerate(obj):
            out.write(pad)
            _emit(v, out, indent + 1)
            out.write(",\n" if i < len(obj) - 1 else "\n")
        out.write("  " * indent + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """JSON text with every float at 17 significant digits; non-finite
    floats become null."""
    buf = io.StringIO()
    _emit(_plain(obj), buf)
    buf.write("\n")
    return buf.getvalue()


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _deliver(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


def report_schema() -> dict:
    return json.loads(resources.files("jspectra").joinpath("report_schema.json").read_text())


def validate_report(report: dict) -> None:
    jsonschema.validate(json.loads(dumps(report)), report_schema())


# --- matrix market ---------------------------------------------------------

def _locate_bad_line(path: Path) -> int | None:
    """First line after the header whose tokens are not all numeric."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("%"):
                continue
            for tok in s.split():
                try:
                    float(tok)
                except ValueError:
                    return lineno
    return None


def read_matrix(path: str | os.PathLike) -> np.ndarray:
    """Dense real matrix from a Matrix Market file (array or coordinate,
    general or symmetric)."""
    path = Path(path)
    try:
        with open(path) as fh:
            header = fh.readline()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    if not header.lower().startswith("%%matrixmarket"):
        raise InputError(f"{path}:1: missing %%MatrixMarket header")
    if "complex" in header.lower() or "pattern" in header.lower():
        raise InputError(f"{path}:1: only real matrices are supported")
    try:
        M = scipy.io.mmread(str(path))
    except (ValueError, IndexError) as exc:
        line = _locate_bad_line(path)
        where = f"{path}:{line}" if line else str(path)
        raise InputError(f"{where}: malformed Matrix Market data ({exc})") from None
    if scipy.sparse.issparse(M):
        M = M.toarray()
    return np.atleast_2d(np.asarray(M, dtype=float))


def write_matrix(path: str | os.PathLike, M: np.ndarray) -> None:
    """Write M in array format with 17 significant digits (atomically)."""
    buf = io.BytesIO()
    scipy.io.mmwrite(buf, np.atleast_2d(np.asarray(M, dtype=float)), precision=17)
    write_atomic(path, buf.getvalue().decode())


# --- manifests -------------------------------------------------------------

@dataclasses.dataclass
class Manifest:
    path: Path | None
    data: dict

    @property
    def base(self) -> Path:
        return self.path.parent if self.path is not None else Path.cwd()


def load_manifest(path: str | os.PathLike) -> Manifest:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return Manifest(path, validate_manifest(data, str(path)))


def validate_manifest(data: Any, where: str = "<manifest>") -> dict:
    validator = jsonschema.Draft202012Validator(MANIFEST_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        loc = "/".join(str(p) for p in err.absolute_path) or "(root)"
        if err.validator == "oneOf" and not err.absolute_path:
            msg = "exactly one of 'matrices' or 'example' is required"
        else:
            msg = err.message
        raise InputError(f"{where}: at {loc}: {msg}")
    return data


def _profile(value: Any, base: Path) -> Any:
    if isinstance(value, dict) and "file" in value:
        p = base / value["file"]
        try:
            return np.loadtxt(p, dtype=float, ndmin=1)
        except (OSError, ValueError) as exc:
            raise InputError(f"{p}: cannot read tabulated profile ({exc})") from None
    if isinstance(value, list):
        return np.asarray(value, dtype=float)
    return value


def build_from_manifest(man: Manifest) -> BlockSystem:
    data = man.data
    if "matrices" in data:
        mats = {k: read_matrix(man.base / v) for k, v in data["matrices"].items()}
        return build_system(mats["A"], mats["B"], mats["D"])
    ex = data["example"]
    config = {k: (v if k == "n" else _profile(v, man.base)) for k, v in ex["config"].items()}
    try:
        return examples.build_named(ex["name"], **config)
    except TypeError as exc:
        raise InputError(f"example {ex['name']!r}: {exc}") from None


@dataclasses.dataclass
class Options:
    seed: int | None = None
    samples: int = DEFAULT_SAMPLES
    b_grid: list[float] | None = None
    gamma0: float | None = None
    num_eigs: int | None = None
    krein: bool = True
    qnr: bool = True


def resolve_options(man: Manifest, args: argparse.Namespace | None = None) -> Options:
    """Manifest settings, overridden by command-line flags."""
    d = man.data
    opts = Options(seed=d.get("seed"), samples=d.get("samples", DEFAULT_SAMPLES),
                   b_grid=d.get("b_grid"), gamma0=d.get("gamma0"), num_eigs=d.get("num_eigs"))
    if args is not None:
        for name in ("seed", "samples", "b_grid", "gamma0", "num_eigs"):
            val = getattr(args, name, None)
            if val is not None:
                setattr(opts, name, val)
        opts.krein = not getattr(args, "no_krein", False)
        opts.qnr = not getattr(args, "no_qnr", False)
    if opts.samples < 1:
        raise InputError("samples must be at least 1")
    if opts.num_eigs is not None and opts.num_eigs < 1:
        raise InputError("num_eigs must be at least 1")
    return opts


def _source(man: Manifest) -> dict:
    if "matrices" in man.data:
        return {"matrices": dict(man.data["matrices"])}
    return {"example": man.data["example"]}


# --- pipeline --------------------------------------------------------------

def _params_dict(params: enclosure.EnclosureParams) -> dict:
    return {f.name: getattr(params, f.name) for f in dataclasses.fields(params)}


def _system_dict(system: BlockSystem) -> dict:
    return {"n1": system.n1, "n2": system.n2,
            "alpha_minus": system.alpha_minus, "alpha_plus": system.alpha_plus,
            "delta_minus": system.delta_minus, "delta_plus": system.delta_plus,
            "norm_A": system.norm_A, "norm_B": system.norm_B, "norm_D": system.norm_D,
            "norm_M": system.norm_M}


def _choose(system: BlockSystem, opts: Options):
    a, b, params = enclosure.optimize_bound(system, opts.b_grid)
    b_hat = 0.0
    a_hat = enclosure.max_ahat_for_bhat(system, b_hat)
    return a, b, a_hat, b_hat, params


def _variational(system, params, opts):
    gamma0 = vareig.default_gamma0(params) if opts.gamma0 is None else float(opts.gamma0)
    return vareig.variational_spectrum(system, params, gamma0, opts.num_eigs)


def analyze(system: BlockSystem, opts: Options, source: dict | None = None) -> dict:
    """Run the full pipeline and return the report as a plain dict."""
    if opts.seed is None:
        raise InputError("a seed is required (manifest 'seed' or --seed)")
    a, b, a_hat, b_hat, params = _choose(system, opts)
    checks: dict[str, bool] = {}

    spectrum = []
    for z in system.spectrum:
        spectrum.append({"re": z.real, "im": z.imag,
                         "in_enclosure": enclosure.in_enclosure(z, params),
                         "margin": enclosure.enclosure_margin(z, params)})
    checks["spectrum_in_enclosure"] = all(s["in_enclosure"] for s in spectrum)

    res = _variational(system, params, opts)
    match, dev = vareig.compare_with_oracle(system, res)
    if opts.num_eigs is not None and res.count:
        # only the first few were requested: compare against the oracle prefix
        ref = vareig.oracle_eigenvalues_above(system, res.gamma0)[:res.count]
        match = ref.size == res.count
        dev = float(np.max(np.abs(ref - res.eigenvalues))) if match else math.inf
    dev_ok = dev <= 1e-8 * max(system.norm_M, 1.0)
    witness = []
    for n in sorted({1, res.count}) if res.count else []:
        w = vareig.minmax_witness_check(system, params, res.gamma0, n,
                                        min(WITNESS_TRIALS, opts.samples), opts.seed + n)
        witness.append({"n": n, "trials": w.trials, "violations": len(w.violations)})
    checks["variational_converged"] = all(res.converged)
    checks["variational_matches_oracle"] = bool(match and dev_ok)
    checks["minmax_witness"] = all(w["violations"] == 0 for w in witness)

    rep = vareig.bounds_report(system, params, res, a, b, a_hat, b_hat)
    checks["bounds_hold"] = rep.holds() if res.count else True

    krein_out = None
    if opts.krein:
        cert = krein.krein_certificate(system, params)
        gap_checks = []
        if params.strictA and params.mu_plus is not None and params.mu_plus > params.mu:
            for g in krein.gap_points(params, 5):
                ok, m = krein.krein_nonneg_check(system, params, float(g))
                gap_checks.append({"gamma": g, "psd": ok, "min_eig": m})
        krein_out = {
            "gamma": cert.gamma, "psd": cert.jm_minus_gamma_psd, "min_eig": cert.min_eig_jm,
            "gap_checks": gap_checks, "nonreal_count": cert.nonreal_count,
            "positive_type": [dataclasses.asdict(v) for v in cert.positive_type],
        }
        checks["krein_positive_type"] = all(v.positive for v in cert.positive_type)
        checks["krein_nonneg"] = all(g["psd"] for g in gap_checks)

    qnr_out = None
    if opts.qnr:
        pts = qnr.sample_qnr(system, opts.samples, opts.seed)
        vals = qnr.branch_values(pts)
        margins = [enclosure.enclosure_margin(z, params) for z in vals]
        inside = [enclosure.in_enclosure(z, params) for z in vals]
        qnr_out = {"count": len(pts), "values": len(vals),
                   "max_abs_imag": float(np.max(np.abs(vals.imag))),
                   "min_re": float(np.min(vals.real)), "max_re": float(np.max(vals.real)),
                   "min_margin": float(np.min(margins)), "inside": int(sum(inside))}
        checks["qnr_in_enclosure"] = all(inside)

    return {
        "schema": SCHEMA_ID,
        "version": __version__,
        "seed": int(opts.seed),
        "source": source or {},
        "system": _system_dict(system),
        "bound_pair": {"a": a, "b": b, "a_hat": a_hat, "b_hat": b_hat,
                       "psd_residual": enclosure.psd_residual(system, a, b),
                       "lower_psd_residual": enclosure.lower_psd_residual(system, a_hat, b_hat)},
        "enclosure": _params_dict(params),
        "spectrum": spectrum,
        "variational": {"gamma0": res.gamma0, "kappa": res.kappa,
                        "eigenvalues": res.eigenvalues, "converged": res.converged,
                        "iterations": res.iterations, "oracle_match": bool(match),
                        "oracle_deviation": dev, "witness": witness},
        "bounds": {"nu": rep.est1_upper, "est1_lower": rep.est1_lower,
                   "est1_upper": rep.est1_upper, "est2_upper": rep.est2_upper,
                   "discriminant": rep.discriminant, "discr_ok": rep.discr_ok,
                   "asym_residual": rep.asym_residual, "margins": rep.margins()},
        "krein": krein_out,
        "qnr": qnr_out,
        "assertions": checks,
        "passed": all(checks.values()),
    }


def certify(system: BlockSystem, opts: Options) -> dict:
    """Minimal certificate: signed margins, positive meaning satisfied."""
    a, b, a_hat, b_hat, params = _choose(system, opts)
    psd = enclosure.psd_residual(system, a, b)
    floor = -tol().psd * (1 + system.norm_A + system.norm_B ** 2)
    membership = [{"re": z.real, "im": z.imag, "margin": enclosure.enclosure_margin(z, params)}
                  for z in system.spectrum]
    res = _variational(system, params, opts)
    rep = vareig.bounds_report(system, params, res, a, b, a_hat, b_hat)
    margins = rep.margins()
    per_n = [{"n": i + 1, "lambda": lam,
              **{k: margins[k][i] for k in margins}} for i, lam in enumerate(res.eigenvalues)]
    slack = [m["margin"] + enclosure.box_tolerance(complex(m["re"], m["im"]))
             for m in membership]
    ok = (psd - floor >= 0 and all(s >= 0 for s in slack)
          and (rep.holds() if res.count else True))
    return {
        "schema": SCHEMA_ID, "version": __version__,
        "bound_pair": {"a": a, "b": b, "psd_margin": psd - floor},
        "enclosure": _params_dict(params),
        "condA2_margin": ((params.alpha_minus - params.delta_plus) / 2
                          - params.b - math.sqrt(max(params.discriminant, 0.0))),
        "membership": membership,
        "gamma0": res.gamma0, "kappa": res.kappa,
        "bounds": per_n,
        "passed": bool(ok),
    }


def qnr_csv(system: BlockSystem, opts: Options) -> tuple[str, str]:
    """Point cloud CSV and enclosure boundary CSV."""
    if opts.seed is None:
        raise InputError("a seed is required (manifest 'seed' or --seed)")
    _, _, _, _, params = _choose(system, opts)
    pts = qnr.sample_qnr(system, opts.samples, opts.seed)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "branch", "alpha", "beta", "delta"])
    f = lambda v: format(float(v), ".17g")  # noqa: E731
    for p in pts:
        beta = p.beta.real if isinstance(p.beta, complex) else p.beta
        for branch, z in (("+", p.lambda_plus), ("-", p.lambda_minus)):
            w.writerow([f(z.real), f(z.imag), branch, f(p.alpha), f(beta), f(p.delta)])
    right = max(system.alpha_plus + system.norm_B,
                params.mu_plus if params.mu_plus is not None else params.mu)
    bd = enclosure.enclosure_boundary(params, right)
    bbuf = io.StringIO()
    bw = csv.writer(bbuf, lineterminator="\n")
    bw.writerow(["kind", "index", "re", "im"])
    for i, (lo, hi) in enumerate(bd["intervals"]):
        bw.writerow(["interval_start", i, f(lo), f(0.0)])
        bw.writerow(["interval_end", i, f(hi), f(0.0)])
    for i, (x, y) in enumerate(bd["box"] or []):
        bw.writerow(["box_corner", i, f(x), f(y)])
    return buf.getvalue(), bbuf.getvalue()


def emit_example(name: str, config: dict, directory: str | os.PathLike,
                 seed: int = 0) -> Path:
    """Write A.mtx, B.mtx, D.mtx and a manifest referencing them."""
    system = examples.build_named(name, **config)
    d = Path(directory)
    for key, M in (("A", system.A), ("B", system.B), ("D", system.D)):
        write_matrix(d / f"{key}.mtx", M)
    manifest = {"matrices": {"A": "A.mtx", "B": "B.mtx", "D": "D.mtx"}, "seed": seed}
    path = d / "manifest.json"
    write_atomic(path, dumps(manifest))
    return path


# --- argument parsing ------------------------------------------------------

def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("manifest", help="JSON manifest")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--seed", type=int, help="RNG seed (overrides the manifest)")
    p.add_argument("--samples", type=int, help="QNR / witness sample count")
    p.add_argument("--b-grid", type=_float_list, dest="b_grid",
                   help="comma-separated b values for the bound search")
    p.add_argument("--gamma0", type=float, help="reference point for kappa and the eigenvalue count")
    p.add_argument("--num-eigs", type=int, dest="num_eigs",
                   help="number of variational eigenvalues (default: all)")
    p.add_argument("--tol-scale", type=_positive, default=1.0, dest="tol_scale",
                   help="multiply every tolerance by this factor")
    p.add_argument("--no-krein", action="store_true", dest="no_krein", help="skip Krein certificates")
    p.add_argument("--no-qnr", action="store_true", dest="no_qnr", help="skip QNR sampling")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jspectra", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jspectra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("analyze", help="full pipeline report (JSON)"))
    _common(sub.add_parser("certify", help="signed-margin certificate (JSON)"))
    q = sub.add_parser("qnr", help="quadratic numerical range samples (CSV)")
    _common(q)
    q.add_argument("--boundary-out", dest="boundary_out",
                   help="enclosure boundary CSV (default: <out>_boundary.csv)")
    e = sub.add_parser("example", help="write example matrices and a manifest")
    e.add_argument("name", choices=sorted(examples.BUILDERS))
    e.add_argument("--n", type=int, required=True, help="grid size")
    e.add_argument("--emit", required=True, help="output directory")
    e.add_argument("--seed", type=int, default=0, help="seed recorded in the manifest")
    e.add_argument("--param", action="append", default=[], metavar="KEY=JSON",
                   help="profile value, e.g. w=2 or u='{\"kind\": \"step\"}'")
    return parser


def _parse_params(items: list[str]) -> dict:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise InputError(f"--param expects KEY=VALUE, got {item!r}")
        try:
            out[key] = json.loads(val)
        except json.JSONDecodeError as exc:
            raise InputError(f"--param {key}: {exc.msg}") from None
    return out


def _run(args: argparse.Namespace) -> int:
    if args.command == "example":
        config = {"n": args.n, **_parse_params(args.param)}
        validate_manifest({"example": {"name": args.name, "config": config}}, "--param")
        config = {k: (v if k == "n" else _profile(v, Path.cwd())) for k, v in config.items()}
        path = emit_example(args.name, config, args.emit, args.seed)
        print(path)
        return 0

    man = load_manifest(args.manifest)
    opts = resolve_options(man, args)
    with tolerance_scale(args.tol_scale):
        system = build_from_manifest(man)
        if args.command == "analyze":
            report = analyze(system, opts, _source(man))
            validate_report(report)
            _deliver(dumps(report), args.out)
            passed = report["passed"]
        elif args.command == "certify":
            cert = certify(system, opts)
            _deliver(dumps(cert), args.out)
            passed = cert["passed"]
        else:
            points, boundary = qnr_csv(system, opts)
            _deliver(points, args.out)
            bpath = args.boundary_out
            if bpath is None and args.out is not None:
                out = Path(args.out)
                bpath = str(out.with_name(out.stem + "_boundary.csv"))
            if bpath is not None:
                write_atomic(bpath, boundary)
            passed = True
    if not passed:
        raise CheckFailed(f"{args.command}: one or more checks failed")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except CheckFailed as exc:
        print(f"jspectra: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"jspectra: input error: {exc}", file=sys.stderr)
        return 1
    except JSpectraError as exc:
        print(f"jspectra: numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
