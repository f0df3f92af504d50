"""Command-line front end.

Every command writes one JSON document (CSV for ``curve``) to stdout.
Floats are printed with 17 significant digits and +inf as the string
"inf", so identical invocations give byte-identical output.

Exit codes: 0 ok, 2 usage or parse error, 3 domain error,
4 unsupported parameter combination.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from donoghue import differential_example as dx
from donoghue import entropy_geometry, lsystem
from donoghue.errors import DonoghueError, UnsupportedCombination
from donoghue.herglotz import classify, FromMeasure, sample_grid
from donoghue.lsystem import EntropyReport
from donoghue.measures import SpectralMeasure
from donoghue.model_triple import ModelTriple, oracle_compare

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_UNSUPPORTED = 4


class UsageError(Exception):
    pass


def format_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if x == 0:
        x = 0.0  # drop the sign of zero
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def dumps(obj) -> str:
    """Compact JSON with fixed 17-digit floats."""
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, complex):
        return dumps({"re": obj.real, "im": obj.imag})
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _extended(value) -> float:
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "+inf", "infinity"):
            return math.inf
        raise UsageError(f"expected a number or 'inf', got {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise UsageError(f"expected a number, got {value!r}")
    return float(value)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_measure(path) -> SpectralMeasure:
    doc = _load_json(path)
    try:
        return SpectralMeasure.from_dict(doc)
    except DonoghueError as exc:
        raise UsageError(f"invalid measure document {path}: {exc}") from None


def _report_dict(r: EntropyReport):
    return {"entropy": r.entropy, "dissipation": r.dissipation}


# -- commands ----------------------------------------------------------


def cmd_classify(args):
    report = classify(FromMeasure(_load_measure(args.measure_file)))
    return report.to_dict()


def cmd_represent(args):
    rec = lsystem.represent(args.a, args.alpha, _load_measure(args.measure_file))
    return rec.to_dict()


def cmd_impedance(args):
    try:
        z = complex(args.z.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse complex number {args.z!r}") from None
    rec = lsystem.represent(args.a, args.alpha, _load_measure(args.measure_file))
    v = rec.impedance(z)
    return {"z": z, "impedance": v, "transfer": lsystem.impedance_to_transfer(v)}


def cmd_entropy(args):
    if (args.a is None) == (args.kappa is None):
        raise UsageError("give exactly one of --a or --kappa")
    if args.a is not None:
        a = args.a
        return {
            "entropy": entropy_geometry.entropy_of_a(a),
            "dissipation": entropy_geometry.dissipation_of_a(a),
        }
    return _report_dict(EntropyReport.from_kappa(args.kappa))


def cmd_couple(args):
    reports = []
    for path in args.report_files:
        doc = _load_json(path)
        for item in doc if isinstance(doc, list) else [doc]:
            if not isinstance(item, dict) or set(item) != {"entropy", "dissipation"}:
                raise UsageError(f"{path}: reports need exactly 'entropy' and 'dissipation'")
            reports.append(EntropyReport(_extended(item["entropy"]), _extended(item["dissipation"])))
    if not reports:
        raise UsageError("no reports to couple")
    total = reports[0]
    for r in reports[1:]:
        total = lsystem.couple(total, r)
    return _report_dict(total)


def cmd_curve(args):
    rows = ["a,entropy,dissipation"]
    for p in entropy_geometry.curve(args.amin, args.amax, args.n):
        rows.append(",".join(format_float(v).strip('"') for v in p))
    return "\n".join(rows) + "\n"


def example_report(ell: float) -> dict:
    p = dx.ex_params(ell)
    ch = dx.ex_channel_coefficients(ell)
    w10 = dx.ex_transfer_theta10(ell, -1j)
    w1a_minus = dx.ex_transfer_theta1a(ell, -1j)
    w1a_plus = dx.ex_transfer_theta1a(ell, 1j)
    return {
        "ell": ell,
        "kappa": p.kappa,
        "a": p.a,
        "entropy": p.entropy,
        "dissipation": p.dissipation,
        "inverse_branch": {
            "a": 1.0 / p.a,
            "entropy": entropy_geometry.entropy_of_a(1.0 / p.a),
            "dissipation": entropy_geometry.dissipation_of_a(1.0 / p.a),
        },
        "weyl_at_i": dx.ex_weyl(ell, 1j),
        "livsic_at_i": dx.ex_livsic(ell, 1j),
        "theta10": {
            "transfer_at_minus_i": w10,
            "entropy": math.inf if w10 == 0 else -math.log(abs(w10)),
        },
        "theta1a": {
            "transfer_at_minus_i": w1a_minus,
            "transfer_at_i": w1a_plus,
            "entropy": -math.log(abs(w1a_minus)),
        },
        "channel": {
            "phi_minus_psi_prefactor": ch.minus_prefactor,
            "phi_plus_psi_prefactor": ch.plus_prefactor,
            "chi10": ch.chi10.to_dict(),
            "chi1a": ch.chi1a.to_dict(),
            "chi10_max_dev": ch.chi10_dev,
            "chi1a_max_dev": ch.chi1a_dev,
        },
    }


def cmd_example(args):
    return example_report(args.ell)


def cmd_oracle(args):
    sigma = _load_measure(args.measure_file)
    if args.grid < 1:
        raise UsageError("--grid must be positive")
    model = ModelTriple.from_measure(sigma)
    devs = [oracle_compare(model, z).abs_dev for z in sample_grid(args.grid)]
    return {"n_atoms": model.n, "grid": args.grid, "max_abs_dev": max(devs), "surrogate": sigma.surrogate}


# -- wiring ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="donoghue", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="norming constant, kappa and class of a measure")
    c.add_argument("measure_file")
    c.set_defaults(func=cmd_classify)

    for name, func, helptext in (
        ("represent", cmd_represent, "L-system record realizing a * M_alpha"),
        ("impedance", cmd_impedance, "evaluate the realized impedance at --z"),
    ):
        r = sub.add_parser(name, help=helptext)
        r.add_argument("measure_file")
        r.add_argument("--a", type=float, default=1.0)
        r.add_argument("--alpha", type=float, default=0.0)
        if name == "impedance":
            r.add_argument("--z", required=True, help="complex point, e.g. 0.5+2j")
        r.set_defaults(func=func)

    e = sub.add_parser("entropy", help="c-entropy and dissipation from a or kappa")
    e.add_argument("--a", type=float)
    e.add_argument("--kappa", type=float)
    e.set_defaults(func=cmd_entropy)

    cp = sub.add_parser("couple", help="couple entropy reports (JSON object or list per file)")
    cp.add_argument("report_files", nargs="+")
    cp.set_defaults(func=cmd_couple)

    cv = sub.add_parser("curve", help="CSV of a, S(a), D(a)")
    cv.add_argument("--amin", type=float, required=True)
    cv.add_argument("--amax", type=float, required=True)
    cv.add_argument("--n", type=int, required=True)
    cv.set_defaults(func=cmd_curve)

    ex = sub.add_parser("example", help="interval-operator example report")
    ex.add_argument("--ell", type=float, required=True)
    ex.set_defaults(func=cmd_example)

    o = sub.add_parser("oracle", help="max deviation between the model-triple and transform paths")
    o.add_argument("measure_file")
    o.add_argument("--grid", type=int, default=50)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload = args.func(args)
    except UsageError as exc:
        stderr.write(dumps({"status": "error", "code": EXIT_USAGE, "message": str(exc)}) + "\n")
        return EXIT_USAGE
    except UnsupportedCombination as exc:
        stderr.write(dumps({"status": "error", "code": EXIT_UNSUPPORTED, "message": str(exc)}) + "\n")
        return EXIT_UNSUPPORTED
    except DonoghueError as exc:
        stderr.write(dumps({"status": "error", "code": EXIT_DOMAIN, "message": str(exc)}) + "\n")
        return EXIT_DOMAIN
    stdout.write(payload if isinstance(payload, str) else dumps(payload) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
