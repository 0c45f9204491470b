"""Command-line front end.

Exit status: 0 on success, 1 for usage errors, 2 when a computation fails
(non-convergence, domain error); failures also print a JSON error record to
stderr.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import sys
from enum import Enum

from .errors import NumericError, UnitChargeError

FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- serialization ---------------------------------------------------------

def _fmt_float(x: float) -> str:
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def to_json(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return _fmt_float(v)
    s = str(v)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _table_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def emit_report(rows: list[dict], fmt: str, columns: list[str] | None = None, single: bool = True) -> str:
    """Render one record (``single``) or a list of records.

    JSON: one object, or an array for lists. CSV: header row then data.
    Table: aligned ``key value`` pairs for one record, columns otherwise.
    """
    columns = columns or list(rows[0])
    if fmt == "json":
        return (to_json(rows[0]) if single else to_json(rows)) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        out.write(",".join(columns) + "\n")
        for r in rows:
            out.write(",".join(_csv_cell(r.get(c)) for c in columns) + "\n")
        return out.getvalue()
    if single:
        r = rows[0]
        width = max(len(c) for c in columns)
        return "".join(f"{c.ljust(width)}  {_table_cell(r.get(c))}\n" for c in columns)
    cells = [[_table_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _plain(v):
    if isinstance(v, Enum):
        return v.value
    return v


# -- subcommands -----------------------------------------------------------

def _cmd_constants(args):
    from .units import constants_records

    rows = constants_records()
    return rows, ["name", "value", "unit", "system"], False


def _cmd_sum_check(args):
    from .lattice_sum import poisson_check

    betas = args.beta if args.family == "lorentzian" else [None]
    if args.family == "lorentzian" and not betas:
        betas = [1.0]
    rows = []
    for beta in betas:
        rep = poisson_check(
            args.family, beta, args.N, rhs_terms=args.rhs_terms, tail_correction=not args.no_tail_correction
        )
        rows.append(rep.to_dict())
    columns = list(rows[0])
    return rows, columns, len(rows) == 1


def _cmd_moments(args):
    from .regmoments import QuadratureSpec, RationalMoment, moment_quadrature

    rows = []
    for eps in args.eps:
        for lam in args.lam:
            xi = 2 * math.pi * lam
            m = RationalMoment.evaluate(args.kernel, eps, xi)
            row = {"kernel": m.kernel.value, "eps": m.eps, "xi": m.xi, "closed_form": m.value}
            if args.oracle:
                q = moment_quadrature(m.kernel, eps, xi, QuadratureSpec(scheme=args.scheme, contour=args.contour))
                row["quadrature"] = q.value
                row["quadrature_error"] = float(q.error_estimate)
            row["limit"] = m.limit if xi != 0 else None
            rows.append(row)
    return rows, list(rows[0]), len(rows) == 1


def _length_text(text):
    from .units import parse_length

    try:
        return parse_length(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_casimir(args):
    from .casimir import CavitySpec, casimir_energy
    from .units import UnitSystem, convert

    cavity = CavitySpec(_length_text(args.diameter))
    res = casimir_energy(cavity, args.route, lambda_max=args.lambda_max)
    system = UnitSystem.parse(args.system)
    row = {
        "route": res.route.value,
        "diameter": convert(res.diameter, system).value,
        "energy": convert(res.energy, system).value,
        "pressure": convert(res.pressure, system).value if res.pressure is not None else None,
        "series_coefficient": res.series_coefficient,
        "zeta4": res.zeta4,
    }
    columns = list(row)
    if args.format == "json":
        row["lambda_max"] = res.lambda_max
        row["series_partial"] = res.series_partial
        row["system"] = system.value
    return [row], columns, True


def _balance_row(res, with_diameter=False):
    row = {}
    if with_diameter:
        from .units import UnitSystem, convert

        row["diameter"] = convert(res.diameter, UnitSystem.SI).value
    row.update(
        {
            "charge_gaussian": res.charge_gaussian.value,
            "charge_si": res.charge_si.value,
            "alpha": res.alpha,
            "alpha_inverse": res.alpha_inverse,
            "alpha_exp": res.alpha_exp,
            "discrepancy_a": res.discrepancy_a,
            "discrepancy_b": res.discrepancy_b,
        }
    )
    return row


def _cmd_balance(args):
    from .casimir import CavitySpec
    from .electro import balance_charge

    cavity = CavitySpec(_length_text(args.diameter)) if args.diameter else None
    row = _balance_row(balance_charge(cavity))
    return [row], list(row), True


def _cmd_sweep(args):
    from .casimir import CavitySpec
    from .electro import sweep

    items = [t for t in (s.strip() for s in args.diameters.split(",")) if t]
    if not items:
        raise UsageError("sweep: --diameters needs at least one length")
    cavities = [CavitySpec(_length_text(t)) for t in items]
    rows = [_balance_row(r, with_diameter=True) for r in sweep(cavities, parallel=args.parallel)]
    columns = ["diameter", "charge_gaussian", "charge_si", "alpha", "alpha_inverse"]
    rows = [{c: r[c] for c in columns} for r in rows]
    return rows, columns, False


def _float_list(text):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    parser = _Parser(prog="unitcharge", description="Casimir balance charge calculator")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("constants", parents=[common], help="pinned physical constants")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("sum-check", parents=[common], help="Poisson summation identities")
    p.add_argument("--family", choices=("gaussian", "lorentzian"), default="gaussian")
    p.add_argument("--beta", type=_float_list, default=[], help="comma-separated beta values (lorentzian)")
    p.add_argument("--N", type=int, default=None, help="direct-sum truncation")
    p.add_argument("--rhs-terms", type=int, default=None)
    p.add_argument("--no-tail-correction", action="store_true")
    p.set_defaults(func=_cmd_sum_check)

    p = sub.add_parser("moments", parents=[common], help="regularized moment integrals")
    p.add_argument("--kernel", choices=("j0", "cosine"), default="j0")
    p.add_argument("--eps", type=_float_list, default=[0.01])
    p.add_argument("--lam", type=_float_list, default=[1.0], help="xi = 2 pi lam")
    p.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--scheme", choices=("fixed", "adaptive"), default="fixed")
    p.add_argument("--contour", choices=("auto", "real", "imaginary"), default="auto")
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("casimir", parents=[common], help="Casimir energy and pressure")
    p.add_argument("--diameter", default="1m")
    p.add_argument("--route", choices=("3d", "1d"), default="3d")
    p.add_argument("--lambda-max", type=int, default=None)
    p.add_argument("--system", choices=("si", "gaussian"), default="si")
    p.set_defaults(func=_cmd_casimir)

    p = sub.add_parser("balance", parents=[common], help="charge balancing the Casimir stress")
    p.add_argument("--diameter", default=None)
    p.set_defaults(func=_cmd_balance)

    p = sub.add_parser("sweep", parents=[common], help="balance charge over several sizes")
    p.add_argument("--diameters", required=True, help="comma-separated lengths, e.g. 1e-9m,1m")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_sweep)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "lambda_max", None) is not None and args.lambda_max < 1:
            raise UsageError("--lambda-max must be >= 1")
        rows, columns, single = args.func(args)
        rows = [{k: _plain(v) for k, v in r.items()} for r in rows]
        text = emit_report(rows, args.format, columns, single)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 1
    except (NumericError, UnitChargeError, ValueError) as exc:
        report = {"error": type(exc).__name__, "message": str(exc)}
        for k, v in getattr(exc, "details", {}).items():
            report[k] = float(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else str(v)
        print(to_json(report), file=stderr)
        return 2

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.output}: {exc}", file=stderr)
            return 1
    else:
        stdout.write(text)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
