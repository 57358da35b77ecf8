"""Command-line front end.

Subcommands: ``fit``, ``forecast``, ``crossing``, ``improve``, ``classes``,
``limit``. Reports are JSON with alphabetically ordered keys or TSV with a
header row; floats are written with 17 significant digits.

Exit codes: 0 success, 1 usage, 2 data error, 3 numeric error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .basis import BasisKind, ScalingModel, model_value
from .classes import DEFAULT_LIFECYCLE, class_summaries, lifecycle_check, load_labeled
from .errors import DataError, NumericError
from .fitting import DEFAULT_EPOCH, Fixed, Free, compare_models
from .forecast import (
    DEFAULT_TEMPERATURE,
    anchored_model,
    crossing_year,
    extrapolate,
    koomey_model,
    landauer_limit,
)
from .ingest import annual_improvement, format_float, load_series

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3
DEFAULT_KINDS = (BasisKind.EXP, BasisKind.RATIO, BasisKind.LI, BasisKind.LOG)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- serialization -------------------------------------------------------------

class Fixed6(float):
    """A float rendered with exactly six decimals."""


def _json(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, Fixed6):
        return format(float(obj), ".6f") if math.isfinite(obj) else "null"
    if isinstance(obj, float):
        return format_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json(obj[k], indent, level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _json(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    """Deterministic JSON: sorted keys, 17-significant-digit floats, NaN/inf as null."""
    return _json(obj, indent, 0) + "\n"


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def tsv(header, rows):
    lines = ["\t".join(header)]
    lines.extend("\t".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


# -- argument helpers ----------------------------------------------------------

def _kinds(text):
    try:
        kinds = [BasisKind.parse(k) for k in text.split(",") if k.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not kinds:
        raise argparse.ArgumentTypeError("empty kind list")
    return kinds


def _kind(text):
    try:
        return BasisKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text):
    try:
        lo, hi = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    return lo, hi


def _positive(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return v


def _read_input(path, column):
    with open(path, encoding="utf-8") as fh:
        return load_series(fh, column)


def _fit_record(result):
    m = result.model
    return {
        "kind": m.kind.value,
        "a": m.a,
        "b": m.b,
        "t0": m.t0,
        "rmse_log2": result.rmse_log2,
        "sse_log2": result.sse_log2,
        "aicc": result.aicc,
        "n": result.n,
        "k": result.k,
    }


def _models_from_report(path, kind=None):
    """Models from a ``fit`` report in ranking order, or the one of ``kind``."""
    try:
        with open(path, encoding="utf-8") as fh:
            report = json.load(fh)
        fits = report["fits"]
        order = report.get("ranking", sorted(fits))
        models = [ScalingModel.from_dict(fits[k]) for k in order]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise DataError(f"cannot read model report {path}: {exc}") from None
    if kind is not None:
        models = [m for m in models if m.kind is kind]
        if not models:
            raise DataError(f"model report {path} has no {kind.value} fit")
    return models


def _inline_model(args):
    given = [args.a, args.b, args.t0]
    if args.kind is None or any(v is None for v in given):
        raise UsageError("inline model needs --kind, --a, --b and --t0 (or use --model PATH)")
    return ScalingModel(args.kind, args.a, args.b, args.t0)


# -- subcommands -----------------------------------------------------------------

def cmd_fit(args):
    series = _read_input(args.input, args.column)
    if args.t0_search is not None:
        epoch = Free(*args.t0_search)
        epoch_doc = {"policy": "free", "lo": epoch.lo, "hi": epoch.hi}
    else:
        epoch = Fixed(args.t0)
        epoch_doc = {"policy": "fixed", "t0": epoch.t0}
    comparison = compare_models(series, args.kinds, epoch)
    ranked = list(comparison)
    if args.format == "tsv":
        cols = ["rank", "kind", "a", "b", "t0", "rmse_log2", "sse_log2", "aicc", "n", "k"]
        rows = []
        for i, r in enumerate(ranked, start=1):
            rec = _fit_record(r)
            rows.append([i] + [rec[c] for c in cols[1:]])
        return tsv(cols, rows)
    doc = {
        "epoch": epoch_doc,
        "failed": {k.value: msg for k, msg in comparison.failures.items()},
        "fits": {r.kind.value: _fit_record(r) for r in ranked},
        "ranking": [r.kind.value for r in ranked],
        "series": {
            "name": series.name,
            "unit": series.unit,
            "n": len(series),
            "duplicates": series.duplicates,
        },
    }
    return dumps(doc)


def cmd_forecast(args):
    models = _models_from_report(args.model, args.kind) if args.model else [_inline_model(args)]
    observed = {}
    if args.input:
        s = _read_input(args.input, args.column)
        observed = dict(zip(s.t.tolist(), s.y.tolist()))
    columns = [extrapolate(m, args.t_from, args.t_to, args.step) for m in models]
    names = [m.kind.value for m in models]
    if len(set(names)) != len(names):
        names = [f"{n}_{i}" for i, n in enumerate(names)]
    header = ["t"] + (["observed"] if args.input else []) + names
    rows = []
    for i, p in enumerate(columns[0]):
        row = [p.t] + ([observed.get(p.t)] if args.input else [])
        row.extend(col[i].value for col in columns)
        rows.append(row)
    if args.format == "json":
        return dumps([dict(zip(header, r)) for r in rows])
    return tsv(header, rows)


def _crossing_model(args):
    if args.model:
        return _models_from_report(args.model, args.kind)[0]
    if args.baseline_year is not None or args.baseline_value is not None or args.doubling is not None:
        if None in (args.baseline_year, args.baseline_value, args.doubling):
            raise UsageError("baseline model needs --baseline-year, --baseline-value and --doubling")
        kind = args.kind or BasisKind.EXP
        if kind is BasisKind.EXP:
            return koomey_model(args.baseline_year, args.baseline_value, args.doubling)
        t0 = DEFAULT_EPOCH if args.t0 is None else args.t0
        return anchored_model(kind, args.baseline_year, args.baseline_value, 1.0 / args.doubling, t0)
    return _inline_model(args)


def cmd_crossing(args):
    if (args.target is None) == (not args.landauer):
        raise UsageError("give exactly one of --target or --landauer")
    model = _crossing_model(args)
    target = args.target if args.target is not None else landauer_limit(args.temp).ops_per_kwh
    year = crossing_year(model, target)
    doc = {"model": model.to_dict(), "target": float(target), "year": Fixed6(year)}
    if args.format == "tsv":
        return tsv(["year", "target", "kind", "a", "b", "t0"],
                   [[format(year, ".6f"), float(target), model.kind.value, model.a, model.b, model.t0]])
    return dumps(doc)


def cmd_improve(args):
    series = _read_input(args.input, args.column)
    rows = annual_improvement(series)
    if args.format == "json":
        return dumps([{"t_mid": t, "ratio": r} for t, r in rows])
    return tsv(["t_mid", "ratio"], rows)


def cmd_classes(args):
    with open(args.input, encoding="utf-8") as fh:
        points = load_labeled(fh, args.column, args.label_column)
    summaries = class_summaries(points)
    lo, hi = args.lifecycle
    flags = lifecycle_check(summaries, lo, hi)
    records = []
    for s, f in zip(summaries, flags):
        rec = s.to_dict()
        rec["lifecycle_inside"] = f.inside
        records.append(rec)
    if args.format == "tsv":
        cols = ["label", "t_start", "t_end", "span_years", "median_value", "cv", "lifecycle_inside"]
        return tsv(cols, [[str(r[c]).lower() if isinstance(r[c], bool) else r[c] for c in cols] for r in records])
    return dumps({"classes": records, "lifecycle": {"lo": lo, "hi": hi}})


def cmd_limit(args):
    limit = landauer_limit(args.temp)
    if args.format == "tsv":
        d = limit.to_dict()
        return tsv(list(d), [list(d.values())])
    return dumps(limit.to_dict())


# -- parser ----------------------------------------------------------------------

def _common(p, default_format):
    p.add_argument("--format", choices=("json", "tsv"), default=default_format)
    p.add_argument("--output", metavar="PATH", help="write here instead of standard output")


def _model_flags(p):
    p.add_argument("--model", metavar="PATH", help="JSON report written by `fit`")
    p.add_argument("--kind", type=_kind, help="basis kind (selects from --model, or inline)")
    p.add_argument("--a", type=float, help="inline slope")
    p.add_argument("--b", type=float, help="inline intercept")
    p.add_argument("--t0", type=float, help="inline epoch year")


def build_parser():
    parser = _Parser(prog="scalinglaws", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fit", help="fit and rank growth laws")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--column", default="value", help="value column (default: value)")
    p.add_argument("--kinds", type=_kinds, default=list(DEFAULT_KINDS),
                   help="comma-separated kinds from exp,ratio,li,log (default: all)")
    epoch = p.add_mutually_exclusive_group()
    epoch.add_argument("--t0", type=float, default=DEFAULT_EPOCH, help="fixed epoch year (default: 1943)")
    epoch.add_argument("--t0-search", type=_range, metavar="LO:HI", help="search the epoch in [LO, HI]")
    _common(p, "json")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("forecast", help="evaluate models on a time grid")
    _model_flags(p)
    p.add_argument("--from", dest="t_from", type=float, required=True, metavar="YEAR")
    p.add_argument("--to", dest="t_to", type=float, required=True, metavar="YEAR")
    p.add_argument("--step", type=_positive, default=1.0, metavar="YEARS")
    p.add_argument("--input", metavar="PATH", help="observations to show alongside")
    p.add_argument("--column", default="value")
    _common(p, "tsv")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("crossing", help="year a model reaches a target")
    _model_flags(p)
    p.add_argument("--baseline-year", type=float)
    p.add_argument("--baseline-value", type=_positive)
    p.add_argument("--doubling", type=_positive, metavar="YEARS", help="doubling time at the baseline")
    p.add_argument("--target", type=_positive)
    p.add_argument("--landauer", action="store_true", help="target the Landauer ops-per-kWh ceiling")
    p.add_argument("--temp", type=_positive, default=DEFAULT_TEMPERATURE, metavar="K")
    _common(p, "json")
    p.set_defaults(func=cmd_crossing)

    p = sub.add_parser("improve", help="annualised improvement between observations")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--column", default="value")
    _common(p, "tsv")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("classes", help="summarise labelled power trajectories")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--column", default="value")
    p.add_argument("--label-column", default="label")
    p.add_argument("--lifecycle", type=_range, default=DEFAULT_LIFECYCLE, metavar="LO:HI")
    _common(p, "json")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("limit", help="Landauer bound at a temperature")
    p.add_argument("--temp", type=_positive, default=DEFAULT_TEMPERATURE, metavar="K")
    _common(p, "json")
    p.set_defaults(func=cmd_limit)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help / --version exit 0; every parse failure is a usage error
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"scalinglaws {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError) as exc:
        print(f"scalinglaws {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericError as exc:
        print(f"scalinglaws {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"scalinglaws {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"scalinglaws {args.command}: {exc}", file=sys.stderr)
            return EXIT_DATA
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
