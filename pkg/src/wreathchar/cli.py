"""Command-line surface: every operation, reproducible machine-readable output.

Exit codes: 0 ok, 2 usage/parse error, 3 cell budget exceeded, 4 group
validation failure.  Every report embeds the artifact version and the fully
resolved run configuration (including the seed), so identical configurations
reproduce byte-identical output at any worker count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .base_group import BUILTIN_NAMES, GroupValidationError, builtin, load, store, validate
from .congruence import mash_canonical, sim_p_equivalent
from .partitions import MultiPartition
from .stats import (
    CSV_COLUMNS,
    DEFAULT_CONFIDENCE,
    asymptotic_check,
    certificate_census,
    concentration_check,
    exact_census,
    sampled_census,
)
from .weyl_d import dn_restricted_census
from .wreath_chars import (
    DEFAULT_CELL_BUDGET,
    CellBudgetExceeded,
    character_table,
    mn_character,
    perm_character,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VALIDATION = 4


class UsageError(ValueError):
    pass


def _parse_label(text: str) -> MultiPartition:
    try:
        data = json.loads(text)
        return MultiPartition.from_tuples(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad multipartition label {text!r}: {exc}") from None


def _resolve_group(args):
    if getattr(args, "group_file", None):
        with open(args.group_file, "r", encoding="utf-8") as fh:
            return load(json.load(fh))
    name = getattr(args, "group", None)
    if not name:
        raise UsageError("need --group NAME or --group-file PATH")
    try:
        return builtin(name)
    except KeyError as exc:
        raise UsageError(str(exc)) from None


def _resolve_seed(args) -> int:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = int.from_bytes(os.urandom(8), "big")
    return seed & ((1 << 64) - 1)


def _config_echo(args, **extra) -> dict:
    # workers only schedules the computation, so it is excluded to keep
    # reports byte-identical at any worker count
    skip = {"func", "workers"}
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    cfg.update(extra)
    cfg["version"] = __version__
    return cfg


def _emit(args, payload: dict, csv_columns=None, csv_values=None):
    if args.format == "csv" and csv_columns is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_columns)
        writer.writerow(csv_values)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _report_payload(args, report, **extra) -> dict:
    payload = report.to_json_dict()
    payload["config"] = _config_echo(args, **extra)
    return payload


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_entry(args) -> int:
    group = _resolve_group(args)
    lam = _parse_label(args.lam)
    mu = _parse_label(args.mu)
    chi = mn_character(group, lam, mu)
    perm = perm_character(group, lam, mu)
    payload = {
        "chi": str(chi),
        "perm": str(perm),
        "config": _config_echo(args),
    }
    _emit(args, payload, csv_columns=("chi", "perm"), csv_values=(str(chi), str(perm)))
    return EXIT_OK


def _cmd_table(args) -> int:
    group = _resolve_group(args)
    table = character_table(group, args.n, cell_budget=args.budget, workers=args.workers)
    if args.format == "csv":
        text_io = io.StringIO()
        table.write_csv(text_io)
        text = text_io.getvalue()
    else:
        payload = table.to_json_dict()
        payload["config"] = _config_echo(args)
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_mash(args) -> int:
    mu = _parse_label(args.mu)
    mashed = mash_canonical(mu, args.p)
    canonical = [list(c.parts) for c in mashed.canonical.components]
    payload = {
        "canonical": canonical,
        "largest_part": mashed.largest_part,
        "config": _config_echo(args),
    }
    _emit(
        args,
        payload,
        csv_columns=("canonical", "largest_part"),
        csv_values=(json.dumps(canonical, separators=(",", ":")), str(mashed.largest_part)),
    )
    return EXIT_OK


def _cmd_equiv(args) -> int:
    mu = _parse_label(args.mu)
    nu = _parse_label(args.nu)
    eq = sim_p_equivalent(mu, nu, args.p)
    payload = {"equivalent": eq, "config": _config_echo(args)}
    _emit(args, payload, csv_columns=("equivalent",), csv_values=(str(eq).lower(),))
    return EXIT_OK


def _census_out(args, report, **extra) -> int:
    _emit(
        args,
        _report_payload(args, report, **extra),
        csv_columns=CSV_COLUMNS,
        csv_values=report.csv_row(),
    )
    return EXIT_OK


def _cmd_census(args) -> int:
    group = _resolve_group(args)
    report = exact_census(group, args.n, args.p, cell_budget=args.budget, workers=args.workers)
    return _census_out(args, report)


def _cmd_sample_census(args) -> int:
    group = _resolve_group(args)
    seed = _resolve_seed(args)
    report = sampled_census(
        group,
        args.n,
        args.p,
        samples=args.samples,
        seed=seed,
        workers=args.workers,
        confidence=args.confidence,
    )
    return _census_out(args, report, seed=seed)


def _cmd_cert_census(args) -> int:
    seed = _resolve_seed(args)
    report = certificate_census(
        args.k, args.n, args.p, samples=args.samples, seed=seed, workers=args.workers
    )
    return _census_out(args, report, seed=seed)


def _cmd_asym(args) -> int:
    ratio = asymptotic_check(args.k, args.n)
    payload = {"ratio": ratio, "config": _config_echo(args)}
    _emit(args, payload, csv_columns=("ratio",), csv_values=(repr(ratio),))
    return EXIT_OK


def _cmd_concentration(args) -> int:
    frac = concentration_check(args.k, args.n, args.delta)
    payload = {
        "proportion": f"{frac.numerator}/{frac.denominator}",
        "proportion_decimal": float(frac),
        "config": _config_echo(args),
    }
    _emit(
        args,
        payload,
        csv_columns=("proportion", "proportion_decimal"),
        csv_values=(f"{frac.numerator}/{frac.denominator}", repr(float(frac))),
    )
    return EXIT_OK


def _cmd_dn_census(args) -> int:
    seed = _resolve_seed(args) if args.mode == "sampled" else None
    report = dn_restricted_census(
        args.n,
        args.p,
        mode=args.mode,
        samples=args.samples,
        seed=seed,
        cell_budget=args.budget,
        confidence=args.confidence,
    )
    extra = {} if seed is None else {"seed": seed}
    return _census_out(args, report, **extra)


def _cmd_group_validate(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        document = json.load(fh)
    try:
        group = load(document)
    except GroupValidationError as exc:
        payload = {"ok": False, "problems": exc.problems, "config": _config_echo(args)}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return EXIT_VALIDATION
    payload = {
        "ok": True,
        "group": store(group),
        "config": _config_echo(args),
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_group_args(sub):
    sub.add_argument("--group", help=f"builtin group name, one of {', '.join(BUILTIN_NAMES)}")
    sub.add_argument("--group-file", help="path to a group JSON document")


def _add_common(sub, seed=False, samples=False, workers=False, budget=False):
    sub.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    if seed:
        sub.add_argument("--seed", type=int, help="64-bit seed; random (and echoed) if omitted")
    if samples:
        sub.add_argument("--samples", type=int, required=samples == "required", help="sample count")
    if workers:
        sub.add_argument("--workers", type=int, default=1, help="parallel worker count")
    if budget:
        sub.add_argument(
            "--budget", type=int, default=DEFAULT_CELL_BUDGET, help="max table cells"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathchar",
        description="Exact character values of G wr S_N and mod-p divisibility censuses.",
    )
    parser.add_argument("--version", action="version", version=f"wreathchar {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("entry", help="one character-table cell: chi and the permutation value")
    _add_group_args(sub)
    sub.add_argument("--lambda", dest="lam", required=True, help='irrep label, e.g. "[[1],[1]]"')
    sub.add_argument("--mu", required=True, help='class label, e.g. "[[1,1],[]]"')
    _add_common(sub)
    sub.set_defaults(func=_cmd_entry)

    sub = subs.add_parser("table", help="full character table of G wr S_n")
    _add_group_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--out", help="output path (stdout if omitted)")
    _add_common(sub, workers=True, budget=True)
    sub.set_defaults(func=_cmd_table)

    sub = subs.add_parser("mash", help="canonical mod-p form of a class label")
    sub.add_argument("--mu", required=True)
    sub.add_argument("--p", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_mash)

    sub = subs.add_parser("equiv", help="are two class labels mod-p equivalent?")
    sub.add_argument("--mu", required=True)
    sub.add_argument("--nu", required=True)
    sub.add_argument("--p", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_equiv)

    sub = subs.add_parser("census", help="exact divisibility census over the full table")
    _add_group_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    _add_common(sub, workers=True, budget=True)
    sub.set_defaults(func=_cmd_census)

    sub = subs.add_parser("sample-census", help="sampled census with a Wilson interval")
    _add_group_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    _add_common(sub, seed=True, samples="required", workers=True)
    sub.set_defaults(func=_cmd_sample_census)

    sub = subs.add_parser("cert-census", help="certificate-only census (no characters)")
    sub.add_argument("--k", type=int, required=True, help="number of base-group classes")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    _add_common(sub, seed=True, samples="required", workers=True)
    sub.set_defaults(func=_cmd_cert_census)

    sub = subs.add_parser("asym", help="ln p_k(n) over the Hardy-Ramanujan scale")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_asym)

    sub = subs.add_parser("concentration", help="exact equal-size-window proportion")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--delta", required=True, help="window half-width, e.g. 0.3")
    _add_common(sub)
    sub.set_defaults(func=_cmd_concentration)

    sub = subs.add_parser("dn-census", help="type-D restricted sub-table census")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    sub.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    _add_common(sub, seed=True, samples=True, budget=True)
    sub.set_defaults(func=_cmd_dn_census)

    sub = subs.add_parser("group-validate", help="validate a group JSON document")
    sub.add_argument("--file", required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_group_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CellBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GroupValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
