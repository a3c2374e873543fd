"""Command-line front end.

stdout carries data only; progress and timing go to stderr.  Floats are
printed with 12 significant digits and complex values as re/im pairs, so
identical invocations produce byte-identical output.  Exit codes:
0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field

from . import equidist, expsums, suites
from .characters import character_group
from .concurrency import set_thread_count
from .errors import DomainError
from .witness import bound_report, classify, enumerate_witnesses, mr_decompose

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _round12(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _csum_dict(cs: expsums.ComplexSum) -> dict:
    return {
        "re": cs.real,
        "im": cs.imag,
        "term_count": cs.term_count,
        "error_budget": cs.error_budget,
    }


def _print_kv(pairs) -> None:
    for key, value in pairs:
        print(f"{key}={_fmt(value)}")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _write_csv(path: str | None, header, rows) -> None:
    f, close = _open_out(path)
    try:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if not isinstance(v, str) else v for v in row])
    finally:
        if close:
            f.close()


def cmd_decompose(args) -> int:
    dec = mr_decompose(args.n)
    print(f"d={dec.d} s={dec.s}")
    return EXIT_OK


def cmd_classify(args) -> int:
    c = classify(args.n, args.w)
    parts = [f"w={c.w}", f"class={c.category.value}"]
    if c.stage is not None:
        parts.append(f"stage={c.stage}")
    if c.gcd_value is not None:
        parts.append(f"gcd={c.gcd_value}")
    print(" ".join(parts))
    return EXIT_OK


def cmd_witnesses(args) -> int:
    scan = enumerate_witnesses(args.n)
    counts = scan.counts
    if counts.witness == 0:
        raise DomainError("n is prime: witness set empty" if counts.non_coprime <= 1
                          else f"n={args.n} has no witnesses")
    _print_kv(
        [
            ("n", args.n),
            ("witnesses", counts.witness),
            ("non_coprime", counts.non_coprime),
            ("dth_root", counts.dth_root),
            ("minus_one", counts.minus_one),
        ]
    )
    if args.out:
        _write_csv(args.out, ["w"], ([int(w)] for w in scan.witnesses))
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = bound_report(args.n)
    frac = rep.paper_witness_fraction
    _print_kv(
        [
            ("n", rep.n),
            ("witness_count", rep.witness_count),
            ("paper_witness_fraction", f"{frac.numerator}/{frac.denominator}"),
            ("strong_liar_count", rep.strong_liar_count),
            ("rabin_ok_paper_def", rep.rabin_ok_paper_def),
            ("rabin_ok_liar_def", rep.rabin_ok_liar_def),
            ("least_witness", rep.least_witness),
            ("least_failing_base", rep.least_failing_base),
            ("bach_bound", rep.bach_bound),
            ("bach_bound_log2", rep.bach_bound_log2),
            ("bach_ok", rep.bach_ok),
        ]
    )
    return EXIT_OK


def cmd_histogram(args) -> int:
    rep = equidist.histogram(args.n, args.bins)
    _write_csv(args.out, ["bin_index", "count"], enumerate(rep.counts))
    _print_kv(
        [
            ("n", rep.n),
            ("bins", rep.bin_count),
            ("total_witnesses", rep.total_witnesses),
            ("mean", rep.mean),
            ("max_abs_deviation", rep.max_abs_deviation),
            ("max_relative_deviation", rep.max_relative_deviation),
            ("chi_square_like", rep.chi_square_like),
        ]
    )
    return EXIT_OK


def cmd_weyl(args) -> int:
    rows = equidist.weyl_battery(args.n, args.k)
    _write_csv(None, ["k", "magnitude", "ratio"], ((r.k, r.magnitude, r.ratio) for r in rows))
    return EXIT_OK


def cmd_interval(args) -> int:
    fraction, deviation = equidist.interval_fraction(args.n, args.a, args.b)
    _print_kv([("fraction", fraction), ("deviation", deviation)])
    return EXIT_OK


def cmd_sums(args) -> int:
    rep = expsums.decomposition_report(args.n, args.k)
    payload = {
        "n": rep.n,
        "k": rep.k,
        "witness_sum": _csum_dict(rep.witness_sum),
        "nonwitness_sum": _csum_dict(rep.nonwitness_sum),
        "shared_factor_sum": _csum_dict(rep.shared_factor_sum),
        "dth_root_sum": _csum_dict(rep.dth_root_sum),
        "minus_one_sum": _csum_dict(rep.minus_one_sum),
        "per_stage_sums": [_csum_dict(cs) for cs in rep.per_stage_sums],
        "stage_duplicates": rep.stage_duplicates,
        "residual_total": rep.residual_total,
        "residual_partition": rep.residual_partition,
    }
    text = json.dumps(_round12(payload), indent=2)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_ramanujan(args) -> int:
    r = expsums.ramanujan(args.n, args.k)
    diff = abs(r.brute.value - r.closed)
    _print_kv(
        [
            ("closed", r.closed),
            ("brute_re", r.brute.real),
            ("brute_im", r.brute.imag),
            ("difference", diff),
            ("agrees", diff < 1e-8),
            ("complement_re", r.complement.real),
            ("complement_im", r.complement.imag),
        ]
    )
    return EXIT_OK


def cmd_gauss(args) -> int:
    group = character_group(args.n)
    chi = group.character_by_index(args.char)
    if args.power != 1:
        chi = chi**args.power
    red = expsums.gauss_sum_reduced(chi, args.k)
    _print_kv(
        [
            ("char_index", chi.index),
            ("char_order", chi.order),
            ("conductor", red.conductor),
            ("path", red.path),
            ("claimed_re", red.value.real),
            ("claimed_im", red.value.imag),
            ("brute_re", red.brute.real),
            ("brute_im", red.brute.imag),
            ("difference", red.difference),
            ("agrees_with_brute", red.agrees_with_brute),
        ]
    )
    return EXIT_OK


def cmd_cancel(args) -> int:
    dual = expsums.cancellation_sum_dual(args.n, args.alpha, args.b, args.k)
    direct = dual.direct
    _print_kv(
        [
            ("solution_count", direct.solution_count),
            ("direct_re", direct.total.real),
            ("direct_im", direct.total.imag),
            ("via_characters_re", dual.via_characters.real),
            ("via_characters_im", dual.via_characters.imag),
            ("difference", dual.difference),
            ("agrees", dual.agrees),
            ("sqrt_n_ratio", direct.sqrt_n_ratio),
        ]
    )
    return EXIT_OK


@dataclass
class ExperimentConfig:
    """Flat key = value experiment description; # starts a comment.

    n_values: comma-separated odd integers, or
    n_magnitudes: comma-separated thresholds, each replaced by the least
                  odd composite at least that large, or
    n_range: lo..hi, every odd composite in the inclusive range.
    Other keys: k_max (default 10), bins (default 10000), output_path,
    output_format (csv | json), checks (suite names), threads.
    """

    n_values: list[int] = field(default_factory=list)
    k_max: int = 10
    bins: int = 10_000
    output_path: str | None = None
    output_format: str = "csv"
    checks: list[str] = field(default_factory=list)
    threads: int | None = None


def parse_config(path: str) -> ExperimentConfig:
    cfg = ExperimentConfig()
    seen_source = None
    with open(path) as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            try:
                if key == "n_values":
                    cfg.n_values = [int(v) for v in value.split(",") if v.strip()]
                    seen_source = key
                elif key == "n_magnitudes":
                    cfg.n_values = [
                        equidist.least_odd_composite_at_least(int(v))
                        for v in value.split(",")
                        if v.strip()
                    ]
                    seen_source = key
                elif key == "n_range":
                    lo, _, hi = value.partition("..")
                    lo_i, hi_i = int(lo), int(hi)
                    cfg.n_values = [
                        n
                        for n in range(lo_i | 1, hi_i + 1, 2)
                        if not _is_prime_cached(n) and n >= 9
                    ]
                    seen_source = key
                elif key == "k_max":
                    cfg.k_max = int(value)
                elif key == "bins":
                    cfg.bins = int(value)
                elif key == "output_path":
                    cfg.output_path = value
                elif key == "output_format":
                    if value not in ("csv", "json"):
                        raise ValueError(f"output_format must be csv or json, got {value}")
                    cfg.output_format = value
                elif key == "checks":
                    cfg.checks = [v.strip() for v in value.split(",") if v.strip()]
                elif key == "threads":
                    cfg.threads = int(value)
                else:
                    raise ValueError(f"unknown key {key!r}")
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}") from None
    if seen_source is None:
        raise ConfigError(f"{path}: one of n_values, n_magnitudes, n_range is required")
    if cfg.k_max < 1 or cfg.bins < 1:
        raise ConfigError(f"{path}: k_max and bins must be >= 1")
    return cfg


class ConfigError(Exception):
    pass


def _is_prime_cached(n: int) -> bool:
    from .arith import is_prime

    return is_prime(n)


def _scan_header(k_max: int) -> list[str]:
    return (
        ["n", "witness_count", "witness_fraction", "star_discrepancy", "least_witness"]
        + [f"weyl_ratio_{k}" for k in range(1, k_max + 1)]
        + ["flatness", "error"]
    )


def _scan_row_fields(row, k_max: int) -> list:
    ratios = list(row.weyl_ratios) + [""] * (k_max - len(row.weyl_ratios))
    return [
        row.n,
        row.witness_count,
        row.witness_fraction,
        row.star_discrepancy,
        row.least_witness,
        *ratios,
        "" if row.flatness is None else row.flatness,
        row.error or "",
    ]


def cmd_scan(args) -> int:
    try:
        cfg = parse_config(args.config)
    except (OSError, ConfigError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.threads:
        set_thread_count(cfg.threads)
    rows = equidist.scan(cfg.n_values, cfg.k_max, cfg.bins)
    for row in rows:
        print(f"scan n={row.n} runtime_ms={row.runtime_ms:.1f}", file=sys.stderr)
    header = _scan_header(cfg.k_max)
    data = [_scan_row_fields(row, cfg.k_max) for row in rows]
    if cfg.output_format == "csv":
        _write_csv(cfg.output_path, header, data)
    else:
        payload = [dict(zip(header, _round12(fields))) for fields in data]
        text = json.dumps(payload, indent=2)
        if cfg.output_path:
            with open(cfg.output_path, "w") as f:
                f.write(text + "\n")
        else:
            print(text)
    if cfg.checks:
        results = suites.run_suites(cfg.checks)
        bad = _report_suites(results, None)
        if bad:
            return EXIT_VERIFY
    return EXIT_OK


def _report_suites(results, out_path) -> bool:
    hard_failure = False
    for r in results:
        print(f"{r.verdict} {r.name} checked={r.checked} failures={r.failures} | {r.summary}")
        print(f"suite {r.name} elapsed {r.elapsed_s:.1f}s", file=sys.stderr)
        if not r.ok and r.hard:
            hard_failure = True
    if out_path:
        keys = sorted({k for r in results for row in r.findings for k in row})
        header = ["suite", *keys]
        rows = []
        for r in results:
            for row in r.findings:
                rows.append([r.name, *[_fmt(row[k]) if k in row else "" for k in keys]])
        _write_csv(out_path, header, rows)
    return hard_failure


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    results = suites.run_suites(names)
    if _report_suites(results, args.out):
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrwitness",
        description="Classify strong-compositeness witnesses and the exponential sums over them.",
    )
    parser.add_argument("--threads", type=int, default=None,
                        help="bound worker concurrency (default: all cores; env WITNESS_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="write n-1 = d * 2^s")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("classify", help="class and evidence for one residue")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("witnesses", help="full witness enumeration and class counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write the witness list as CSV")
    p.set_defaults(fn=cmd_witnesses)

    p = sub.add_parser("bounds", help="witness-count and least-witness bound checks")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("histogram", help="bin_index,count CSV of normalized witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bins", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_histogram)

    p = sub.add_parser("weyl", help="|S_k| and |S_k|/#W for k = 1..K")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_weyl)

    p = sub.add_parser("interval", help="witness fraction in a closed subinterval of [0,1]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(fn=cmd_interval)

    p = sub.add_parser("sums", help="full class-sum decomposition report as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_sums)

    p = sub.add_parser("ramanujan", help="unit sum: closed form vs brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_ramanujan)

    p = sub.add_parser("gauss", help="character sum: conductor reduction vs brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, required=True, help="character index in [0, phi(n))")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--power", type=int, default=1, help="evaluate on chi**power")
    p.set_defaults(fn=cmd_gauss)

    p = sub.add_parser("cancel", help="power-residue sum: enumeration vs character orthogonality")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_cancel)

    p = sub.add_parser("scan", help="ScanRow CSV/JSON from an experiment config")
    p.add_argument("--config", required=True)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=list(suites.SUITE_NAMES))
    p.add_argument("--out", help="write findings as CSV")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None:
        set_thread_count(args.threads)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
