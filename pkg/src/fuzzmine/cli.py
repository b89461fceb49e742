"""Command-line driver: ``fuzzmine --taxonomy tax.csv --transactions tx.csv --min-support 1:0.36 ...``

Exit status: 0 on success, 1 for invalid input data, 2 for invalid
configuration (including argparse usage errors).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from .dataset import qualify, read_transactions
from .errors import ConfigError, InvalidThreshold, ValidationError
from .fuzzy_support import ArithmeticMode
from .miner import DescentPolicy, MiningConfig, _as_threshold, mine
from .report import FORMATS, RunReport, emit_report
from .rules import generate_rules
from .taxonomy import read_taxonomy

log = logging.getLogger("fuzzmine")

EXIT_INPUT = 1
EXIT_CONFIG = 2


def parse_min_support(text: str) -> tuple[int, int | None, Fraction]:
    """``"k:value"`` or ``"k,q:value"`` -> (level, size or None, threshold)."""
    key, sep, value = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LEVEL:VALUE or LEVEL,SIZE:VALUE, got {text!r}")
    try:
        parts = [int(p) for p in key.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level/size in {text!r}") from None
    if len(parts) not in (1, 2) or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"bad level/size in {text!r}")
    try:
        beta = _as_threshold(value.strip())
    except InvalidThreshold as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: threshold must be positive ({exc})") from None
    return parts[0], (parts[1] if len(parts) == 2 else None), beta


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzmine", description="Mine fuzzy multilevel association rules from transactions."
    )
    p.add_argument("--taxonomy", required=True, type=Path, help="CSV (name,code) or JSON {name: code}")
    p.add_argument("--transactions", required=True, type=Path, help="CSV (transaction_id,items) or JSON")
    p.add_argument("--chi", type=int, default=None, help="maximum items per transaction (default: unlimited)")
    p.add_argument(
        "--min-support", action="append", type=parse_min_support, default=[], metavar="SPEC",
        help="LEVEL:VALUE or LEVEL,SIZE:VALUE; repeatable",
    )
    p.add_argument("--min-confidence", type=_fraction, default=None)
    p.add_argument("--max-itemset-size", type=int, default=4)
    p.add_argument("--max-level", type=int, default=None, help="default: taxonomy depth")
    p.add_argument("--mode", choices=[m.value for m in ArithmeticMode], default="exact")
    p.add_argument("--descent", choices=[d.value for d in DescentPolicy], default="all")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--output", type=Path, default=None, help="default: stdout")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    return p


def _setup_logging() -> None:
    level = os.environ.get("FUZZMINE_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def run(argv: list[str] | None = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)

    try:
        levels = {}
        sizes = {}
        for level, size, beta in args.min_support:
            if size is None:
                levels[level] = beta
            else:
                sizes[(level, size)] = beta
        config = MiningConfig(
            min_support=levels,
            size_support=sizes,
            chi=args.chi,
            max_itemset_size=args.max_itemset_size,
            max_level=args.max_level,
            descent=DescentPolicy(args.descent),
            mode=ArithmeticMode(args.mode),
        )
    except ConfigError as exc:
        print(f"fuzzmine: configuration error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        started = time.perf_counter()
        taxonomy = read_taxonomy(args.taxonomy)
        transactions = read_transactions(args.transactions, taxonomy)
        dataset = qualify(transactions, config.chi, taxonomy)
        for k in config.levels(taxonomy.depth):
            config.beta(k, 1)
        result = mine(dataset, config)
        rules = generate_rules(result, args.min_confidence)
        elapsed = time.perf_counter() - started
    except ConfigError as exc:
        print(f"fuzzmine: configuration error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValidationError, OSError, ValueError) as exc:
        print(f"fuzzmine: input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    log.info("mined %d transactions (%d qualified) in %.4fs", len(transactions), len(dataset), elapsed)
    report = RunReport(
        result, rules, len(transactions), args.min_confidence, elapsed if args.timing else None
    )
    data = emit_report(report, args.format)
    if args.output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        args.output.write_bytes(data)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
