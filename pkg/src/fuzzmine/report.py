"""Run reports and their json / csv / text serializations.

Serialization is deterministic: keys are sorted, itemsets follow table
order, and supports are strings (two decimals in compat mode, ``p/q`` in
exact mode) so golden files never see binary floats.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .fuzzy_support import ArithmeticMode, format_value
from .miner import MiningResult
from .rules import AssociationRule
from .taxonomy import render_itemset


def threshold_str(x: Fraction) -> str:
    """Plain decimal when the fraction terminates in base 10, else ``p/q``."""
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    scaled = x.numerator * 10**places // x.denominator
    if places == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass
class RunReport:
    result: MiningResult
    rules: list[AssociationRule]
    source_size: int
    min_confidence: Fraction | None = None
    timing_seconds: float | None = None

    @property
    def mode(self) -> ArithmeticMode:
        return self.result.config.mode

    def fmt(self, x: Fraction) -> str:
        return format_value(x, self.mode)

    def itemset_rows(self) -> list[dict[str, Any]]:
        rows = []
        for (level, size), table in sorted(self.result.tables.items()):
            for itemset, sv in table.items():
                rows.append(
                    {"level": level, "size": size, "itemset": render_itemset(itemset), "support": str(sv)}
                )
        return rows

    def rule_rows(self) -> list[dict[str, Any]]:
        return [
            {
                "level": r.level,
                "antecedent": render_itemset(r.antecedent),
                "consequent": render_itemset(r.consequent),
                "support": str(r.support),
                "confidence": self.fmt(r.confidence),
            }
            for r in self.rules
        ]

    def to_dict(self) -> dict[str, Any]:
        cfg = self.result.config
        ds = self.result.dataset
        out: dict[str, Any] = {
            "config": {
                "chi": cfg.chi,
                "descent": cfg.descent.value,
                "max_itemset_size": cfg.max_itemset_size,
                "max_level": cfg.max_level if cfg.max_level is not None else ds.depth,
                "min_confidence": None if self.min_confidence is None else threshold_str(self.min_confidence),
                "min_support": {str(k): threshold_str(v) for k, v in cfg.min_support.items()},
                "size_support": {f"{k},{q}": threshold_str(v) for (k, q), v in cfg.size_support.items()},
            },
            "dataset": {
                "chi": ds.chi,
                "qualified": len(ds),
                "qualified_ids": ds.ids,
                "transactions": self.source_size,
            },
            "mode": self.mode.value,
            "itemsets": self.itemset_rows(),
            "rules": self.rule_rows(),
        }
        if self.timing_seconds is not None:
            out["timing_seconds"] = round(self.timing_seconds, 6)
        return out


def _to_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def _to_csv(report: RunReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    by_table: dict[tuple[int, int], list[dict]] = {}
    for row in report.itemset_rows():
        by_table.setdefault((row["level"], row["size"]), []).append(row)
    for (level, size), rows in sorted(by_table.items()):
        buf.write(f"# itemsets level={level} size={size}\n")
        w.writerow(["level", "size", "itemset", "support"])
        for row in rows:
            w.writerow([level, size, " ".join(row["itemset"]), row["support"]])
        buf.write("\n")
    buf.write("# rules\n")
    w.writerow(["level", "antecedent", "consequent", "support", "confidence"])
    for row in report.rule_rows():
        w.writerow(
            [row["level"], " ".join(row["antecedent"]), " ".join(row["consequent"]), row["support"], row["confidence"]]
        )
    return buf.getvalue()


def _to_text(report: RunReport) -> str:
    cfg = report.result.config
    ds = report.result.dataset
    lines = [
        f"transactions: {report.source_size}  qualified: {len(ds)}  chi: {ds.chi if ds.chi is not None else 'unlimited'}",
        f"qualified set M = {{{', '.join(ds.ids)}}}",
        f"mode: {report.mode.value}  descent: {cfg.descent.value}",
        "",
    ]
    for (level, size), table in sorted(report.result.tables.items()):
        if not table.entries:
            continue
        beta = threshold_str(cfg.beta(level, size))
        lines.append(f"N[{size}][{level}]  frequent {size}-itemsets at level {level} (min support {beta})")
        width = max(len("{" + ", ".join(render_itemset(s)) + "}") for s in table)
        for itemset, sv in table.items():
            label = "{" + ", ".join(render_itemset(itemset)) + "}"
            lines.append(f"  {label:<{width}}  {sv}")
        lines.append("")
    if report.rules:
        lines.append("rules")
        for r in report.rules:
            lines.append(f"  level {r.level}: {r}  support {r.support}  confidence {report.fmt(r.confidence)}")
    else:
        lines.append("rules: none")
    return "\n".join(lines) + "\n"


_WRITERS = {"json": _to_json, "csv": _to_csv, "text": _to_text}

FORMATS = tuple(_WRITERS)


def emit_report(report: RunReport, fmt: str = "json") -> bytes:
    try:
        writer = _WRITERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return writer(report).encode("utf-8")
