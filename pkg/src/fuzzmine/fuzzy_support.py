"""Fuzzy membership of itemsets in transactions and the resulting support.

A group that occurs ``v`` times in a transaction of cardinality ``card`` has
membership ``v / card``; an itemset's membership is the minimum over its
groups, and its support is the sum of memberships over the qualified set.

Two arithmetic modes are offered. ``EXACT`` keeps every value as a
``Fraction``. ``COMPAT`` truncates each per-transaction membership toward
zero at two decimals before summing, which is how the reference worked
example arrives at figures such as 1/6 -> 0.16 and 2/3 -> 0.66.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .dataset import GroupCounts, QualifiedDataset, Transaction, group_at_level
from .errors import EmptyItemset, LevelOutOfRange, MixedLevels
from .taxonomy import ItemCode

COMPAT_SCALE = 100


class ArithmeticMode(enum.Enum):
    EXACT = "exact"
    COMPAT = "compat"


def truncate(x: Fraction, scale: int = COMPAT_SCALE) -> Fraction:
    """Truncate toward zero at ``1/scale`` resolution."""
    return Fraction(math.trunc(x * scale), scale)


def format_value(x: Fraction, mode: ArithmeticMode) -> str:
    """Render a support or confidence: ``"0.36"`` in compat mode, ``"p/q"`` in exact mode."""
    if mode is ArithmeticMode.COMPAT:
        hundredths = math.trunc(x * COMPAT_SCALE)
        sign = "-" if hundredths < 0 else ""
        whole, frac = divmod(abs(hundredths), COMPAT_SCALE)
        return f"{sign}{whole}.{frac:02d}"
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SupportValue:
    exact: Fraction
    compat: Fraction | None = None

    @property
    def value(self) -> Fraction:
        """The figure thresholds are compared against under the run's mode."""
        return self.exact if self.compat is None else self.compat

    @property
    def mode(self) -> ArithmeticMode:
        return ArithmeticMode.EXACT if self.compat is None else ArithmeticMode.COMPAT

    def __str__(self) -> str:
        return format_value(self.value, self.mode)


def _check_itemset(itemset: Iterable[ItemCode]) -> tuple[ItemCode, ...]:
    items = tuple(sorted(set(itemset)))
    if not items:
        raise EmptyItemset("itemset must contain at least one group")
    levels = {c.level for c in items}
    if len(levels) > 1:
        raise MixedLevels(f"itemset mixes levels {sorted(levels)}: {[str(c) for c in items]}")
    return items


def item_membership(counts: GroupCounts, t: Transaction, group: ItemCode) -> Fraction:
    if group.level != counts.level:
        raise LevelOutOfRange(f"{group} is not a level-{counts.level} group")
    v = counts[t.id].get(group, 0)
    return Fraction(v, t.card)


def itemset_membership(
    counts: GroupCounts, t: Transaction, itemset: Iterable[ItemCode]
) -> Fraction:
    items = _check_itemset(itemset)
    per_t = counts[t.id]
    if any(g not in per_t for g in items):
        return Fraction(0)
    return min(item_membership(counts, t, g) for g in items)


def membership(
    dataset: QualifiedDataset,
    itemset: Iterable[ItemCode],
    mode: ArithmeticMode = ArithmeticMode.EXACT,
    counts: GroupCounts | None = None,
) -> dict[str, Fraction]:
    """Per-transaction membership; transactions with membership 0 are omitted."""
    items = _check_itemset(itemset)
    if counts is None:
        counts = group_at_level(dataset, items[0].level)
    elif counts.level != items[0].level:
        raise MixedLevels(f"itemset is level {items[0].level}, counts are level {counts.level}")
    out = {}
    for t in dataset.transactions:
        mu = itemset_membership(counts, t, items)
        if mode is ArithmeticMode.COMPAT:
            mu = truncate(mu)
        if mu:
            out[t.id] = mu
    return out


def support(
    dataset: QualifiedDataset,
    itemset: Iterable[ItemCode],
    mode: ArithmeticMode = ArithmeticMode.EXACT,
    counts: GroupCounts | None = None,
) -> SupportValue:
    """Sum of per-transaction memberships over the qualified set.

    Pass precomputed ``counts`` for the itemset's level to avoid regrouping.
    """
    exact = membership(dataset, itemset, ArithmeticMode.EXACT, counts)
    total = sum(exact.values(), Fraction(0))
    if mode is ArithmeticMode.EXACT:
        return SupportValue(total)
    compat = sum((truncate(mu) for mu in exact.values()), Fraction(0))
    return SupportValue(total, compat)


def normalization_check(
    dataset: QualifiedDataset, level: int, mode: ArithmeticMode = ArithmeticMode.EXACT
) -> Fraction:
    """Sum of all level-``level`` singleton supports; exactly ``len(dataset)`` in exact mode."""
    counts = group_at_level(dataset, level)
    total = Fraction(0)
    for g in counts.groups():
        total += support(dataset, [g], mode, counts).value
    return total

