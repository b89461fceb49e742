"""Level-wise, top-down mining of frequent fuzzy itemsets.

For each taxonomy level the miner groups every transaction's leaves by their
ancestor at that level, finds the frequent singletons, and then grows
itemsets one item at a time with the Apriori join and prune until the size
cap is reached or no candidate survives.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .dataset import GroupCounts, QualifiedDataset, group_at_level
from .errors import ConfigError, InvalidThreshold, LevelOutOfRange
from .fuzzy_support import ArithmeticMode, SupportValue, support
from .taxonomy import ItemCode, ancestor_at

log = logging.getLogger(__name__)

Itemset = tuple[ItemCode, ...]


class DescentPolicy(enum.Enum):
    ALL_GROUPS = "all"
    FREQUENT_DESCENDANTS = "frequent-descendants"


def _as_threshold(value) -> Fraction:
    if isinstance(value, float):
        # go through the decimal repr so 0.36 stays 9/25
        value = repr(value)
    try:
        beta = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidThreshold(f"not a number: {value!r}") from None
    if beta <= 0:
        raise InvalidThreshold(f"minimum support must be positive, got {value}")
    return beta


@dataclass(frozen=True)
class MiningConfig:
    """Run parameters.

    ``min_support`` maps level -> threshold; ``size_support`` optionally maps
    ``(level, size)`` -> threshold and overrides the level value for that size.
    ``max_level=None`` means the taxonomy depth.
    """

    min_support: Mapping[int, Fraction]
    size_support: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    chi: int | None = None
    max_itemset_size: int = 4
    max_level: int | None = None
    descent: DescentPolicy = DescentPolicy.ALL_GROUPS
    mode: ArithmeticMode = ArithmeticMode.EXACT

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "min_support", {int(k): _as_threshold(v) for k, v in sorted(self.min_support.items())}
        )
        object.__setattr__(
            self,
            "size_support",
            {(int(k), int(q)): _as_threshold(v) for (k, q), v in sorted(self.size_support.items())},
        )
        if self.max_itemset_size < 1:
            raise ConfigError(f"max_itemset_size must be >= 1, got {self.max_itemset_size}")
        if self.max_level is not None and self.max_level < 1:
            raise ConfigError(f"max_level must be >= 1, got {self.max_level}")

    def beta(self, level: int, size: int) -> Fraction:
        if (level, size) in self.size_support:
            return self.size_support[(level, size)]
        try:
            return self.min_support[level]
        except KeyError:
            raise ConfigError(f"no minimum support configured for level {level}") from None

    def levels(self, depth: int) -> range:
        top = depth if self.max_level is None else self.max_level
        if top > depth:
            raise ConfigError(f"max_level {top} exceeds taxonomy depth {depth}")
        return range(1, top + 1)


@dataclass
class FrequentTable:
    level: int
    size: int
    entries: dict[Itemset, SupportValue] = field(default_factory=dict)

    def __contains__(self, itemset: Iterable[ItemCode]) -> bool:
        return tuple(sorted(itemset)) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return self.entries.items()


@dataclass
class MiningResult:
    tables: dict[tuple[int, int], FrequentTable]
    config: MiningConfig
    dataset: QualifiedDataset

    def table(self, level: int, size: int) -> FrequentTable:
        return self.tables[(level, size)]

    def levels(self) -> list[int]:
        return sorted({k for k, _ in self.tables})

    def lookup(self, itemset: Iterable[ItemCode]) -> SupportValue | None:
        key = tuple(sorted(itemset))
        if not key:
            return None
        table = self.tables.get((key[0].level, len(key)))
        return None if table is None else table.entries.get(key)

    def support_of(self, itemset: Iterable[ItemCode]) -> SupportValue:
        """Table support if frequent, otherwise recomputed from the dataset."""
        key = tuple(sorted(itemset))
        found = self.lookup(key)
        if found is not None:
            return found
        return support(self.dataset, key, self.config.mode)

    def frequent(self) -> dict[Itemset, SupportValue]:
        out = {}
        for key in sorted(self.tables):
            out.update(self.tables[key].entries)
        return out


def frequent_singletons(
    dataset: QualifiedDataset,
    level: int,
    beta,
    mode: ArithmeticMode = ArithmeticMode.EXACT,
    allowed_groups: Iterable[ItemCode] | None = None,
    counts: GroupCounts | None = None,
) -> FrequentTable:
    if not 1 <= level <= dataset.depth:
        raise LevelOutOfRange(f"level {level} outside 1..{dataset.depth}")
    beta = _as_threshold(beta)
    if counts is None:
        counts = group_at_level(dataset, level)
    groups = counts.groups()
    if allowed_groups is not None:
        allowed = set(allowed_groups)
        groups = [g for g in groups if g in allowed]
    table = FrequentTable(level, 1)
    for g in groups:
        sv = support(dataset, (g,), mode, counts)
        if sv.value >= beta:
            table.entries[(g,)] = sv
    return table


def generate_candidates(prev: FrequentTable | Iterable[Itemset]) -> list[Itemset]:
    """Apriori join of (q-1)-itemsets sharing their first q-2 items, then the subset prune."""
    keys = sorted(tuple(sorted(s)) for s in (prev.entries if isinstance(prev, FrequentTable) else prev))
    if not keys:
        return []
    known = set(keys)
    out = []
    for i, a in enumerate(keys):
        for b in keys[i + 1 :]:
            if a[:-1] != b[:-1]:
                # sorted order: once prefixes diverge no later b can match
                break
            cand = a + (b[-1],)
            if all(sub in known for sub in combinations(cand, len(cand) - 1)):
                out.append(cand)
    return out


def _level_universe(
    counts: GroupCounts, level: int, config: MiningConfig, prev_frequent: set[ItemCode] | None
) -> list[ItemCode] | None:
    groups = counts.groups()
    if config.descent is DescentPolicy.ALL_GROUPS or level == 1:
        return groups
    if not prev_frequent:
        return None
    return [g for g in groups if ancestor_at(g, level - 1) in prev_frequent]


def mine(dataset: QualifiedDataset, config: MiningConfig) -> MiningResult:
    levels = config.levels(dataset.depth)
    tables: dict[tuple[int, int], FrequentTable] = {
        (k, q): FrequentTable(k, q) for k in levels for q in range(1, config.max_itemset_size + 1)
    }
    prev_frequent: set[ItemCode] | None = None
    for k in levels:
        counts = group_at_level(dataset, k)
        universe = _level_universe(counts, k, config, prev_frequent)
        if universe is None:
            log.debug("level %d: no frequent ancestors, stopping descent", k)
            break
        singles = frequent_singletons(dataset, k, config.beta(k, 1), config.mode, universe, counts)
        tables[(k, 1)] = singles
        log.debug("level %d: %d/%d frequent singletons", k, len(singles), len(universe))
        prev_frequent = {s[0] for s in singles}
        current = singles
        for q in range(2, config.max_itemset_size + 1):
            candidates = generate_candidates(current)
            if not candidates:
                break
            beta = config.beta(k, q)
            table = FrequentTable(k, q)
            for cand in candidates:
                sv = support(dataset, cand, config.mode, counts)
                if sv.value >= beta:
                    table.entries[cand] = sv
            log.debug("level %d size %d: %d/%d candidates frequent", k, q, len(table), len(candidates))
            tables[(k, q)] = table
            current = table
    return MiningResult(tables, config, dataset)
