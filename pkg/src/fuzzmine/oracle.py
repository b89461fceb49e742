"""Brute-force reference miner used to check the Apriori miner.

Works straight from the raw transactions on rendered code strings: no
grouping tables, no candidate generation, no pruning. Every subset of each
level's group universe up to the size cap is scored by direct summation.
Exact arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dataset import QualifiedDataset
from .errors import UniverseTooLarge
from .miner import MiningConfig

MAX_UNIVERSE = 20


@dataclass
class OracleResult:
    # (level, size) -> {itemset of rendered codes: exact support}
    tables: dict[tuple[int, int], dict[tuple[str, ...], Fraction]]

    def frequent(self) -> dict[tuple[str, ...], Fraction]:
        out = {}
        for key in sorted(self.tables):
            out.update(self.tables[key])
        return out


def _prefix(code: str, level: int) -> str:
    return code[:level] + "*" * (len(code) - level)


def raw_support(dataset: QualifiedDataset, groups: tuple[str, ...], level: int) -> Fraction:
    """Sum over transactions of min over groups of (occurrences / card)."""
    total = Fraction(0)
    for t in dataset.transactions:
        rendered = [item.render() for item in t.items]
        card = len(rendered)
        lowest = None
        for g in groups:
            v = sum(1 for code in rendered if _prefix(code, level) == g)
            if v == 0:
                lowest = None
                break
            mu = Fraction(v, card)
            lowest = mu if lowest is None else min(lowest, mu)
        if lowest is not None:
            total += lowest
    return total


def brute_force_mine(dataset: QualifiedDataset, config: MiningConfig) -> OracleResult:
    tables: dict[tuple[int, int], dict[tuple[str, ...], Fraction]] = {}
    for level in config.levels(dataset.depth):
        universe = sorted(
            {_prefix(item.render(), level) for t in dataset.transactions for item in t.items}
        )
        if len(universe) > MAX_UNIVERSE:
            raise UniverseTooLarge(f"{len(universe)} groups at level {level} (limit {MAX_UNIVERSE})")
        for size in range(1, config.max_itemset_size + 1):
            beta = config.beta(level, size)
            found = {}
            for combo in combinations(universe, size):
                s = raw_support(dataset, combo, level)
                if s >= beta:
                    found[combo] = s
            tables[(level, size)] = found
    return OracleResult(tables)
