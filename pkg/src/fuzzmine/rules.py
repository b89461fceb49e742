"""Association rules and their confidence, derived per level from mined tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import EmptyItemset, MixedLevels, ZeroAntecedentSupport
from .fuzzy_support import ArithmeticMode, SupportValue, truncate
from .miner import Itemset, MiningResult
from .taxonomy import ItemCode


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    level: int
    support: SupportValue
    confidence: Fraction

    @property
    def itemset(self) -> Itemset:
        return tuple(sorted(self.antecedent + self.consequent))

    def __str__(self) -> str:
        lhs = " & ".join(map(str, self.antecedent))
        rhs = " & ".join(map(str, self.consequent))
        return f"{lhs} => {rhs}"


def _ratio(joint: SupportValue, base: SupportValue) -> Fraction:
    if base.value == 0:
        raise ZeroAntecedentSupport("antecedent has zero support")
    q = joint.value / base.value
    return truncate(q) if base.mode is ArithmeticMode.COMPAT else q


def confidence(result: MiningResult, antecedent: Iterable[ItemCode], consequent: Iterable[ItemCode]) -> Fraction:
    """support(A u B) / support(A) under the run's arithmetic mode.

    In compat mode the quotient of the truncated supports is itself truncated
    to two decimals.
    """
    a = tuple(sorted(set(antecedent)))
    b = tuple(sorted(set(consequent)))
    if not a or not b:
        raise EmptyItemset("antecedent and consequent must be non-empty")
    if set(a) & set(b):
        raise ValueError("antecedent and consequent overlap")
    if len({c.level for c in a + b}) > 1:
        raise MixedLevels("rules are confined to a single level")
    return _ratio(result.support_of(a + b), result.support_of(a))


def generate_rules(result: MiningResult, min_confidence=None) -> list[AssociationRule]:
    """Every split of every frequent itemset of size >= 2 into antecedent and consequent."""
    floor = None
    if min_confidence is not None:
        floor = Fraction(repr(min_confidence) if isinstance(min_confidence, float) else min_confidence)
    rules = []
    for (level, size), table in sorted(result.tables.items()):
        if size < 2:
            continue
        for itemset, sv in table.items():
            for r in range(1, size):
                for a in combinations(itemset, r):
                    b = tuple(c for c in itemset if c not in a)
                    base = result.lookup(a)
                    if base is None:
                        # every subset of a frequent itemset is frequent; recompute defensively
                        base = result.support_of(a)
                    conf = _ratio(sv, base)
                    if floor is not None and conf < floor:
                        continue
                    rules.append(AssociationRule(a, b, level, sv, conf))
    return rules
