"""Fuzzy multilevel association rule mining over positional item taxonomies."""

from pathlib import Path

from .dataset import (
    GroupCounts,
    QualifiedDataset,
    Transaction,
    group_at_level,
    load_transactions,
    qualify,
    read_transactions,
)
from .fuzzy_support import (
    ArithmeticMode,
    SupportValue,
    item_membership,
    itemset_membership,
    membership,
    normalization_check,
    support,
)
from .miner import (
    DescentPolicy,
    FrequentTable,
    MiningConfig,
    MiningResult,
    frequent_singletons,
    generate_candidates,
    mine,
)
from .oracle import brute_force_mine
from .report import RunReport, emit_report
from .rules import AssociationRule, confidence, generate_rules
from .taxonomy import ItemCode, Taxonomy, ancestor_at, load_taxonomy, parse_code, read_taxonomy

DATA_DIR = Path(__file__).parent / "data"
EXAMPLE_TAXONOMY = DATA_DIR / "table1b_taxonomy.csv"
EXAMPLE_TRANSACTIONS = DATA_DIR / "table1a_transactions.csv"

__all__ = [
    "ArithmeticMode", "AssociationRule", "DescentPolicy", "FrequentTable", "GroupCounts",
    "ItemCode", "MiningConfig", "MiningResult", "QualifiedDataset", "RunReport", "SupportValue",
    "Taxonomy", "Transaction", "ancestor_at", "brute_force_mine", "confidence", "emit_report",
    "frequent_singletons", "generate_candidates", "generate_rules", "group_at_level",
    "item_membership", "itemset_membership", "load_taxonomy", "load_transactions", "membership",
    "mine", "normalization_check", "parse_code", "qualify", "read_taxonomy", "read_transactions",
    "support", "DATA_DIR", "EXAMPLE_TAXONOMY", "EXAMPLE_TRANSACTIONS",
]
