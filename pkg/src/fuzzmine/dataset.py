"""Transactions, the maximum-item qualification filter, and per-level grouping."""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateTransactionId,
    EmptyTransaction,
    InvalidChi,
    LevelOutOfRange,
    MalformedCode,
    TransactionNotInDataset,
    UnknownLeafCode,
)
from .taxonomy import ItemCode, Taxonomy, ancestor_at, parse_code


@dataclass(frozen=True)
class Transaction:
    id: str
    items: tuple[ItemCode, ...]

    @property
    def card(self) -> int:
        # duplicates count
        return len(self.items)


@dataclass(frozen=True)
class QualifiedDataset:
    """The qualified transaction set M. ``chi=None`` means no item cap."""

    chi: int | None
    transactions: tuple[Transaction, ...]
    taxonomy: Taxonomy

    @property
    def ids(self) -> list[str]:
        return [t.id for t in self.transactions]

    @property
    def depth(self) -> int:
        return self.taxonomy.depth

    def __len__(self) -> int:
        return len(self.transactions)

    def get(self, tid: str) -> Transaction:
        for t in self.transactions:
            if t.id == tid:
                return t
        raise TransactionNotInDataset(tid)


@dataclass(frozen=True)
class GroupCounts:
    """Occurrence counts of each level-``level`` group, per transaction id.

    Absent groups are omitted rather than stored as zero.
    """

    level: int
    counts: Mapping[str, Mapping[ItemCode, int]]

    def __getitem__(self, tid: str) -> Mapping[ItemCode, int]:
        try:
            return self.counts[tid]
        except KeyError:
            raise TransactionNotInDataset(tid) from None

    def groups(self) -> list[ItemCode]:
        """Every group present in at least one transaction, sorted."""
        present = set()
        for per_t in self.counts.values():
            present.update(per_t)
        return sorted(present)


def load_transactions(
    records: Iterable[tuple[str, Sequence[str]]], taxonomy: Taxonomy
) -> list[Transaction]:
    out = []
    seen: set[str] = set()
    for tid, codes in records:
        tid = str(tid)
        if tid in seen:
            raise DuplicateTransactionId(tid)
        seen.add(tid)
        if isinstance(codes, str):
            raise MalformedCode(f"items of {tid} must be a list of codes")
        if not codes:
            raise EmptyTransaction(tid)
        items = []
        for text in codes:
            code = parse_code(text)
            if not taxonomy.is_known_leaf(code):
                raise UnknownLeafCode(f"{text!r} in transaction {tid} is not a leaf of the taxonomy")
            items.append(code)
        out.append(Transaction(tid, tuple(items)))
    return out


def read_transactions(path: str | Path, taxonomy: Taxonomy) -> list[Transaction]:
    """Load transactions from CSV (``transaction_id,items``) or a JSON array of ``{id, items}``."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        data = json.loads(text)
        if not isinstance(data, list):
            raise MalformedCode("transactions JSON must be an array")
        try:
            records = [(row["id"], row["items"]) for row in data]
        except (KeyError, TypeError) as exc:
            raise MalformedCode(f"transaction record missing field: {exc}") from None
        return load_transactions(records, taxonomy)
    rows = csv.DictReader(text.splitlines())
    if rows.fieldnames is None or not {"transaction_id", "items"} <= set(rows.fieldnames):
        raise MalformedCode("transactions CSV needs a 'transaction_id,items' header")
    return load_transactions(
        ((row["transaction_id"], (row["items"] or "").split()) for row in rows), taxonomy
    )


def qualify(
    transactions: Sequence[Transaction], chi: int | None, taxonomy: Taxonomy
) -> QualifiedDataset:
    """Keep the transactions with at most ``chi`` items, preserving order."""
    if chi is not None and (isinstance(chi, bool) or not isinstance(chi, int) or chi < 1):
        raise InvalidChi(f"chi must be an integer >= 1, got {chi!r}")
    kept = tuple(t for t in transactions if chi is None or t.card <= chi)
    return QualifiedDataset(chi, kept, taxonomy)


def group_at_level(dataset: QualifiedDataset, level: int) -> GroupCounts:
    if not 1 <= level <= dataset.depth:
        raise LevelOutOfRange(f"level {level} outside 1..{dataset.depth}")
    counts = {
        t.id: dict(Counter(ancestor_at(item, level) for item in t.items))
        for t in dataset.transactions
    }
    return GroupCounts(level, counts)
