"""Positional taxonomy codes and the item-name dictionary.

A code such as ``11**`` names the node reached by taking branch 1 at level 1
and branch 1 at level 2; the trailing ``*`` characters pad the code out to the
taxonomy depth. Leaves are fully specified (no wildcards) and are the only
codes allowed inside transactions.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    DuplicateCode,
    DuplicateName,
    EmptyTaxonomy,
    InconsistentDepth,
    LevelOutOfRange,
    MalformedCode,
)

WILDCARD = "*"


@dataclass(frozen=True, order=True)
class ItemCode:
    """A taxonomy node: the specified branch digits plus the total depth.

    Only the first ``prefix_len`` digits are stored, so equality and ordering
    never see the wildcard positions.
    """

    digits: tuple[int, ...]
    depth: int

    def __post_init__(self) -> None:
        if not 1 <= len(self.digits) <= self.depth:
            raise MalformedCode(f"{len(self.digits)} digits for depth {self.depth}")
        if any(not 1 <= d <= 9 for d in self.digits):
            raise MalformedCode(f"branch digits must be 1-9, got {self.digits}")

    @property
    def prefix_len(self) -> int:
        return len(self.digits)

    @property
    def level(self) -> int:
        return len(self.digits)

    @property
    def is_leaf(self) -> bool:
        return len(self.digits) == self.depth

    def render(self) -> str:
        return "".join(map(str, self.digits)) + WILDCARD * (self.depth - len(self.digits))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ItemCode({self.render()!r})"


def parse_code(text: str, depth: int | None = None) -> ItemCode:
    """Parse a rendered code like ``"11**"``.

    ``depth`` defaults to ``len(text)``; when given, the length must match.
    """
    if not isinstance(text, str):
        raise MalformedCode(f"code must be a string, got {type(text).__name__}")
    if depth is not None and len(text) != depth:
        raise MalformedCode(f"{text!r} has length {len(text)}, expected {depth}")
    if not text:
        raise MalformedCode("empty code")
    digits = []
    seen_wildcard = False
    for ch in text:
        if ch == WILDCARD:
            seen_wildcard = True
        elif ch in "123456789":
            if seen_wildcard:
                raise MalformedCode(f"digit after wildcard in {text!r}")
            digits.append(int(ch))
        else:
            raise MalformedCode(f"invalid character {ch!r} in {text!r}")
    if not digits:
        raise MalformedCode(f"{text!r} has no digits")
    return ItemCode(tuple(digits), len(text))


def ancestor_at(code: ItemCode, level: int) -> ItemCode:
    if not 1 <= level <= code.prefix_len:
        raise LevelOutOfRange(f"level {level} outside 1..{code.prefix_len} for {code}")
    if level == code.prefix_len:
        return code
    return ItemCode(code.digits[:level], code.depth)


def render_itemset(itemset: Iterable[ItemCode]) -> list[str]:
    return [c.render() for c in itemset]


@dataclass(frozen=True)
class Taxonomy:
    depth: int
    by_name: Mapping[str, ItemCode] = field(repr=False)
    by_code: Mapping[ItemCode, str] = field(repr=False)

    @property
    def leaves(self) -> frozenset[ItemCode]:
        return frozenset(c for c in self.by_code if c.is_leaf)

    def __contains__(self, code: ItemCode) -> bool:
        return code in self.by_code

    def __len__(self) -> int:
        return len(self.by_code)

    def code_of(self, name: str) -> ItemCode:
        return self.by_name[name]

    def name_of(self, code: ItemCode) -> str | None:
        return self.by_code.get(code)

    def is_known_leaf(self, code: ItemCode) -> bool:
        return code.is_leaf and code.depth == self.depth and code in self.by_code


def load_taxonomy(records: Iterable[tuple[str, str]]) -> Taxonomy:
    """Build a validated taxonomy from ``(name, code)`` pairs."""
    by_name: dict[str, ItemCode] = {}
    by_code: dict[ItemCode, str] = {}
    depth: int | None = None
    for name, text in records:
        code = parse_code(text)
        if depth is None:
            depth = code.depth
        elif code.depth != depth:
            raise InconsistentDepth(f"{text!r} has depth {code.depth}, expected {depth}")
        if name in by_name:
            raise DuplicateName(name)
        if code in by_code:
            raise DuplicateCode(f"{text!r} used by {by_code[code]!r} and {name!r}")
        by_name[name] = code
        by_code[code] = name
    if depth is None:
        raise EmptyTaxonomy("no taxonomy records")
    return Taxonomy(depth, by_name, by_code)


def read_taxonomy(path: str | Path) -> Taxonomy:
    """Load a taxonomy from CSV (``name,code`` header) or a JSON ``{name: code}`` object."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise MalformedCode("taxonomy JSON must be an object of name -> code")
        return load_taxonomy(data.items())
    rows = csv.DictReader(text.splitlines())
    if rows.fieldnames is None or not {"name", "code"} <= set(rows.fieldnames):
        raise MalformedCode("taxonomy CSV needs a 'name,code' header")
    return load_taxonomy((row["name"], row["code"].strip()) for row in rows)
