from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzmine import (
    ArithmeticMode,
    group_at_level,
    item_membership,
    itemset_membership,
    membership,
    normalization_check,
    parse_code,
    qualify,
    support,
)
from fuzzmine.errors import EmptyItemset, MixedLevels, TransactionNotInDataset
from fuzzmine.fuzzy_support import format_value, truncate
from strategies import datasets

EXACT = ArithmeticMode.EXACT
COMPAT = ArithmeticMode.COMPAT


def codes(*texts):
    return [parse_code(t) for t in texts]


@pytest.fixture(scope="module")
def level1(example_m):
    return group_at_level(example_m, 1)


@pytest.mark.parametrize(
    "x, expected", [(Fraction(1, 6), "0.16"), (Fraction(2, 3), "0.66"), (Fraction(1, 3), "0.33"), (Fraction(3, 4), "0.75")]
)
def test_truncate_not_round(x, expected):
    assert format_value(truncate(x), COMPAT) == expected


def test_format_exact():
    assert format_value(Fraction(11), EXACT) == "11/1"
    assert format_value(Fraction(2, 5), EXACT) == "2/5"


def test_item_membership(example_m, level1):
    assert item_membership(level1, example_m.get("T1"), parse_code("1***")) == Fraction(2, 5)
    mu = item_membership(level1, example_m.get("T5"), parse_code("6***"))
    assert mu == Fraction(1, 6)
    assert truncate(mu) == Fraction(16, 100)
    assert item_membership(level1, example_m.get("T10"), parse_code("1***")) == 0


def test_item_membership_unknown_transaction(example_m, transactions, level1):
    t4 = next(t for t in transactions if t.id == "T4")
    with pytest.raises(TransactionNotInDataset):
        item_membership(level1, t4, parse_code("1***"))


def test_itemset_membership(example_m, level1):
    assert itemset_membership(level1, example_m.get("T1"), codes("1***", "3***")) == Fraction(1, 5)
    assert itemset_membership(level1, example_m.get("T13"), codes("1***", "3***")) == Fraction(1, 4)
    assert itemset_membership(level1, example_m.get("T2"), codes("2***", "5***")) == 0


def test_itemset_membership_errors(example_m, level1):
    with pytest.raises(MixedLevels):
        itemset_membership(level1, example_m.get("T1"), codes("1***", "11**"))
    with pytest.raises(EmptyItemset):
        itemset_membership(level1, example_m.get("T1"), [])


def test_membership_map_of_1(example_m):
    mu = membership(example_m, codes("1***"), COMPAT)
    assert {k: format_value(v, COMPAT) for k, v in mu.items()} == {
        "T1": "0.40", "T2": "0.16", "T3": "0.16", "T5": "0.33", "T8": "0.40",
        "T9": "0.20", "T11": "0.66", "T12": "0.33", "T13": "0.25",
    }


def test_support_compat(example_m):
    assert str(support(example_m, codes("1***"), COMPAT)) == "2.89"
    assert str(support(example_m, codes("1***", "2***", "3***", "6***"), COMPAT)) == "0.36"
    # hand sum 0.2+0.16+0.16+0.33+0.2+0.25 over T1,T2,T3,T5,T8,T13
    assert str(support(example_m, codes("1***", "3***"), COMPAT)) == "1.30"


def test_support_exact(example_m):
    sv = support(example_m, codes("1***"))
    assert sv.compat is None
    expected = sum(
        [Fraction(2, 5), Fraction(1, 6), Fraction(1, 6), Fraction(2, 6), Fraction(2, 5),
         Fraction(1, 5), Fraction(2, 3), Fraction(1, 3), Fraction(1, 4)],
        Fraction(0),
    )
    assert sv.exact == expected


def test_normalization(example_m):
    assert normalization_check(example_m, 1) == 11
    # Table 4 addends 2.89+0.92+2.17+1.59+1.79+1.56
    assert normalization_check(example_m, 1, COMPAT) == Fraction("10.92")


def test_normalization_empty(taxonomy):
    empty = qualify([], 6, taxonomy)
    assert normalization_check(empty, 1) == 0


@given(datasets(), st.data())
def test_anti_monotone(ds, data):
    level = data.draw(st.integers(1, ds.depth))
    groups = group_at_level(ds, level).groups()
    if not groups:
        return
    big = data.draw(st.lists(st.sampled_from(groups), min_size=1, max_size=4, unique=True))
    small = data.draw(st.lists(st.sampled_from(big), min_size=1, unique=True))
    for mode in ArithmeticMode:
        assert support(ds, big, mode).value <= support(ds, small, mode).value


@given(datasets(), st.data())
def test_compat_never_exceeds_exact(ds, data):
    level = data.draw(st.integers(1, ds.depth))
    groups = group_at_level(ds, level).groups()
    if not groups:
        return
    items = data.draw(st.lists(st.sampled_from(groups), min_size=1, max_size=3, unique=True))
    sv = support(ds, items, COMPAT)
    assert 0 <= sv.compat <= sv.exact <= len(ds)


@given(datasets())
def test_normalization_exact_property(ds):
    for level in range(1, ds.depth + 1):
        assert normalization_check(ds, level) == len(ds)


@given(datasets())
def test_membership_bounds(ds):
    level = 1
    counts = group_at_level(ds, level)
    for t in ds.transactions:
        for g in counts.groups():
            mu = item_membership(counts, t, g)
            assert 0 <= mu <= 1
            if mu == 1:
                assert set(counts[t.id]) == {g}
