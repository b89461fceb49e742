from fractions import Fraction

import pytest

from fuzzmine import MiningConfig, brute_force_mine, group_at_level, load_taxonomy, load_transactions, qualify, support
from fuzzmine.errors import InvalidThreshold, UniverseTooLarge
from fuzzmine.oracle import raw_support


def test_oracle_matches_miner_on_example(example_m):
    from fuzzmine import mine

    cfg = MiningConfig({1: "0.36", 2: "0.3", 3: "0.2", 4: "0.16"})
    oracle = brute_force_mine(example_m, cfg)
    got = {tuple(map(str, s)): v.exact for s, v in mine(example_m, cfg).frequent().items()}
    assert got == oracle.frequent()
    assert oracle.tables[(1, 1)][("1***",)] == Fraction(2, 5) + Fraction(1, 6) * 2 + Fraction(1, 3) + Fraction(
        2, 5
    ) + Fraction(1, 5) + Fraction(2, 3) + Fraction(1, 3) + Fraction(1, 4)


def test_oracle_empty(taxonomy):
    r = brute_force_mine(qualify([], None, taxonomy), MiningConfig({1: 1, 2: 1, 3: 1, 4: 1}))
    assert r.frequent() == {}


def test_zero_threshold_rejected():
    with pytest.raises(InvalidThreshold):
        MiningConfig({1: 0})


def test_universe_guard():
    leaves = [f"{a}{b}" for a in "123456789" for b in "123"]
    tax = load_taxonomy((f"leaf {c}", c) for c in leaves)
    ds = qualify(load_transactions([("T1", leaves)], tax), None, tax)
    with pytest.raises(UniverseTooLarge):
        brute_force_mine(ds, MiningConfig({1: 1, 2: 1}))


def test_singleton_paths_agree(example_m):
    for level in range(1, 5):
        for g in group_at_level(example_m, level).groups():
            assert raw_support(example_m, (g.render(),), level) == support(example_m, [g]).exact
