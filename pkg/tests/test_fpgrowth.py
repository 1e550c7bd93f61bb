import random
import time

from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_force_itemsets, brute_force_rules

from varnamer.fpgrowth import fp_growth, generate_association_rules


def test_empty_input():
    assert fp_growth([], 1) == {}
    assert generate_association_rules({}, 0.5) == []


def test_small_example():
    result = fp_growth([{"a", "b"}, {"a", "b"}, {"a"}], 2)
    assert result == {frozenset("a"): 3, frozenset("b"): 2, frozenset("ab"): 2}
    assert list(result) == [frozenset("a"), frozenset("ab"), frozenset("b")]


def test_min_support_above_transaction_count():
    assert fp_growth([{"a"}, {"a", "b"}], 3) == {}


def test_rule_confidence_examples():
    itemsets = {frozenset("a"): 3, frozenset("b"): 2, frozenset("ab"): 2}
    rules = {(r.antecedent, r.consequent): r.confidence
             for r in generate_association_rules(itemsets, 0.8)}
    assert (frozenset("a"), frozenset("b")) not in rules
    assert rules[(frozenset("b"), frozenset("a"))] == 1.0


def random_instance(rng):
    items = "abcdefgh"[:rng.randint(1, 8)]
    n = rng.randint(0, 30)
    transactions = [rng.sample(items, rng.randint(1, len(items))) for _ in range(n)]
    return transactions, rng.randint(1, max(1, n)), rng.choice([0.0, 0.3, 0.5, 0.8, 1.0])


def check_instance(transactions, min_support, min_confidence):
    itemsets = fp_growth(transactions, min_support)
    assert itemsets == brute_force_itemsets(transactions, min_support)
    keys = list(itemsets)
    assert keys == sorted(keys, key=lambda s: (-itemsets[s], sorted(s)))
    rules = {(r.antecedent, r.consequent): r.confidence
             for r in generate_association_rules(itemsets, min_confidence)}
    assert rules == brute_force_rules(transactions, min_support, min_confidence)


def test_hundred_random_instances_match_oracle():
    rng = random.Random(7)
    start = time.perf_counter()
    for _ in range(100):
        check_instance(*random_instance(rng))
    assert time.perf_counter() - start < 10.0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sets(st.sampled_from("abcdef"), min_size=1), max_size=20),
       st.integers(1, 6), st.sampled_from([0.0, 0.5, 0.75, 1.0]))
def test_property_matches_oracle(transactions, min_support, min_confidence):
    check_instance(transactions, min_support, min_confidence)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sets(st.sampled_from("abcde"), min_size=1), max_size=20),
       st.integers(1, 5), st.integers(0, 3), st.floats(0, 1), st.floats(0, 1))
def test_raising_thresholds_never_adds_rules(transactions, sup, extra, c1, c2):
    lo, hi = sorted((c1, c2))
    loose = generate_association_rules(fp_growth(transactions, sup), lo)
    tight = generate_association_rules(fp_growth(transactions, sup + extra), hi)
    as_keys = lambda rules: {(r.antecedent, r.consequent) for r in rules}
    assert as_keys(tight) <= as_keys(loose)
