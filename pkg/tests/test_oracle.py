from hypothesis import given, settings, strategies as st

from anagram_group import CommutationSet, trace_equal
from anagram_group.oracle import (
    enumerate_trace_class,
    oracle_admissible_forms,
    oracle_trace_equal,
)

from .strategies import alphabets, commutation_sets, words


def test_trace_class_examples():
    assert enumerate_trace_class("ab", CommutationSet.from_strings(["ab"]), 10).members == {"ab", "ba"}
    assert enumerate_trace_class("ab", CommutationSet(), 10).members == {"ab"}
    # b commutes with both a and c, but a and c never pass each other
    cls = enumerate_trace_class("abc", CommutationSet.from_strings(["ab", "bc"]), 100)
    assert cls.members == {"abc", "bac", "acb"}
    assert not cls.truncated


def test_truncation():
    known = CommutationSet.full()
    cls = enumerate_trace_class("quartzose", known, 10)
    assert cls.truncated and len(cls.members) == 10
    assert oracle_trace_equal("quartzose", "quatorzes", known, limit=10) is None


def test_oracle_trace_equal_examples():
    assert oracle_trace_equal("ab", "ba", CommutationSet.from_strings(["ab"])) is True
    assert oracle_trace_equal("abab", "baba", CommutationSet()) is False


def test_admissible_forms():
    assert not oracle_admissible_forms("abab", "baba", "a", "b", CommutationSet())
    assert oracle_admissible_forms("able", "bale", "a", "b", CommutationSet())


@settings(max_examples=300)
@given(st.data())
def test_oracle_agrees_with_projection_criterion(data):
    alphabet = data.draw(alphabets())
    known = data.draw(commutation_sets(alphabet))
    w1 = data.draw(words(alphabet, 0, 7))
    w2 = "".join(data.draw(st.permutations(list(w1))))
    got = oracle_trace_equal(w1, w2, known, limit=50_000)
    assert got is not None
    assert got == trace_equal(w1, w2, known)
