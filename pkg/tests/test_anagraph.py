import json

from hypothesis import given, settings, strategies as st

from anagram_group import (
    CommutationSet,
    Dictionary,
    build_anagraphs,
    component_pairs,
    letter_count,
    reduce_store,
    reduce_word,
    removable_letters,
)
from anagram_group.anagraph import Anagraph, removable_closure
from anagram_group.model import signature

from .strategies import alphabets, commutation_sets


def store_of(*words):
    return build_anagraphs(Dictionary.from_words(words))


def test_build_groups_and_discards_singletons():
    s = store_of("able", "bale", "albe", "cat")
    assert len(s) == 1
    (g,) = s
    assert g.key == "abel"
    assert g.components == (("able", "albe", "bale"),)
    assert g.provenance["albe"] == ("albe",)


def test_build_empty():
    assert len(build_anagraphs(Dictionary(()))) == 0


def test_reduce_word():
    assert reduce_word("able", {"a"}) == "ble"
    assert reduce_word("banana", {"a"}) == "bnn"
    assert reduce_word("aaa", {"a"}) == ""


def test_full_commutation_eliminates_bucket():
    s = store_of("able", "bale")
    assert len(reduce_store(s, CommutationSet.full())) == 0


@given(st.data())
def test_removal_closure_is_one_pass(data):
    # a removed letter commutes with everything left, so it never unblocks another
    alphabet = data.draw(alphabets())
    known = data.draw(commutation_sets(alphabet))
    key = data.draw(st.text(alphabet=alphabet, min_size=1, max_size=8))
    assert removable_closure(key, known) == removable_letters(key, known)


def test_buckets_merge_and_components_unify():
    known = CommutationSet.from_strings(
        [c + x for c in "abc" for x in "xyz"], alphabet="abcxyz"
    )
    s = store_of("axyz", "xazy", "bxzy", "zyxb", "cyzx", "yzxc")
    assert len(s) == 3
    r = reduce_store(s, known)
    assert list(r.buckets) == ["xyz"]
    g = r["xyz"]
    assert g.components == (("xyz", "xzy", "zyx"), ("yzx",))
    assert g.provenance["xzy"] == ("bxzy", "xazy")
    assert g.provenance["yzx"] == ("cyzx", "yzxc")
    assert list(component_pairs(g)) == [("xyz", "xzy"), ("xyz", "zyx"), ("xzy", "zyx")]


def test_reduction_to_distinct_strings_keeps_bucket():
    # a commutes with x and c, so "xac"/"xca" become "xc"/"xc" and vanish,
    # while "xbc"/"xcb" keep b and survive unchanged
    known = CommutationSet.from_strings(["ax", "ac"])
    r = reduce_store(store_of("xac", "xca", "xbc", "xcb"), known)
    assert list(r.buckets) == ["bcx"]
    assert r["bcx"].components == (("xbc", "xcb"),)


def test_component_pairs():
    g = Anagraph("xyz", (("x", "y", "z"),), {})
    assert list(component_pairs(g)) == [("x", "y"), ("x", "z"), ("y", "z")]
    g = Anagraph("", (("x", "y"), ("z",)), {})
    assert list(component_pairs(g)) == [("x", "y")]
    assert list(component_pairs(Anagraph("", (("x",),), {}))) == []


def test_json_dump():
    data = json.loads(store_of("able", "bale").to_json())
    assert data == [{
        "key": "abel",
        "vertices": ["able", "bale"],
        "components": [["able", "bale"]],
        "provenance": {"able": ["able"], "bale": ["bale"]},
    }]


@st.composite
def store_and_sets(draw):
    alphabet = draw(alphabets(2, 4))
    base = draw(st.lists(st.text(alphabet=alphabet, min_size=1, max_size=6), min_size=1, max_size=12))
    words = list(base)
    for w in base:
        perm = draw(st.permutations(list(w)))
        words.append("".join(perm))
    i1 = draw(commutation_sets(alphabet))
    i2 = i1.union(draw(commutation_sets(alphabet)).pairs)
    return build_anagraphs(Dictionary.from_words(words)), i1, i2


@settings(max_examples=200)
@given(store_and_sets())
def test_reduce_store_invariants(args):
    s0, i1, i2 = args
    s1 = reduce_store(s0, i1)
    s2 = reduce_store(s1, i2)
    # coherence
    for s in (s1, s2):
        for g in s:
            assert len(g.vertices) >= 2
            for v in g.vertices:
                assert signature(v) == g.key
                assert letter_count(v) == letter_count(g.key)
            flat = [v for c in g.components for v in c]
            assert len(flat) == len(set(flat))
    # shrinkage
    assert len(s2) <= len(s1) <= len(s0)
    assert s2.vertex_count() <= s1.vertex_count() <= s0.vertex_count()
    # idempotence
    assert reduce_store(s1, i1) == s1
    assert reduce_store(s2, i2) == s2
    # provenance resolves to original words with the same reduced form
    originals = {v for g in s0 for v in g.vertices}
    for g in s2:
        for v, src in g.provenance.items():
            assert src and set(src) <= originals
