import csv
import io
import json

import pytest
from hypothesis import given, strategies as st

from anagram_group import CommutationSet, Dictionary, RunConfig, run
from anagram_group.model import all_pairs
from anagram_group.report import (
    PresentationDoc,
    emit_presentation,
    emit_progress,
    emit_verification,
    emit_witness_table,
    group_missing,
)
from anagram_group.traces import check_certificate

EXPECTED_MISSING = sorted(
    [tuple(sorted(p)) for p in ["jq", "jx", "jz", "qx", "qz", "xz"]]
    + [tuple(sorted("j" + c)) for c in "fklwy"]
    + [tuple(sorted("q" + c)) for c in "bfgkwy"]
    + [tuple(sorted("x" + c)) for c in "fkv"]
    + [tuple(sorted("z" + c)) for c in "fkvw"]
)


@pytest.fixture
def small_result():
    return run(Dictionary.from_words(["able", "bale", "ab", "ba", "abc", "acb"]))


def test_grouping_by_hub_letter():
    groups = group_missing(EXPECTED_MISSING)
    assert [(k, "".join(letters), len(p)) for k, letters, p in groups] == [
        ("among", "jqxz", 6),
        ("j", "fklwy", 5),
        ("q", "bfgkwy", 6),
        ("x", "fkv", 3),
        ("z", "fkvw", 4),
    ]


def test_presentation_json_roundtrip(small_result):
    text = emit_presentation(small_result, "json")
    data = json.loads(text)
    assert data["relation_count"] == 2
    assert data["missing_count"] == 323
    doc = PresentationDoc.from_dict(data)
    assert doc == PresentationDoc.from_result(small_result)
    assert doc.group_class == "right-angled Artin group"


@given(st.sets(st.sampled_from(all_pairs("abcdef"))))
def test_presentation_doc_roundtrip_property(pairs):
    rel = tuple(sorted(pairs))
    miss = tuple(p for p in all_pairs("abcdef") if p not in pairs)
    doc = PresentationDoc("abcdef", rel, miss, None)
    assert PresentationDoc.from_dict(json.loads(json.dumps(doc.to_dict()))) == doc


def test_presentation_doc_rejects_overlap():
    with pytest.raises(ValueError):
        PresentationDoc("abc", (("a", "b"),), (("a", "b"), ("a", "c"), ("b", "c")))


def test_presentation_text(small_result):
    text = emit_presentation(small_result, "text")
    assert "commutator relations: 2 of 325" in text
    assert "class: right-angled Artin group" in text
    assert "[a, *]: b" in text


def test_degenerate_presentation():
    r = run(Dictionary.from_words(["abab", "baba"]))
    data = json.loads(emit_presentation(r, "json"))
    assert data["relation_count"] == 0 and data["missing_count"] == 325
    assert data["group_class"] is None


def test_witness_table(small_result):
    rows = list(csv.reader(io.StringIO(emit_witness_table(small_result, "csv"))))
    assert rows[0] == ["iteration", "alpha", "beta", "word1", "word2", "reduced1", "reduced2"]
    assert rows[1][:5] == ["1", "a", "b", "ab", "ba"]
    assert rows[2][:3] == ["1", "b", "c"]
    assert "able" not in emit_witness_table(small_result, "csv")  # ab/ba wins the tie
    assert emit_witness_table(small_result, "text").splitlines()[1].split()[:3] == ["1", "a", "b"]


def test_witness_certificates_replay_against_final_set(small_result):
    for w in small_result.witnesses:
        assert all(check_certificate(c, small_result.commutators) for c in w.certificates)


def test_progress(small_result):
    assert emit_progress(small_result, "csv") == "iteration,anagraphs,commutators\n1,3,2\n2,1,2\n"
    one = run(Dictionary.from_words(["abab", "baba"]))
    assert emit_progress(one, "csv").count("\n") == 2
    empty = run(Dictionary.from_words(["a"]))
    assert emit_progress(empty, "csv").count("\n") == 2  # store is empty but one pass runs
    assert "anagraphs" in emit_progress(small_result, "text")


def test_verification_output(small_result):
    assert "all relations implied: yes" in emit_verification(small_result, "text")
    data = json.loads(emit_verification(small_result, "json"))
    assert data["verification"]["all_relations_implied"] is True
    r = run(Dictionary.from_words(["ab", "ba"]), RunConfig(verify=False))
    assert emit_verification(r) == "verification: not run\n"


def test_bad_formats(small_result):
    for fn in (emit_presentation, emit_witness_table, emit_progress, emit_verification):
        with pytest.raises(ValueError):
            fn(small_result, "xml")
