import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

from anagram_group import Dictionary, DictionaryFormatError, load_dictionary
from anagram_group.ingest import dump_dictionary


def write(tmp_path, text, name="words.txt"):
    p = tmp_path / name
    p.write_bytes(text.encode("utf-8"))
    return p


def test_dedup_preserves_first_seen_order(tmp_path):
    d = load_dictionary(write(tmp_path, "able\nbale\nable\n"))
    assert d.words == ("able", "bale")
    assert len(d) == 2


def test_case_folding_and_crlf(tmp_path):
    d = load_dictionary(write(tmp_path, "ABLE\r\nBale\r\n\r\n"))
    assert d.words == ("able", "bale")


def test_single_letter_words_kept(tmp_path):
    assert load_dictionary(write(tmp_path, "a\nab\n")).words == ("a", "ab")


def test_strict_rejects_with_line_number(tmp_path):
    p = write(tmp_path, "able\ncan't\nbale\n")
    with pytest.raises(DictionaryFormatError) as info:
        load_dictionary(p, "strict")
    assert info.value.lineno == 2
    assert ":2:" in str(info.value)


def test_lenient_skips_and_counts(tmp_path):
    d = load_dictionary(write(tmp_path, "able\ncan't\nnaïve\nbale\n"), "lenient")
    assert d.words == ("able", "bale")
    assert d.skipped == 2


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_dictionary(tmp_path / "nope.txt")


def test_unknown_policy(tmp_path):
    with pytest.raises(ValueError):
        load_dictionary(write(tmp_path, "a\n"), "loose")


def test_from_words():
    d = Dictionary.from_words(["Able", "bale", "able"])
    assert d.words == ("able", "bale")
    with pytest.raises(ValueError):
        Dictionary.from_words(["ok", "not ok"])


@settings(suppress_health_check=[HealthCheck.function_scoped_fixture], max_examples=50)
@given(st.lists(st.text(alphabet="abcXYz", min_size=1, max_size=6), max_size=20))
def test_dump_load_roundtrip(tmp_path, words):
    d = Dictionary.from_words(words, "x")
    path = tmp_path / "dump.txt"
    dump_dictionary(d, path)
    again = load_dictionary(path)
    assert again.words == d.words
    assert all(w and w.isalpha() and w.islower() for w in again.words)


def test_sowpods_contains_table_words(sowpods):
    assert "aquiline" in sowpods.words and "quiniela" in sowpods.words
