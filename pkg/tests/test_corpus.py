import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexbase import (
    DataError,
    Document,
    LemmaTable,
    ParseError,
    TokenizationConfig,
    ingest,
    ingest_manifest,
    load_documents,
    normalize,
    read_declared_percentages,
    read_lemma_table,
    read_manifest,
    tokenize,
)
from lexbase.corpus import ManifestEntry
from oracles import naive_tokenize

CFG = TokenizationConfig()


def test_tokenize_empty():
    assert tokenize("", CFG) == []


def test_tokenize_strips_punctuation():
    assert tokenize("Слово, слово!", CFG) == ["Слово", "слово"]


def test_tokenize_keeps_intra_word_marks():
    assert tokenize("м'ясо-молочний", CFG) == ["м'ясо-молочний"]


def test_tokenize_trims_marks_at_token_edges():
    assert tokenize("-ab- 'c' --", CFG) == ["ab", "c"]


def test_tokenize_numerals_dropped_by_default():
    assert tokenize("року 1989 рік", CFG) == ["року", "рік"]
    kept = TokenizationConfig(keep_numerals=True)
    assert tokenize("року 1989 рік", kept) == ["року", "1989", "рік"]
    assert tokenize("x2y", kept) == ["x", "2", "y"]


def test_config_rejects_bad_marks():
    for bad in (" ", "a", "Ї", "5"):
        with pytest.raises(ValueError):
            TokenizationConfig(intra_word_marks=frozenset({bad}))


def test_config_marks_are_frozen():
    cfg = TokenizationConfig(intra_word_marks={"-"})
    assert isinstance(cfg.intra_word_marks, frozenset)
    with pytest.raises(AttributeError):
        cfg.case_fold = False


_MIXED = st.text(alphabet=st.sampled_from("абвГ слово ab'x-y.,!?;123’—\n\t"), max_size=200)


@given(st.one_of(_MIXED, st.text(max_size=80)), st.booleans())
def test_tokenize_matches_scanner_oracle(text, keep_numerals):
    cfg = TokenizationConfig(keep_numerals=keep_numerals)
    expected, spans = naive_tokenize(text, cfg)
    assert tokenize(text, cfg) == expected
    # tokens appear in text order and do not overlap
    for (_, end), (start, _) in zip(spans, spans[1:]):
        assert start >= end
    for (start, end), token in zip(spans, expected):
        assert text[start:end] == token


def test_normalize_case_fold_identity_fallback():
    assert normalize("Слово", CFG, LemmaTable()) == "слово"
    assert normalize("НОВИЙ", CFG, LemmaTable()) == "новий"


def test_normalize_table_lookup():
    table = LemmaTable({"слова": "слово"})
    assert normalize("слова", CFG, table) == "слово"
    assert normalize("СЛОВА", CFG, table) == "слово"


def test_normalize_without_case_fold():
    cfg = TokenizationConfig(case_fold=False)
    assert normalize("Слово", cfg, LemmaTable()) == "Слово"


def test_normalize_rejects_empty_token():
    with pytest.raises(ValueError):
        normalize("", CFG, LemmaTable())


def test_lemma_table_rejects_chained_lemmas():
    with pytest.raises(DataError):
        LemmaTable({"a": "b", "b": "c"})
    LemmaTable({"a": "b", "b": "b"})  # explicit identity is fine


def test_lemma_table_rejects_empty_lemma():
    with pytest.raises(DataError):
        LemmaTable({"a": ""})


@given(st.dictionaries(st.text("abcdefgh", min_size=1, max_size=6),
                       st.text("abcdefgh", min_size=1, max_size=6), max_size=20),
       st.text("abcdefgh", min_size=1, max_size=6))
def test_normalize_idempotent(raw, token):
    entries = dict(raw)
    for lemma in set(entries.values()):
        entries[lemma] = lemma  # force every lemma to be its own fixed point
    table = LemmaTable(entries)
    once = normalize(token, CFG, table)
    assert normalize(once, CFG, table) == once


def test_ingest_truncates_at_cap_across_documents():
    docs = [Document("g", "one", "a b c d"), Document("g", "two", "e f g h")]
    result = ingest(docs, cap=6)
    assert result.streams["g"].lemmas == ("a", "b", "c", "d", "e", "f")
    assert result.shortfalls == ()


def test_ingest_without_cap_keeps_everything():
    docs = [Document("g", "one", "a b c d"), Document("g", "two", "e f g h")]
    result = ingest(docs, cap=None)
    assert len(result.streams["g"].lemmas) == 8


def test_ingest_under_cap_is_a_warning_not_an_error():
    result = ingest([Document("g", "one", "a b c")], cap=300_000)
    assert result.streams["g"].lemmas == ("a", "b", "c")
    assert len(result.shortfalls) == 1
    assert result.shortfalls[0].genre == "g"
    assert "only 3" in result.shortfalls[0].message()


def test_ingest_rejects_empty_document_list():
    with pytest.raises(DataError):
        ingest([])


def test_ingest_rejects_duplicate_source_ids():
    docs = [Document("g", "same", "a"), Document("h", "same", "b")]
    with pytest.raises(DataError):
        ingest(docs)


def test_ingest_parallel_matches_sequential():
    docs = [
        Document("g1", "a", "x y z " * 40),
        Document("g2", "b", "п'ять шість " * 30),
        Document("g1", "c", "more words here " * 25),
        Document("g3", "d", "a b c d e"),
    ]
    sequential = ingest(docs, cap=50, workers=1)
    parallel = ingest(docs, cap=50, workers=4)
    assert sequential.streams == parallel.streams
    assert sequential.shortfalls == parallel.shortfalls


@given(st.lists(st.lists(st.sampled_from("abc"), max_size=30), min_size=1, max_size=5),
       st.integers(min_value=1, max_value=40))
@settings(deadline=None)
def test_ingest_stream_length_is_min_of_cap_and_total(token_lists, cap):
    docs = [Document("g", f"doc{i}", " ".join(tokens)) for i, tokens in enumerate(token_lists)]
    total = sum(len(tokens) for tokens in token_lists)
    result = ingest(docs, cap=cap)
    assert len(result.streams["g"].lemmas) == min(cap, total)


def test_manifest_roundtrip(tmp_path):
    (tmp_path / "one.txt").write_text("слово", encoding="utf-8")
    (tmp_path / "two.txt").write_text("діло", encoding="utf-8")
    manifest = tmp_path / "manifest.tsv"
    manifest.write_text(
        "# a comment line\n\ncolloquial\tone.txt\nofficial\ttwo.txt\n", encoding="utf-8"
    )
    entries = read_manifest(manifest)
    assert [e.genre for e in entries] == ["colloquial", "official"]
    assert entries[0].path == tmp_path / "one.txt"
    docs = load_documents(entries)
    assert docs[0].text == "слово"


def test_manifest_malformed_line_reports_line_number(tmp_path):
    manifest = tmp_path / "m.tsv"
    manifest.write_text("colloquial\tone.txt\nnot-a-manifest-line\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        read_manifest(manifest)
    assert err.value.line == 2


def test_manifest_duplicate_path_rejected(tmp_path):
    manifest = tmp_path / "m.tsv"
    manifest.write_text("a\tone.txt\nb\tone.txt\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_manifest(manifest)


def test_load_documents_names_unreadable_source(tmp_path):
    entry = ManifestEntry("g", tmp_path / "missing.txt")
    with pytest.raises(DataError) as err:
        load_documents([entry])
    assert "missing.txt" in str(err.value)


def test_load_documents_rejects_non_utf8(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"\xff\xfe broken")
    with pytest.raises(DataError) as err:
        load_documents([ManifestEntry("g", bad)])
    assert "bad.txt" in str(err.value)


def test_ingest_manifest_genre_filter(tmp_path):
    (tmp_path / "one.txt").write_text("a b c", encoding="utf-8")
    (tmp_path / "two.txt").write_text("d e", encoding="utf-8")
    manifest = tmp_path / "m.tsv"
    manifest.write_text("g1\tone.txt\ng2\ttwo.txt\n", encoding="utf-8")
    result = ingest_manifest(manifest, genre="g2", cap=None)
    assert list(result.streams) == ["g2"]
    with pytest.raises(DataError):
        ingest_manifest(manifest, genre="nope")


def test_read_lemma_table_casefolds_both_columns(tmp_path):
    path = tmp_path / "lemmas.tsv"
    path.write_text("# comment\nСЛОВА\tСЛОВО\n", encoding="utf-8")
    table = read_lemma_table(path)
    assert table.lookup("слова") == "слово"


def test_read_lemma_table_conflict_reports_line(tmp_path):
    path = tmp_path / "lemmas.tsv"
    path.write_text("a\tb\na\tc\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        read_lemma_table(path)
    assert err.value.line == 2


def test_read_declared_percentages(tmp_path):
    manifest = tmp_path / "m.tsv"
    manifest.write_text(
        "# declared:\tg1\t60\n# declared:\tg2\t40\ng1\tone.txt\n", encoding="utf-8"
    )
    assert read_declared_percentages(manifest) == {"g1": 60.0, "g2": 40.0}


def test_determinism_same_inputs_same_streams():
    docs = [Document("g", "one", "a b a c"), Document("h", "two", "x y")]
    first = ingest(docs, cap=3)
    second = ingest(docs, cap=3)
    assert first == second
