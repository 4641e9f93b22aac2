from hypothesis import given, settings
from hypothesis import strategies as st

from newssearch.text_pipeline import (
    DEFAULT_CONFIG,
    DEFAULT_STOPWORDS,
    STRIP_CHARS,
    PipelineConfig,
    normalize,
    pipeline,
    tokenize,
)

STEM_CONFIG = PipelineConfig(stemming_enabled=True)


class TestTokenize:
    def test_title_words(self):
        assert tokenize("Sarah Everard disappearance") == ["Sarah", "Everard", "disappearance"]

    def test_empty(self):
        assert tokenize("") == []

    def test_whitespace_runs(self):
        assert tokenize("a  b\tc") == ["a", "b", "c"]

    def test_join_round_trip(self):
        tokens = ["covid", "rules", "scotland"]
        assert tokenize(" ".join(tokens)) == tokens


class TestNormalize:
    def test_stopword_removed(self):
        assert normalize(["bananas", "and", "apples"]) == ["bananas", "apples"]

    def test_case_insensitive_stopwords(self):
        assert normalize(["The", "THE", "the"]) == []

    def test_punctuation_stripped_digits_kept(self):
        assert normalize(["Covid-19:"]) == ["covid19"]

    def test_default_stopword_list_is_the_six_determiners(self):
        assert DEFAULT_STOPWORDS == {"a", "that", "the", "an", "and", "those"}
        assert len(DEFAULT_STOPWORDS) == 6

    def test_stemming_applies_when_enabled(self):
        assert normalize(["meetings", "arrested"], STEM_CONFIG) == ["meet", "arrest"]
        assert normalize(["meetings", "arrested"]) == ["meetings", "arrested"]

    def test_pure_punctuation_dropped(self):
        assert normalize(["!!!", "--", "'"]) == []

    def test_stem_created_stopword_dropped(self):
        # "ands" stems to the stopword "and"
        assert normalize(["ands"], STEM_CONFIG) == []


def _assert_clean(tokens: list[str], config: PipelineConfig) -> None:
    for token in tokens:
        assert token, "empty token"
        assert token == token.lower(), f"uppercase survived: {token!r}"
        assert not set(token) & set(STRIP_CHARS), f"punctuation survived: {token!r}"
        assert token not in config.stopwords, f"stopword survived: {token!r}"


class TestPipelineProperties:
    @settings(max_examples=500, deadline=None)
    @given(st.text())
    def test_output_clean(self, text):
        _assert_clean(pipeline(text), DEFAULT_CONFIG)

    @settings(max_examples=500, deadline=None)
    @given(st.text())
    def test_output_clean_with_stemming(self, text):
        _assert_clean(pipeline(text, STEM_CONFIG), STEM_CONFIG)

    @settings(max_examples=300, deadline=None)
    @given(st.text())
    def test_idempotent_without_stemming(self, text):
        once = pipeline(text)
        assert normalize(once) == once

    @settings(max_examples=300, deadline=None)
    @given(st.text())
    def test_deterministic(self, text):
        assert pipeline(text) == pipeline(text)

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789", min_size=1)))
    def test_clean_tokens_round_trip(self, words):
        tokens = normalize(words)
        assert tokenize(" ".join(tokens)) == tokens
