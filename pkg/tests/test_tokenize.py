import pytest

from cnldoc.errors import UnknownWordError
from cnldoc.tokens import tokenize


def surfaces(tokens):
    return [t.surface for t in tokens]


def kinds(tokens):
    return [t.kind for t in tokens]


def test_multiword_noun_is_one_token(corpus_lexicon):
    tokens = tokenize("Every class is a code element.", corpus_lexicon)
    assert surfaces(tokens) == ["Every", "class", "is", "a", "code element",
                                "."]
    assert kinds(tokens) == ["function-word", "lexical", "function-word",
                             "function-word", "lexical", "period"]


def test_empty_input(corpus_lexicon):
    assert tokenize("", corpus_lexicon) == []


def test_unknown_word_suggests_categories(corpus_lexicon):
    with pytest.raises(UnknownWordError) as exc:
        tokenize("EventHandler frobnicates Handler.", corpus_lexicon)
    error = exc.value
    assert error.word == "frobnicates"
    start, end = error.span
    assert "EventHandler frobnicates Handler."[start:end] == "frobnicates"
    assert "transitive-verb" in error.suggested_categories
    assert "noun" not in error.suggested_categories


def test_multiword_and_hyphenated_proper_names(corpus_lexicon):
    tokens = tokenize("Simon Denier maintains EmergencyHandler-isActive.",
                      corpus_lexicon)
    assert surfaces(tokens) == ["Simon Denier", "maintains",
                                "EmergencyHandler-isActive", "."]


def test_definite_article_folds_into_the_name(corpus_lexicon):
    tokens = tokenize("The EventManager Tutorial describes EventManager.",
                      corpus_lexicon)
    assert surfaces(tokens)[0] == "The EventManager Tutorial"
    tokens = tokenize("Core contains the Data Base Manager.", corpus_lexicon)
    assert surfaces(tokens) == ["Core", "contains", "the Data Base Manager",
                                "."]


def test_longest_match_prefers_of_construct(corpus_lexicon):
    tokens = tokenize("a member of RMoD", corpus_lexicon)
    assert surfaces(tokens) == ["a", "member of", "RMoD"]
    tokens = tokenize("a direct subclass of MOShape", corpus_lexicon)
    assert surfaces(tokens) == ["a", "direct subclass of", "MOShape"]


def test_longest_match_prefers_longer_proper_name(corpus_lexicon):
    # "Simon" alone is also a name; "Simon Denier" must win when present
    tokens = tokenize("Simon Denier", corpus_lexicon)
    assert surfaces(tokens) == ["Simon Denier"]
    tokens = tokenize("Simon maintains EventHandler.", corpus_lexicon)
    assert surfaces(tokens)[0] == "Simon"


def test_word_boundaries_respected(corpus_lexicon):
    # "Events" must not tokenize as "Event" + "s"
    tokens = tokenize("Events", corpus_lexicon)
    assert surfaces(tokens) == ["Events"]


def test_sentence_initial_case_folding(corpus_lexicon):
    lower = tokenize("every class is a code element.", corpus_lexicon)
    assert lower[0].kind == "function-word"
    # mid-sentence function words are lowercase only
    with pytest.raises(UnknownWordError):
        tokenize("EventHandler Is a class.", corpus_lexicon)


def test_variables_and_numbers(corpus_lexicon):
    tokens = tokenize("If X maintains 80", corpus_lexicon)
    assert kinds(tokens) == ["function-word", "variable", "lexical", "number"]


def test_spans_cover_the_source(corpus_lexicon):
    text = "Simon Denier maintains EmergencyHandler."
    for token in tokenize(text, corpus_lexicon):
        start, end = token.span
        assert text[start:end] == token.surface


def test_hyphenated_verb_surface(corpus_lexicon):
    tokens = tokenize("belongs-to the Test module", corpus_lexicon)
    assert surfaces(tokens) == ["belongs-to", "the Test module"]
