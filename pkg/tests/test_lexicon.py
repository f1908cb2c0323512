import pytest

from cnldoc.errors import LexiconError
from cnldoc.lexicon import (Lexicon, make_entry, parse_lexicon,
                            parse_lexicon_line)


def test_categories_and_forms():
    noun = make_entry("noun", "class", "classes")
    assert noun.lemma == "class"
    assert noun.surfaces() == ("class", "classes")

    verb = make_entry("transitive-verb", "maintains", "maintain", "maintained")
    assert verb.passive_allowed
    fused = make_entry("transitive-verb", "belongs to", "belong to")
    assert not fused.passive_allowed
    assert fused.lemma == "belongs-to"


def test_definite_article_proper_name():
    entry = parse_lexicon_line("proper-name | The EventManager Tutorial")
    assert entry.definite_article
    assert entry.forms["name"] == "EventManager Tutorial"
    assert "the EventManager Tutorial" in entry.surfaces()
    assert "The EventManager Tutorial" in entry.surfaces()


def test_adjective_preposition_fuses():
    entry = parse_lexicon_line("adjective-preposition | related | to")
    assert entry.forms["adj"] == "related to"


def test_of_construct_requires_trailing_of():
    with pytest.raises(LexiconError):
        make_entry("of-construct", "member", "members")


def test_missing_form_rejected():
    with pytest.raises(LexiconError):
        make_entry("noun", "class")


def test_duplicate_surface_within_category_rejected():
    with pytest.raises(LexiconError):
        Lexicon([make_entry("noun", "class", "classes"),
                 make_entry("noun", "class", "klasses")])


def test_same_surface_across_categories_allowed():
    lex = Lexicon([make_entry("noun", "document", "documents"),
                   make_entry("transitive-verb", "documents", "document",
                              "documented")])
    assert len(lex.lookup_surface("documents")) == 2


def test_comments_and_blank_lines_skipped():
    lex = parse_lexicon("# comment\n\nnoun | class | classes\n")
    assert len(lex) == 1


def test_with_entries_returns_new_value():
    lex = parse_lexicon("noun | class | classes\n")
    extended = lex.with_entries([make_entry("proper-name", "Core")])
    assert len(lex) == 1 and len(extended) == 2
