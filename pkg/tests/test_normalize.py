from cnldoc.logic import (Atom, Denial, Fact, Predicate, Query, Rule, const,
                          normalize, statement_key, var)
from cnldoc.parser import parse
from cnldoc.translate import translate

CLASS = Predicate("noun", "class")
DEFINES = Predicate("transitive-verb", "defines")
USES = Predicate("transitive-verb", "uses")


def test_alpha_renaming():
    one = Rule((Atom(DEFINES, (var("Y"), var("X"))),),
               Atom(CLASS, (var("Y"),)))
    two = Rule((Atom(DEFINES, (var("X"), var("Y"))),),
               Atom(CLASS, (var("X"),)))
    assert normalize(one) == normalize(two)


def test_body_reordering():
    one = Denial((Atom(CLASS, (var("X"),)),
                  Atom(USES, (var("X"), var("Y")))))
    two = Denial((Atom(USES, (var("A"), var("B"))),
                  Atom(CLASS, (var("A"),))))
    assert normalize(one) == normalize(two)


def test_facts_are_fixed_points():
    fact = Fact(Atom(USES, (const("A"), const("B"))))
    assert normalize(fact) == fact


def test_idempotence():
    statements = [
        Rule((Atom(DEFINES, (var("Y"), var("X"))),), Atom(CLASS, (var("Y"),))),
        Denial((Atom(CLASS, (var("Z"),)), Atom(USES, (var("Z"), var("X"))))),
        Query(var("Q"), (Atom(CLASS, (var("Q"),)),)),
    ]
    for statement in statements:
        once = normalize(statement)
        assert normalize(once) == once


def test_sentence_level_equivalence(corpus_lexicon):
    """Two spellings of one meaning share a normal form key."""
    a = translate(parse("If X defines Y then Y is a method of X.",
                        corpus_lexicon))[0]
    b = translate(parse("If Z defines X then X is a method of Z.",
                        corpus_lexicon))[0]
    assert statement_key(a) == statement_key(b)


def test_different_meanings_differ():
    one = Rule((Atom(DEFINES, (var("X"), var("Y"))),),
               Atom(CLASS, (var("X"),)))
    two = Rule((Atom(DEFINES, (var("X"), var("Y"))),),
               Atom(CLASS, (var("Y"),)))
    assert statement_key(one) != statement_key(two)
