"""The controlled-English grammar.

Sentence schemata covered (one example each; see docs/grammar.md for the
full reference):

  ground facts        "EventHandler is a class."
                      "Simon Denier maintains EmergencyHandler."
                      "AlarmDesk is written by Simon Denier."
                      "A purpose of ResultsCache is performance improvement."
  universal rules     "Every member of Group-B is a member of Group-A."
                      "If X belongs to Y and uses Z then Y uses Z."
  denials             "No subclass of Handler is maintained by a member of Group-A."
  cardinality checks  "Everything belongs to at most 1 component."
                      "MySystem contains exactly 10 modules."
  questions           "Which methods are invoked by more than 80 methods?"
                      "What belongs to Core?"

The grammar is engineered to be unambiguous: relative clauses attach to
the nearest noun, "and" joins verb phrases under one subject and never
crosses "then", and variables (X, Y, Z) are licensed only inside
"If ... then ..." sentences.  Anything outside these productions is a
syntax error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import ADJPREP, NOUN, OFC, PROPER_NAME, VERB

# terminal constructors -------------------------------------------------------

def W(word):
    return ("w", word)


def LEX(category, slot):
    return ("lex", category, slot)


VAR = ("var",)
NUM = ("num",)
DOT = ("dot",)
QMARK = ("qmark",)

START = "S"


def is_terminal(symbol) -> bool:
    return isinstance(symbol, tuple)


@dataclass(frozen=True)
class Production:
    index: int
    lhs: str
    rhs: tuple
    tag: str
    label: str = None


def _build():
    prods = []

    def p(lhs, rhs, tag, label=None):
        prods.append(Production(len(prods), lhs, tuple(rhs), tag, label))

    PN = LEX(PROPER_NAME, "name")

    # --- sentences -----------------------------------------------------
    for core in ("FactD", "OfcFactD", "EveryD", "NoD", "IfD", "CardUD", "CardSD"):
        p(START, (core, DOT), "sentence", "sentence/declarative")
    for core in ("WhichQ", "WhatQ"):
        p(START, (core, QMARK), "sentence", "sentence/question")

    # --- declaratives ----------------------------------------------------
    p("FactD", (PN, "VPConj.sg.0"), "decl-fact")
    p("OfcFactD", ("Art", LEX(OFC, "sg"), "NP0", W("is"), PN), "decl-ofc-fact")
    p("EveryD", (W("every"), "Nom.sg", "VPConj.sg.0"), "decl-every")
    p("NoD", (W("no"), "Nom.sg", "VPConj.sg.0"), "decl-no")
    p("IfD", (W("if"), "IfSubj", "VPConj.sg.1", W("then"), VAR, "VPConj.sg.1"),
      "decl-if")
    p("IfSubj", (VAR,), "ifsubj-var")
    p("IfSubj", (W("something"),), "ifsubj-something")
    p("CardUD", (W("everything"), "CardVP"), "decl-card-universal")
    p("CardSD", (PN, "CardVP"), "decl-card-scoped")

    p("Art", (W("a"),), "art")
    p("Art", (W("an"),), "art")

    # --- counting --------------------------------------------------------
    p("CardVP", (LEX(VERB, "sg"), "CountNP"), "cardvp-active")
    p("CardVP", (W("is"), LEX(VERB, "pp"), W("by"), "CountNP"), "cardvp-passive")
    # the counted noun agrees with the number ("1 component", "80 methods");
    # the grammar cannot see the numeral's value, so both forms are licensed
    p("CountNP", ("Cmp", NUM, LEX(NOUN, "pl")), "countnp", "numeric-quantifier")
    p("CountNP", ("Cmp", NUM, LEX(NOUN, "sg")), "countnp", "numeric-quantifier")
    p("Cmp", (W("more"), W("than")), "cmp-more-than")
    p("Cmp", (W("at"), W("most")), "cmp-at-most")
    p("Cmp", (W("at"), W("least")), "cmp-at-least")
    p("Cmp", (W("exactly"),), "cmp-exactly")

    # --- questions -------------------------------------------------------
    p("WhichQ", (W("which"), "Nom.sg", "VPConjC.sg"), "quest-which")
    p("WhichQ", (W("which"), "Nom.pl", "VPConjC.pl"), "quest-which")
    p("WhatQ", (W("what"), "VPConjC.sg"), "quest-what")

    # --- nominals (subjects of Every/No/Which) ---------------------------
    for num in ("sg", "pl"):
        p("Nom." + num, (LEX(NOUN, num),), "nom-noun", "subject-nominal")
        p("Nom." + num, (LEX(NOUN, num), "Rel.%s.0" % num), "nom-noun-rel",
          "subject-nominal")
        p("Nom." + num, (LEX(OFC, num), "NP0"), "nom-ofc", "subject-nominal")

    # --- noun phrases ------------------------------------------------------
    for v in ("0", "1"):
        p("NP" + v, (PN,), "np-pn", "np")
        if v == "1":
            p("NP1", (VAR,), "np-var", "np")
        p("NP" + v, ("Art", "NounPred" + v), "np-indef", "np")
        p("NP" + v, (W("something"),), "np-something", "np")
        p("NP" + v, (W("something"), "Rel.sg." + v), "np-something-rel", "np")
        p("NounPred" + v, (LEX(NOUN, "sg"),), "nounpred-noun")
        p("NounPred" + v, (LEX(NOUN, "sg"), "Rel.sg." + v), "nounpred-noun-rel")
        p("NounPred" + v, (LEX(OFC, "sg"), "NP" + v), "nounpred-ofc")

    # --- verb phrases ----------------------------------------------------
    # (num, variables-licensed) combinations actually reachable
    for num, v in (("sg", "0"), ("pl", "0"), ("sg", "1")):
        vp = "VP.%s.%s" % (num, v)
        cop = W("is") if num == "sg" else W("are")
        if num == "sg":
            p(vp, (W("is"), "Art", "NounPred" + v), "vp-isa", "verb-phrase")
        p(vp, (LEX(VERB, num), "NP" + v), "vp-active", "verb-phrase")
        p(vp, (cop, LEX(VERB, "pp"), W("by"), "NP" + v), "vp-passive",
          "verb-phrase")
        p(vp, (cop, LEX(ADJPREP, "adj"), "NP" + v), "vp-adjprep", "verb-phrase")

        conj = "VPConj.%s.%s" % (num, v)
        p(conj, (vp,), "vpconj-one")
        p(conj, (vp, W("and"), conj), "vpconj-cons", "conjunction")

        p("Rel.%s.%s" % (num, v), (W("that"), vp), "relcl", "relative-clause")

    # counting verb phrases, only in question predicates
    for num in ("sg", "pl"):
        vpc = "VPc." + num
        cop = W("is") if num == "sg" else W("are")
        p(vpc, (LEX(VERB, num), "CountNP"), "vp-active-count", "verb-phrase")
        p(vpc, (cop, LEX(VERB, "pp"), W("by"), "CountNP"), "vp-passive-count",
          "verb-phrase")

        # question predicate: plain conjuncts with at most one counting one
        cconj = "VPConjC." + num
        plain = "VP.%s.0" % num
        pconj = "VPConj.%s.0" % num
        p(cconj, (plain,), "vpconj-one")
        p(cconj, (vpc,), "vpconj-one")
        p(cconj, (plain, W("and"), cconj), "vpconj-cons", "conjunction")
        p(cconj, (vpc, W("and"), pconj), "vpconj-cons", "conjunction")

    return tuple(prods)


PRODUCTIONS = _build()

_BY_LHS = {}
for _prod in PRODUCTIONS:
    _BY_LHS.setdefault(_prod.lhs, []).append(_prod)


def productions_for(lhs):
    return _BY_LHS.get(lhs, ())


def all_nonterminals():
    return tuple(_BY_LHS)
