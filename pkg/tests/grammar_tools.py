"""Test helpers: random sentence generation from the grammar, and the
token-picker random walk used by the completion properties."""

from __future__ import annotations

import random

from cnldoc import grammar as G
from cnldoc.earley import Node
from cnldoc.lexicon import PROPER_NAME
from cnldoc.parser import completions_for_tokens, parser_for
from cnldoc.tokens import (FUNCTION_WORD, LEXICAL, NUMBER, PERIOD,
                           QUESTION_MARK, VARIABLE, Candidate, Token)


class SentenceGenerator:
    """Random derivations from the (lexicon-pruned) grammar, as parse
    trees built with the parser's own node conventions."""

    def __init__(self, lexicon, seed=0):
        self.lexicon = lexicon
        self.parser = parser_for(lexicon)
        self.rng = random.Random(seed)

    def sentence(self):
        """(text, tree) for one random complete sentence."""
        tree = self._expand(G.START, depth=0)
        text = " ".join(leaf.token.surface for leaf in _leaves(tree))
        return text, tree

    def _expand(self, symbol, depth):
        if G.is_terminal(symbol):
            return self._leaf(symbol)
        prods = self.parser._prods_by_lhs[symbol]
        if depth > 8:
            prods = [min(prods, key=lambda p: sum(
                self.parser.min_len(s) for s in p.rhs))]
        prod = self.rng.choice(prods)
        children = tuple(self._expand(s, depth + 1) for s in prod.rhs)
        return Node(prod.tag, prod.label, children)

    def _leaf(self, terminal):
        kind = terminal[0]
        if kind == "w":
            word = terminal[1]
            return _leaf_node(Token(FUNCTION_WORD, word, (0, 0),
                                    (Candidate(FUNCTION_WORD, word=word),)))
        if kind == "lex":
            category, slot = terminal[1], terminal[2]
            entries = [e for e in self.lexicon.entries(category)
                       if e.forms.get(slot)]
            entry = self.rng.choice(entries)
            if category == PROPER_NAME and entry.definite_article:
                surface = "the " + entry.forms["name"]
            else:
                surface = entry.forms[slot]
            token = Token(LEXICAL, surface, (0, 0),
                          (Candidate(LEXICAL, entry=entry, slot=slot),))
            return _leaf_node(token, entry, slot)
        if kind == "var":
            name = self.rng.choice(("X", "Y", "Z"))
            return _leaf_node(Token(VARIABLE, name, (0, 0),
                                    (Candidate(VARIABLE, word=name),)))
        if kind == "num":
            number = str(self.rng.randint(0, 120))
            return _leaf_node(Token(NUMBER, number, (0, 0),
                                    (Candidate(NUMBER, word=number),)))
        if kind == "dot":
            return _leaf_node(Token(PERIOD, ".", (0, 0),
                                    (Candidate(PERIOD),)))
        if kind == "qmark":
            return _leaf_node(Token(QUESTION_MARK, "?", (0, 0),
                                    (Candidate(QUESTION_MARK),)))
        raise AssertionError(terminal)


def _leaf_node(token, entry=None, slot=None):
    return Node("tok", token=token, entry=entry, slot=slot)


def _leaves(node):
    if node.is_leaf:
        return [node]
    out = []
    for child in node.children:
        out.extend(_leaves(child))
    return out


def render(tree) -> str:
    return " ".join(leaf.token.surface for leaf in _leaves(tree))


def tokens_of(tree):
    return [leaf.token for leaf in _leaves(tree)]


def token_from_pair(surface, category, lexicon) -> Token:
    """Build the token a picker choice stands for."""
    if category == "function-word":
        return Token(FUNCTION_WORD, surface, (0, 0),
                     (Candidate(FUNCTION_WORD, word=surface.lower()),))
    if category == "variable":
        return Token(VARIABLE, surface, (0, 0),
                     (Candidate(VARIABLE, word=surface),))
    if category == "number":
        return Token(NUMBER, surface, (0, 0), (Candidate(NUMBER, word=surface),))
    if category == "punctuation":
        if surface == ".":
            return Token(PERIOD, ".", (0, 0), (Candidate(PERIOD),))
        return Token(QUESTION_MARK, "?", (0, 0), (Candidate(QUESTION_MARK),))
    candidates = tuple(Candidate(LEXICAL, entry=e, slot=s)
                       for e, s in lexicon.lookup_surface(surface))
    assert candidates, "picker offered a surface the lexicon cannot produce"
    return Token(LEXICAL, surface, (0, 0), candidates)


def random_walk(lexicon, rng, max_tokens=25, number_pool=("1", "20", "80")):
    """Drive the completion set like the editor's token picker; returns
    the finished sentence's token list (ends with . or ?)."""
    parser = parser_for(lexicon)
    tokens = []
    while True:
        completion = completions_for_tokens(tokens, lexicon)
        assert completion.next_tokens, "picker ran into a dead end"
        if completion.sentence_end and (len(tokens) >= 14
                                        or rng.random() < 0.35):
            punct = [p for p in completion.next_tokens
                     if p[1] == "punctuation"]
            surface, category = punct[0]
            tokens.append(token_from_pair(surface, category, lexicon))
            return tokens
        pairs = sorted(p for p in completion.next_tokens
                       if p[1] != "punctuation")
        if not pairs:
            punct = sorted(p for p in completion.next_tokens)
            tokens.append(token_from_pair(*punct[0], lexicon))
            return tokens
        if len(tokens) < 14:
            surface, category = pairs[rng.randrange(len(pairs))]
            if category == "number":
                surface = rng.choice(number_pool)
        else:
            # home stretch: always take a shortest continuation so the
            # sentence closes within the budget
            best = None
            for surface, category in pairs:
                token = token_from_pair(surface, category, lexicon)
                remaining = parser.min_remaining(tokens + [token])
                if best is None or remaining < best[0]:
                    best = (remaining, surface, category)
            _, surface, category = best
        tokens.append(token_from_pair(surface, category, lexicon))
        assert len(tokens) < max_tokens, "walk exceeded the token budget"
