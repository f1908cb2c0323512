"""Longest-match tokenizer driven by the lexicon.

Multiword proper names ("Simon Denier", "The EventManager Tutorial") and
hyphenated code names ("EmergencyHandler-isActive") come out as one
lexical token; a terminal "." or "?" is its own token.  Lexical lookup is
case-sensitive except at the start of a sentence, where both
capitalizations are tried; function words are case-insensitive at the
sentence start only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownWordError
from .lexicon import Lexicon

FUNCTION_WORD = "function-word"
LEXICAL = "lexical"
VARIABLE = "variable"
NUMBER = "number"
PERIOD = "period"
QUESTION_MARK = "question-mark"

FUNCTION_WORDS = frozenset([
    "every", "no", "if", "then", "everything", "which", "what",
    "something", "that", "and", "is", "are", "a", "an", "by",
    "more", "than", "at", "most", "least", "exactly",
])

VARIABLES = ("X", "Y", "Z")

_BOUNDARY = frozenset(" \t\n.?")


@dataclass(frozen=True)
class Candidate:
    """One reading of a token: its kind plus, for lexical tokens, the
    lexicon entry and the form slot that matched."""
    kind: str
    word: str = None        # normalized function word
    entry: object = None    # LexEntry for lexical candidates
    slot: str = None


@dataclass(frozen=True)
class Token:
    kind: str               # kind of the first candidate (they rarely differ)
    surface: str            # source text as written
    span: tuple             # (start, end) character range
    candidates: tuple = ()

    @property
    def entry(self):
        for cand in self.candidates:
            if cand.entry is not None:
                return cand.entry
        return None

    def __repr__(self):
        return "Token(%s, %r)" % (self.kind, self.surface)


def _at_boundary(text, pos):
    return pos >= len(text) or text[pos] in _BOUNDARY


def _next_word(text, pos):
    end = pos
    while not _at_boundary(text, end):
        end += 1
    return text[pos:end], end


def _surface_matches(text, pos, surface, fold_first):
    end = pos + len(surface)
    if end > len(text):
        return False
    chunk = text[pos:end]
    if not _at_boundary(text, end):
        return False
    if chunk == surface:
        return True
    if fold_first and chunk[1:] == surface[1:] and chunk[:1].lower() == surface[:1].lower():
        return True
    return False


def tokenize(text, lexicon: Lexicon):
    """Tokenize ``text`` against ``lexicon``; longest match wins.

    Raises UnknownWordError with the offending span and the lexical
    categories that would let the sentence continue there.
    """
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos] in " \t\n":
            pos += 1
        if pos >= n:
            return tokens
        ch = text[pos]
        if ch == ".":
            tokens.append(Token(PERIOD, ".", (pos, pos + 1),
                                (Candidate(PERIOD),)))
            pos += 1
            continue
        if ch == "?":
            tokens.append(Token(QUESTION_MARK, "?", (pos, pos + 1),
                                (Candidate(QUESTION_MARK),)))
            pos += 1
            continue

        at_start = not tokens
        best_len = 0
        best = []
        for surface in lexicon.surfaces():
            if len(surface) < best_len:
                continue
            if _surface_matches(text, pos, surface, fold_first=at_start):
                cands = [Candidate(LEXICAL, entry=e, slot=s)
                         for e, s in lexicon.lookup_surface(surface)]
                if len(surface) > best_len:
                    best_len, best = len(surface), cands
                else:
                    best.extend(cands)

        word, word_end = _next_word(text, pos)
        wlen = word_end - pos
        if wlen >= best_len and word:
            extra = []
            fw = word.lower() if at_start else word
            if fw in FUNCTION_WORDS:
                extra.append(Candidate(FUNCTION_WORD, word=fw))
            if word in VARIABLES:
                extra.append(Candidate(VARIABLE, word=word))
            if word.isdigit():
                extra.append(Candidate(NUMBER, word=word))
            if extra:
                if wlen > best_len:
                    best_len, best = wlen, extra
                else:
                    best.extend(extra)

        if not best:
            raise UnknownWordError(
                word, (pos, word_end),
                _continuation_categories(tokens, lexicon))

        surface = text[pos:pos + best_len]
        tokens.append(Token(best[0].kind, surface, (pos, pos + best_len),
                            tuple(best)))
        pos += best_len


def _continuation_categories(prefix_tokens, lexicon):
    """Lexical categories that could continue the sentence after
    ``prefix_tokens`` (for "add this word as a ..." suggestions)."""
    from .parser import expected_lexical_categories
    try:
        return expected_lexical_categories(prefix_tokens, lexicon)
    except Exception:
        return ()
