"""High-level parsing API: text in, unique parse tree or completion set out.

Parsers are pure and safe for concurrent callers; a parser is built once
per lexicon value and cached on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import grammar as G
from .earley import Node, Parser
from .errors import ParseError
from .lexicon import ADJPREP, NOUN, OFC, PROPER_NAME, VERB, Lexicon
from .tokens import VARIABLES, tokenize

_parser_cache = {}

# Unbounded-token placeholder: any decimal integer continues a counting
# phrase, so the completion set carries one representative surface under
# the "number" category (CompletionSet.matches treats the category as
# open-ended).
NUMBER_PLACEHOLDER = "1"


def parser_for(lexicon: Lexicon) -> Parser:
    key = id(lexicon)
    hit = _parser_cache.get(key)
    if hit is not None and hit.lexicon is lexicon:
        return hit
    parser = Parser(lexicon)
    _parser_cache[key] = parser
    return parser


@dataclass(frozen=True)
class CompletionSet:
    """The tokens that keep a prefix extensible to a complete sentence."""
    next_tokens: frozenset      # of (surface, category) pairs
    sentence_end: bool          # prefix + "." or "?" is a complete sentence

    def surfaces(self, category=None):
        return sorted(s for s, c in self.next_tokens
                      if category is None or c == category)

    def categories(self):
        return sorted({c for _s, c in self.next_tokens})

    def matches(self, token) -> bool:
        """Is ``token`` (a tokens.Token) covered by this completion set?
        Number tokens match the open-ended "number" entry, and the first
        character is case-folded (the tokenizer accepts either
        capitalization sentence-initially)."""
        surface = token.surface
        variants = {surface,
                    surface[:1].lower() + surface[1:],
                    surface[:1].upper() + surface[1:]}
        for cand in token.candidates:
            category = _candidate_category(cand)
            if category == "number":
                if any(c == "number" for _s, c in self.next_tokens):
                    return True
            if any((v, category) in self.next_tokens for v in variants):
                return True
        return False

    def as_payload(self):
        return {
            "tokens": [{"surface": s, "category": c}
                       for s, c in sorted(self.next_tokens)],
            "sentence_end": self.sentence_end,
        }


def _candidate_category(cand):
    if cand.kind == "lexical":
        return cand.entry.category
    if cand.kind in ("period", "question-mark"):
        return "punctuation"
    return cand.kind


def _surface_for(entry, slot, sentence_initial):
    if entry.category == PROPER_NAME:
        name = entry.forms["name"]
        if entry.definite_article:
            return ("The " if sentence_initial else "the ") + name
        return name
    return entry.forms[slot]


def _expand_terminal(term, lexicon, sentence_initial):
    """(surface, category) pairs a terminal offers."""
    kind = term[0]
    if kind == "w":
        word = term[1]
        if sentence_initial:
            word = word[:1].upper() + word[1:]
        return [(word, "function-word")]
    if kind == "lex":
        category, slot = term[1], term[2]
        pairs = []
        for entry in lexicon.entries(category):
            if entry.forms.get(slot):
                pairs.append((_surface_for(entry, slot, sentence_initial),
                              category))
        return pairs
    if kind == "var":
        return [(v, "variable") for v in VARIABLES]
    if kind == "num":
        return [(NUMBER_PLACEHOLDER, "number")]
    if kind == "dot":
        return [(".", "punctuation")]
    if kind == "qmark":
        return [("?", "punctuation")]
    raise AssertionError(term)


def completions_for_tokens(tokens, lexicon: Lexicon) -> CompletionSet:
    parser = parser_for(lexicon)
    terms = parser.completion_terminals(list(tokens))
    sentence_initial = not tokens
    pairs = set()
    sentence_end = False
    for term in terms:
        if term[0] in ("dot", "qmark"):
            sentence_end = True
        pairs.update(_expand_terminal(term, lexicon, sentence_initial))
    return CompletionSet(frozenset(pairs), sentence_end)


def complete(prefix_text: str, lexicon: Lexicon) -> CompletionSet:
    return completions_for_tokens(tokenize(prefix_text, lexicon), lexicon)


def parse_tokens(tokens, lexicon: Lexicon) -> Node:
    parser = parser_for(lexicon)
    try:
        return parser.parse(list(tokens))
    except ParseError as exc:
        # attach the completion set at the failing position
        prefix = list(tokens)[:exc.position]
        try:
            exc.completions = completions_for_tokens(prefix, lexicon)
        except Exception:
            pass
        raise


def parse(text: str, lexicon: Lexicon) -> Node:
    """Parse one sentence to its unique tree."""
    return parse_tokens(tokenize(text, lexicon), lexicon)


def expected_lexical_categories(prefix_tokens, lexicon: Lexicon):
    """Lexical categories that could continue after ``prefix_tokens``
    (drives "add word as ..." suggestions for unknown words)."""
    parser = parser_for(lexicon)
    try:
        terms = parser.completion_terminals(list(prefix_tokens))
    except Exception:
        return ()
    order = (NOUN, VERB, OFC, ADJPREP, PROPER_NAME)
    cats = {t[1] for t in terms if t[0] == "lex"}
    return tuple(c for c in order if c in cats)


def min_remaining(tokens, lexicon: Lexicon) -> int:
    return parser_for(lexicon).min_remaining(list(tokens))
