"""cnldoc: verifiable software documentation in controlled English.

Write documentation sentences in a small, unambiguous subset of English,
check them automatically against facts extracted from source code, and
query the combined knowledge base in the same language.
"""

__version__ = "0.1.0"

from .lexicon import LexEntry, Lexicon, load_lexicon, parse_lexicon
from .tokens import Token, tokenize
from .parser import CompletionSet, complete, parse
from .logic import Atom, Statement, Term, normalize
from .translate import translate
from .engine import AnswerSet, ConsistencyReport, FactBase

__all__ = [
    "AnswerSet", "Atom", "CompletionSet", "ConsistencyReport", "FactBase",
    "LexEntry", "Lexicon", "Statement", "Term", "Token", "complete",
    "load_lexicon", "normalize", "parse", "parse_lexicon", "tokenize",
    "translate", "__version__",
]
