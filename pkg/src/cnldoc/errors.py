"""Exception hierarchy for the whole toolkit.

Every user-facing failure mode has its own class so that callers (CLI,
HTTP service, editor) can map errors to diagnostics without string
matching.
"""


class CnlError(Exception):
    """Base class for all toolkit errors."""


# --- lexicon ---------------------------------------------------------------

class LexiconError(CnlError):
    """Malformed lexicon entry or duplicate surface form."""


# --- tokenization ----------------------------------------------------------

class TokenizeError(CnlError):
    pass


class UnknownWordError(TokenizeError):
    """A stretch of input matches no lexicon entry and no function word.

    ``span`` is the (start, end) character range of the offending word and
    ``suggested_categories`` lists the lexical categories that would let
    the sentence continue at that point, so a caller can offer
    "add word as noun/verb/...".
    """

    def __init__(self, word, span, suggested_categories=()):
        self.word = word
        self.span = span
        self.suggested_categories = tuple(suggested_categories)
        super().__init__(
            "unknown word %r at %d..%d (could continue as: %s)"
            % (word, span[0], span[1],
               ", ".join(self.suggested_categories) or "nothing")
        )


# --- parsing ---------------------------------------------------------------

class ParseError(CnlError):
    """Syntax error. Carries the failing token position and the completion
    set at that position so editors can show what would have been legal."""

    def __init__(self, message, position, completions=None):
        self.position = position
        self.completions = completions
        super().__init__(message)


class AmbiguityError(CnlError):
    """More than one parse tree for a sentence.

    The grammar is engineered to be unambiguous; this is an internal bug,
    never a user-facing choice.
    """

    def __init__(self, sentence_text, count):
        self.sentence_text = sentence_text
        self.count = count
        super().__init__("grammar bug: %d parses for %r" % (count, sentence_text))


class DeadPrefixError(CnlError):
    """A completion request for a prefix that has no continuation."""


# --- translation -----------------------------------------------------------

class TranslateError(CnlError):
    pass


class ExistentialHeadError(TranslateError):
    """A consequent (or a ground declarative) would introduce a variable
    that is not bound by the antecedent.  Unsupported in this logic."""


class UnconnectedBodyError(TranslateError):
    """A denial or query body is not variable-connected."""


# --- code model ------------------------------------------------------------

class IngestError(CnlError):
    pass


class DanglingReferenceError(IngestError):
    pass


class DuplicateEntityError(IngestError):
    pass


class KindMismatchError(IngestError):
    pass


class MalformedDocCommentError(CnlError):
    def __init__(self, message, file, line):
        self.file = file
        self.line = line
        super().__init__("%s (%s:%d)" % (message, file, line))


# --- engine ----------------------------------------------------------------

class EngineError(CnlError):
    pass


class InconsistentBaseError(EngineError):
    """Queries over an inconsistent base are meaningless."""


class NotPresentError(EngineError):
    """Retraction of a statement that is not in the base."""


class NotAssertableError(EngineError):
    """Questions cannot be asserted."""


# --- workbench -------------------------------------------------------------

class ConfigError(CnlError):
    pass


class KnowledgeBaseFileError(CnlError):
    def __init__(self, message, file=None, line=None):
        self.file = file
        self.line = line
        if file is not None:
            message = "%s:%s: %s" % (file, line if line is not None else "?", message)
        super().__init__(message)
