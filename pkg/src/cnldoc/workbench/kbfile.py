"""The knowledge-base file: the canonical, human-diffable store.

UTF-8 text, one sentence per line, ``#`` comments, plus three directives:

    @prelude off                  skip the built-in source-code axioms
    @word <category> | <forms>    lexicon addition (lexicon file syntax)
    @dump <path>                  ingest a code-model dump (relative path)

Quarantine annotations (``#!quarantined: ...`` comment lines inserted
just above an offending sentence) are ephemeral: they are stripped on
load and regenerated on save, so a saved file is line-identical to the
loaded one up to those annotations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import KnowledgeBaseFileError
from ..lexicon import parse_lexicon_line

QUARANTINE_MARK = "#!quarantined:"

BLANK = "blank"
COMMENT = "comment"
PRELUDE_OFF = "prelude-off"
WORD = "word"
DUMP = "dump"
SENTENCE = "sentence"


@dataclass
class KbLine:
    raw: str
    kind: str
    value: object = None     # LexEntry for @word, path for @dump, sentence text


@dataclass
class KbFile:
    path: str
    lines: list = field(default_factory=list)

    @classmethod
    def parse(cls, text, path="<kb>") -> "KbFile":
        kb = cls(path)
        for lineno, raw in enumerate(text.splitlines(), 1):
            stripped = raw.strip()
            if stripped.startswith(QUARANTINE_MARK):
                continue  # ephemeral annotation from an earlier save
            if not stripped:
                kb.lines.append(KbLine(raw, BLANK))
            elif stripped.startswith("#"):
                kb.lines.append(KbLine(raw, COMMENT))
            elif stripped.startswith("@prelude"):
                arg = stripped[len("@prelude"):].strip()
                if arg not in ("off", "on", ""):
                    raise KnowledgeBaseFileError(
                        "@prelude takes 'on' or 'off'", path, lineno)
                kb.lines.append(KbLine(raw, PRELUDE_OFF if arg == "off"
                                       else COMMENT))
            elif stripped.startswith("@word"):
                try:
                    entry = parse_lexicon_line(stripped[len("@word"):].strip())
                except Exception as exc:
                    raise KnowledgeBaseFileError(str(exc), path, lineno)
                kb.lines.append(KbLine(raw, WORD, entry))
            elif stripped.startswith("@dump"):
                target = stripped[len("@dump"):].strip()
                if not target:
                    raise KnowledgeBaseFileError("@dump needs a path",
                                                 path, lineno)
                kb.lines.append(KbLine(raw, DUMP, target))
            elif stripped.startswith("@"):
                raise KnowledgeBaseFileError(
                    "unknown directive %r" % stripped.split()[0], path, lineno)
            else:
                kb.lines.append(KbLine(raw, SENTENCE, stripped))
        return kb

    @classmethod
    def load(cls, path) -> "KbFile":
        with open(path, encoding="utf-8") as handle:
            return cls.parse(handle.read(), str(path))

    @property
    def prelude_enabled(self) -> bool:
        return not any(line.kind == PRELUDE_OFF for line in self.lines)

    def sentences(self):
        """(line number, sentence) pairs, 1-based, in file order."""
        return [(i + 1, line.value) for i, line in enumerate(self.lines)
                if line.kind == SENTENCE]

    def append_word(self, entry, raw_line):
        self.lines.append(KbLine("@word " + raw_line, WORD, entry))

    def append_dump(self, path):
        self.lines.append(KbLine("@dump " + path, DUMP, path))

    def append_sentence(self, sentence):
        self.lines.append(KbLine(sentence, SENTENCE, sentence))

    def remove_sentence(self, sentence) -> bool:
        for i, line in enumerate(self.lines):
            if line.kind == SENTENCE and line.value == sentence:
                del self.lines[i]
                return True
        return False

    def render(self, quarantined=None) -> str:
        """File text; ``quarantined`` maps 1-based line numbers to the
        reason the sentence is excluded from the base."""
        quarantined = quarantined or {}
        out = []
        for i, line in enumerate(self.lines):
            reason = quarantined.get(i + 1)
            if reason is not None:
                out.append("%s %s" % (QUARANTINE_MARK, reason))
            out.append(line.raw)
        return "\n".join(out) + ("\n" if out else "")

    def save(self, quarantined=None, path=None):
        with open(path or self.path, "w", encoding="utf-8") as handle:
            handle.write(self.render(quarantined))
