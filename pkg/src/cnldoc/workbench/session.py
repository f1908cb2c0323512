"""Session orchestration: build the knowledge base from a config (lexicon,
prelude, dumps, documentation sentences), then serve the interactive
ingest -> assert -> check -> ask workflow.

A documentation sentence that is rejected at load is quarantined: it
stays in the file, is excluded from the base, and is listed in the
startup report; a later edit (or code change) can bring it back.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from ..codemodel import base_lexicon, extract_doc_comments, load_dump, prelude
from ..engine import (DOCUMENTED, INGESTED, INTERACTIVE, PRELUDE, FactBase,
                      Provenance)
from ..errors import (CnlError, KnowledgeBaseFileError, LexiconError,
                      NotPresentError, ParseError, TranslateError,
                      UnknownWordError)
from ..lexicon import PROPER_NAME, make_entry
from ..logic import Query
from ..parser import complete, parse
from ..translate import translate
from .config import SessionConfig
from .kbfile import DUMP, SENTENCE, WORD, KbFile


@dataclass
class QuarantinedLine:
    line: int
    sentence: str
    reason: str


@dataclass
class Session:
    config: SessionConfig
    kb: KbFile
    lexicon: object
    base: FactBase
    known_entities: dict
    quarantined: list = field(default_factory=list)
    startup_report: object = None

    # -- loading ------------------------------------------------------------

    @classmethod
    def load(cls, config: SessionConfig, kernel=None) -> "Session":
        kb = KbFile.load(config.kb_file)
        lexicon = base_lexicon()
        base = FactBase.empty(kernel=kernel)
        if kb.prelude_enabled:
            base, _ = base.with_batch(
                [(stmt, Provenance(PRELUDE), text)
                 for stmt, text in prelude(lexicon)])
        session = cls(config, kb, lexicon, base, known_entities={})
        for lineno, line in enumerate(kb.lines, 1):
            if line.kind == WORD:
                try:
                    session.lexicon = session.lexicon.with_entries([line.value])
                except LexiconError as exc:
                    raise KnowledgeBaseFileError(str(exc), kb.path, lineno)
            elif line.kind == DUMP:
                session._ingest_file(line.value, lineno)
            elif line.kind == SENTENCE:
                session._load_sentence(line.value, lineno)
        session.startup_report = session.base.check()
        return session

    def _ingest_file(self, rel_path, lineno):
        path = self.config.resolve(rel_path)
        if not os.path.exists(path):
            raise KnowledgeBaseFileError("dump not found: %s" % path,
                                         self.kb.path, lineno)
        try:
            result = load_dump(path, self.known_entities)
            self.lexicon = self.lexicon.with_entries(
                [make_entry(PROPER_NAME, name) for name in result.entities])
        except (CnlError, LexiconError) as exc:
            raise KnowledgeBaseFileError(str(exc), self.kb.path, lineno)
        self.known_entities.update(result.entities)
        self.base, _ = self.base.with_batch(
            [(fact, Provenance(INGESTED, rel_path), text)
             for fact, text in result.facts])
        return result

    def _load_sentence(self, sentence, lineno):
        provenance = Provenance(DOCUMENTED, os.path.basename(self.kb.path),
                                lineno)
        try:
            statements = translate(parse(sentence, self.lexicon))
        except (UnknownWordError, ParseError, TranslateError) as exc:
            raise KnowledgeBaseFileError(str(exc), self.kb.path, lineno)
        if any(isinstance(s, Query) for s in statements):
            raise KnowledgeBaseFileError("questions cannot be stored",
                                         self.kb.path, lineno)
        accepted, base, report = self._assert_all(statements, provenance,
                                                  sentence)
        if accepted:
            self.base = base
        else:
            reason = "; ".join(v.describe() for v in report.violations)
            self.quarantined.append(QuarantinedLine(lineno, sentence, reason))

    def _assert_all(self, statements, provenance, sentence):
        """All-or-nothing assertion of one sentence's statements."""
        trial = self.base
        for stmt in statements:
            result = trial.assert_statement(stmt, provenance, text=sentence)
            if not result.accepted:
                return False, self.base, result.report
            trial = result.base
        return True, trial, None

    # -- persistence --------------------------------------------------------

    def save(self):
        marks = {q.line: q.reason for q in self.quarantined}
        self.kb.save(quarantined=marks)

    # -- interactive operations ----------------------------------------------

    def assert_sentence(self, sentence, persist=True):
        """Parse, translate, and assert one sentence; on success the
        sentence is appended to the kb file."""
        statements = translate(parse(sentence, self.lexicon))
        if any(isinstance(s, Query) for s in statements):
            raise TranslateError("questions are asked, not asserted")
        accepted, base, report = self._assert_all(
            statements, Provenance(INTERACTIVE), sentence)
        if not accepted:
            return False, report
        already = all(self.base.has_statement(s) for s in statements)
        self.base = base
        if persist and not already:
            self.kb.append_sentence(sentence)
            self.save()
        return True, None

    def retract_sentence(self, sentence, persist=True):
        statements = translate(parse(sentence, self.lexicon))
        for stmt in statements:
            if not self.base.has_statement(stmt):
                raise NotPresentError("not in the base: %s" % sentence)
        base = self.base
        report = None
        for stmt in statements:
            base, report = base.retract_statement(stmt)
        self.base = base
        if persist:
            self.kb.remove_sentence(sentence)
            self.save()
        return report

    def ask_sentence(self, question):
        statements = translate(parse(question, self.lexicon))
        if len(statements) != 1 or not isinstance(statements[0], Query):
            raise TranslateError("not a question: %s" % question)
        return self.base.ask(statements[0])

    def complete_prefix(self, prefix):
        return complete(prefix, self.lexicon)

    def add_word(self, entry, raw_line, persist=True):
        self.lexicon = self.lexicon.with_entries([entry])
        if persist:
            self.kb.append_word(entry, raw_line)
            self.save()

    def ingest_dump(self, rel_path, persist=True):
        """Ingest a dump now and persist the @dump reference; never blocks
        on violations (the developer resolves them via check)."""
        lineno = len(self.kb.lines) + 1
        result = self._ingest_file(rel_path, lineno)
        if persist:
            self.kb.append_dump(rel_path)
            self.save()
        return result

    # -- comment extraction -----------------------------------------------------

    def extract(self, roots=None, persist=True):
        """Collect ``@cnl:`` comments under the source roots and assert
        them; returns (asserted, skipped duplicates, rejections)."""
        roots = roots or self.config.source_roots
        comments = []
        for root in roots:
            root_path = self.config.resolve(root)
            for dirpath, _dirs, names in sorted(os.walk(root_path)):
                for name in sorted(names):
                    ext = os.path.splitext(name)[1]
                    prefixes = self.config.comment_prefixes.get(ext)
                    if not prefixes:
                        continue
                    path = os.path.join(dirpath, name)
                    with open(path, encoding="utf-8") as handle:
                        comments.extend(extract_doc_comments(
                            handle.read(), prefixes,
                            os.path.relpath(path, self.config.base_dir)))
        asserted, duplicates, rejections = [], [], []
        for comment in comments:
            statements = translate(parse(comment.sentence, self.lexicon))
            if all(self.base.has_statement(s) for s in statements):
                duplicates.append(comment)
                continue
            provenance = Provenance(DOCUMENTED, comment.file, comment.line)
            ok, base, report = self._assert_all(statements, provenance,
                                                comment.sentence)
            if ok:
                self.base = base
                self.kb.append_sentence(comment.sentence)
                asserted.append(comment)
            else:
                rejections.append((comment, report))
        if persist and asserted:
            self.save()
        return asserted, duplicates, rejections

    # -- reporting ----------------------------------------------------------------

    def statement_listing(self):
        return [{"text": record.text,
                 "kind": type(record.statement).__name__,
                 "logic": record.statement.to_line(),
                 "provenance": {
                     "kind": record.provenance.kind,
                     "file": record.provenance.file,
                     "line": record.provenance.line,
                 }}
                for record in self.base.statements()]


def load(config: SessionConfig, kernel=None) -> Session:
    return Session.load(config, kernel=kernel)
