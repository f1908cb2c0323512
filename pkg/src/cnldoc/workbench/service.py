"""HTTP JSON API over a loaded session (the editor's backend).

Status codes: 400 malformed payload, 404 retracting an absent statement,
409 rejected assertion or a question over an inconsistent base (the body
carries the explanation), 422 controlled-English syntax errors (the body
carries the failing position and the completion set).

Mutations are serialized behind one lock; reads work on the immutable
base snapshot they grabbed, so they never block each other.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from ..errors import (CnlError, InconsistentBaseError, NotPresentError,
                      ParseError, TranslateError, UnknownWordError)
from ..lexicon import LexiconError, parse_lexicon_line
from ..logic import Query
from ..parser import parse
from ..translate import translate
from .cli import canonical_json
from .session import Session


class SentencePayload(BaseModel):
    sentence: str


class PrefixPayload(BaseModel):
    prefix: str


class QuestionPayload(BaseModel):
    question: str


class WordPayload(BaseModel):
    entry: str   # lexicon file syntax: "category | form1 | form2 | ..."


def _violation_payload(violation):
    return {
        "statement": violation.record.text,
        "bindings": violation.bindings,
        "witnesses": list(violation.witnesses),
        "witness_atoms": list(violation.witness_atoms),
        "support": [{"text": record.text,
                     "provenance": record.provenance.kind,
                     "location": ("%s:%s" % (record.provenance.file,
                                             record.provenance.line)
                                  if record.provenance.file else None)}
                    for record in violation.support],
    }


def _tree_payload(node):
    if node.is_leaf:
        return {"token": node.token.surface, "kind": node.token.kind}
    return {"label": node.label or node.tag,
            "children": [_tree_payload(c) for c in node.children]}


def make_app(session: Session) -> FastAPI:
    app = FastAPI(title="cnldoc workbench", docs_url=None, redoc_url=None)
    lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def malformed_payload(_request: Request, exc):
        return JSONResponse({"error": "malformed payload",
                             "detail": str(exc)}, status_code=400)

    @app.exception_handler(UnknownWordError)
    async def unknown_word(_request: Request, exc: UnknownWordError):
        return JSONResponse(
            {"error": "unknown word", "word": exc.word,
             "span": list(exc.span),
             "suggested_categories": list(exc.suggested_categories)},
            status_code=422)

    @app.exception_handler(ParseError)
    async def syntax_error(_request: Request, exc: ParseError):
        payload = {"error": str(exc), "position": exc.position}
        if exc.completions is not None:
            payload["completions"] = exc.completions.as_payload()
        return JSONResponse(payload, status_code=422)

    @app.exception_handler(TranslateError)
    async def translate_error(_request: Request, exc: TranslateError):
        # grammatical but inexpressible (e.g. an existential consequent):
        # not a syntax error, so 422 stays unreachable for picker input
        return JSONResponse({"error": str(exc), "kind": "untranslatable"},
                            status_code=400)

    @app.exception_handler(CnlError)
    async def other_error(_request: Request, exc: CnlError):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.get("/health")
    def health():
        return {"status": "ok", "statements": len(session.base.statements()),
                "closure": session.base.closure_size}

    @app.post("/complete")
    def complete(payload: PrefixPayload):
        return Response(
            canonical_json(session.complete_prefix(payload.prefix)
                           .as_payload()),
            media_type="application/json")

    @app.post("/parse")
    def parse_sentence(payload: SentencePayload):
        tree = parse(payload.sentence, session.lexicon)
        statements = translate(tree)
        kind = "question" if isinstance(statements[0], Query) else "statement"
        return {"kind": kind,
                "statements": [s.to_line() for s in statements],
                "tree": _tree_payload(tree)}

    @app.post("/assert")
    def assert_sentence(payload: SentencePayload):
        with lock:
            accepted, report = session.assert_sentence(payload.sentence)
        if accepted:
            return {"status": "accepted", "sentence": payload.sentence}
        return JSONResponse(
            {"status": "rejected", "sentence": payload.sentence,
             "violations": [_violation_payload(v)
                            for v in report.violations]},
            status_code=409)

    @app.post("/retract")
    def retract_sentence(payload: SentencePayload):
        try:
            with lock:
                session.retract_sentence(payload.sentence)
        except NotPresentError as exc:
            return JSONResponse({"error": str(exc)}, status_code=404)
        return {"status": "retracted", "sentence": payload.sentence}

    @app.post("/ask")
    def ask(payload: QuestionPayload):
        try:
            answers = session.ask_sentence(payload.question)
        except InconsistentBaseError as exc:
            return JSONResponse({"error": str(exc)}, status_code=409)
        return Response(canonical_json({"answers": list(answers.answers)}),
                        media_type="application/json")

    @app.post("/lexicon")
    def add_word(payload: WordPayload):
        try:
            entry = parse_lexicon_line(payload.entry)
            if entry is None:
                raise LexiconError("empty lexicon entry")
            with lock:
                session.add_word(entry, payload.entry)
        except LexiconError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return {"status": "added", "category": entry.category,
                "surfaces": list(entry.surfaces())}

    @app.get("/statements")
    def statements():
        return {"statements": session.statement_listing()}

    return app
