"""Reasoning engine: saturation, consistency checking, incremental
assertion with explanations, and query answering."""

from .core import (DOCUMENTED, INGESTED, INTERACTIVE, PRELUDE, AnswerSet,
                   AssertResult, ConsistencyReport, FactBase, Provenance,
                   StatementRecord, Violation)
from .kernel import BACKEND, backends

__all__ = [
    "AnswerSet", "AssertResult", "BACKEND", "ConsistencyReport",
    "DOCUMENTED", "FactBase", "INGESTED", "INTERACTIVE", "PRELUDE",
    "Provenance", "StatementRecord", "Violation", "backends",
]
