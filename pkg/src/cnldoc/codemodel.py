"""Source-code model: turn language-neutral code dumps into ground facts,
ship the built-in controlled-English prelude, and extract tagged
documentation sentences from source files.

Dump format (UTF-8 lines, ``#`` comments):

    E|<kind>|<name>                 entity: class, method, package, interface
    R|<relation>|<from>|<to>        relation edge

Method names use the ``Owner-selector`` mangling ("EmergencyHandler-isActive").
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib.resources import files as _resource_files

from .errors import (CnlError, DanglingReferenceError, DuplicateEntityError,
                     IngestError, KindMismatchError, MalformedDocCommentError)
from .lexicon import NOUN, OFC, VERB, Lexicon, load_lexicon, parse_lexicon
from .logic import Atom, Fact, Predicate, const
from .parser import parse
from .translate import translate

ENTITY_KINDS = ("class", "method", "package", "interface")

# relation -> (from kind, to kind)
RELATIONS = {
    "direct-subclass-of": ("class", "class"),
    "defines": ("class", "method"),
    "invokes": ("method", "method"),
    "instantiates": ("method", "class"),
    "in-package": ("class", "package"),
    "implements": ("class", "interface"),
}

# relation -> (predicate category, lexeme, flip arguments, sentence template)
_PREDICATES = {
    "direct-subclass-of": (OFC, "direct subclass of", False,
                           "%s is a direct subclass of %s."),
    "defines": (VERB, "defines", False, "%s defines %s."),
    "invokes": (VERB, "invokes", False, "%s invokes %s."),
    "instantiates": (VERB, "instantiates", False, "%s instantiates %s."),
    # a package membership edge reads "<package> contains <class>"
    "in-package": (VERB, "contains", True, "%s contains %s."),
    "implements": (VERB, "implements", False, "%s implements %s."),
}


@dataclass(frozen=True)
class EntityRecord:
    kind: str
    name: str


@dataclass(frozen=True)
class RelationRecord:
    relation: str
    source: str
    target: str


@dataclass(frozen=True)
class DocComment:
    sentence: str
    file: str
    line: int


def parse_dump(text):
    """Parse dump lines into records (no cross-record validation here)."""
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if parts[0] == "E" and len(parts) == 3:
            kind, name = parts[1], parts[2]
            if kind not in ENTITY_KINDS:
                raise IngestError("line %d: unknown entity kind %r"
                                  % (lineno, kind))
            if not name:
                raise IngestError("line %d: empty entity name" % lineno)
            records.append(EntityRecord(kind, name))
        elif parts[0] == "R" and len(parts) == 4:
            relation = parts[1]
            if relation not in RELATIONS:
                raise IngestError("line %d: unknown relation %r"
                                  % (lineno, relation))
            records.append(RelationRecord(relation, parts[2], parts[3]))
        else:
            raise IngestError("line %d: bad record %r" % (lineno, raw))
    return records


@dataclass(frozen=True)
class IngestResult:
    facts: tuple          # (Fact, sentence text) pairs, dump order
    entities: dict        # name -> kind, the newly declared entities

    @property
    def fact_count(self):
        return len(self.facts)


def ingest_model(records, known_entities=None) -> IngestResult:
    """One unary fact per entity and one (deduplicated) binary fact per
    relation edge.  ``known_entities`` carries declarations from earlier
    dumps of the same session, so delta dumps can reference them."""
    known = dict(known_entities or {})
    fresh = {}
    facts = []
    seen_edges = set()
    noun_preds = {kind: Predicate(NOUN, kind) for kind in ENTITY_KINDS}
    for record in records:
        if isinstance(record, EntityRecord):
            if record.name in known or record.name in fresh:
                raise DuplicateEntityError("entity %r declared twice"
                                           % record.name)
            if record.kind == "method":
                owner, _, selector = record.name.partition("-")
                if not owner or not selector:
                    raise IngestError(
                        "method name %r lacks the Owner-selector mangling"
                        % record.name)
            fresh[record.name] = record.kind
            article = "an" if record.kind == "interface" else "a"
            facts.append((
                Fact(Atom(noun_preds[record.kind], (const(record.name),))),
                "%s is %s %s." % (record.name, article, record.kind)))
        else:
            kinds = {}
            for endpoint in (record.source, record.target):
                kind = fresh.get(endpoint, known.get(endpoint))
                if kind is None:
                    raise DanglingReferenceError(
                        "%s edge references undeclared %r"
                        % (record.relation, endpoint))
                kinds[endpoint] = kind
            want = RELATIONS[record.relation]
            got = (kinds[record.source], kinds[record.target])
            if got != want:
                raise KindMismatchError(
                    "%s expects %s -> %s, got %s -> %s"
                    % ((record.relation,) + want + got))
            edge = (record.relation, record.source, record.target)
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            category, lexeme, flip, template = _PREDICATES[record.relation]
            pred = Predicate(category, lexeme.replace(" ", "-"))
            pair = (record.target, record.source) if flip \
                else (record.source, record.target)
            facts.append((
                Fact(Atom(pred, (const(pair[0]), const(pair[1])))),
                template % pair))
    return IngestResult(tuple(facts), fresh)


def load_dump(path, known_entities=None) -> IngestResult:
    with open(path, encoding="utf-8") as handle:
        return ingest_model(parse_dump(handle.read()), known_entities)


# --- built-in vocabulary and axioms -----------------------------------------


def base_lexicon() -> Lexicon:
    """The shipped vocabulary of the source-code model."""
    data = _resource_files("cnldoc").joinpath("data/base.lex").read_text(
        encoding="utf-8")
    return parse_lexicon(data)


def prelude_text() -> str:
    return _resource_files("cnldoc").joinpath("data/prelude.cnl").read_text(
        encoding="utf-8")


def prelude(lexicon=None):
    """The built-in axioms, parsed from the shipped controlled-English
    prelude.  Returns (statement, sentence) pairs in file order; a parse
    failure here is a build-breaking internal error."""
    lexicon = lexicon or base_lexicon()
    out = []
    for lineno, raw in enumerate(prelude_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            statements = translate(parse(line, lexicon))
        except CnlError as exc:
            raise CnlError(
                "prelude is broken at line %d (%r): %s" % (lineno, line, exc)
            ) from exc
        for stmt in statements:
            out.append((stmt, line))
    return out


# --- tagged documentation comments -------------------------------------------

DOC_TAG = "@cnl:"


def extract_doc_comments(text, comment_prefixes, file="<source>"):
    """Every comment line whose body starts with ``@cnl:``; the remainder
    of the line is the sentence (terminal punctuation required)."""
    comments = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        for prefix in comment_prefixes:
            if not stripped.startswith(prefix):
                continue
            body = stripped[len(prefix):].strip()
            if not body.startswith(DOC_TAG):
                continue
            sentence = body[len(DOC_TAG):].strip()
            if not sentence.endswith(".") and not sentence.endswith("?"):
                raise MalformedDocCommentError(
                    "tagged sentence lacks terminal punctuation: %r"
                    % sentence, file, lineno)
            comments.append(DocComment(sentence, file, lineno))
            break
    return comments
