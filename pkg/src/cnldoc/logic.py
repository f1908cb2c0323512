"""The target logic: ground facts, Horn rules, denial constraints,
closed-world cardinality checks, and conjunctive (optionally counting)
queries.

Distinct constants denote distinct individuals (unique-name assumption);
what is not derivable is false (closed world).  All values here are
immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .errors import TranslateError, UnconnectedBodyError
from .lexicon import ADJPREP, NOUN

CONST = "const"
VARIABLE = "var"

AT_MOST = "at-most"
AT_LEAST = "at-least"
EXACTLY = "exactly"
MORE_THAN = "more-than"
COMPARATORS = (AT_MOST, AT_LEAST, EXACTLY, MORE_THAN)


@dataclass(frozen=True, order=True)
class Term:
    kind: str
    name: str

    def __str__(self):
        return self.name

    @property
    def is_var(self):
        return self.kind == VARIABLE


def const(name) -> Term:
    return Term(CONST, name)


def var(name) -> Term:
    return Term(VARIABLE, name)


@dataclass(frozen=True, order=True)
class Predicate:
    """Predicate identity is the lexical entry: category plus canonical
    name (first form, spaces as hyphens).  Nouns are unary; verbs,
    of-constructs and adjective+preposition entries are binary."""
    category: str
    name: str

    @property
    def arity(self):
        return 1 if self.category == NOUN else 2

    def __str__(self):
        return self.name


def predicate_of(entry) -> Predicate:
    return Predicate(entry.category, entry.lemma)


@dataclass(frozen=True, order=True)
class Atom:
    predicate: Predicate
    args: tuple

    def __post_init__(self):
        if len(self.args) != self.predicate.arity:
            raise TranslateError(
                "%s takes %d argument(s), got %d"
                % (self.predicate, self.predicate.arity, len(self.args)))

    def __str__(self):
        return "%s(%s)" % (self.predicate, ", ".join(map(str, self.args)))

    @property
    def is_ground(self):
        return all(not t.is_var for t in self.args)

    def variables(self):
        return [t for t in self.args if t.is_var]

    def substitute(self, mapping) -> "Atom":
        return Atom(self.predicate,
                    tuple(mapping.get(t, t) if t.is_var else t
                          for t in self.args))


def _variables_of(atoms):
    seen = []
    for atom in atoms:
        for t in atom.variables():
            if t not in seen:
                seen.append(t)
    return seen


def _connected(atoms) -> bool:
    """Variable-connectivity: the atom graph (shared variables as edges,
    ground atoms attached freely) must form one component."""
    with_vars = [a for a in atoms if a.variables()]
    if len(with_vars) <= 1:
        return True
    groups = {id(a): {t.name for t in a.variables()} for a in with_vars}
    pool = list(groups.values())
    component = pool[0]
    rest = pool[1:]
    changed = True
    while changed:
        changed = False
        for vs in list(rest):
            if vs & component:
                component |= vs
                rest.remove(vs)
                changed = True
    return not rest


# --- statements --------------------------------------------------------------


@dataclass(frozen=True)
class Fact:
    atom: Atom

    def __post_init__(self):
        if not self.atom.is_ground:
            raise TranslateError("facts contain no variables: %s" % self.atom)

    def to_line(self):
        return "FACT %s" % self.atom


@dataclass(frozen=True)
class Rule:
    body: tuple
    head: Atom

    def __post_init__(self):
        if not self.body:
            raise TranslateError("rule with empty body")
        bound = {t for atom in self.body for t in atom.variables()}
        for t in self.head.variables():
            if t not in bound:
                raise TranslateError(
                    "unsafe rule: head variable %s not in body" % t)

    def to_line(self):
        return "RULE %s -> %s" % (" & ".join(map(str, self.body)), self.head)


@dataclass(frozen=True)
class Denial:
    body: tuple

    def __post_init__(self):
        if not self.body:
            raise TranslateError("denial with empty body")
        if not _connected(self.body):
            raise UnconnectedBodyError(
                "denial body is not variable-connected")

    def to_line(self):
        return "DENIAL %s" % " & ".join(map(str, self.body))


@dataclass(frozen=True)
class CardinalityCheck:
    """Closed-world count comparison: for each subject x in scope, the
    number of distinct y with relation(x, y) (or relation(y, x) when
    ``subject_first`` is false) and filter(y) must satisfy
    ``comparator bound``.  ``subject`` None means universal scope."""
    relation: Predicate
    subject_first: bool
    filter: Predicate
    comparator: str
    bound: int
    subject: Term = None

    def __post_init__(self):
        if self.comparator not in COMPARATORS:
            raise TranslateError("bad comparator %r" % (self.comparator,))
        if self.bound < 0:
            raise TranslateError("negative bound")
        if self.subject is not None and self.subject.is_var:
            raise TranslateError("cardinality scope must be a constant")

    def to_line(self):
        scope = str(self.subject) if self.subject is not None else "everything"
        shape = "%s(x, y)" if self.subject_first else "%s(y, x)"
        return "CARD %s: %s %d y [%s] with %s" % (
            scope, self.comparator, self.bound, self.filter,
            shape % self.relation)


@dataclass(frozen=True)
class Counting:
    """A query's counting subgoal over the answer variable x."""
    relation: Predicate
    subject_first: bool
    filter: Predicate
    comparator: str
    bound: int

    def to_line(self):
        shape = "%s(x, y)" if self.subject_first else "%s(y, x)"
        return "count y [%s] with %s %s %d" % (
            self.filter, shape % self.relation, self.comparator, self.bound)


@dataclass(frozen=True)
class Query:
    answer: Term
    body: tuple
    counting: Counting = None

    def __post_init__(self):
        if not self.answer.is_var:
            raise TranslateError("query answer must be a variable")
        if not self.body and self.counting is None:
            raise TranslateError("empty query")
        if self.body and not _connected(self.body):
            raise UnconnectedBodyError("query body is not variable-connected")

    def to_line(self):
        parts = [" & ".join(map(str, self.body))] if self.body else []
        if self.counting is not None:
            parts.append(self.counting.to_line())
        return "QUERY %s: %s" % (self.answer, " | ".join(parts))


Statement = (Fact, Rule, Denial, CardinalityCheck, Query)


# --- normalization -----------------------------------------------------------


def _atom_key(atom):
    return (atom.predicate.category, atom.predicate.name,
            tuple((t.kind, t.name) for t in atom.args))


def _rename(atoms, mapping):
    return tuple(a.substitute(mapping) for a in atoms)


def _canonical_conjunction(body, head=None, fixed=()):
    """Minimal (sorted-body, head) over all canonical variable namings.

    ``fixed`` variables keep their given names (the query answer slot).
    Bodies in this language are tiny, so trying every assignment order is
    exact and cheap.
    """
    variables = [t for t in _variables_of(list(body) + ([head] if head else []))
                 if t not in fixed]
    if not variables:
        sorted_body = tuple(sorted(body, key=_atom_key))
        return sorted_body, head
    best = None
    for perm in permutations(variables):
        mapping = {t: var("v%d" % (i + 1)) for i, t in enumerate(perm)}
        new_body = tuple(sorted(_rename(body, mapping), key=_atom_key))
        new_head = head.substitute(mapping) if head is not None else None
        key = (tuple(map(_atom_key, new_body)),
               _atom_key(new_head) if new_head is not None else None)
        if best is None or key < best[0]:
            best = (key, (new_body, new_head))
    return best[1]


def normalize(statement):
    """Canonical form: variables renamed v1, v2, ... and body atoms in a
    canonical order, so sentences with the same meaning under renaming and
    conjunct reordering normalize identically."""
    if isinstance(statement, Fact):
        return statement
    if isinstance(statement, Rule):
        body, head = _canonical_conjunction(statement.body, statement.head)
        return Rule(body, head)
    if isinstance(statement, Denial):
        body, _ = _canonical_conjunction(statement.body)
        return Denial(body)
    if isinstance(statement, CardinalityCheck):
        return statement
    if isinstance(statement, Query):
        ans = var("x")
        mapping = {statement.answer: ans}
        body = _rename(statement.body, mapping)
        body, _ = _canonical_conjunction(body, fixed=(ans,))
        return Query(ans, body, statement.counting)
    raise TranslateError("not a statement: %r" % (statement,))


def statement_key(statement):
    """Hashable identity of the normal form (duplicate detection and
    retraction by meaning)."""
    norm = normalize(statement)
    return norm.to_line()
