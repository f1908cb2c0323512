"""The knowledge base: asserted statements plus the saturated closure of
derived facts, with one minimal support set recorded per derived atom.

Mutating operations are functional: ``assert_statement`` / ``retract`` /
``with_batch`` return a new base and leave the receiver untouched, so a
rejected assertion simply discards the clone and readers can keep using
their snapshot (single-writer, multi-reader).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import (InconsistentBaseError, NotAssertableError,
                      NotPresentError)
from ..logic import (AT_LEAST, AT_MOST, EXACTLY, MORE_THAN, Atom,
                     CardinalityCheck, Denial, Fact, Query, Rule,
                     normalize, statement_key)
from . import kernel as _default_kernel
from .kernel import UNUSED

PRELUDE = "prelude"
INGESTED = "ingested"
DOCUMENTED = "documented"
INTERACTIVE = "interactive"

_PROV_ORDER = {PRELUDE: 0, INGESTED: 1, DOCUMENTED: 2, INTERACTIVE: 3}


@dataclass(frozen=True)
class Provenance:
    kind: str
    file: str = None
    line: int = None

    def __str__(self):
        if self.file is not None:
            return "%s(%s:%s)" % (self.kind, self.file, self.line)
        return self.kind


@dataclass(frozen=True)
class StatementRecord:
    key: str
    statement: object
    provenance: Provenance
    seq: int
    text: str           # source sentence when known, else the logic form

    def sort_rank(self):
        return (_PROV_ORDER.get(self.provenance.kind, 9), self.seq)


@dataclass(frozen=True)
class Violation:
    record: StatementRecord          # the violated denial/cardinality check
    bindings: dict                   # variable -> constant (witness binding)
    witnesses: tuple                 # constants the violation turns on
    witness_atoms: tuple             # ground atoms (display strings)
    support: tuple                   # StatementRecords, explain-ordered

    def describe(self):
        bound = ", ".join("%s = %s" % kv for kv in sorted(self.bindings.items()))
        return "%s [%s]" % (self.record.text, bound)


@dataclass(frozen=True)
class ConsistencyReport:
    violations: tuple

    @property
    def verdict(self):
        return "consistent" if not self.violations else "violated"

    @property
    def consistent(self):
        return not self.violations


@dataclass(frozen=True)
class AnswerSet:
    answers: tuple                  # constant names, lexicographic
    bindings_per_answer: dict = None

    def __iter__(self):
        return iter(self.answers)


@dataclass(frozen=True)
class AssertResult:
    accepted: bool
    base: "FactBase"
    report: ConsistencyReport = None


class FactBase:

    def __init__(self, kernel=None):
        # saturation backend; injectable so the kernel benchmark and the
        # parity tests can compare the compiled and pure implementations
        self._kernel = kernel or _default_kernel
        self._records = {}            # key -> StatementRecord
        self._seq = 0
        self._const_ids = {}
        self._const_names = []
        self._pred_ids = {}
        self._preds = []
        self._state = self._kernel.KernelState()
        self._rules = []              # compiled (rule, nvars, seed_orders, full)
        self._rule_keys = []          # rule id -> statement key
        self._denials = []            # (key, patterns, nvars, var_names)
        self._cards = []              # (key, check, rel_id, filter_id, subj_id)
        self._derivations = {}        # atom -> ("f", key) | ("r", ridx, parents)
        self._check_cache = None

    # -- construction / copying ------------------------------------------

    @classmethod
    def empty(cls, kernel=None) -> "FactBase":
        return cls(kernel=kernel)

    def clone(self) -> "FactBase":
        twin = FactBase.__new__(FactBase)
        twin._kernel = self._kernel
        twin._records = dict(self._records)
        twin._seq = self._seq
        twin._const_ids = dict(self._const_ids)
        twin._const_names = list(self._const_names)
        twin._pred_ids = dict(self._pred_ids)
        twin._preds = list(self._preds)
        twin._state = self._state.clone()
        twin._rules = list(self._rules)
        twin._rule_keys = list(self._rule_keys)
        twin._denials = list(self._denials)
        twin._cards = list(self._cards)
        twin._derivations = dict(self._derivations)
        twin._check_cache = None
        return twin

    # -- interning ------------------------------------------------------------

    def _const(self, name) -> int:
        cid = self._const_ids.get(name)
        if cid is None:
            cid = len(self._const_names)
            self._const_ids[name] = cid
            self._const_names.append(name)
        return cid

    def _pred(self, predicate) -> int:
        pid = self._pred_ids.get(predicate)
        if pid is None:
            pid = len(self._preds)
            self._pred_ids[predicate] = pid
            self._preds.append(predicate)
        return pid

    def _const_readonly(self, name) -> int:
        """Lookup without interning (queries are read-only; an unknown
        constant gets a dead id that matches no atom)."""
        cid = self._const_ids.get(name)
        if cid is None:
            return len(self._const_names) + 1
        return cid

    def _pred_readonly(self, predicate) -> int:
        pid = self._pred_ids.get(predicate)
        if pid is None:
            return len(self._preds) + 1
        return pid

    def _encode_ground(self, atom: Atom):
        args = [self._const(t.name) for t in atom.args]
        if len(args) == 1:
            return (self._pred(atom.predicate), args[0], UNUSED)
        return (self._pred(atom.predicate), args[0], args[1])

    def _compile_conjunction(self, atoms, intern=True):
        """Patterns plus the variable-slot naming for witness bindings."""
        lookup_const = self._const if intern else self._const_readonly
        lookup_pred = self._pred if intern else self._pred_readonly
        slots = {}
        names = []
        patterns = []
        for atom in atoms:
            enc = []
            for t in atom.args:
                if t.is_var:
                    if t.name not in slots:
                        slots[t.name] = len(names)
                        names.append(t.name)
                    enc.append(-1 - slots[t.name])
                else:
                    enc.append(lookup_const(t.name))
            if len(enc) == 1:
                patterns.append((lookup_pred(atom.predicate), 1, enc[0], UNUSED))
            else:
                patterns.append((lookup_pred(atom.predicate), 2, enc[0], enc[1]))
        return patterns, names

    @staticmethod
    def _pattern_vars(pattern):
        _p, arity, t0, t1 = pattern
        out = []
        if t0 < 0:
            out.append(-1 - t0)
        if arity == 2 and t1 < 0:
            out.append(-1 - t1)
        return out

    def _join_order(self, patterns, seed):
        """Static join order: after the seed position, prefer patterns with
        the fewest unbound variables (ties by position)."""
        bound = set()
        if seed is not None:
            bound.update(self._pattern_vars(patterns[seed]))
        remaining = [i for i in range(len(patterns)) if i != seed]
        order = []
        while remaining:
            best = min(remaining, key=lambda i: (
                len([v for v in self._pattern_vars(patterns[i])
                     if v not in bound]), i))
            order.append(best)
            bound.update(self._pattern_vars(patterns[best]))
            remaining.remove(best)
        return tuple(order)

    def _compile_rule(self, key, rule: Rule):
        patterns, names = self._compile_conjunction(
            list(rule.body) + [rule.head])
        body, head = tuple(patterns[:-1]), patterns[-1]
        rid = len(self._rules)
        compiled_rule = (rid, body, head)
        seed_orders = tuple(self._join_order(body, i)
                            for i in range(len(body)))
        full_order = self._join_order(body, None)
        self._rules.append((compiled_rule, len(names), seed_orders, full_order))
        self._rule_keys.append(key)
        return self._rules[-1]

    # -- conjunction evaluation (queries, denials) ---------------------------------

    def _solve(self, patterns, nvars, env=None, skip=()):
        """All bindings satisfying the conjunction, greedily joining the
        currently cheapest pattern first."""
        if env is None:
            env = [-1] * nvars
        remaining = [i for i in range(len(patterns)) if i not in skip]

        def cost(i):
            return len(self._state.candidates(patterns[i], env))

        def rec(todo):
            if not todo:
                yield tuple(env)
                return
            i = min(todo, key=lambda j: (cost(j), j))
            rest = [j for j in todo if j != i]
            pattern = patterns[i]
            for atom in self._state.candidates(pattern, env):
                bound = _bind(pattern, atom, env)
                if bound is None:
                    continue
                yield from rec(rest)
                for slot in bound:
                    env[slot] = -1

        yield from rec(remaining)

    def _count_distinct(self, rel_id, subject_first, subject_cid, filter_id):
        if subject_first:
            atoms = self._state.by_p0.get((rel_id, subject_cid), ())
            ys = {atom[2] for atom in atoms}
        else:
            atoms = self._state.by_p1.get((rel_id, subject_cid), ())
            ys = {atom[1] for atom in atoms}
        return sorted(y for y in ys
                      if (filter_id, y, UNUSED) in self._state.atoms)

    # -- support ------------------------------------------------------------------

    def _support_keys(self, atom, acc):
        deriv = self._derivations.get(atom)
        if deriv is None:
            return
        if deriv[0] == "f":
            acc.add(deriv[1])
            return
        _r, rid, parents = deriv
        acc.add(self._rule_keys[rid])
        for parent in parents:
            self._support_keys(parent, acc)

    def _support_records(self, keys):
        records = [self._records[k] for k in keys if k in self._records]
        return tuple(sorted(records, key=StatementRecord.sort_rank))

    def _atom_str(self, atom):
        pred, a, b = atom
        name = str(self._preds[pred])
        if b == UNUSED:
            return "%s(%s)" % (name, self._const_names[a])
        return "%s(%s, %s)" % (name, self._const_names[a],
                               self._const_names[b])

    # -- consistency -----------------------------------------------------------------

    def _denial_violations(self, entry, delta_by_pred=None):
        key, patterns, nvars, names = entry
        violations = []
        seen = set()

        def emit(env):
            if env in seen:
                return
            seen.add(env)
            bindings = {names[i]: self._const_names[env[i]]
                        for i in range(len(names)) if env[i] >= 0}
            watoms = []
            wenv = list(env)
            for pattern in patterns:
                pred, arity, t0, t1 = pattern
                a = t0 if t0 >= 0 else wenv[-1 - t0]
                b = (t1 if t1 >= 0 else wenv[-1 - t1]) if arity == 2 else UNUSED
                watoms.append((pred, a, b))
            support = set([key])
            for atom in watoms:
                self._support_keys(atom, support)
            violations.append(Violation(
                self._records[key], bindings,
                tuple(sorted(bindings.values())),
                tuple(self._atom_str(a) for a in watoms),
                self._support_records(support)))

        if delta_by_pred is None:
            for env in self._solve(patterns, nvars):
                emit(env)
        else:
            for i, pattern in enumerate(patterns):
                seeds = delta_by_pred.get(pattern[0])
                if not seeds:
                    continue
                for atom in seeds:
                    env = [-1] * nvars
                    bound = _bind(pattern, atom, env)
                    if bound is None:
                        continue
                    for full_env in self._solve(patterns, nvars, env=env,
                                                skip=(i,)):
                        emit(full_env)
                    for slot in bound:
                        env[slot] = -1
        return violations

    def _card_violations(self, entry):
        key, check, rel_id, filter_id, subject_cid = entry
        violations = []
        if subject_cid is not None:
            subjects = [subject_cid]
        elif check.comparator == AT_MOST:
            # count 0 always satisfies "at most", so only subjects with
            # at least one edge can violate
            pos = 1 if check.subject_first else 2
            subjects = sorted({atom[pos]
                               for atom in self._state.by_pred.get(rel_id, ())})
        else:
            subjects = range(len(self._const_names))
        for cid in subjects:
            ys = self._count_distinct(rel_id, check.subject_first, cid,
                                      filter_id)
            count = len(ys)
            violated = {
                AT_MOST: count > check.bound,
                AT_LEAST: count < check.bound,
                EXACTLY: count != check.bound,
                MORE_THAN: count <= check.bound,
            }[check.comparator]
            if not violated:
                continue
            watoms = []
            for y in ys:
                if check.subject_first:
                    watoms.append((rel_id, cid, y))
                else:
                    watoms.append((rel_id, y, cid))
                watoms.append((filter_id, y, UNUSED))
            support = set([key])
            for atom in watoms:
                self._support_keys(atom, support)
            violations.append(Violation(
                self._records[key],
                {"x": self._const_names[cid], "count": str(count)},
                tuple(self._const_names[y] for y in ys),
                tuple(self._atom_str(a) for a in watoms),
                self._support_records(support)))
        return violations

    def check(self, force=False) -> ConsistencyReport:
        """Evaluate every denial and cardinality check over the closure.
        Violations are data, not errors."""
        if self._check_cache is not None and not force:
            return self._check_cache
        violations = []
        for entry in self._denials:
            violations.extend(self._denial_violations(entry))
        for entry in self._cards:
            violations.extend(self._card_violations(entry))
        report = ConsistencyReport(tuple(violations))
        self._check_cache = report
        return report

    def _check_delta(self, new_atoms, new_entry_denial=None,
                     new_entry_card=None):
        """Violations that the given delta (or a newly added constraint)
        can introduce; sound on a previously consistent base."""
        violations = []
        if new_atoms:
            delta_by_pred = {}
            for atom in new_atoms:
                delta_by_pred.setdefault(atom[0], []).append(atom)
            for entry in self._denials:
                violations.extend(self._denial_violations(entry, delta_by_pred))
            for entry in self._cards:
                violations.extend(self._card_violations(entry))
        if new_entry_denial is not None:
            violations.extend(self._denial_violations(new_entry_denial))
        if new_entry_card is not None:
            violations.extend(self._card_violations(new_entry_card))
        return violations

    # -- statement bookkeeping ----------------------------------------------------------

    def _new_record(self, stmt, provenance, text):
        norm = normalize(stmt)
        key = statement_key(stmt)
        record = StatementRecord(key, norm, provenance, self._seq,
                                 text or norm.to_line())
        self._seq += 1
        return key, record

    def _install(self, key, record):
        """Wire one recorded statement into the engine structures; returns
        (delta_atoms, new_denial_entry, new_card_entry)."""
        stmt = record.statement
        self._records[key] = record
        if isinstance(stmt, Fact):
            atom = self._encode_ground(stmt.atom)
            if self._state.add(atom):
                self._derivations[atom] = ("f", key)
                return [atom], None, None
            # already derivable: the direct assertion is now the support
            self._derivations[atom] = ("f", key)
            return [], None, None
        if isinstance(stmt, Rule):
            compiled = self._compile_rule(key, stmt)
            derivs = self._kernel.apply_rule_full(self._state, compiled[0],
                                     compiled[3], compiled[1])
            atoms = self._register_derivations(derivs)
            return atoms, None, None
        if isinstance(stmt, Denial):
            patterns, names = self._compile_conjunction(stmt.body)
            entry = (key, patterns, len(names), names)
            self._denials.append(entry)
            return [], entry, None
        if isinstance(stmt, CardinalityCheck):
            entry = (key, stmt, self._pred(stmt.relation),
                     self._pred(stmt.filter),
                     self._const(stmt.subject.name)
                     if stmt.subject is not None else None)
            self._cards.append(entry)
            return [], None, entry
        raise NotAssertableError("cannot assert a %s" % type(stmt).__name__)

    def _register_derivations(self, derivs):
        atoms = []
        for atom, rid, parents in derivs:
            if atom not in self._derivations:
                self._derivations[atom] = ("r", rid, parents)
            atoms.append(atom)
        return atoms

    def _saturate_from(self, delta_atoms):
        derivs = self._kernel.run_rounds(self._state, self._rules, delta_atoms)
        return self._register_derivations(derivs)

    # -- public operations ----------------------------------------------------------------

    def has_statement(self, stmt) -> bool:
        return statement_key(stmt) in self._records

    def statements(self):
        return tuple(self._records.values())

    @property
    def closure_size(self) -> int:
        return len(self._state)

    def closure_atoms(self):
        """The saturated closure as logic-level atoms."""
        from ..logic import Term, CONST
        out = set()
        for pred_id, a, b in self._state.atoms:
            predicate = self._preds[pred_id]
            if b == UNUSED:
                args = (Term(CONST, self._const_names[a]),)
            else:
                args = (Term(CONST, self._const_names[a]),
                        Term(CONST, self._const_names[b]))
            out.add(Atom(predicate, args))
        return out

    def with_batch(self, items):
        """Add (statement, provenance[, text]) items without gating,
        saturate once, and report consistency of the result (ingesting a
        new code dump may legitimately create violations the developer
        must then resolve)."""
        base = self.clone()
        delta = []
        for item in items:
            stmt, provenance = item[0], item[1]
            text = item[2] if len(item) > 2 else None
            if isinstance(stmt, Query):
                raise NotAssertableError("cannot assert a question")
            key, record = base._new_record(stmt, provenance, text)
            if key in base._records:
                continue
            atoms, _d, _c = base._install(key, record)
            delta.extend(atoms)
        delta.extend(base._saturate_from(delta))
        return base, base.check()

    def assert_statement(self, stmt, provenance, text=None) -> AssertResult:
        """Gated assertion: the statement enters the base only if the base
        stays consistent; otherwise the violation report explains why."""
        if isinstance(stmt, Query):
            raise NotAssertableError("cannot assert a question")
        key = statement_key(stmt)
        if key in self._records:
            return AssertResult(True, self, None)  # duplicate: no-op
        base = self.clone()
        key, record = base._new_record(stmt, provenance, text)
        atoms, denial_entry, card_entry = base._install(key, record)
        atoms.extend(base._saturate_from(atoms))
        violations = base._check_delta(atoms, denial_entry, card_entry)
        if violations:
            return AssertResult(False, self,
                                ConsistencyReport(tuple(violations)))
        if self._check_cache is not None and self._check_cache.consistent:
            base._check_cache = ConsistencyReport(())
        return AssertResult(True, base, None)

    def retract_statement(self, stmt):
        """Remove by normal form and recompute the closure from scratch."""
        key = statement_key(stmt)
        if key not in self._records:
            raise NotPresentError("statement not in the base: %s" % key)
        fresh = FactBase(kernel=self._kernel)
        remaining = [r for k, r in self._records.items() if k != key]
        delta = []
        for record in sorted(remaining, key=lambda r: r.seq):
            k2, rec2 = record.key, record
            fresh._records[k2] = rec2
            fresh._seq = max(fresh._seq, rec2.seq + 1)
            atoms, _d, _c = fresh._install(k2, rec2)
            delta.extend(atoms)
        fresh._saturate_from(delta)
        return fresh, fresh.check()

    def ask(self, query: Query) -> AnswerSet:
        report = self.check()
        if not report.consistent:
            raise InconsistentBaseError(
                "%d violation(s); answers would be meaningless"
                % len(report.violations))
        counting = query.counting
        bindings_per_answer = {}
        if query.body:
            patterns, names = self._compile_conjunction(query.body,
                                                        intern=False)
            answer_slot = names.index(query.answer.name)
            for env in self._solve(patterns, len(names)):
                cid = env[answer_slot]
                name = self._const_names[cid]
                if name not in bindings_per_answer:
                    bindings_per_answer[name] = {
                        names[i]: self._const_names[env[i]]
                        for i in range(len(names)) if env[i] >= 0}
        else:
            for cid, name in enumerate(self._const_names):
                bindings_per_answer[name] = {query.answer.name: name}
        if counting is not None:
            rel_id = self._pred_readonly(counting.relation)
            filter_id = self._pred_readonly(counting.filter)
            survivors = {}
            for name in bindings_per_answer:
                count = len(self._count_distinct(
                    rel_id, counting.subject_first,
                    self._const_ids[name], filter_id))
                keep = {
                    AT_MOST: count <= counting.bound,
                    AT_LEAST: count >= counting.bound,
                    EXACTLY: count == counting.bound,
                    MORE_THAN: count > counting.bound,
                }[counting.comparator]
                if keep:
                    survivors[name] = bindings_per_answer[name]
            bindings_per_answer = survivors
        answers = tuple(sorted(bindings_per_answer))
        return AnswerSet(answers, bindings_per_answer)

    def explain(self, report: ConsistencyReport):
        """Per-violation ordered support listing (prelude first, the
        interactive statement last)."""
        if report.consistent:
            return []
        return [(violation, violation.support)
                for violation in report.violations]


def _bind(pattern, atom, env):
    """Mirror of the kernel's bind (kept here so query evaluation does not
    depend on which kernel backend is loaded)."""
    _pred, arity, t0, t1 = pattern
    bound = []
    terms = (t0,) if arity == 1 else (t0, t1)
    values = (atom[1],) if arity == 1 else (atom[1], atom[2])
    for t, value in zip(terms, values):
        if t >= 0:
            if t != value:
                for slot in bound:
                    env[slot] = -1
                return None
        else:
            slot = -1 - t
            current = env[slot]
            if current == -1:
                env[slot] = value
                bound.append(slot)
            elif current != value:
                for s in bound:
                    env[s] = -1
                return None
    return bound
