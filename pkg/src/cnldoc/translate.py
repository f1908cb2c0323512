"""Compositional translation of parse trees into logical statements.

One sentence can yield several statements: conjoined declaratives split
into one statement per conjunct ("PN VP1 and VP2." becomes the statements
of "PN VP1." and "PN VP2."), and a rule consequent with several atoms
splits into one rule per head atom.

Two constructs are rejected with typed errors: a consequent that would
introduce a variable not bound in the antecedent (existential heads are
not expressible in this logic, and that includes indefinite objects of
ground declaratives such as "X requires a printer."), and bodies that are
not variable-connected.
"""

from __future__ import annotations

from .earley import Node
from .errors import ExistentialHeadError, TranslateError
from .logic import (Atom, CardinalityCheck, Counting, Denial, Fact, Query,
                    Rule, Term, const, predicate_of, var)


def translate(tree: Node):
    """Translate a parse tree into its statements."""
    return _Translator().sentence(tree)


class _Translator:

    def __init__(self):
        self._fresh = 0

    def fresh(self) -> Term:
        self._fresh += 1
        return var("v%d" % self._fresh)

    # -- entry points -------------------------------------------------------

    def sentence(self, node: Node):
        if node.tag != "sentence":
            raise TranslateError("not a sentence tree: %s" % node.tag)
        core = node.children[0]
        handler = getattr(self, "_" + core.tag.replace("-", "_"), None)
        if handler is None:
            raise TranslateError("no translation for %s" % core.tag)
        return tuple(handler(core))

    # -- declaratives ---------------------------------------------------------

    def _decl_fact(self, node):
        subject = self._constant(node.children[0])
        statements = []
        for conjunct in _conjuncts(node.children[1]):
            atoms, counting = self.vp(conjunct, subject)
            if counting is not None:
                raise TranslateError("counting outside a question")
            statements.extend(self._ground_facts(atoms))
        return statements

    def _decl_ofc_fact(self, node):
        _art, ofc_leaf, np_node, _is, pn_leaf = node.children
        named = self._constant(pn_leaf)
        of_term, of_atoms = self.np(np_node)
        atoms = [Atom(predicate_of(ofc_leaf.entry), (named, of_term))]
        atoms.extend(of_atoms)
        return self._ground_facts(atoms)

    def _ground_facts(self, atoms):
        for atom in atoms:
            if not atom.is_ground:
                raise ExistentialHeadError(
                    "declarative introduces an unbound variable: %s" % atom)
        return [Fact(atom) for atom in atoms]

    def _decl_every(self, node):
        subject = self.fresh()
        body = self.nominal(node.children[1], subject)
        return self._rules_from(body, node.children[2], subject)

    def _decl_no(self, node):
        subject = self.fresh()
        atoms = self.nominal(node.children[1], subject)
        for conjunct in _conjuncts(node.children[2]):
            conj_atoms, _ = self.vp(conjunct, subject)
            atoms.extend(conj_atoms)
        return [Denial(tuple(atoms))]

    def _decl_if(self, node):
        _if, ifsubj, antecedent, _then, var_leaf, consequent = node.children
        if ifsubj.tag == "ifsubj-var":
            subject = var(ifsubj.children[0].token.surface)
        else:
            subject = self.fresh()
        body = []
        for conjunct in _conjuncts(antecedent):
            conj_atoms, _ = self.vp(conjunct, subject)
            body.extend(conj_atoms)
        head_subject = var(var_leaf.token.surface)
        return self._rules_from(body, consequent, head_subject)

    def _rules_from(self, body, conjunction, head_subject):
        bound = {t for atom in body for t in atom.variables()}
        rules = []
        for conjunct in _conjuncts(conjunction):
            atoms, counting = self.vp(conjunct, head_subject)
            if counting is not None:
                raise TranslateError("counting outside a question")
            loose = [t for atom in atoms for t in atom.variables()
                     if t not in bound]
            if loose:
                raise ExistentialHeadError(
                    "consequent introduces %s, which the antecedent does not "
                    "bind" % ", ".join(sorted({t.name for t in loose})))
            rules.extend(Rule(tuple(body), atom) for atom in atoms)
        return rules

    def _decl_card_universal(self, node):
        return [self._cardinality(node.children[1], subject=None)]

    def _decl_card_scoped(self, node):
        subject = self._constant(node.children[0])
        return [self._cardinality(node.children[1], subject=subject)]

    def _cardinality(self, cardvp, subject):
        comparator, bound, filter_pred = self._count_np(cardvp.children[-1])
        if cardvp.tag == "cardvp-active":
            relation = predicate_of(cardvp.children[0].entry)
            subject_first = True
        else:
            relation = predicate_of(cardvp.children[1].entry)
            subject_first = False
        return CardinalityCheck(relation, subject_first, filter_pred,
                                comparator, bound, subject=subject)

    # -- questions -------------------------------------------------------------

    def _quest_which(self, node):
        answer = self.fresh()
        body = self.nominal(node.children[1], answer)
        return [self._query(answer, body, node.children[2])]

    def _quest_what(self, node):
        answer = self.fresh()
        return [self._query(answer, [], node.children[1])]

    def _query(self, answer, body, conjunction):
        counting = None
        for conjunct in _conjuncts(conjunction):
            atoms, conj_counting = self.vp(conjunct, answer)
            body.extend(atoms)
            if conj_counting is not None:
                counting = conj_counting
        return Query(answer, tuple(body), counting)

    # -- phrases -----------------------------------------------------------------

    def nominal(self, node, term):
        head = node.children[0]
        if node.tag in ("nom-noun", "nom-noun-rel"):
            atoms = [Atom(predicate_of(head.entry), (term,))]
            if node.tag == "nom-noun-rel":
                atoms.extend(self.relative_clause(node.children[1], term))
            return atoms
        if node.tag == "nom-ofc":
            of_term, of_atoms = self.np(node.children[1])
            return [Atom(predicate_of(head.entry), (term, of_term))] + of_atoms
        raise TranslateError("bad nominal %s" % node.tag)

    def vp(self, node, subject):
        """Atoms (and optional counting subgoal) of a verb phrase applied
        to ``subject``."""
        tag = node.tag
        if tag == "vp-isa":
            return self.noun_pred(node.children[2], subject), None
        if tag == "vp-active":
            verb, np_node = node.children
            term, atoms = self.np(np_node)
            return [Atom(predicate_of(verb.entry), (subject, term))] + atoms, None
        if tag == "vp-passive":
            verb = node.children[1]
            term, atoms = self.np(node.children[3])
            return [Atom(predicate_of(verb.entry), (term, subject))] + atoms, None
        if tag == "vp-adjprep":
            adj = node.children[1]
            term, atoms = self.np(node.children[2])
            return [Atom(predicate_of(adj.entry), (subject, term))] + atoms, None
        if tag == "vp-active-count":
            comparator, bound, filter_pred = self._count_np(node.children[1])
            relation = predicate_of(node.children[0].entry)
            return [], Counting(relation, True, filter_pred, comparator, bound)
        if tag == "vp-passive-count":
            comparator, bound, filter_pred = self._count_np(node.children[3])
            relation = predicate_of(node.children[1].entry)
            return [], Counting(relation, False, filter_pred, comparator, bound)
        raise TranslateError("bad verb phrase %s" % tag)

    def noun_pred(self, node, term):
        head = node.children[0]
        if node.tag in ("nounpred-noun", "nounpred-noun-rel"):
            atoms = [Atom(predicate_of(head.entry), (term,))]
            if node.tag == "nounpred-noun-rel":
                atoms.extend(self.relative_clause(node.children[1], term))
            return atoms
        if node.tag == "nounpred-ofc":
            of_term, of_atoms = self.np(node.children[1])
            return [Atom(predicate_of(head.entry), (term, of_term))] + of_atoms
        raise TranslateError("bad noun predicate %s" % node.tag)

    def relative_clause(self, node, term):
        atoms, counting = self.vp(node.children[1], term)
        if counting is not None:
            raise TranslateError("counting inside a relative clause")
        return atoms

    def np(self, node):
        """(term, description atoms) of a noun phrase."""
        tag = node.tag
        if tag == "np-pn":
            return self._constant(node.children[0]), []
        if tag == "np-var":
            return var(node.children[0].token.surface), []
        if tag == "np-indef":
            term = self.fresh()
            return term, self.noun_pred(node.children[1], term)
        if tag == "np-something":
            return self.fresh(), []
        if tag == "np-something-rel":
            term = self.fresh()
            return term, self.relative_clause(node.children[1], term)
        raise TranslateError("bad noun phrase %s" % tag)

    def _count_np(self, node):
        cmp_node, num_leaf, noun_leaf = node.children
        comparator = cmp_node.tag[len("cmp-"):]
        return comparator, int(num_leaf.token.surface), \
            predicate_of(noun_leaf.entry)

    def _constant(self, leaf):
        return const(leaf.entry.forms["name"])


def _conjuncts(node):
    """Flatten a vpconj chain into its verb-phrase nodes."""
    out = []
    while node.tag == "vpconj-cons":
        out.append(node.children[0])
        node = node.children[2]
    if node.tag == "vpconj-one":
        out.append(node.children[0])
    else:
        out.append(node)
    return out
