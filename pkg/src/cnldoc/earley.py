"""Earley chart parser over the controlled grammar.

The chart is also the completion engine: the scannable terminals of the
final state set are exactly the tokens that keep the prefix viable, and
because the per-lexicon grammar is pruned to productive symbols, every
offered token extends to at least one complete sentence.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import grammar as G
from .errors import AmbiguityError, DeadPrefixError, ParseError
from .tokens import (FUNCTION_WORD, LEXICAL, NUMBER, PERIOD, QUESTION_MARK,
                     VARIABLE)


@dataclass(frozen=True)
class Node:
    """Parse tree node; leaves carry their token (plus the lexicon entry
    and form slot that the terminal resolved to)."""
    tag: str
    label: str = None
    children: tuple = ()
    token: object = None
    entry: object = None
    slot: str = None

    @property
    def is_leaf(self):
        return self.token is not None

    def child(self, tag):
        for node in self.children:
            if node.tag == tag:
                return node
        return None

    def signature(self):
        """Hashable structural identity (used by equality properties)."""
        if self.is_leaf:
            return ("tok", self.token.kind, self.token.surface)
        return (self.tag,) + tuple(c.signature() for c in self.children)

    def sketch(self, indent=0):
        pad = "  " * indent
        if self.is_leaf:
            return "%s%s %r" % (pad, self.token.kind, self.token.surface)
        head = self.label or self.tag
        lines = [pad + head]
        for c in self.children:
            lines.append(c.sketch(indent + 1))
        return "\n".join(lines)


def _candidate_for(terminal, token):
    kind = terminal[0]
    for cand in token.candidates:
        if kind == "w":
            if cand.kind == FUNCTION_WORD and cand.word == terminal[1]:
                return cand
        elif kind == "lex":
            if (cand.kind == LEXICAL and cand.entry.category == terminal[1]
                    and cand.slot == terminal[2]):
                return cand
        elif kind == "var":
            if cand.kind == VARIABLE:
                return cand
        elif kind == "num":
            if cand.kind == NUMBER:
                return cand
        elif kind == "dot":
            if cand.kind == PERIOD:
                return cand
        elif kind == "qmark":
            if cand.kind == QUESTION_MARK:
                return cand
    return None


def terminal_matches(terminal, token) -> bool:
    return _candidate_for(terminal, token) is not None


class Parser:
    """Grammar instance specialized (pruned) for one lexicon."""

    def __init__(self, lexicon):
        self.lexicon = lexicon
        self._prods_by_lhs = {}
        self._min_len = {}
        self._prune()
        self._compute_min_len()

    # -- grammar specialization ------------------------------------------

    def _terminal_scannable(self, term):
        if term[0] == "lex":
            return self.lexicon.has_forms(term[1], term[2])
        return True

    def _prune(self):
        usable = [p for p in G.PRODUCTIONS
                  if all(self._terminal_scannable(s) for s in p.rhs
                         if G.is_terminal(s))]
        productive = set()
        changed = True
        while changed:
            changed = False
            for p in usable:
                if p.lhs in productive:
                    continue
                if all(G.is_terminal(s) or s in productive for s in p.rhs):
                    productive.add(p.lhs)
                    changed = True
        for p in usable:
            if all(G.is_terminal(s) or s in productive for s in p.rhs):
                self._prods_by_lhs.setdefault(p.lhs, []).append(p)

    def _compute_min_len(self):
        INF = 10 ** 9
        ml = {lhs: INF for lhs in self._prods_by_lhs}
        changed = True
        while changed:
            changed = False
            for lhs, prods in self._prods_by_lhs.items():
                for p in prods:
                    total = 0
                    for s in p.rhs:
                        total += 1 if G.is_terminal(s) else ml.get(s, INF)
                        if total >= INF:
                            break
                    if total < ml[lhs]:
                        ml[lhs] = total
                        changed = True
        self._min_len = ml

    def min_len(self, symbol):
        if G.is_terminal(symbol):
            return 1
        return self._min_len.get(symbol, 10 ** 9)

    # -- chart ------------------------------------------------------------

    def _new_chart(self):
        chart = [{}]
        for p in self._prods_by_lhs.get(G.START, ()):
            chart[0][(p.index, 0, 0)] = []
        self._close(chart, 0)
        return chart

    def _close(self, chart, k):
        worklist = list(chart[k])
        while worklist:
            state = worklist.pop()
            prod_idx, dot, origin = state
            prod = G.PRODUCTIONS[prod_idx]
            if dot < len(prod.rhs):
                sym = prod.rhs[dot]
                if not G.is_terminal(sym):
                    # predict
                    for p in self._prods_by_lhs.get(sym, ()):
                        child = (p.index, 0, k)
                        if child not in chart[k]:
                            chart[k][child] = []
                            worklist.append(child)
                    # late completion: sym may already be complete over an
                    # empty span — impossible here (no epsilon productions)
            else:
                # complete: advance every parent waiting on prod.lhs at origin
                for parent in list(chart[origin]):
                    pprod_idx, pdot, porigin = parent
                    pprod = G.PRODUCTIONS[pprod_idx]
                    if pdot < len(pprod.rhs) and pprod.rhs[pdot] == prod.lhs:
                        adv = (pprod_idx, pdot + 1, porigin)
                        bp = (origin, parent, state)
                        bps = chart[k].get(adv)
                        if bps is None:
                            chart[k][adv] = [bp]
                            worklist.append(adv)
                        elif bp not in bps:
                            bps.append(bp)

    def _scan(self, chart, token):
        k = len(chart) - 1
        nxt = {}
        for state in chart[k]:
            prod_idx, dot, origin = state
            prod = G.PRODUCTIONS[prod_idx]
            if dot < len(prod.rhs):
                sym = prod.rhs[dot]
                if G.is_terminal(sym) and terminal_matches(sym, token):
                    adv = (prod_idx, dot + 1, origin)
                    nxt.setdefault(adv, []).append((k, state, None))
        chart.append(nxt)
        if nxt:
            self._close(chart, k + 1)
        return bool(nxt)

    def chart_for(self, tokens):
        """Chart over the whole token sequence, or (chart, failed_at)."""
        chart = self._new_chart()
        for i, token in enumerate(tokens):
            if not self._scan(chart, token):
                return chart[:-1], i
        return chart, None

    # -- parsing ------------------------------------------------------------

    def parse(self, tokens):
        if not tokens:
            raise ParseError("empty sentence", 0, self.completion_terminals([]))
        chart, failed = self.chart_for(tokens)
        if failed is not None:
            raise ParseError(
                "unexpected %r" % (tokens[failed].surface,), failed,
                self._terminals_of_set(chart[-1]))
        final = len(tokens)
        accepts = [s for s in chart[final]
                   if G.PRODUCTIONS[s[0]].lhs == G.START
                   and s[1] == len(G.PRODUCTIONS[s[0]].rhs) and s[2] == 0]
        if not accepts:
            raise ParseError("incomplete sentence", final,
                             self._terminals_of_set(chart[final]))
        trees = []
        for state in accepts:
            trees.extend(self._trees(chart, tokens, state, final, limit=2))
            if len(trees) > 1:
                break
        if len(trees) > 1:
            raise AmbiguityError(" ".join(t.surface for t in tokens), len(trees))
        return trees[0]

    def _trees(self, chart, tokens, state, k, limit, _memo=None):
        if _memo is None:
            _memo = {}
        key = (state, k)
        if key in _memo:
            return _memo[key]
        _memo[key] = []  # cycle guard (no cycles expected: no epsilon rules)
        prod_idx, dot, origin = state
        prod = G.PRODUCTIONS[prod_idx]
        if dot == 0:
            out = [[]]
        else:
            out = []
            sym = prod.rhs[dot - 1]
            if G.is_terminal(sym):
                prev = (prod_idx, dot - 1, origin)
                token = tokens[k - 1]
                cand = _candidate_for(sym, token)
                leaf = Node("tok", token=token, entry=cand.entry,
                            slot=cand.slot)
                for partial in self._trees(chart, tokens, prev, k - 1, limit,
                                           _memo):
                    out.append(partial + [leaf])
                    if len(out) >= limit + 1:
                        break
            else:
                for (j, parent, child) in chart[k].get(state, ()):
                    child_nodes = self._build_nodes(chart, tokens, child, k,
                                                    limit, _memo)
                    for partial in self._trees(chart, tokens, parent, j, limit,
                                               _memo):
                        for cn in child_nodes:
                            out.append(partial + [cn])
                            if len(out) >= limit + 1:
                                break
                        if len(out) >= limit + 1:
                            break
                    if len(out) >= limit + 1:
                        break
        if dot == len(prod.rhs):
            nodes = [Node(prod.tag, prod.label, tuple(children))
                     for children in out]
            _memo[key] = nodes
            return nodes
        _memo[key] = out
        return out

    def _build_nodes(self, chart, tokens, child_state, k, limit, memo):
        return self._trees(chart, tokens, child_state, k, limit, memo)

    # -- completion -----------------------------------------------------------

    def _terminals_of_set(self, state_set):
        terms = set()
        for (prod_idx, dot, _origin) in state_set:
            prod = G.PRODUCTIONS[prod_idx]
            if dot < len(prod.rhs):
                sym = prod.rhs[dot]
                if G.is_terminal(sym):
                    terms.add(sym)
        return terms

    def completion_terminals(self, tokens):
        """Terminals that can scan next after ``tokens``; raises
        DeadPrefixError if the prefix is not viable."""
        chart, failed = self.chart_for(tokens)
        if failed is not None:
            raise DeadPrefixError(
                "prefix dies at token %d (%r)" % (failed, tokens[failed].surface))
        return self._terminals_of_set(chart[-1])

    # -- distance to a complete sentence ---------------------------------------

    def min_remaining(self, tokens):
        """Minimum number of further tokens (including the end mark) needed
        to complete the prefix into a full sentence."""
        chart, failed = self.chart_for(tokens)
        if failed is not None:
            raise DeadPrefixError("prefix dies at token %d" % failed)
        k = len(chart) - 1
        INF = 10 ** 9
        memo = {}

        def rem(state):
            if state in memo:
                return memo[state]
            memo[state] = INF  # cycle guard
            prod_idx, dot, origin = state
            prod = G.PRODUCTIONS[prod_idx]
            tail = sum(self.min_len(s) for s in prod.rhs[dot:])
            if prod.lhs == G.START:
                value = tail
            else:
                best = INF
                for parent in chart[origin]:
                    pidx, pdot, porigin = parent
                    pprod = G.PRODUCTIONS[pidx]
                    if pdot < len(pprod.rhs) and pprod.rhs[pdot] == prod.lhs:
                        best = min(best, rem((pidx, pdot + 1, porigin)))
                value = tail + best if best < INF else INF
            memo[state] = value
            return value

        return min((rem(s) for s in chart[k]), default=INF)
