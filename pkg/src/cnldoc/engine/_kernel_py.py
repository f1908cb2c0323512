"""Pure-Python saturation kernel: semi-naive fixpoint over int-encoded
atoms.

Atoms are tuples (pred, a, b) of interned ints, with b == -1 for unary
atoms.  Rule patterns encode variables as negative ints (-1 - slot) and
constants as non-negative ints.  The compiled twin of this module
(``_kernel``) implements the same contract; backend selection happens in
``kernel``.
"""

UNUSED = -1


class KernelState:
    """Indexed ground-atom store.

    ``by_pred`` lists every atom of a predicate; ``by_p0``/``by_p1`` index
    binary atoms by their first/second argument (and unary atoms by their
    only argument in ``by_p0``).
    """

    __slots__ = ("atoms", "by_pred", "by_p0", "by_p1")

    def __init__(self):
        self.atoms = set()
        self.by_pred = {}
        self.by_p0 = {}
        self.by_p1 = {}

    def add(self, atom) -> bool:
        if atom in self.atoms:
            return False
        self.atoms.add(atom)
        pred, a, b = atom
        self.by_pred.setdefault(pred, []).append(atom)
        self.by_p0.setdefault((pred, a), []).append(atom)
        if b != UNUSED:
            self.by_p1.setdefault((pred, b), []).append(atom)
        return True

    def clone(self) -> "KernelState":
        twin = KernelState.__new__(KernelState)
        twin.atoms = set(self.atoms)
        twin.by_pred = {k: list(v) for k, v in self.by_pred.items()}
        twin.by_p0 = {k: list(v) for k, v in self.by_p0.items()}
        twin.by_p1 = {k: list(v) for k, v in self.by_p1.items()}
        return twin

    def __len__(self):
        return len(self.atoms)

    def candidates(self, pattern, env):
        """Atoms possibly matching ``pattern`` under partial binding
        ``env`` (a list indexed by variable slot, -1 for unbound)."""
        pred, arity, t0, t1 = pattern
        a = t0 if t0 >= 0 else env[-1 - t0]
        if arity == 1:
            if a >= 0:
                return self.by_p0.get((pred, a), ())
            return self.by_pred.get(pred, ())
        b = t1 if t1 >= 0 else env[-1 - t1]
        if a >= 0 and b >= 0:
            atom = (pred, a, b)
            return (atom,) if atom in self.atoms else ()
        if a >= 0:
            return self.by_p0.get((pred, a), ())
        if b >= 0:
            return self.by_p1.get((pred, b), ())
        return self.by_pred.get(pred, ())


def bind(pattern, atom, env):
    """Extend ``env`` (mutated) to match ``atom`` against ``pattern``.
    Returns the list of newly bound slots, or None on mismatch."""
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


def _instantiate(pattern, env):
    pred, arity, t0, t1 = pattern
    a = t0 if t0 >= 0 else env[-1 - t0]
    if arity == 1:
        return (pred, a, UNUSED)
    b = t1 if t1 >= 0 else env[-1 - t1]
    return (pred, a, b)


def _apply_from(state, rule, env, order, pos, parents, out):
    """Join the remaining body positions ``order[pos:]`` and emit head
    instantiations."""
    body = rule[1]
    if pos == len(order):
        head_atom = _instantiate(rule[2], env)
        if head_atom not in state.atoms:
            out.append((head_atom, rule[0], tuple(parents)))
            state.add(head_atom)
        return
    index = order[pos]
    pattern = body[index]
    for atom in state.candidates(pattern, env):
        bound = bind(pattern, atom, env)
        if bound is None:
            continue
        parents[index] = atom
        _apply_from(state, rule, env, order, pos + 1, parents, out)
        for slot in bound:
            env[slot] = -1


def apply_rule_full(state, rule, order, nvars):
    """Every derivation of ``rule`` over the current state (adding the
    derived atoms); returns [(atom, rule_id, parents)] in order."""
    out = []
    env = [-1] * nvars
    parents = [None] * len(rule[1])
    _apply_from(state, rule, env, order, 0, parents, out)
    return out


def run_rounds(state, compiled_rules, delta):
    """Semi-naive rounds: re-join only atoms derived in the previous
    round.  ``compiled_rules`` is a list of
    (rule, nvars, seed_orders, full_order) tuples; ``delta`` is the list
    of atoms that just entered the state.  Returns all new derivations."""
    derivations = []
    current = list(delta)
    while current:
        delta_by_pred = {}
        for atom in current:
            delta_by_pred.setdefault(atom[0], []).append(atom)
        round_start = len(derivations)
        for rule, nvars, seed_orders, _full in compiled_rules:
            body = rule[1]
            for i, pattern in enumerate(body):
                seeds = delta_by_pred.get(pattern[0])
                if not seeds:
                    continue
                order = seed_orders[i]
                for atom in seeds:
                    env = [-1] * nvars
                    if bind(pattern, atom, env) is None:
                        continue
                    parents = [None] * len(body)
                    parents[i] = atom
                    _apply_from(state, rule, env, order, 0, parents,
                                derivations)
        current = [d[0] for d in derivations[round_start:]]
    return derivations
