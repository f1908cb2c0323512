# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled saturation kernel: the semi-naive fixpoint twin of
``_kernel_py`` (same contract, same results, C-compiled loops)."""

UNUSED = -1


cdef class KernelState:
    cdef public set atoms
    cdef public dict by_pred
    cdef public dict by_p0
    cdef public dict by_p1

    def __init__(self):
        self.atoms = set()
        self.by_pred = {}
        self.by_p0 = {}
        self.by_p1 = {}

    cpdef bint add(self, tuple atom):
        if atom in self.atoms:
            return False
        self.atoms.add(atom)
        cdef long pred = atom[0]
        cdef long a = atom[1]
        cdef long b = atom[2]
        cdef list bucket
        bucket = self.by_pred.get(pred)
        if bucket is None:
            self.by_pred[pred] = [atom]
        else:
            bucket.append(atom)
        bucket = self.by_p0.get((pred, a))
        if bucket is None:
            self.by_p0[(pred, a)] = [atom]
        else:
            bucket.append(atom)
        if b != -1:
            bucket = self.by_p1.get((pred, b))
            if bucket is None:
                self.by_p1[(pred, b)] = [atom]
            else:
                bucket.append(atom)
        return True

    def clone(self):
        cdef KernelState twin = KernelState.__new__(KernelState)
        twin.atoms = set(self.atoms)
        twin.by_pred = {k: list(v) for k, v in self.by_pred.items()}
        twin.by_p0 = {k: list(v) for k, v in self.by_p0.items()}
        twin.by_p1 = {k: list(v) for k, v in self.by_p1.items()}
        return twin

    def __len__(self):
        return len(self.atoms)

    def candidates(self, tuple pattern, list env):
        cdef long pred = pattern[0]
        cdef long arity = pattern[1]
        cdef long t0 = pattern[2]
        cdef long t1 = pattern[3]
        cdef long a = t0 if t0 >= 0 else env[-1 - t0]
        cdef long b
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


def bind(tuple pattern, tuple atom, list env):
    return _bind(pattern, atom, env)


cdef list _bind(tuple pattern, tuple atom, list env):
    cdef long arity = pattern[1]
    cdef long t, value, slot, current
    cdef list bound = []
    cdef int i
    for i in range(arity):
        t = pattern[2 + i]
        value = atom[1 + i]
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


cdef tuple _instantiate(tuple pattern, list env):
    cdef long pred = pattern[0]
    cdef long arity = pattern[1]
    cdef long t0 = pattern[2]
    cdef long t1 = pattern[3]
    cdef long a = t0 if t0 >= 0 else env[-1 - t0]
    if arity == 1:
        return (pred, a, -1)
    cdef long b = t1 if t1 >= 0 else env[-1 - t1]
    return (pred, a, b)


cdef void _apply_from(KernelState state, tuple rule, list env, tuple order,
                      int pos, list parents, list out):
    cdef tuple body = rule[1]
    cdef tuple head_atom
    cdef int index
    cdef list bound
    if pos == len(order):
        head_atom = _instantiate(rule[2], env)
        if head_atom not in state.atoms:
            out.append((head_atom, rule[0], tuple(parents)))
            state.add(head_atom)
        return
    index = order[pos]
    pattern = body[index]
    for atom in state.candidates(pattern, env):
        bound = _bind(pattern, atom, env)
        if bound is None:
            continue
        parents[index] = atom
        _apply_from(state, rule, env, order, pos + 1, parents, out)
        for slot in bound:
            env[slot] = -1


def apply_rule_full(KernelState state, tuple rule, tuple order, int nvars):
    cdef list out = []
    cdef list env = [-1] * nvars
    cdef list parents = [None] * len(rule[1])
    _apply_from(state, rule, env, order, 0, parents, out)
    return out


def run_rounds(KernelState state, list compiled_rules, delta):
    cdef list derivations = []
    cdef list current = list(delta)
    cdef dict delta_by_pred
    cdef int i, round_start, nvars
    cdef tuple rule, body, pattern, seed_orders, order
    cdef list seeds, env, parents, bucket
    while current:
        delta_by_pred = {}
        for atom in current:
            bucket = delta_by_pred.get(atom[0])
            if bucket is None:
                delta_by_pred[atom[0]] = [atom]
            else:
                bucket.append(atom)
        round_start = len(derivations)
        for compiled in compiled_rules:
            rule = compiled[0]
            nvars = compiled[1]
            seed_orders = compiled[2]
            body = rule[1]
            for i in range(len(body)):
                pattern = body[i]
                seeds = delta_by_pred.get(pattern[0])
                if not seeds:
                    continue
                order = seed_orders[i]
                for atom in seeds:
                    env = [-1] * nvars
                    if _bind(pattern, atom, env) is None:
                        continue
                    parents = [None] * len(body)
                    parents[i] = atom
                    _apply_from(state, rule, env, order, 0, parents,
                                derivations)
        current = [d[0] for d in derivations[round_start:]]
    return derivations
