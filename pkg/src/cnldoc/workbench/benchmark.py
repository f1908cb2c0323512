"""Synthetic workload benchmark.

Synthesizes a code model of a requested fact count (class hierarchies,
methods, invocation edges, a component layer on top), then reports the
time to load the session, to add one fact interactively, to check
consistency, and to detect an inconsistency, per kernel backend.
"""

from __future__ import annotations

import os
import random
import tempfile
import time

from ..engine.kernel import backends
from .config import load_config
from .session import Session

ROOTS = 8
METHODS_PER_CLASS = 12


def synthesize(n_facts, seed, directory):
    """Write a kb + dump pair of roughly ``n_facts`` facts into
    ``directory``; returns the config path."""
    rng = random.Random(seed)
    classes = max(ROOTS + 2, round(n_facts / 43))
    methods = classes * METHODS_PER_CLASS
    edges = n_facts - (2 * classes + 2 * methods - ROOTS)
    edges = max(0, edges)

    class_names = ["Root%d" % i for i in range(ROOTS)]
    class_names += ["C%d" % i for i in range(classes - ROOTS)]
    parents = {}
    for i in range(ROOTS, classes):
        parents[class_names[i]] = class_names[rng.randrange(i)]

    lines = ["# synthetic code model (%d classes, %d methods)"
             % (classes, methods)]
    for name in class_names:
        lines.append("E|class|%s" % name)
    method_names = []
    for name in class_names:
        for j in range(METHODS_PER_CLASS):
            method = "%s-m%d" % (name, j)
            method_names.append(method)
            lines.append("E|method|%s" % method)
    for child, parent in parents.items():
        lines.append("R|direct-subclass-of|%s|%s" % (child, parent))
    for name in class_names:
        for j in range(METHODS_PER_CLASS):
            lines.append("R|defines|%s|%s-m%d" % (name, name, j))
    seen = set()
    while len(seen) < edges:
        a = method_names[rng.randrange(len(method_names))]
        b = method_names[rng.randrange(len(method_names))]
        if a != b:
            seen.add((a, b))
    for a, b in sorted(seen):
        lines.append("R|invokes|%s|%s" % (a, b))
    with open(os.path.join(directory, "bench.facts"), "w",
              encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")

    docs = ["# synthetic component documentation",
            "@word noun | component | components",
            "@word proper-name | Simon",
            "@word transitive-verb | maintains | maintain | maintained"]
    docs += ["@word proper-name | Comp%d" % i for i in range(ROOTS)]
    docs.append("@dump bench.facts")
    docs += ["Comp%d is a component." % i for i in range(ROOTS)]
    docs.append("Everything belongs to at most 1 component.")
    for i in range(ROOTS):
        docs.append("Root%d belongs to Comp%d." % (i, i))
        docs.append("Every subclass of Root%d belongs to Comp%d." % (i, i))
    with open(os.path.join(directory, "docs.cnl"), "w",
              encoding="utf-8") as handle:
        handle.write("\n".join(docs) + "\n")
    config_path = os.path.join(directory, "session.cfg")
    with open(config_path, "w", encoding="utf-8") as handle:
        handle.write("[paths]\nkb = docs.cnl\n")
    return config_path


def measure(n_facts, seed=7, kernel=None) -> dict:
    """Load / add / check / detect timings over a synthesized base."""
    with tempfile.TemporaryDirectory(prefix="cnldoc-bench-") as directory:
        config = load_config(synthesize(n_facts, seed, directory))

        start = time.perf_counter()
        session = Session.load(config, kernel=kernel)
        load_s = time.perf_counter() - start

        start = time.perf_counter()
        accepted, _ = session.assert_sentence("Simon maintains C1.",
                                              persist=False)
        add_s = time.perf_counter() - start
        assert accepted

        start = time.perf_counter()
        report = session.base.check(force=True)
        check_s = time.perf_counter() - start
        assert report.consistent

        start = time.perf_counter()
        rejected, _ = session.assert_sentence(
            "No class is maintained by Simon.", persist=False)
        detect_s = time.perf_counter() - start
        assert not rejected

        dump_facts = sum(
            1 for record in session.base.statements()
            if record.provenance.kind == "ingested")
        return {"facts": dump_facts, "closure": session.base.closure_size,
                "load": load_s, "add": add_s, "check": check_s,
                "detect": detect_s}


HEADER = "%-8s %9s %9s %12s %10s %14s %16s" % (
    "backend", "#facts", "#closure", "load facts", "add fact",
    "check consist.", "detect inconsist.")


def format_row(backend, result) -> str:
    return "%-8s %9d %9d %12.2f %10.3f %14.3f %16.3f" % (
        backend, result["facts"], result["closure"], result["load"],
        result["add"], result["check"], result["detect"])


def run_bench(n_facts, backend="current", seed=7, as_json=False,
              out=None, budgets=None) -> int:
    import json
    import sys
    out = out or sys.stdout
    available = dict(backends())
    if backend == "current":
        chosen = [(None, None)]  # default kernel selection
    elif backend == "both":
        chosen = list(available.items())
    elif backend in available:
        chosen = [(backend, available[backend])]
    else:
        print("backend %r not available (have: %s)"
              % (backend, ", ".join(available)), file=out)
        return 2
    rows = []
    for name, module in chosen:
        result = measure(n_facts, seed=seed, kernel=module)
        from ..engine import BACKEND
        rows.append((name or BACKEND, result))
    if as_json:
        print(json.dumps([dict(backend=name, **result)
                          for name, result in rows]), file=out)
    else:
        print(HEADER, file=out)
        for name, result in rows:
            print(format_row(name, result), file=out)
    breached = False
    for name, result in rows:
        for column, budget in (budgets or {}).items():
            if result[column] > budget:
                breached = True
                print("over budget (%s): %s %.3fs > %.1fs"
                      % (name, column, result[column], budget), file=out)
    return 1 if breached else 0
