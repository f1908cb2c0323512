"""Command-line interface.

Exit codes: 0 on success / consistent, 1 when violations were found (so
``check`` works as a commit hook), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..engine import BACKEND
from ..errors import (CnlError, InconsistentBaseError, NotPresentError,
                      ParseError, TranslateError, UnknownWordError)
from .config import config_for_kb, load_config
from .session import Session

OK = 0
VIOLATIONS = 1
USAGE = 2


def canonical_json(payload) -> str:
    """The one JSON serialization shared by the CLI and the HTTP service,
    so their outputs compare byte-equal."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _build_argparser():
    top = argparse.ArgumentParser(
        prog="cnldoc",
        description="Verifiable software documentation in controlled English.")
    top.add_argument("--config", help="session config file")
    top.add_argument("--kb", help="knowledge base file (implicit config)")
    top.add_argument("--json", action="store_true",
                     help="machine-readable output where supported")
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("check", help="report all violations of the loaded base")
    p = sub.add_parser("ingest", help="ingest a code-model dump")
    p.add_argument("dump", help="dump file (path relative to the kb file)")
    p = sub.add_parser("add", help="assert one sentence")
    p.add_argument("sentence")
    p = sub.add_parser("remove", help="retract one sentence")
    p.add_argument("sentence")
    p = sub.add_parser("ask", help="answer a question")
    p.add_argument("question")
    p = sub.add_parser("complete", help="next tokens for a sentence prefix")
    p.add_argument("prefix")
    p = sub.add_parser("extract",
                       help="collect @cnl: comments and assert them")
    p.add_argument("roots", nargs="*", help="source roots (default: config)")
    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int)
    p = sub.add_parser("bench",
                       help="synthesize a base and report timings")
    p.add_argument("facts", type=int)
    p.add_argument("--backend", choices=("current", "pure", "native", "both"),
                   default="current")
    p.add_argument("--seed", type=int, default=7)
    return top


def _load_session(args) -> Session:
    if args.config:
        config = load_config(args.config)
    elif args.kb:
        config = config_for_kb(args.kb)
    else:
        raise SystemExit("either --config or --kb is required")
    return Session.load(config)


def _print_report(session, report, out):
    for q in session.quarantined:
        print("quarantined %s:%d: %s (%s)"
              % (session.kb.path, q.line, q.sentence, q.reason), file=out)
    if report.consistent:
        print("consistent, 0 violations", file=out)
        return OK
    print("%d violation(s)" % len(report.violations), file=out)
    for violation in report.violations:
        print("violated: %s" % violation.describe(), file=out)
        for atom in violation.witness_atoms:
            print("  witness: %s" % atom, file=out)
        for record in violation.support:
            print("  because [%s] %s" % (record.provenance, record.text),
                  file=out)
    return VIOLATIONS


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    args = _build_argparser().parse_args(argv)
    try:
        return _dispatch(args, out, err)
    except (UnknownWordError, ParseError, TranslateError) as exc:
        print("error: %s" % exc, file=err)
        completions = getattr(exc, "completions", None)
        if completions is not None:
            print("expected next: %s"
                  % ", ".join(s for s, _c in sorted(completions.next_tokens)),
                  file=err)
        suggested = getattr(exc, "suggested_categories", None)
        if suggested:
            print("the word could be added as: %s" % ", ".join(suggested),
                  file=err)
        return USAGE
    except InconsistentBaseError as exc:
        print("error: %s" % exc, file=err)
        return VIOLATIONS
    except NotPresentError as exc:
        print("error: %s" % exc, file=err)
        return USAGE
    except CnlError as exc:
        print("error: %s" % exc, file=err)
        return USAGE


def _dispatch(args, out, err) -> int:
    command = args.command

    if command == "bench":
        from .benchmark import run_bench
        budgets = None
        if args.config:
            config = load_config(args.config)
            budgets = {"add": config.add_budget, "check": config.check_budget,
                       "load": config.load_budget}
        return run_bench(args.facts, backend=args.backend, seed=args.seed,
                         as_json=args.json, out=out, budgets=budgets)

    session = _load_session(args)

    if command == "check":
        return _print_report(session, session.base.check(), out)

    if command == "ingest":
        result = session.ingest_dump(args.dump)
        print("ingested %d facts (%d new entities) from %s"
              % (result.fact_count, len(result.entities), args.dump), file=out)
        report = session.base.check()
        if not report.consistent:
            print("note: the base now has %d violation(s); run `check`"
                  % len(report.violations), file=out)
        return OK

    if command == "add":
        accepted, report = session.assert_sentence(args.sentence)
        if accepted:
            print("accepted: %s" % args.sentence, file=out)
            return OK
        print("rejected: %s" % args.sentence, file=out)
        for violation in report.violations:
            print("would violate: %s" % violation.record.text, file=out)
            for record in violation.support:
                print("  because [%s] %s" % (record.provenance, record.text),
                      file=out)
        return VIOLATIONS

    if command == "remove":
        session.retract_sentence(args.sentence)
        print("removed: %s" % args.sentence, file=out)
        return OK

    if command == "ask":
        answers = session.ask_sentence(args.question)
        if args.json:
            print(canonical_json({"answers": list(answers.answers)}),
                  file=out)
        elif answers.answers:
            for answer in answers.answers:
                print("- %s" % answer, file=out)
        else:
            print("(no answers)", file=out)
        return OK

    if command == "complete":
        completions = session.complete_prefix(args.prefix)
        if args.json:
            print(canonical_json(completions.as_payload()), file=out)
        else:
            for surface, category in sorted(completions.next_tokens):
                print("%s\t%s" % (surface, category), file=out)
            if completions.sentence_end:
                print("(the prefix can end here)", file=out)
        return OK

    if command == "extract":
        asserted, duplicates, rejections = session.extract(args.roots or None)
        print("asserted %d new sentence(s), %d already present, %d rejected"
              % (len(asserted), len(duplicates), len(rejections)), file=out)
        for comment, report in rejections:
            print("rejected %s:%d: %s"
                  % (comment.file, comment.line, comment.sentence), file=out)
            for violation in report.violations:
                print("  would violate: %s" % violation.record.text, file=out)
        return VIOLATIONS if rejections else OK

    if command == "serve":
        import uvicorn
        from .service import make_app
        port = args.port or session.config.port
        print("kernel backend: %s" % BACKEND, file=out)
        uvicorn.run(make_app(session), host="127.0.0.1", port=port,
                    log_level="warning")
        return OK

    raise SystemExit("unknown command %r" % command)


if __name__ == "__main__":
    sys.exit(main())
