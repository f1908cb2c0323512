import io
import json
import os
import shutil

import pytest

from conftest import fixture_path
from cnldoc.workbench.cli import main


def run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(args), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def mondrian_dir(tmp_path):
    shutil.copytree(fixture_path("mondrian"), tmp_path / "m")
    return str(tmp_path / "m")


@pytest.fixture
def handler_dir(tmp_path):
    shutil.copytree(fixture_path("handler"), tmp_path / "h")
    return str(tmp_path / "h")


def test_check_consistent_exits_zero(mondrian_dir):
    code, out, _ = run_cli("--config", os.path.join(mondrian_dir,
                                                    "session.cfg"), "check")
    assert code == 0
    assert "consistent, 0 violations" in out


def test_ask_lists_answers(mondrian_dir):
    code, out, _ = run_cli("--config",
                           os.path.join(mondrian_dir, "session.cfg"),
                           "ask", "Which component is used by Core?")
    assert code == 0
    assert [l for l in out.splitlines() if l.startswith("- ")] == [
        "- Easel", "- Events", "- Layouts", "- Shapes", "- Utils"]


def test_ask_json_is_canonical(mondrian_dir):
    code, out, _ = run_cli("--config",
                           os.path.join(mondrian_dir, "session.cfg"),
                           "--json", "ask", "What belongs to Easel?")
    assert code == 0
    assert out.strip() == '{"answers":["MOEasel"]}'


def test_add_rejection_exits_one_with_explanation(handler_dir):
    code, out, _ = run_cli("--kb", os.path.join(handler_dir, "docs.cnl"),
                           "add", "EmergencyHandler is maintained by Brian.")
    assert code == 1
    assert "rejected" in out
    because = [l for l in out.splitlines() if l.startswith("  because")]
    assert len(because) == 8


def test_add_accepted_persists(mondrian_dir):
    kb = os.path.join(mondrian_dir, "docs.cnl")
    code, out, _ = run_cli("--kb", kb, "add", "MOEasel uses MOUtils.")
    assert code == 0 and "accepted" in out
    assert "MOEasel uses MOUtils." in open(kb).read()
    code, _, _ = run_cli("--kb", kb, "check")
    assert code == 0


def test_remove_unknown_sentence_exits_two(mondrian_dir):
    kb = os.path.join(mondrian_dir, "docs.cnl")
    code, _, err = run_cli("--kb", kb, "remove", "MOEasel uses MOUtils.")
    assert code == 2
    assert "error" in err


def test_parse_error_exits_two_with_suggestions(mondrian_dir):
    kb = os.path.join(mondrian_dir, "docs.cnl")
    code, _, err = run_cli("--kb", kb, "add",
                           "MOEasel frobnicates MOUtils.")
    assert code == 2
    assert "frobnicates" in err
    assert "transitive-verb" in err


def test_complete_lists_pairs(mondrian_dir):
    kb = os.path.join(mondrian_dir, "docs.cnl")
    code, out, _ = run_cli("--kb", kb, "complete", "Every")
    assert code == 0
    assert "class\tnoun" in out
    assert "subclass of\tof-construct" in out


def test_ingest_then_check_detects_drift(mondrian_dir):
    config = os.path.join(mondrian_dir, "session.cfg")
    code, out, _ = run_cli("--config", config, "ingest", "drift.facts")
    assert code == 0
    assert "violation" in out  # early warning
    code, out, _ = run_cli("--config", config, "check")
    assert code == 1
    assert "MOChildrenShape-displayOn" in out
    assert "No method of Shapes uses Layouts." in out


def test_extract_asserts_tagged_comments(mondrian_dir, tmp_path):
    src = os.path.join(mondrian_dir, "src")
    os.makedirs(src)
    with open(os.path.join(src, "easel.py"), "w") as handle:
        handle.write("# @cnl: MOEasel uses MOUtils.\n")
    config = os.path.join(mondrian_dir, "session.cfg")
    code, out, _ = run_cli("--config", config, "extract", "src")
    assert code == 0
    assert "asserted 1 new sentence(s)" in out
    code, out, _ = run_cli("--config", config, "extract", "src")
    assert "asserted 0 new sentence(s)" in out


def test_ask_on_drifted_base_exits_one(mondrian_dir):
    config = os.path.join(mondrian_dir, "session.cfg")
    run_cli("--config", config, "ingest", "drift.facts")
    code, _out, err = run_cli("--config", config, "ask",
                              "Which component is used by Core?")
    assert code == 1
    assert "violation" in err


def test_bench_budgets_from_config(tmp_path):
    (tmp_path / "docs.cnl").write_text("@prelude off\n", encoding="utf-8")
    (tmp_path / "session.cfg").write_text(
        "[paths]\nkb = docs.cnl\n[bench]\nload-budget = 0.0001\n",
        encoding="utf-8")
    code, out, _ = run_cli("--config", str(tmp_path / "session.cfg"),
                           "bench", "300")
    assert code == 1
    assert "over budget" in out


def test_bench_smoke(capsys):
    code, out, _ = run_cli("--json", "bench", "600", "--backend", "both")
    assert code == 0
    rows = json.loads(out)
    assert {row["backend"] for row in rows} >= {"pure"}
    for row in rows:
        assert row["facts"] > 0
        assert all(key in row for key in ("load", "add", "check", "detect"))
