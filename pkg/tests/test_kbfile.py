import pytest

from cnldoc.errors import KnowledgeBaseFileError
from cnldoc.workbench.kbfile import KbFile

SAMPLE = """\
# architecture notes
@word noun | component | components
@word proper-name | Core
@dump model.facts

Core is a component.
No component is used by Core.
"""


def test_parse_line_kinds():
    kb = KbFile.parse(SAMPLE, "doc.cnl")
    kinds = [line.kind for line in kb.lines]
    assert kinds == ["comment", "word", "word", "dump", "blank",
                     "sentence", "sentence"]
    assert kb.prelude_enabled
    assert kb.sentences() == [(6, "Core is a component."),
                              (7, "No component is used by Core.")]


def test_prelude_off_directive():
    kb = KbFile.parse("@prelude off\nCore is a component.\n")
    assert not kb.prelude_enabled


def test_unknown_directive_rejected():
    with pytest.raises(KnowledgeBaseFileError):
        KbFile.parse("@frobnicate on\n")


def test_render_is_line_identical():
    kb = KbFile.parse(SAMPLE, "doc.cnl")
    assert kb.render() == SAMPLE


def test_quarantine_annotations_are_ephemeral():
    kb = KbFile.parse(SAMPLE, "doc.cnl")
    annotated = kb.render(quarantined={7: "would contradict the dump"})
    assert "#!quarantined: would contradict the dump" in annotated
    reloaded = KbFile.parse(annotated, "doc.cnl")
    assert reloaded.render() == SAMPLE


def test_append_and_remove_sentence():
    kb = KbFile.parse(SAMPLE, "doc.cnl")
    kb.append_sentence("Shapes is a component.")
    assert kb.sentences()[-1][1] == "Shapes is a component."
    assert kb.remove_sentence("Core is a component.")
    assert not kb.remove_sentence("Core is a component.")


def test_save_round_trip(tmp_path):
    path = tmp_path / "kb.cnl"
    path.write_text(SAMPLE, encoding="utf-8")
    kb = KbFile.load(str(path))
    kb.save()
    assert path.read_text(encoding="utf-8") == SAMPLE
