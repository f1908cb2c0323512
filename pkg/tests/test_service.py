import io
import json
import os
import shutil

import pytest
from fastapi.testclient import TestClient

from conftest import fixture_path
from cnldoc.workbench.cli import main
from cnldoc.workbench.config import load_config
from cnldoc.workbench.service import make_app
from cnldoc.workbench.session import Session


@pytest.fixture
def mondrian_client(tmp_path):
    shutil.copytree(fixture_path("mondrian"), tmp_path / "m")
    session = Session.load(load_config(str(tmp_path / "m" / "session.cfg")))
    return TestClient(make_app(session))


@pytest.fixture
def handler_client(tmp_path):
    shutil.copytree(fixture_path("handler"), tmp_path / "h")
    session = Session.load(load_config(str(tmp_path / "h" / "session.cfg")))
    return TestClient(make_app(session))


def test_health(mondrian_client):
    response = mondrian_client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_complete_matches_cli(mondrian_client, tmp_path):
    response = mondrian_client.post("/complete", json={"prefix": "Every"})
    assert response.status_code == 200
    out = io.StringIO()
    main(["--config", str(tmp_path / "m" / "session.cfg"), "--json",
          "complete", "Every"], out=out)
    assert response.text.strip() == out.getvalue().strip()


def test_ask_bytes_equal_cli(mondrian_client, tmp_path):
    question = "Which component is used by Core?"
    response = mondrian_client.post("/ask", json={"question": question})
    assert response.status_code == 200
    out = io.StringIO()
    main(["--config", str(tmp_path / "m" / "session.cfg"), "--json",
          "ask", question], out=out)
    assert response.content == out.getvalue().strip().encode()


def test_parse_returns_tree_summary(mondrian_client):
    response = mondrian_client.post(
        "/parse", json={"sentence": "MOEasel uses MOUtils."})
    assert response.status_code == 200
    payload = response.json()
    assert payload["kind"] == "statement"
    assert payload["statements"] == ["FACT uses(MOEasel, MOUtils)"]
    assert payload["tree"]["label"] == "sentence/declarative"


def test_syntax_error_is_422_with_completions(mondrian_client):
    response = mondrian_client.post(
        "/parse", json={"sentence": "Every class is a a."})
    assert response.status_code == 422
    payload = response.json()
    assert payload["position"] == 4
    assert any(t["category"] == "noun"
               for t in payload["completions"]["tokens"])


def test_unknown_word_is_422_with_categories(mondrian_client):
    response = mondrian_client.post(
        "/parse", json={"sentence": "MOEasel frobnicates MOUtils."})
    assert response.status_code == 422
    payload = response.json()
    assert payload["word"] == "frobnicates"
    assert "transitive-verb" in payload["suggested_categories"]


def test_malformed_payload_is_400(mondrian_client):
    response = mondrian_client.post("/parse", json={"nonsense": 1})
    assert response.status_code == 400


def test_untranslatable_sentence_is_400_not_422(mondrian_client):
    # grammatical, but the consequent variable is unbound
    response = mondrian_client.post(
        "/assert",
        json={"sentence": "If X uses Y then Z is a class."})
    assert response.status_code == 400
    assert response.json()["kind"] == "untranslatable"


def test_rejected_assert_is_409_with_support(handler_client):
    response = handler_client.post(
        "/assert",
        json={"sentence": "EmergencyHandler is maintained by Brian."})
    assert response.status_code == 409
    payload = response.json()
    assert payload["status"] == "rejected"
    (violation,) = payload["violations"]
    assert len(violation["support"]) == 8
    assert violation["support"][-1]["provenance"] == "interactive"


def test_assert_accept_then_retract(mondrian_client):
    sentence = "MOEasel uses MOUtils."
    response = mondrian_client.post("/assert", json={"sentence": sentence})
    assert response.status_code == 200
    response = mondrian_client.post("/retract", json={"sentence": sentence})
    assert response.status_code == 200
    response = mondrian_client.post("/retract", json={"sentence": sentence})
    assert response.status_code == 404


def test_statements_listing_carries_provenance(mondrian_client):
    payload = mondrian_client.get("/statements").json()
    kinds = {s["provenance"]["kind"] for s in payload["statements"]}
    assert kinds == {"prelude", "ingested", "documented"}
    texts = [s["text"] for s in payload["statements"]]
    assert "No method of Shapes uses Layouts." in texts


def test_lexicon_endpoint_extends_vocabulary(mondrian_client):
    response = mondrian_client.post(
        "/lexicon", json={"entry": "proper-name | Morph"})
    assert response.status_code == 200
    response = mondrian_client.post(
        "/assert", json={"sentence": "Morph is a component."})
    assert response.status_code == 200
    response = mondrian_client.post(
        "/lexicon", json={"entry": "proper-name | Morph"})
    assert response.status_code == 400
