import os
import shutil
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cnldoc.lexicon import load_lexicon
from cnldoc.workbench.config import load_config
from cnldoc.workbench.session import Session

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(*parts):
    return os.path.join(FIXTURES, *parts)


@pytest.fixture(scope="session")
def corpus_lexicon():
    return load_lexicon(fixture_path("corpus.lex"))


@pytest.fixture(scope="session")
def corpus_sentences():
    out = []
    with open(fixture_path("corpus.cnl"), encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line)
    return out


def _copy_session(name, tmp_path):
    target = tmp_path / name
    shutil.copytree(fixture_path(name), target)
    return load_config(str(target / "session.cfg"))


@pytest.fixture
def mondrian_session(tmp_path):
    return Session.load(_copy_session("mondrian", tmp_path))


@pytest.fixture
def mondrian_v543_session(tmp_path):
    return Session.load(_copy_session("mondrian_v543", tmp_path))


@pytest.fixture
def handler_session(tmp_path):
    return Session.load(_copy_session("handler", tmp_path))
