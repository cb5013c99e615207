"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest
from hypothesis import settings

from socorr import default_category_lexicon, default_valence_lexicon, save_corpus
from socorr.synthetic import synthetic_corpus

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def valence():
    return default_valence_lexicon()


@pytest.fixture(scope="session")
def categories():
    return default_category_lexicon()


@pytest.fixture(scope="session")
def small_corpus():
    """Fully labeled 240-tweet corpus exercising every filter path."""
    return synthetic_corpus(240, seed=7)


@pytest.fixture()
def corpus_file(tmp_path):
    """Factory writing a corpus to a jsonl file under the test tmp dir."""

    def write(corpus, name="corpus.jsonl"):
        path = tmp_path / name
        save_corpus(corpus, path)
        return path

    return write


# one visible pass/fail line per acceptance criterion, printed after the run
_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{name}: {outcome.upper()}")
