from pathlib import Path

import pytest

from wadgelab.formats import parse_corpus, parse_sequences

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_pairs(name):
    return parse_corpus((CORPUS / f"{name}.txt").read_text())


@pytest.fixture(scope="session")
def sequences():
    return parse_sequences((CORPUS / "sequences.txt").read_text())


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
