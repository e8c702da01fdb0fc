"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
CORPUS = REPO / "corpus"


def load_spec(gid: str) -> dict:
    """Read one corpus spec by file stem."""
    return json.loads((CORPUS / f"{gid}.json").read_text())


def corpus_ids() -> list[str]:
    return sorted(p.stem for p in CORPUS.glob("*.json"))


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS
