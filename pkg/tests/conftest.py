import os
from pathlib import Path

import pytest

from evoverlap import Argument, Event, EventDocument, Trigger

REPO_ROOT = Path(__file__).resolve().parent.parent
TOY_DIR = REPO_ROOT / "data" / "toy"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(autouse=True)
def _clean_cli_environment(monkeypatch):
    """Keep tests independent of ambient EVOVERLAP_* settings."""
    for name in list(os.environ):
        if name.startswith("EVOVERLAP_"):
            monkeypatch.delenv(name)


@pytest.fixture
def toy_dir() -> Path:
    return TOY_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def arrest_doc() -> EventDocument:
    """One-event document: an arrest with a single VICTIM argument."""
    return EventDocument(
        doc_id="a1",
        source_id="art1",
        system="annotator_1",
        events=(
            Event(
                event_type="ARREST-JAIL",
                trigger=Trigger(text="arrested"),
                arguments=(Argument(role="VICTIM", text="Over 450 people"),),
            ),
        ),
    )
