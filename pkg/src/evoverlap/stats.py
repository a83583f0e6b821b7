"""Event and token statistics over corpora."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import EventDocument


class MissingTextError(ValueError):
    """Token statistics were requested for a document that carries no text."""


@dataclass(frozen=True, slots=True)
class EventStats:
    n_events: int
    n_roles: int
    n_event_types: int
    n_role_types: int


@dataclass(frozen=True, slots=True)
class TokenStats:
    n_docs: int
    n_tokens: int
    avg_tokens: float


def event_stats(docs: Iterable[EventDocument]) -> EventStats:
    """Total events and argument instances plus distinct type/role label counts."""
    n_events = 0
    n_roles = 0
    type_labels: set[str] = set()
    role_labels: set[str] = set()
    for doc in docs:
        for event in doc.events:
            n_events += 1
            type_labels.add(event.event_type.strip())
            for arg in event.arguments:
                n_roles += 1
                role_labels.add(arg.role.strip())
    return EventStats(n_events, n_roles, len(type_labels), len(role_labels))


def event_type_inventory(docs: Iterable[EventDocument]) -> list[str]:
    """Distinct event-type labels, lexicographically sorted."""
    labels = {event.event_type.strip() for doc in docs for event in doc.events}
    return sorted(labels)


def token_stats(docs: Sequence[EventDocument]) -> TokenStats:
    """Whitespace-token totals and per-document average over ``docs``.

    Every document must carry text; the average is exact (rounding is a
    rendering concern).
    """
    n_tokens = 0
    n_docs = 0
    for doc in docs:
        if doc.text is None:
            raise MissingTextError(f"document {doc.doc_id!r} has no text")
        n_tokens += len(doc.text.split())
        n_docs += 1
    avg = n_tokens / n_docs if n_docs else 0.0
    return TokenStats(n_docs, n_tokens, avg)
