"""Event data model, JSONL corpus parsing, serialization, and validation.

An event is a type label plus an optional trigger and a list of role-labeled
arguments. Documents (summaries or source articles) carry a list of events
together with provenance: which system produced them and which source article
they belong to. Corpora are read from JSONL, one document per line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

REQUIRED_DOC_FIELDS = ("doc_id", "source_id", "system", "events")


class CorpusFormatError(ValueError):
    """A JSONL event file violates the corpus format.

    ``line`` is the 1-based line number the problem was found on, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class Trigger:
    """Trigger word(s) of an event. Carried for provenance, never matched."""

    text: str
    start: int | None = None
    end: int | None = None


@dataclass(frozen=True, slots=True)
class Argument:
    """One role-labeled argument of an event, e.g. role VICTIM, text "Over 450 people"."""

    role: str
    text: str
    start: int | None = None
    end: int | None = None


@dataclass(frozen=True, slots=True)
class Event:
    """A typed event with its (optional) trigger and arguments in input order."""

    event_type: str
    trigger: Trigger | None = None
    arguments: tuple[Argument, ...] = ()


@dataclass(frozen=True, slots=True)
class EventDocument:
    """A text unit (summary or article) with its extracted events.

    ``system`` names the producer (a model name, "annotator_1", "article", ...);
    ``source_id`` links a summary to its source article. ``text`` is optional
    and only needed for token statistics and offset validation.
    """

    doc_id: str
    source_id: str
    system: str
    events: tuple[Event, ...] = ()
    text: str | None = None


@dataclass(frozen=True, slots=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    doc_id: str | None
    message: str


class Corpus:
    """An immutable, ordered collection of event documents.

    ``index`` maps (system, source_id) to the documents carrying that pair, in
    input order. doc_ids are unique within a corpus. Instances are safe to
    share across threads once constructed.
    """

    def __init__(self, documents: Iterable[EventDocument]):
        self.documents: tuple[EventDocument, ...] = tuple(documents)
        self.index: dict[tuple[str, str], list[EventDocument]] = {}
        self._by_source: dict[str, list[EventDocument]] = {}
        seen: set[str] = set()
        for doc in self.documents:
            if doc.doc_id in seen:
                raise CorpusFormatError(f"duplicate doc_id {doc.doc_id!r}")
            seen.add(doc.doc_id)
            self.index.setdefault((doc.system, doc.source_id), []).append(doc)
            self._by_source.setdefault(doc.source_id, []).append(doc)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[EventDocument]:
        return iter(self.documents)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self.documents == other.documents

    def by_source_id(self, source_id: str) -> list[EventDocument]:
        """All documents sharing ``source_id``, across systems, in input order."""
        return list(self._by_source.get(source_id, ()))

    def systems(self) -> list[str]:
        """Distinct system names in first-appearance order."""
        out: dict[str, None] = {}
        for doc in self.documents:
            out.setdefault(doc.system, None)
        return list(out)

    def for_system(self, system: str) -> "Corpus":
        """Sub-corpus containing only documents produced by ``system``."""
        return Corpus(doc for doc in self.documents if doc.system == system)


def _require_str(
    obj: dict, key: str, line: int, *, what: str = "document", allow_empty: bool = False
) -> str:
    if key not in obj:
        raise CorpusFormatError(f"{what} missing required field {key!r}", line)
    value = obj[key]
    if not isinstance(value, str) or (not value and not allow_empty):
        raise CorpusFormatError(f"{what} field {key!r} must be a non-empty string", line)
    return value


def _opt_offset(obj: dict, key: str, line: int, what: str) -> int | None:
    value = obj.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise CorpusFormatError(f"{what} field {key!r} must be an integer", line)
    return value


def _parse_argument(obj: object, line: int) -> Argument:
    if not isinstance(obj, dict):
        raise CorpusFormatError("argument must be a JSON object", line)
    # empty label/text strings parse fine; validate_corpus diagnoses them
    return Argument(
        role=_require_str(obj, "role", line, what="argument", allow_empty=True),
        text=_require_str(obj, "text", line, what="argument", allow_empty=True),
        start=_opt_offset(obj, "start", line, "argument"),
        end=_opt_offset(obj, "end", line, "argument"),
    )


def _parse_event(obj: object, line: int) -> Event:
    if not isinstance(obj, dict):
        raise CorpusFormatError("event must be a JSON object", line)
    trigger = None
    if obj.get("trigger") is not None:
        tobj = obj["trigger"]
        if not isinstance(tobj, dict):
            raise CorpusFormatError("trigger must be a JSON object", line)
        trigger = Trigger(
            text=_require_str(tobj, "text", line, what="trigger", allow_empty=True),
            start=_opt_offset(tobj, "start", line, "trigger"),
            end=_opt_offset(tobj, "end", line, "trigger"),
        )
    arguments = obj.get("arguments", [])
    if not isinstance(arguments, list):
        raise CorpusFormatError("event field 'arguments' must be a list", line)
    return Event(
        event_type=_require_str(obj, "event_type", line, what="event", allow_empty=True),
        trigger=trigger,
        arguments=tuple(_parse_argument(a, line) for a in arguments),
    )


def _parse_document(obj: object, line: int) -> EventDocument:
    if not isinstance(obj, dict):
        raise CorpusFormatError("expected a JSON object", line)
    for key in REQUIRED_DOC_FIELDS:
        if key not in obj:
            raise CorpusFormatError(f"document missing required field {key!r}", line)
    events = obj["events"]
    if not isinstance(events, list):
        raise CorpusFormatError("document field 'events' must be a list", line)
    text = obj.get("text")
    if text is not None and not isinstance(text, str):
        raise CorpusFormatError("document field 'text' must be a string", line)
    return EventDocument(
        doc_id=_require_str(obj, "doc_id", line),
        source_id=_require_str(obj, "source_id", line),
        system=_require_str(obj, "system", line),
        events=tuple(_parse_event(e, line) for e in events),
        text=text,
    )


def parse_corpus(data: str | bytes) -> Corpus:
    """Parse a JSONL corpus from memory.

    One JSON object per line; blank lines are skipped; unknown fields are
    ignored. Raises CorpusFormatError with a line number on malformed JSON,
    missing required fields, or duplicate doc_ids.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusFormatError(f"input is not valid UTF-8: {exc}") from exc
    documents: list[EventDocument] = []
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(data.split("\n"), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"malformed JSON: {exc.msg}", lineno) from exc
        doc = _parse_document(obj, lineno)
        if doc.doc_id in first_line:
            raise CorpusFormatError(
                f"duplicate doc_id {doc.doc_id!r} (lines {first_line[doc.doc_id]} and {lineno})"
            )
        first_line[doc.doc_id] = lineno
        documents.append(doc)
    return Corpus(documents)


def load_corpus(path: str | Path) -> Corpus:
    """Read and parse a JSONL corpus file."""
    return parse_corpus(Path(path).read_bytes())


def _argument_to_dict(arg: Argument) -> dict:
    out: dict = {"role": arg.role, "text": arg.text}
    if arg.start is not None:
        out["start"] = arg.start
    if arg.end is not None:
        out["end"] = arg.end
    return out


def _event_to_dict(event: Event) -> dict:
    out: dict = {"event_type": event.event_type}
    if event.trigger is not None:
        trig: dict = {"text": event.trigger.text}
        if event.trigger.start is not None:
            trig["start"] = event.trigger.start
        if event.trigger.end is not None:
            trig["end"] = event.trigger.end
        out["trigger"] = trig
    out["arguments"] = [_argument_to_dict(a) for a in event.arguments]
    return out


def document_to_dict(doc: EventDocument) -> dict:
    out: dict = {"doc_id": doc.doc_id, "source_id": doc.source_id, "system": doc.system}
    if doc.text is not None:
        out["text"] = doc.text
    out["events"] = [_event_to_dict(e) for e in doc.events]
    return out


def serialize_corpus(corpus: Corpus) -> str:
    """Render a corpus back to JSONL. parse_corpus(serialize_corpus(c)) == c."""
    lines = [json.dumps(document_to_dict(d), ensure_ascii=False) for d in corpus]
    return "\n".join(lines) + ("\n" if lines else "")


def load_ontology(path: str | Path) -> list[str]:
    """Read an ontology file: one event-type label per line, blanks skipped."""
    labels = []
    for raw in Path(path).read_text(encoding="utf-8").split("\n"):
        label = raw.strip()
        if label:
            labels.append(label)
    return labels


def _check_offsets(
    diags: list[Diagnostic], doc: EventDocument, what: str, start: int | None, end: int | None
) -> None:
    if start is None and end is None:
        return
    if start is None or end is None:
        diags.append(Diagnostic("error", doc.doc_id, f"{what} has only one of start/end"))
        return
    if start < 0 or start >= end:
        diags.append(Diagnostic("error", doc.doc_id, f"{what} offsets invalid: [{start}, {end})"))
        return
    if doc.text is not None and end > len(doc.text):
        diags.append(
            Diagnostic(
                "error",
                doc.doc_id,
                f"{what} offsets [{start}, {end}) exceed text length {len(doc.text)}",
            )
        )


def validate_corpus(corpus: Corpus, ontology: Iterable[str] | None = None) -> list[Diagnostic]:
    """Check corpus contents and return diagnostics; an empty list means clean.

    Flags empty argument text or roles, empty event types, invalid or
    out-of-bounds offsets (when the document carries text), and, when an
    ontology list is given, event types outside it (as warnings).
    """
    known_types = {label.strip() for label in ontology} if ontology is not None else None
    diags: list[Diagnostic] = []
    for doc in corpus:
        for event in doc.events:
            etype = event.event_type.strip()
            if not etype:
                diags.append(Diagnostic("error", doc.doc_id, "event has empty event_type"))
            elif known_types is not None and etype not in known_types:
                diags.append(
                    Diagnostic("warning", doc.doc_id, f"event_type {etype!r} not in ontology")
                )
            if event.trigger is not None:
                if not event.trigger.text.strip():
                    diags.append(Diagnostic("error", doc.doc_id, "trigger has empty text"))
                _check_offsets(diags, doc, "trigger", event.trigger.start, event.trigger.end)
            for arg in event.arguments:
                if not arg.role.strip():
                    diags.append(Diagnostic("error", doc.doc_id, "argument has empty role"))
                if not arg.text.strip():
                    diags.append(
                        Diagnostic(
                            "error", doc.doc_id, f"argument with role {arg.role!r} has empty text"
                        )
                    )
                _check_offsets(diags, doc, f"argument ({arg.role})", arg.start, arg.end)
    return diags
