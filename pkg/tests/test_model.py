import json

import pytest

from evoverlap import (
    Argument,
    Corpus,
    CorpusFormatError,
    Event,
    EventDocument,
    load_ontology,
    parse_corpus,
    serialize_corpus,
    validate_corpus,
)

ARREST_LINE = (
    '{"doc_id":"a1","source_id":"art1","system":"annotator_1","events":'
    '[{"event_type":"ARREST-JAIL","trigger":{"text":"arrested"},'
    '"arguments":[{"role":"VICTIM","text":"Over 450 people"}]}]}'
)


def test_parse_single_document():
    corpus = parse_corpus(ARREST_LINE)
    assert len(corpus) == 1
    doc = corpus.documents[0]
    assert doc.doc_id == "a1"
    assert doc.source_id == "art1"
    assert doc.system == "annotator_1"
    assert len(doc.events) == 1
    event = doc.events[0]
    assert event.event_type == "ARREST-JAIL"
    assert event.trigger is not None and event.trigger.text == "arrested"
    assert len(event.arguments) == 1
    assert event.arguments[0].role == "VICTIM"
    assert event.arguments[0].text == "Over 450 people"


def test_parse_empty_event_list():
    corpus = parse_corpus('{"doc_id":"e1","source_id":"art1","system":"m","events":[]}')
    assert len(corpus) == 1
    assert corpus.documents[0].events == ()


def test_parse_skips_blank_lines():
    data = "\n" + ARREST_LINE + "\n\n\n"
    assert len(parse_corpus(data)) == 1


def test_parse_accepts_bytes():
    corpus = parse_corpus(ARREST_LINE.encode("utf-8"))
    assert corpus.documents[0].doc_id == "a1"


def test_parse_ignores_unknown_fields():
    line = json.dumps(
        {
            "doc_id": "x",
            "source_id": "s",
            "system": "m",
            "events": [{"event_type": "DIE", "arguments": [], "confidence": 0.93}],
            "extractor_version": "2.1",
        }
    )
    corpus = parse_corpus(line)
    assert corpus.documents[0].events[0].event_type == "DIE"


def test_duplicate_doc_id_names_both_lines():
    lines = [
        '{"doc_id":"b1","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"b2","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"a1","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"b3","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"b4","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"b5","source_id":"s","system":"m","events":[]}',
        '{"doc_id":"a1","source_id":"s","system":"m","events":[]}',
    ]
    with pytest.raises(CorpusFormatError) as excinfo:
        parse_corpus("\n".join(lines))
    message = str(excinfo.value)
    assert "'a1'" in message and "3" in message and "7" in message


def test_malformed_json_names_line():
    data = ARREST_LINE + "\n{not json}\n"
    with pytest.raises(CorpusFormatError, match="line 2"):
        parse_corpus(data)


@pytest.mark.parametrize("field", ["doc_id", "source_id", "system", "events"])
def test_missing_required_field_names_field_and_line(field):
    obj = {"doc_id": "x", "source_id": "s", "system": "m", "events": []}
    del obj[field]
    with pytest.raises(CorpusFormatError) as excinfo:
        parse_corpus(json.dumps(obj))
    assert field in str(excinfo.value)
    assert "line 1" in str(excinfo.value)


def test_empty_required_string_rejected():
    obj = {"doc_id": "x", "source_id": "", "system": "m", "events": []}
    with pytest.raises(CorpusFormatError, match="source_id"):
        parse_corpus(json.dumps(obj))


def test_argument_order_preserved():
    line = json.dumps(
        {
            "doc_id": "x",
            "source_id": "s",
            "system": "m",
            "events": [
                {
                    "event_type": "ATTACK",
                    "arguments": [
                        {"role": "TARGET", "text": "b"},
                        {"role": "ATTACKER", "text": "a"},
                        {"role": "TARGET", "text": "c"},
                    ],
                }
            ],
        }
    )
    event = parse_corpus(line).documents[0].events[0]
    assert [a.text for a in event.arguments] == ["b", "a", "c"]


def test_roundtrip_through_serialization(toy_dir):
    for name in ("articles", "references", "candidates_mock_a", "candidates_mock_b"):
        raw = (toy_dir / f"{name}.jsonl").read_bytes()
        corpus = parse_corpus(raw)
        assert parse_corpus(serialize_corpus(corpus)) == corpus


def test_corpus_index_consistency(toy_dir):
    corpus = parse_corpus((toy_dir / "references.jsonl").read_bytes())
    rebuilt = [doc for docs in corpus.index.values() for doc in docs]
    assert sorted(d.doc_id for d in rebuilt) == sorted(d.doc_id for d in corpus)
    for (system, source_id), docs in corpus.index.items():
        assert all(d.system == system and d.source_id == source_id for d in docs)
    assert corpus.by_source_id("art-01") == [
        d for d in corpus.documents if d.source_id == "art-01"
    ]
    assert corpus.by_source_id("nope") == []
    assert corpus.systems() == ["annotator_1", "annotator_2", "annotator_3"]
    assert [d.doc_id for d in corpus.for_system("annotator_2")] == ["a2-01", "a2-02", "a2-03"]


def test_corpus_rejects_duplicate_ids_on_construction():
    doc = EventDocument(doc_id="d", source_id="s", system="m")
    with pytest.raises(CorpusFormatError):
        Corpus([doc, doc])


def test_validate_clean_document(arrest_doc):
    assert validate_corpus(Corpus([arrest_doc])) == []


def test_validate_empty_argument_text():
    doc = EventDocument(
        doc_id="d",
        source_id="s",
        system="m",
        events=(Event(event_type="DIE", arguments=(Argument(role="VICTIM", text="  "),)),),
    )
    diags = validate_corpus(Corpus([doc]))
    assert len(diags) == 1
    assert diags[0].severity == "error"
    assert diags[0].doc_id == "d"


def test_validate_empty_role():
    doc = EventDocument(
        doc_id="d",
        source_id="s",
        system="m",
        events=(Event(event_type="DIE", arguments=(Argument(role="", text="x"),)),),
    )
    diags = validate_corpus(Corpus([doc]))
    assert [d.severity for d in diags] == ["error"]


def test_validate_unknown_event_type_is_warning():
    doc = EventDocument(
        doc_id="d", source_id="s", system="m", events=(Event(event_type="FOO"),)
    )
    diags = validate_corpus(Corpus([doc]), ontology=["ARREST-JAIL", "DIE"])
    assert len(diags) == 1
    assert diags[0].severity == "warning"
    assert "FOO" in diags[0].message


def test_validate_offsets_out_of_bounds():
    doc = EventDocument(
        doc_id="d",
        source_id="s",
        system="m",
        text="short",
        events=(
            Event(
                event_type="DIE",
                arguments=(Argument(role="VICTIM", text="x", start=0, end=99),),
            ),
        ),
    )
    diags = validate_corpus(Corpus([doc]))
    assert len(diags) == 1 and diags[0].severity == "error"


def test_validate_inverted_offsets():
    doc = EventDocument(
        doc_id="d",
        source_id="s",
        system="m",
        events=(
            Event(
                event_type="DIE",
                arguments=(Argument(role="VICTIM", text="x", start=5, end=2),),
            ),
        ),
    )
    assert [d.severity for d in validate_corpus(Corpus([doc]))] == ["error"]


def test_load_ontology(tmp_path):
    path = tmp_path / "types.txt"
    path.write_text("ARREST-JAIL\n\n  DIE  \nATTACK\n", encoding="utf-8")
    assert load_ontology(path) == ["ARREST-JAIL", "DIE", "ATTACK"]
