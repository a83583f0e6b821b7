import pytest

from evoverlap import (
    Corpus,
    EventDocument,
    Mode,
    NoPairsError,
    Prf,
    ScoreReport,
    aggregate_corpus,
    compute_overlap,
    f1_score,
    pair_documents,
    prf,
    rank_systems,
    score_macro,
    score_micro,
)
from evoverlap.matching import CategoryCounts, MatchCounts
from evoverlap.rendering import format_pct


def counts(etype, role, arg) -> MatchCounts:
    return MatchCounts(CategoryCounts(*etype), CategoryCounts(*role), CategoryCounts(*arg))


def report(system: str, overlap: float, mode=Mode.SOURCE_OVERLAP) -> ScoreReport:
    one = Prf(overlap, overlap, overlap)
    return ScoreReport(system, one, one, one, overlap, mode, pair_count=1)


def test_f1_matches_reported_first_row():
    # P = 0.907, R = 0.134 harmonically combine to about 0.2335
    value = f1_score(0.907, 0.134)
    assert value == pytest.approx(2 * 0.907 * 0.134 / (0.907 + 0.134))
    assert format_pct(value) == "23.4"


def test_prf_plain_division():
    scores = prf(3, 4, 6)
    assert scores.precision == pytest.approx(0.75)
    assert scores.recall == pytest.approx(0.5)
    assert scores.f1 == pytest.approx(0.6)


def test_prf_both_empty_is_vacuously_perfect():
    assert prf(0, 0, 0) == Prf(1.0, 1.0, 1.0)


def test_prf_empty_candidate_side():
    assert prf(0, 5, 0) == Prf(0.0, 0.0, 0.0)
    assert prf(0, 0, 5) == Prf(0.0, 0.0, 0.0)


def test_prf_rejects_impossible_matched():
    with pytest.raises(ValueError):
        prf(3, 2, 5)


def test_aggregate_pools_counts():
    pooled = aggregate_corpus([counts((1, 2, 2), (1, 2, 2), (1, 2, 2))] * 2)
    assert pooled.etype == CategoryCounts(2, 4, 4)
    scores = prf(pooled.etype.matched, pooled.etype.cand, pooled.etype.ref)
    assert scores.precision == scores.recall == 0.5


def test_aggregate_single_pair_is_identity():
    single = counts((1, 2, 3), (0, 1, 2), (0, 0, 1))
    assert aggregate_corpus([single]) == single


def test_aggregate_empty_errors():
    with pytest.raises(NoPairsError, match="no document pairs"):
        aggregate_corpus([])


def test_compute_overlap_source_mode_reported_rows():
    human = compute_overlap(
        Prf(0.907, 0.0, 0.0), Prf(0.847, 0.0, 0.0), Prf(0.682, 0.0, 0.0),
        Mode.SOURCE_OVERLAP,
    )
    assert format_pct(human) == "81.2"
    best = compute_overlap(
        Prf(0.967, 0.0, 0.0), Prf(0.908, 0.0, 0.0), Prf(0.822, 0.0, 0.0),
        Mode.SOURCE_OVERLAP,
    )
    assert format_pct(best) == "89.9"


def test_compute_overlap_reference_mode_uses_recall():
    value = compute_overlap(
        Prf(0.0, 0.446, 0.0), Prf(0.0, 0.294, 0.0), Prf(0.0, 0.229, 0.0),
        Mode.REFERENCE_OVERLAP,
    )
    assert format_pct(value) == "32.3"


def make_doc(doc_id, source_id, system="m"):
    return EventDocument(doc_id=doc_id, source_id=source_id, system=system)


def test_pair_documents_multi_reference():
    cands = Corpus([make_doc("c1", "art1")])
    refs = Corpus([make_doc(f"r{i}", "art1", f"annotator_{i}") for i in range(1, 4)])
    pairs, diags = pair_documents(cands, refs)
    assert len(pairs) == 3
    assert diags == []
    assert [ref.doc_id for _, ref in pairs] == ["r1", "r2", "r3"]


def test_pair_documents_against_single_article():
    cands = Corpus([make_doc("c1", "art1")])
    refs = Corpus([make_doc("a1", "art1", "article")])
    pairs, _ = pair_documents(cands, refs)
    assert len(pairs) == 1


def test_pair_documents_reports_unmatched_candidates():
    cands = Corpus([make_doc("c1", "art1"), make_doc("c2", "art9")])
    refs = Corpus([make_doc("r1", "art1", "annotator_1")])
    pairs, diags = pair_documents(cands, refs)
    assert len(pairs) == 1
    assert len(diags) == 1
    assert diags[0].doc_id == "c2" and diags[0].severity == "warning"


def test_pair_documents_zero_pairs_errors():
    cands = Corpus([make_doc("c1", "art9")])
    refs = Corpus([make_doc("r1", "art1", "annotator_1")])
    with pytest.raises(NoPairsError):
        pair_documents(cands, refs)


def test_score_micro_pools_before_dividing():
    per_pair = [counts((1, 1, 2), (0, 0, 0), (0, 0, 0)), counts((0, 3, 2), (0, 0, 0), (0, 0, 0))]
    result = score_micro("m", per_pair, Mode.SOURCE_OVERLAP)
    # pooled etype: 1 matched / 4 candidate / 4 reference
    assert result.etype.precision == pytest.approx(0.25)
    assert result.pair_count == 2
    # micro is not the mean of per-pair ratios (that mean would be 0.5)
    assert result.etype.precision != pytest.approx(0.5)
    assert "role_both_empty" in result.flags and "arg_both_empty" in result.flags


def test_score_macro_averages_per_pair():
    per_pair = [counts((1, 1, 2), (0, 0, 0), (0, 0, 0)), counts((0, 3, 2), (0, 0, 0), (0, 0, 0))]
    result = score_macro("m", per_pair, Mode.SOURCE_OVERLAP)
    assert result.etype.precision == pytest.approx(0.5)


def test_report_overlap_is_mean_of_components():
    per_pair = [counts((2, 4, 5), (1, 3, 6), (1, 2, 4))]
    for mode in Mode:
        result = score_micro("m", per_pair, mode)
        expected = compute_overlap(result.etype, result.role, result.arg, mode)
        assert result.event_overlap == pytest.approx(expected)


def test_rank_systems_descending():
    overlaps = [0.899, 0.896, 0.880, 0.848, 0.842, 0.837]
    ranked = rank_systems([report(f"s{i}", v) for i, v in enumerate(overlaps)])
    assert [rank for rank, _ in ranked] == [1, 2, 3, 4, 5, 6]
    assert [r.event_overlap for _, r in ranked] == overlaps


def test_rank_shuffled_input_gets_same_ranks():
    overlaps = {"a": 0.8, "b": 0.9, "c": 0.7}
    ranked = rank_systems([report(s, v) for s, v in overlaps.items()])
    assert [(r.system, rank) for rank, r in ranked] == [("b", 1), ("a", 2), ("c", 3)]


def test_rank_competition_ties():
    ranked = rank_systems(
        [report("a", 0.5), report("b", 0.5), report("c", 0.3), report("d", 0.5)]
    )
    assert [(rank, r.system) for rank, r in ranked] == [(1, "a"), (1, "b"), (1, "d"), (4, "c")]


def test_rank_single_system():
    assert [rank for rank, _ in rank_systems([report("only", 0.1)])] == [1]


def test_rank_rejects_mixed_modes():
    with pytest.raises(ValueError, match="mixed modes"):
        rank_systems([report("a", 0.5), report("b", 0.4, mode=Mode.REFERENCE_OVERLAP)])
