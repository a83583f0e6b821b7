"""Per-category P/R/F1, corpus aggregation, the aggregate overlap score, ranking.

Counts are pooled over all candidate/reference document pairs (micro
averaging) before P/R/F1 are computed; a macro path averaging per-pair scores
is available for sensitivity checks. The aggregate score is the mean of the
three per-category Recalls when comparing summaries against reference
summaries, and the mean of the three Precisions when comparing summaries
against their source articles.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .matching import MatchCounts
from .model import Corpus, Diagnostic, EventDocument

CATEGORIES = ("etype", "role", "arg")


class NoPairsError(RuntimeError):
    """No candidate/reference document pairs could be formed."""


class Mode(Enum):
    REFERENCE_OVERLAP = "reference_overlap"
    SOURCE_OVERLAP = "source_overlap"


@dataclass(frozen=True, slots=True)
class Prf:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True, slots=True)
class ScoreReport:
    """Scores for one system under one mode, over ``pair_count`` document pairs."""

    system: str
    etype: Prf
    role: Prf
    arg: Prf
    event_overlap: float
    mode: Mode
    pair_count: int
    flags: tuple[str, ...] = ()


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def prf(matched: int, cand_total: int, ref_total: int) -> Prf:
    """P/R/F1 from matched count and per-side totals.

    An empty candidate side scores P = 0 against a non-empty reference; when
    both sides are empty the pair is vacuously perfect (P = R = F1 = 1).
    """
    if matched > min(cand_total, ref_total):
        raise ValueError(
            f"matched ({matched}) exceeds min(cand_total={cand_total}, ref_total={ref_total})"
        )
    if cand_total == 0 and ref_total == 0:
        return Prf(1.0, 1.0, 1.0)
    p = matched / cand_total if cand_total else 0.0
    r = matched / ref_total if ref_total else 0.0
    return Prf(p, r, f1_score(p, r))


def aggregate_corpus(pair_counts: Sequence[MatchCounts]) -> MatchCounts:
    """Component-wise sum of per-pair counts (micro pooling)."""
    if not pair_counts:
        raise NoPairsError("no document pairs")
    total = MatchCounts()
    for counts in pair_counts:
        total = total + counts
    return total


def compute_overlap(etype: Prf, role: Prf, arg: Prf, mode: Mode) -> float:
    """Aggregate score: mean of the three Recalls (reference mode) or the
    three Precisions (source mode)."""
    if mode is Mode.REFERENCE_OVERLAP:
        return (etype.recall + role.recall + arg.recall) / 3.0
    return (etype.precision + role.precision + arg.precision) / 3.0


def _both_empty_flags(pooled: MatchCounts) -> tuple[str, ...]:
    flags = []
    for name in CATEGORIES:
        counts = getattr(pooled, name)
        if counts.cand == 0 and counts.ref == 0:
            flags.append(f"{name}_both_empty")
    return tuple(flags)


def score_micro(
    system: str, pair_counts: Sequence[MatchCounts], mode: Mode
) -> ScoreReport:
    """Pool counts over pairs, then score (the default aggregation)."""
    pooled = aggregate_corpus(pair_counts)
    scores = {
        name: prf(c.matched, c.cand, c.ref)
        for name, c in (("etype", pooled.etype), ("role", pooled.role), ("arg", pooled.arg))
    }
    return ScoreReport(
        system=system,
        etype=scores["etype"],
        role=scores["role"],
        arg=scores["arg"],
        event_overlap=compute_overlap(scores["etype"], scores["role"], scores["arg"], mode),
        mode=mode,
        pair_count=len(pair_counts),
        flags=_both_empty_flags(pooled),
    )


def score_macro(
    system: str, pair_counts: Sequence[MatchCounts], mode: Mode
) -> ScoreReport:
    """Score each pair separately, then average P, R, and F1 per category."""
    if not pair_counts:
        raise NoPairsError("no document pairs")
    flags: set[str] = set()
    means: dict[str, Prf] = {}
    for name in CATEGORIES:
        per_pair = []
        for counts in pair_counts:
            c = getattr(counts, name)
            if c.cand == 0 and c.ref == 0:
                flags.add(f"{name}_both_empty")
            per_pair.append(prf(c.matched, c.cand, c.ref))
        n = len(per_pair)
        means[name] = Prf(
            sum(s.precision for s in per_pair) / n,
            sum(s.recall for s in per_pair) / n,
            sum(s.f1 for s in per_pair) / n,
        )
    return ScoreReport(
        system=system,
        etype=means["etype"],
        role=means["role"],
        arg=means["arg"],
        event_overlap=compute_overlap(means["etype"], means["role"], means["arg"], mode),
        mode=mode,
        pair_count=len(pair_counts),
        flags=tuple(sorted(flags)),
    )


def pair_documents(
    candidates: Corpus | Iterable[EventDocument], references: Corpus
) -> tuple[list[tuple[EventDocument, EventDocument]], list[Diagnostic]]:
    """Pair every candidate with every reference document sharing its source_id.

    Candidates without any matching reference are excluded and reported as
    diagnostics. Raises NoPairsError when nothing pairs at all.
    """
    pairs: list[tuple[EventDocument, EventDocument]] = []
    diags: list[Diagnostic] = []
    n_candidates = 0
    for cand in candidates:
        n_candidates += 1
        refs = references.by_source_id(cand.source_id)
        if not refs:
            diags.append(
                Diagnostic(
                    "warning",
                    cand.doc_id,
                    f"no reference document for source_id {cand.source_id!r}; excluded",
                )
            )
            continue
        pairs.extend((cand, ref) for ref in refs)
    if not pairs:
        raise NoPairsError(
            f"no document pairs: none of the {n_candidates} candidate documents "
            "share a source_id with the references"
        )
    return pairs, diags


def rank_systems(reports: Sequence[ScoreReport]) -> list[tuple[int, ScoreReport]]:
    """Order reports by descending aggregate score with competition ranking.

    Ties share the smaller rank and the following rank is skipped (1, 2, 2, 4);
    tied reports keep their input order. All reports must share one mode.
    """
    if not reports:
        return []
    modes = {report.mode for report in reports}
    if len(modes) > 1:
        raise ValueError(f"cannot rank reports with mixed modes: {sorted(m.value for m in modes)}")
    ordered = sorted(reports, key=lambda r: -r.event_overlap)
    ranked: list[tuple[int, ScoreReport]] = []
    for position, report in enumerate(ordered):
        if position > 0 and report.event_overlap == ordered[position - 1].event_overlap:
            rank = ranked[-1][0]
        else:
            rank = position + 1
        ranked.append((rank, report))
    return ranked
