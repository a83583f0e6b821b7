"""Score the bundled toy corpus in both modes.

Two mock systems are compared against three human reference summaries per
article (Recall-averaged mode) and against the article events themselves
(Precision-averaged mode). Run from the repository root:

    python3 demos/01_score_toy_corpus.py
"""

from evoverlap import (
    Mode,
    SimilarityConfig,
    load_corpus,
    match_documents,
    pair_documents,
    rank_systems,
    score_micro,
)
from evoverlap.rendering import render_report

config = SimilarityConfig(provider="lexical", threshold=0.7)
references = load_corpus("data/toy/references.jsonl")
articles = load_corpus("data/toy/articles.jsonl")

candidate_files = [
    "data/toy/candidates_mock_a.jsonl",
    "data/toy/candidates_mock_b.jsonl",
]

for mode, reference_corpus, label in (
    (Mode.REFERENCE_OVERLAP, references, "against human summaries (mean Recall)"),
    (Mode.SOURCE_OVERLAP, articles, "against source articles (mean Precision)"),
):
    reports = []
    for path in candidate_files:
        candidates = load_corpus(path)
        system = candidates.systems()[0]
        pairs, skipped = pair_documents(candidates, reference_corpus)
        counts = [match_documents(cand, ref, config) for cand, ref in pairs]
        reports.append(score_micro(system, counts, mode))
        if skipped:
            print(f"note: {len(skipped)} unmatched candidate(s) in {path}")

    print(f"\n== Event overlap {label} ==")
    ranked = rank_systems(reports)
    print(render_report(ranked, "markdown", {"similarity": config.provider}))
