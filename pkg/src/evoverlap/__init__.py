"""Event-overlap scoring for abstractive summarization evaluation.

Matches structured events (type, argument role, argument text) between
candidate summaries, reference summaries, and source articles, and reports
per-category Precision/Recall/F1 plus the mode-dependent aggregate
event-overlap score and system rankings.
"""

from .matching import (
    ArgItem,
    CategoryCounts,
    MatchCounts,
    RoleItem,
    TypeItem,
    extract_items,
    match_args,
    match_documents,
    match_labels,
)
from .model import (
    Argument,
    Corpus,
    CorpusFormatError,
    Diagnostic,
    Event,
    EventDocument,
    Trigger,
    load_corpus,
    load_ontology,
    parse_corpus,
    serialize_corpus,
    validate_corpus,
)
from .scoring import (
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
from .similarity import (
    DEFAULT_THRESHOLD,
    SimilarityConfig,
    SimilarityServiceError,
    exact_similarity,
    get_provider,
    is_match,
    lexical_similarity,
    normalize_text,
    remote_similarity,
)
from .stats import EventStats, MissingTextError, TokenStats, event_stats, event_type_inventory, token_stats

__version__ = "0.1.0"

__all__ = [
    "ArgItem",
    "Argument",
    "CategoryCounts",
    "Corpus",
    "CorpusFormatError",
    "DEFAULT_THRESHOLD",
    "Diagnostic",
    "Event",
    "EventDocument",
    "EventStats",
    "MatchCounts",
    "MissingTextError",
    "Mode",
    "NoPairsError",
    "Prf",
    "RoleItem",
    "ScoreReport",
    "SimilarityConfig",
    "SimilarityServiceError",
    "TokenStats",
    "Trigger",
    "TypeItem",
    "aggregate_corpus",
    "compute_overlap",
    "event_stats",
    "event_type_inventory",
    "exact_similarity",
    "extract_items",
    "f1_score",
    "get_provider",
    "is_match",
    "lexical_similarity",
    "load_corpus",
    "load_ontology",
    "match_args",
    "match_documents",
    "match_labels",
    "normalize_text",
    "pair_documents",
    "parse_corpus",
    "prf",
    "rank_systems",
    "remote_similarity",
    "score_macro",
    "score_micro",
    "serialize_corpus",
    "token_stats",
    "validate_corpus",
]
