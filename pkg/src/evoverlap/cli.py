"""Command-line entry point: score, stats, validate, and rank subcommands.

Settings resolve in the order: command-line flags, then EVOVERLAP_* environment
variables, then an optional key=value config file (EVOVERLAP_CONFIG or
./evoverlap.cfg), then built-in defaults.

Exit codes: 0 success, 1 parse/validation failure, 2 similarity-service
failure, 3 zero document pairs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .matching import MatchCounts, match_documents
from .model import (
    Corpus,
    CorpusFormatError,
    Diagnostic,
    EventDocument,
    load_corpus,
    load_ontology,
    validate_corpus,
)
from .rendering import FORMATS, per_doc_row, render_report, render_stats
from .scoring import (
    Mode,
    NoPairsError,
    Prf,
    ScoreReport,
    rank_systems,
    score_macro,
    score_micro,
)
from .similarity import (
    DEFAULT_THRESHOLD,
    SimilarityConfig,
    SimilarityServiceError,
    get_provider,
)
from .stats import MissingTextError, event_stats, token_stats

ENV_PREFIX = "EVOVERLAP_"
CONFIG_FILE_SETTINGS = ("similarity", "threshold", "remote_url", "format", "jobs",
                        "macro", "dedupe_items")
_TRUE_WORDS = frozenset({"1", "true", "yes", "on"})

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIMILARITY = 2
EXIT_NO_PAIRS = 3


def _config_file_settings() -> dict[str, str]:
    path = os.environ.get(ENV_PREFIX + "CONFIG")
    if path is None and Path("evoverlap.cfg").is_file():
        path = "evoverlap.cfg"
    if path is None:
        return {}
    settings: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CorpusFormatError(f"config file {path}: expected key = value", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in CONFIG_FILE_SETTINGS:
            raise CorpusFormatError(f"config file {path}: unknown setting {key!r}", lineno)
        settings[key] = value.strip()
    return settings


def _setting(name: str, flag_value, file_settings: dict[str, str]):
    """Flag beats environment beats config file; None when nowhere set."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_PREFIX + name.upper())
    if env is not None:
        return env
    return file_settings.get(name)


def _bool_setting(name: str, flag_value: bool, file_settings: dict[str, str]) -> bool:
    if flag_value:
        return True
    value = _setting(name, None, file_settings)
    return value is not None and str(value).casefold() in _TRUE_WORDS


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one score run."""

    candidates: tuple[str, ...]
    references: str
    mode: Mode
    similarity: SimilarityConfig
    format: str
    jobs: int
    macro: bool
    dedupe_items: bool
    per_doc: bool


def resolve_score_config(ns: argparse.Namespace) -> RunConfig:
    """Merge flags, EVOVERLAP_* environment variables, the optional config
    file, and defaults into one RunConfig (in that precedence order)."""
    file_settings = _config_file_settings()
    threshold = _setting("threshold", ns.threshold, file_settings)
    similarity = _setting("similarity", ns.similarity, file_settings) or "lexical"
    remote_url = _setting("remote_url", ns.remote_url, file_settings)
    fmt = _setting("format", ns.format, file_settings) or "tsv"
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    jobs = _setting("jobs", ns.jobs, file_settings)
    return RunConfig(
        candidates=tuple(ns.candidates),
        references=ns.references,
        mode=Mode.REFERENCE_OVERLAP if ns.mode == "reference" else Mode.SOURCE_OVERLAP,
        similarity=SimilarityConfig(
            provider=similarity,
            threshold=DEFAULT_THRESHOLD if threshold is None else float(threshold),
            remote_url=remote_url if similarity == "remote" else None,
        ),
        format=fmt,
        jobs=int(jobs) if jobs is not None else (os.cpu_count() or 1),
        macro=_bool_setting("macro", ns.macro, file_settings),
        dedupe_items=_bool_setting("dedupe_items", ns.dedupe_items, file_settings),
        per_doc=ns.per_doc,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoverlap",
        description="Event-overlap scoring of summaries against references or source articles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    score = sub.add_parser("score", help="score candidate systems against a reference file")
    score.add_argument("--candidates", nargs="+", required=True, metavar="FILE",
                       help="candidate JSONL event files (one or more)")
    score.add_argument("--references", required=True, metavar="FILE",
                       help="reference JSONL event file (human summaries or article events)")
    score.add_argument("--mode", required=True, choices=("reference", "source"),
                       help="reference: average Recall between summaries; "
                            "source: average Precision against articles")
    score.add_argument("--similarity", choices=("exact", "lexical", "remote"), default=None)
    score.add_argument("--remote-url", default=None, metavar="URL")
    score.add_argument("--threshold", type=float, default=None, metavar="X")
    score.add_argument("--macro", action="store_true",
                       help="average per-pair scores instead of pooling counts")
    score.add_argument("--dedupe-items", action="store_true",
                       help="set semantics: drop duplicate items per document side")
    score.add_argument("--per-doc", action="store_true",
                       help="append per-document-pair counts to the report")
    score.add_argument("--format", choices=FORMATS, default=None)
    score.add_argument("--jobs", type=int, default=None, metavar="N",
                       help="worker threads for pair matching (default: CPU count)")

    stats = sub.add_parser("stats", help="event and token statistics per system")
    stats.add_argument("--events", required=True, metavar="FILE")
    stats.add_argument("--format", choices=FORMATS, default=None)

    validate = sub.add_parser("validate", help="check a JSONL event file and print diagnostics")
    validate.add_argument("--events", required=True, metavar="FILE")
    validate.add_argument("--ontology", default=None, metavar="FILE",
                          help="plain-text file with one allowed event type per line")

    rank = sub.add_parser("rank", help="merge JSON score reports and re-rank the systems")
    rank.add_argument("--reports", nargs="+", required=True, metavar="FILE")
    return parser


def _load_corpus_or_fail(path: str) -> Corpus:
    try:
        return load_corpus(path)
    except FileNotFoundError:
        raise CorpusFormatError(f"{path}: file not found") from None
    except CorpusFormatError as exc:
        raise CorpusFormatError(f"{path}: {exc}") from None


def _print_diagnostics(diags: Sequence[Diagnostic], stream=None) -> None:
    stream = stream or sys.stderr
    for diag in diags:
        doc = diag.doc_id if diag.doc_id is not None else "-"
        print(f"{diag.severity}\t{doc}\t{diag.message}", file=stream)


def _fail_on_error_diagnostics(path: str, corpus: Corpus) -> None:
    errors = [d for d in validate_corpus(corpus) if d.severity == "error"]
    if errors:
        _print_diagnostics(errors)
        raise CorpusFormatError(f"{path}: {len(errors)} validation error(s)")


def _match_all(pairs, config, provider, dedupe: bool, jobs: int) -> list[MatchCounts]:
    if jobs <= 1 or len(pairs) <= 1:
        return [match_documents(c, r, config, provider, dedupe) for c, r in pairs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(
            pool.map(lambda pr: match_documents(pr[0], pr[1], config, provider, dedupe), pairs)
        )


def _run_score(ns: argparse.Namespace) -> int:
    from .scoring import pair_documents

    run = resolve_score_config(ns)
    references = _load_corpus_or_fail(run.references)
    _fail_on_error_diagnostics(run.references, references)

    systems: dict[str, list[EventDocument]] = {}
    for path in run.candidates:
        corpus = _load_corpus_or_fail(path)
        _fail_on_error_diagnostics(path, corpus)
        for doc in corpus:
            systems.setdefault(doc.system, []).append(doc)

    provider = get_provider(run.similarity)
    reports: list[ScoreReport] = []
    per_doc_rows: list[dict[str, object]] = []
    for system, docs in systems.items():
        try:
            pairs, diags = pair_documents(docs, references)
        except NoPairsError as exc:
            raise NoPairsError(f"system {system!r}: {exc}") from None
        _print_diagnostics(diags)
        counts = _match_all(pairs, run.similarity, provider, run.dedupe_items, run.jobs)
        scorer = score_macro if run.macro else score_micro
        reports.append(scorer(system, counts, run.mode))
        if run.per_doc:
            per_doc_rows.extend(
                per_doc_row(system, cand.doc_id, ref.doc_id, c)
                for (cand, ref), c in zip(pairs, counts)
            )

    ranked = rank_systems(reports)
    config_meta: dict[str, object] = {
        "similarity": run.similarity.provider,
        "threshold": run.similarity.threshold,
        "macro": run.macro,
        "dedupe_items": run.dedupe_items,
    }
    if run.similarity.remote_url:
        config_meta["remote_url"] = run.similarity.remote_url
    sys.stdout.write(
        render_report(ranked, run.format, config_meta, per_doc_rows if run.per_doc else None)
    )
    return EXIT_OK


def _run_stats(ns: argparse.Namespace) -> int:
    file_settings = _config_file_settings()
    fmt = _setting("format", ns.format, file_settings) or "tsv"
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    corpus = _load_corpus_or_fail(ns.events)
    systems: dict[str, list[EventDocument]] = {}
    for doc in corpus:
        systems.setdefault(doc.system, []).append(doc)
    event_rows = [(system, event_stats(docs)) for system, docs in systems.items()]
    token_rows = []
    for system, docs in systems.items():
        if all(doc.text is not None for doc in docs):
            token_rows.append((system, token_stats(docs)))
        else:
            print(f"note: system {system!r} has documents without text; "
                  "token stats omitted", file=sys.stderr)
    sys.stdout.write(render_stats(event_rows, token_rows, fmt))
    return EXIT_OK


def _run_validate(ns: argparse.Namespace) -> int:
    corpus = _load_corpus_or_fail(ns.events)
    ontology = load_ontology(ns.ontology) if ns.ontology else None
    diags = validate_corpus(corpus, ontology)
    _print_diagnostics(diags, stream=sys.stdout)
    n_errors = sum(1 for d in diags if d.severity == "error")
    n_warnings = len(diags) - n_errors
    if diags:
        print(f"{len(diags)} diagnostic(s): {n_errors} error(s), {n_warnings} warning(s)",
              file=sys.stderr)
    else:
        print(f"{ns.events}: clean ({len(corpus)} documents)", file=sys.stderr)
    return EXIT_INPUT if n_errors else EXIT_OK


def _report_from_entry(entry: dict, mode: Mode) -> ScoreReport:
    def scores(obj: dict) -> Prf:
        return Prf(obj["p"] / 100.0, obj["r"] / 100.0, obj["f1"] / 100.0)

    return ScoreReport(
        system=entry["system"],
        etype=scores(entry["etype"]),
        role=scores(entry["role"]),
        arg=scores(entry["arg"]),
        event_overlap=entry["event_overlap"] / 100.0,
        mode=mode,
        pair_count=entry["pairs"],
        flags=tuple(entry.get("flags", ())),
    )


def _run_rank(ns: argparse.Namespace) -> int:
    reports: list[ScoreReport] = []
    for path in ns.reports:
        try:
            obj = json.loads(Path(path).read_text(encoding="utf-8"))
            mode = Mode(obj["mode"])
            for entry in obj["systems"]:
                reports.append(_report_from_entry(entry, mode))
        except FileNotFoundError:
            raise CorpusFormatError(f"{path}: file not found") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise CorpusFormatError(f"{path}: not a valid score report: {exc}") from None
    ranked = rank_systems(reports)
    sys.stdout.write(render_report(ranked, "tsv", {}))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    handlers = {
        "score": _run_score,
        "stats": _run_stats,
        "validate": _run_validate,
        "rank": _run_rank,
    }
    try:
        return handlers[ns.command](ns)
    except SimilarityServiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIMILARITY
    except NoPairsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_PAIRS
    except (CorpusFormatError, MissingTextError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
