"""Deterministic TSV, Markdown, and JSON rendering of score reports and stats.

Scores are stored as fractions and rendered here as percentages with one
decimal, rounding half up. Identical inputs render to identical bytes.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping, Sequence

from .matching import MatchCounts
from .scoring import ScoreReport
from .stats import EventStats, TokenStats

FORMATS = ("tsv", "markdown", "json")

SCORE_COLUMNS = (
    "etype_p",
    "etype_r",
    "etype_f1",
    "role_p",
    "role_r",
    "role_f1",
    "arg_p",
    "arg_r",
    "arg_f1",
)

MARKDOWN_HEADERS = (
    "eType-C P",
    "eType-C R",
    "eType-C F1",
    "Role-C P",
    "Role-C R",
    "Role-C F1",
    "Arg-C P",
    "Arg-C R",
    "Arg-C F1",
)


def format_pct(fraction: float) -> str:
    """Render a [0, 1] fraction as a percentage with one decimal, half-up."""
    scaled = round(fraction * 100.0, 6)
    return str(Decimal(str(scaled)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def _report_cells(report: ScoreReport) -> list[str]:
    cells = []
    for scores in (report.etype, report.role, report.arg):
        cells.extend(
            [format_pct(scores.precision), format_pct(scores.recall), format_pct(scores.f1)]
        )
    return cells


def _tsv(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _markdown(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def report_to_json_obj(
    ranked: Sequence[tuple[int, ScoreReport]],
    config: Mapping[str, object],
    per_doc: Sequence[Mapping[str, object]] | None = None,
) -> dict:
    systems = []
    for rank, report in ranked:
        entry: dict = {"system": report.system}
        for name, scores in (("etype", report.etype), ("role", report.role), ("arg", report.arg)):
            entry[name] = {
                "p": float(format_pct(scores.precision)),
                "r": float(format_pct(scores.recall)),
                "f1": float(format_pct(scores.f1)),
            }
        entry["event_overlap"] = float(format_pct(report.event_overlap))
        entry["rank"] = rank
        entry["pairs"] = report.pair_count
        if report.flags:
            entry["flags"] = list(report.flags)
        systems.append(entry)
    obj: dict = {
        "mode": ranked[0][1].mode.value if ranked else None,
        "systems": systems,
        "config": dict(config),
    }
    if per_doc is not None:
        obj["per_doc"] = [dict(row) for row in per_doc]
    return obj


def render_report(
    ranked: Sequence[tuple[int, ScoreReport]],
    fmt: str,
    config: Mapping[str, object],
    per_doc: Sequence[Mapping[str, object]] | None = None,
) -> str:
    """Render ranked score reports in the requested format."""
    if fmt == "json":
        obj = report_to_json_obj(ranked, config, per_doc)
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

    rows = []
    for rank, report in ranked:
        cells = [report.system, *_report_cells(report)]
        if fmt == "markdown":
            cells.append(f"{format_pct(report.event_overlap)} ({rank})")
            cells.append(str(report.pair_count))
        else:
            cells.extend([format_pct(report.event_overlap), str(rank), str(report.pair_count)])
        rows.append(cells)

    if fmt == "markdown":
        header = ("System", *MARKDOWN_HEADERS, "Event-overlap", "Pairs")
        out = _markdown(rows, header)
    elif fmt == "tsv":
        header = ("system", *SCORE_COLUMNS, "event_overlap", "rank", "pairs")
        out = _tsv(rows, header)
    else:
        raise ValueError(f"unknown format {fmt!r}")

    if per_doc:
        per_doc_rows = [
            [
                str(row["system"]),
                str(row["cand_doc_id"]),
                str(row["ref_doc_id"]),
                *(str(row[f"{cat}_{kind}"]) for cat in ("etype", "role", "arg")
                  for kind in ("matched", "cand", "ref")),
            ]
            for row in per_doc
        ]
        per_doc_header = (
            "system",
            "cand_doc_id",
            "ref_doc_id",
            *(f"{cat}_{kind}" for cat in ("etype", "role", "arg")
              for kind in ("matched", "cand", "ref")),
        )
        if fmt == "markdown":
            out += "\n" + _markdown(per_doc_rows, per_doc_header)
        else:
            out += "\n" + _tsv(per_doc_rows, per_doc_header)
    return out


def per_doc_row(
    system: str, cand_doc_id: str, ref_doc_id: str, counts: MatchCounts
) -> dict[str, object]:
    row: dict[str, object] = {
        "system": system,
        "cand_doc_id": cand_doc_id,
        "ref_doc_id": ref_doc_id,
    }
    for cat in ("etype", "role", "arg"):
        c = getattr(counts, cat)
        row[f"{cat}_matched"] = c.matched
        row[f"{cat}_cand"] = c.cand
        row[f"{cat}_ref"] = c.ref
    return row


def render_event_stats(rows: Sequence[tuple[str, EventStats]], fmt: str) -> str:
    """One row per system: event totals and distinct label counts."""
    header = ("system", "n_events", "n_roles", "n_event_types", "n_role_types")
    cells = [
        [system, str(s.n_events), str(s.n_roles), str(s.n_event_types), str(s.n_role_types)]
        for system, s in rows
    ]
    if fmt == "json":
        obj = [
            {
                "system": system,
                "n_events": s.n_events,
                "n_roles": s.n_roles,
                "n_event_types": s.n_event_types,
                "n_role_types": s.n_role_types,
            }
            for system, s in rows
        ]
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        return _markdown(cells, ("System", "# Events", "# Roles", "# Event types", "# Role types"))
    return _tsv(cells, header)


def render_stats(
    event_rows: Sequence[tuple[str, EventStats]],
    token_rows: Sequence[tuple[str, TokenStats]],
    fmt: str,
) -> str:
    """Event-stats table plus, when token rows exist, a token-stats table."""
    if fmt == "json":
        obj = {
            "event_stats": json.loads(render_event_stats(event_rows, "json")),
            "token_stats": json.loads(render_token_stats(token_rows, "json")),
        }
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    out = render_event_stats(event_rows, fmt)
    if token_rows:
        out += "\n" + render_token_stats(token_rows, fmt)
    return out


def render_token_stats(rows: Sequence[tuple[str, TokenStats]], fmt: str) -> str:
    """One row per system: document count, token total, average tokens."""
    def avg(s: TokenStats) -> str:
        return str(Decimal(str(round(s.avg_tokens, 6))).quantize(Decimal("0.1"), ROUND_HALF_UP))

    if fmt == "json":
        obj = [
            {
                "system": system,
                "n_docs": s.n_docs,
                "n_tokens": s.n_tokens,
                "avg_tokens": float(avg(s)),
            }
            for system, s in rows
        ]
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    cells = [[system, str(s.n_docs), str(s.n_tokens), avg(s)] for system, s in rows]
    if fmt == "markdown":
        return _markdown(cells, ("System", "# Docs", "# Tokens", "# Avg."))
    return _tsv(cells, ("system", "n_docs", "n_tokens", "avg_tokens"))
