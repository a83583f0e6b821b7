"""Comparison-item extraction and matched-count computation between documents.

Three item pools are drawn from each document's events and scored
independently: event types, (event type, role) pairs, and full
(event type, role, argument text) triples. Labels always compare exactly
(after trimming); argument text compares through the similarity provider.
Trigger words are discarded.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Sequence

from .model import EventDocument
from .similarity import SimilarityConfig, SimilarityProvider, get_provider, normalize_text


class TypeItem(NamedTuple):
    event_type: str


class RoleItem(NamedTuple):
    event_type: str
    role: str


class ArgItem(NamedTuple):
    event_type: str
    role: str
    text: str


@dataclass(frozen=True, slots=True)
class CategoryCounts:
    matched: int = 0
    cand: int = 0
    ref: int = 0

    def __add__(self, other: "CategoryCounts") -> "CategoryCounts":
        return CategoryCounts(
            self.matched + other.matched, self.cand + other.cand, self.ref + other.ref
        )


@dataclass(frozen=True, slots=True)
class MatchCounts:
    """Per-category tallies for one candidate/reference document pair."""

    etype: CategoryCounts = CategoryCounts()
    role: CategoryCounts = CategoryCounts()
    arg: CategoryCounts = CategoryCounts()

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        return MatchCounts(
            self.etype + other.etype, self.role + other.role, self.arg + other.arg
        )


def extract_items(doc: EventDocument) -> tuple[list[TypeItem], list[RoleItem], list[ArgItem]]:
    """Item multisets of a document: one TypeItem per event, one RoleItem and
    one ArgItem per argument. Duplicates are kept; triggers are dropped."""
    types: list[TypeItem] = []
    roles: list[RoleItem] = []
    args: list[ArgItem] = []
    for event in doc.events:
        etype = event.event_type.strip()
        types.append(TypeItem(etype))
        for arg in event.arguments:
            role = arg.role.strip()
            roles.append(RoleItem(etype, role))
            args.append(ArgItem(etype, role, arg.text))
    return types, roles, args


def match_labels(cand: Iterable[Hashable], ref: Iterable[Hashable]) -> int:
    """Multiset intersection size: sum over items of min(candidate count, reference count)."""
    return sum((Counter(cand) & Counter(ref)).values())


def _max_bipartite(adjacency: Sequence[Sequence[int]], n_right: int) -> int:
    """Maximum-cardinality matching via augmenting paths (left vertices to
    ``adjacency`` neighbours on the right). Group sizes here are tiny."""
    match_right = [-1] * n_right

    def try_assign(u: int, seen: list[bool]) -> bool:
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_assign(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    matched = 0
    for u in range(len(adjacency)):
        if try_assign(u, [False] * n_right):
            matched += 1
    return matched


def match_args(
    cand: Sequence[ArgItem],
    ref: Sequence[ArgItem],
    config: SimilarityConfig,
    provider: SimilarityProvider | None = None,
) -> int:
    """Matched argument count under one-to-one pairing.

    Items are grouped by exact (event_type, role); within a group, a candidate
    and a reference item may pair when their texts exceed the similarity
    threshold, and the count is the maximum-cardinality matching summed over
    groups. Cross-group pairs never occur.
    """
    if provider is None:
        provider = get_provider(config)
    cand_groups: dict[tuple[str, str], list[str]] = defaultdict(list)
    ref_groups: dict[tuple[str, str], list[str]] = defaultdict(list)
    for item in cand:
        cand_groups[(item.event_type, item.role)].append(item.text)
    for item in ref:
        ref_groups[(item.event_type, item.role)].append(item.text)

    shared = [key for key in cand_groups if key in ref_groups]
    pairs: list[tuple[str, str]] = []
    for key in shared:
        for a in cand_groups[key]:
            for b in ref_groups[key]:
                pairs.append((a, b))
    sims = provider.scores(pairs)

    matched = 0
    offset = 0
    for key in shared:
        c_texts, r_texts = cand_groups[key], ref_groups[key]
        adjacency: list[list[int]] = []
        for i in range(len(c_texts)):
            row = []
            for j in range(len(r_texts)):
                if sims[offset + i * len(r_texts) + j] > config.threshold:
                    row.append(j)
            adjacency.append(row)
        offset += len(c_texts) * len(r_texts)
        matched += _max_bipartite(adjacency, len(r_texts))
    return matched


def _dedupe(items: Iterable[Hashable]) -> list:
    return list(dict.fromkeys(items))


def match_documents(
    cand: EventDocument,
    ref: EventDocument,
    config: SimilarityConfig,
    provider: SimilarityProvider | None = None,
    dedupe_items: bool = False,
) -> MatchCounts:
    """Match one candidate document against one reference document.

    With ``dedupe_items`` the item pools are reduced to distinct items per
    side first (set semantics); argument items count as duplicates when they
    agree on labels and normalized text.
    """
    c_types, c_roles, c_args = extract_items(cand)
    r_types, r_roles, r_args = extract_items(ref)
    if dedupe_items:
        c_types, r_types = _dedupe(c_types), _dedupe(r_types)
        c_roles, r_roles = _dedupe(c_roles), _dedupe(r_roles)
        c_args = _dedupe(ArgItem(t, r, normalize_text(x)) for t, r, x in c_args)
        r_args = _dedupe(ArgItem(t, r, normalize_text(x)) for t, r, x in r_args)
    return MatchCounts(
        etype=CategoryCounts(match_labels(c_types, r_types), len(c_types), len(r_types)),
        role=CategoryCounts(match_labels(c_roles, r_roles), len(c_roles), len(r_roles)),
        arg=CategoryCounts(
            match_args(c_args, r_args, config, provider), len(c_args), len(r_args)
        ),
    )
