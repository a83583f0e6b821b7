"""Pluggable text-pair similarity scorers and the match-threshold test.

Three providers are available: ``exact`` (normalized string equality),
``lexical`` (Dice coefficient over whitespace tokens, the offline default),
and ``remote`` (an HTTP service returning embedding-based similarities).
A pair of texts counts as a match when its similarity is strictly greater
than the configured threshold (default 0.7).
"""

from __future__ import annotations

import threading
import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

import requests

DEFAULT_THRESHOLD = 0.7
PROVIDERS = ("exact", "lexical", "remote")


class SimilarityServiceError(RuntimeError):
    """The remote similarity service failed; there is no fallback provider."""


@dataclass(frozen=True)
class SimilarityConfig:
    """Named provider plus the strict match threshold.

    ``remote_url`` is the base URL of the similarity service and is required
    for (and only meaningful to) the remote provider.
    """

    provider: str = "lexical"
    threshold: float = DEFAULT_THRESHOLD
    remote_url: str | None = None
    cache_enabled: bool = True

    def __post_init__(self) -> None:
        if self.provider not in PROVIDERS:
            raise ValueError(f"unknown similarity provider {self.provider!r}")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must lie in [0, 1], got {self.threshold}")
        if self.provider == "remote" and not self.remote_url:
            raise ValueError("remote provider requires remote_url")
        if self.provider != "remote" and self.remote_url:
            raise ValueError("remote_url is only valid with the remote provider")


def normalize_text(s: str) -> str:
    """Unicode NFC, casefold, collapse whitespace runs, strip the ends."""
    return " ".join(unicodedata.normalize("NFC", s).casefold().split())


def exact_similarity(a: str, b: str) -> float:
    """1.0 when the normalized strings are equal, else 0.0."""
    return 1.0 if normalize_text(a) == normalize_text(b) else 0.0


def lexical_similarity(a: str, b: str) -> float:
    """Dice coefficient over whitespace-token multisets of the normalized texts.

    2 * |intersection| / (|A| + |B|); 1.0 when both token lists are empty,
    0.0 when exactly one is.
    """
    tokens_a = normalize_text(a).split()
    tokens_b = normalize_text(b).split()
    if not tokens_a and not tokens_b:
        return 1.0
    if not tokens_a or not tokens_b:
        return 0.0
    inter = sum((Counter(tokens_a) & Counter(tokens_b)).values())
    return 2.0 * inter / (len(tokens_a) + len(tokens_b))


class SimilarityProvider(Protocol):
    name: str

    def scores(self, pairs: Sequence[tuple[str, str]]) -> list[float]:
        """One similarity in [0, 1] per pair, aligned with the input order."""
        ...


class ExactProvider:
    name = "exact"

    def scores(self, pairs: Sequence[tuple[str, str]]) -> list[float]:
        return [exact_similarity(a, b) for a, b in pairs]


class LexicalProvider:
    name = "lexical"

    def scores(self, pairs: Sequence[tuple[str, str]]) -> list[float]:
        return [lexical_similarity(a, b) for a, b in pairs]


def _clamp(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


class RemoteProvider:
    """Client for the HTTP similarity service.

    POSTs {"pairs": [[a, b], ...]} to {url}/similarity and expects
    {"scores": [...]} aligned with the request. Pairs are normalized before
    sending; scored pairs are cached (symmetrically) when caching is on, so
    repeated texts cost one upstream request. Thread-safe.
    """

    name = "remote"

    def __init__(
        self,
        url: str,
        cache_enabled: bool = True,
        batch_size: int = 128,
        timeout: float = 30.0,
        session: requests.Session | None = None,
    ):
        if batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        self.url = url.rstrip("/")
        self.cache_enabled = cache_enabled
        self.batch_size = batch_size
        self.timeout = timeout
        self._session = session or requests.Session()
        self._cache: dict[tuple[str, str], float] = {}
        self._lock = threading.Lock()

    def _cache_get(self, key: tuple[str, str]) -> float | None:
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache.get((key[1], key[0]))
        return hit

    def _fetch(self, batch: list[tuple[str, str]]) -> list[float]:
        endpoint = f"{self.url}/similarity"
        try:
            resp = self._session.post(
                endpoint, json={"pairs": [[a, b] for a, b in batch]}, timeout=self.timeout
            )
        except requests.RequestException as exc:
            raise SimilarityServiceError(
                f"similarity request to {endpoint} failed for a batch of {len(batch)} pairs: {exc}"
            ) from exc
        if resp.status_code != 200:
            raise SimilarityServiceError(
                f"similarity service at {endpoint} returned HTTP {resp.status_code} "
                f"for a batch of {len(batch)} pairs"
            )
        try:
            payload = resp.json()
            scores = payload["scores"]
        except (ValueError, KeyError, TypeError) as exc:
            raise SimilarityServiceError(
                f"malformed response from {endpoint}: expected a JSON object with 'scores'"
            ) from exc
        if not isinstance(scores, list) or len(scores) != len(batch):
            raise SimilarityServiceError(
                f"malformed response from {endpoint}: got {len(scores) if isinstance(scores, list) else 'non-list'} "
                f"scores for {len(batch)} pairs"
            )
        try:
            return [_clamp(float(s)) for s in scores]
        except (TypeError, ValueError) as exc:
            raise SimilarityServiceError(
                f"malformed response from {endpoint}: non-numeric score"
            ) from exc

    def scores(self, pairs: Sequence[tuple[str, str]]) -> list[float]:
        keys = [(normalize_text(a), normalize_text(b)) for a, b in pairs]
        if not self.cache_enabled:
            out: list[float] = []
            for i in range(0, len(keys), self.batch_size):
                out.extend(self._fetch(keys[i : i + self.batch_size]))
            return out
        with self._lock:
            missing: list[tuple[str, str]] = []
            seen: set[tuple[str, str]] = set()
            for key in keys:
                if self._cache_get(key) is None and key not in seen and (key[1], key[0]) not in seen:
                    seen.add(key)
                    missing.append(key)
            for i in range(0, len(missing), self.batch_size):
                batch = missing[i : i + self.batch_size]
                for key, score in zip(batch, self._fetch(batch)):
                    self._cache[key] = score
            result = [self._cache_get(key) for key in keys]
        assert all(s is not None for s in result)
        return result  # type: ignore[return-value]


def get_provider(config: SimilarityConfig) -> SimilarityProvider:
    """Build the provider named by ``config``."""
    if config.provider == "exact":
        return ExactProvider()
    if config.provider == "lexical":
        return LexicalProvider()
    assert config.remote_url is not None
    return RemoteProvider(config.remote_url, cache_enabled=config.cache_enabled)


def remote_similarity(
    pairs: Iterable[tuple[str, str]], config: SimilarityConfig
) -> list[float]:
    """Score text pairs through the configured remote service, in order."""
    if config.provider != "remote":
        raise ValueError("remote_similarity requires a remote provider config")
    provider = get_provider(config)
    return provider.scores(list(pairs))


def is_match(
    a: str, b: str, config: SimilarityConfig, provider: SimilarityProvider | None = None
) -> bool:
    """True when similarity(a, b) is strictly greater than the threshold."""
    if provider is None:
        provider = get_provider(config)
    return provider.scores([(a, b)])[0] > config.threshold
