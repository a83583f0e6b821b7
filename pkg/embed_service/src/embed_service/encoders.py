"""Sentence encoders backing the similarity service.

The default backend is a multilingual sentence-transformers model (suitable
for Norwegian input). For offline or test deployments, EMBED_MODEL=hashing
selects a deterministic character-n-gram hashing encoder that needs no model
download and no network.
"""

from __future__ import annotations

import os
import zlib
from typing import Protocol, Sequence

import numpy as np

DEFAULT_MODEL = "sentence-transformers/paraphrase-multilingual-MiniLM-L12-v2"
HASHING_NAME = "hashing"

_HASH_DIM = 512
_NGRAM = 3


class Encoder(Protocol):
    name: str

    def encode(self, texts: Sequence[str]) -> np.ndarray:
        """Row-per-text embedding matrix, L2-normalized (zero rows allowed)."""
        ...


def _l2_normalize(matrix: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return matrix / norms


class HashingEncoder:
    """Deterministic character-n-gram hashing embeddings.

    Not semantic, but stable across runs and platforms: good enough to
    exercise the wire contract (identity pairs score 1, symmetry is exact).
    """

    name = HASHING_NAME

    def encode(self, texts: Sequence[str]) -> np.ndarray:
        out = np.zeros((len(texts), _HASH_DIM), dtype=np.float64)
        for row, text in enumerate(texts):
            normalized = " ".join(text.casefold().split())
            padded = f" {normalized} "
            for i in range(max(len(padded) - _NGRAM + 1, 0)):
                gram = padded[i : i + _NGRAM]
                bucket = zlib.crc32(gram.encode("utf-8")) % _HASH_DIM
                out[row, bucket] += 1.0
        return _l2_normalize(out)


class SentenceTransformerEncoder:
    """sentence-transformers backend; loads the model once at startup."""

    def __init__(self, model_name: str = DEFAULT_MODEL):
        from sentence_transformers import SentenceTransformer

        self.name = model_name
        self._model = SentenceTransformer(model_name)

    def encode(self, texts: Sequence[str]) -> np.ndarray:
        embeddings = self._model.encode(
            list(texts), convert_to_numpy=True, normalize_embeddings=True
        )
        return np.asarray(embeddings, dtype=np.float64)


def encoder_from_env() -> Encoder:
    """Encoder selected by the EMBED_MODEL environment variable."""
    model_name = os.environ.get("EMBED_MODEL", DEFAULT_MODEL)
    if model_name == HASHING_NAME:
        return HashingEncoder()
    return SentenceTransformerEncoder(model_name)


def pair_scores(encoder: Encoder, pairs: Sequence[tuple[str, str]]) -> list[float]:
    """Cosine similarity per pair, clamped into [0, 1].

    Texts are encoded once each; a degenerate zero embedding scores 1 against
    an identical text and 0 otherwise.
    """
    unique: dict[str, int] = {}
    for a, b in pairs:
        unique.setdefault(a, len(unique))
        unique.setdefault(b, len(unique))
    matrix = encoder.encode(list(unique))
    norms = np.linalg.norm(matrix, axis=1)
    scores = []
    for a, b in pairs:
        ia, ib = unique[a], unique[b]
        if norms[ia] == 0.0 or norms[ib] == 0.0:
            scores.append(1.0 if a == b else 0.0)
            continue
        cosine = float(np.dot(matrix[ia], matrix[ib]))
        scores.append(min(1.0, max(0.0, cosine)))
    return scores
