"""Text-pair similarity microservice with pluggable sentence encoders."""

from .app import create_app
from .encoders import (
    DEFAULT_MODEL,
    Encoder,
    HashingEncoder,
    SentenceTransformerEncoder,
    encoder_from_env,
    pair_scores,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MODEL",
    "Encoder",
    "HashingEncoder",
    "SentenceTransformerEncoder",
    "create_app",
    "encoder_from_env",
    "pair_scores",
]
