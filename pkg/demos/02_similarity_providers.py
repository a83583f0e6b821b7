"""Walk through the similarity providers and the strict match threshold.

Argument texts in abstractive summaries rarely repeat the article verbatim,
so plain string equality misses paraphrases. The lexical provider (token
Dice) is the offline middle ground; a remote embedding service plugs in
through the same interface for semantic matching.
"""

from evoverlap import (
    SimilarityConfig,
    exact_similarity,
    is_match,
    lexical_similarity,
    normalize_text,
)

print("Normalization folds case, Unicode form, and whitespace:")
for raw in ("Over  450 people ", "Holmenkollen-tårnet", "«Diamanten»"):
    print(f"  {raw!r:32} -> {normalize_text(raw)!r}")

print("\nExact vs lexical similarity:")
pairs = [
    ("Over 450 people", "over 450 people"),
    ("over 450 people", "450 people"),
    ("en mann i 40-årene", "en mann"),
    ("sentrum av Oslo", "Oslo sentrum"),
    ("tre personer", "to politibetjenter"),
]
for a, b in pairs:
    print(f"  exact={exact_similarity(a, b):.2f}  dice={lexical_similarity(a, b):.2f}"
          f"   {a!r} / {b!r}")

print("\nThe match test is strictly greater-than the threshold (default 0.7):")
for threshold in (0.5, 0.7, 0.8):
    config = SimilarityConfig(provider="lexical", threshold=threshold)
    verdict = is_match("over 450 people", "450 people", config)
    print(f"  dice 0.80 vs threshold {threshold:.1f} -> match={verdict}")

# A similarity of exactly the threshold does not match; the comparison is strict.
config = SimilarityConfig(provider="lexical", threshold=0.8)
assert is_match("over 450 people", "450 people", config) is False
print("\n  dice 0.80 vs threshold 0.8 -> match=False (strict inequality)")
