"""Corpus statistics: event counts, label inventories, and token totals."""

from evoverlap import event_stats, event_type_inventory, load_corpus, token_stats
from evoverlap.rendering import render_event_stats, render_token_stats

references = load_corpus("data/toy/references.jsonl")
articles = load_corpus("data/toy/articles.jsonl")

event_rows = []
token_rows = []
for corpus in (references, articles):
    for system in corpus.systems():
        docs = list(corpus.for_system(system))
        event_rows.append((system, event_stats(docs)))
        token_rows.append((system, token_stats(docs)))

print("Event statistics per producer:\n")
print(render_event_stats(event_rows, "markdown"))
print("Token statistics per producer:\n")
print(render_token_stats(token_rows, "markdown"))

print("Event types in the reference summaries:")
print(" ", ", ".join(event_type_inventory(references)))
print("Event types in the articles:")
print(" ", ", ".join(event_type_inventory(articles)))
