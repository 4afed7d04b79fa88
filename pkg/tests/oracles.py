"""Naive reference implementations and random-instance generators.

Everything here recomputes results from scratch (plain dict loops,
Fraction arithmetic, re-sorting) without reusing the library's ranking,
prefix-sum, or merge machinery, so the main implementations can be
checked against an independent path.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lexbase import FrequencyDictionary, SelectionPolicy, merge
from lexbase.compare import Row


def naive_tokenize(text, config):
    """Character-by-character scanner; returns tokens and their spans."""
    marks = config.intra_word_marks
    tokens, spans = [], []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isalpha() or ch in marks:
            j = i
            while j < n and (text[j].isalpha() or text[j] in marks):
                j += 1
            a, b = i, j - 1
            while a <= b and not text[a].isalpha():
                a += 1
            while b >= a and not text[b].isalpha():
                b -= 1
            if a <= b:
                tokens.append(text[a : b + 1])
                spans.append((a, b + 1))
            i = j
        elif config.keep_numerals and ch.isdecimal():
            j = i
            while j < n and text[j].isdecimal():
                j += 1
            tokens.append(text[i:j])
            spans.append((i, j))
            i = j
        else:
            i += 1
    return tokens, spans


def naive_count(tokens):
    counts = {}
    for token in tokens:
        counts[token] = counts.get(token, 0) + 1
    return counts


def naive_merge(dictionaries, mode="auto"):
    """Rows of the merged table, re-sorted from scratch; returns (rows, mode)."""
    if mode == "auto":
        mode = "raw" if len({d.total for d in dictionaries}) == 1 else "per-million"
    words = set()
    for d in dictionaries:
        words |= set(d.counts)
    rows = []
    for word in words:
        cells = []
        for d in dictionaries:
            count = d.counts.get(word, 0)
            if mode == "per-million" and count:
                count = int(round(Fraction(count * 1_000_000, d.total)))
            cells.append(count)
        rows.append(Row(word, tuple(cells), sum(cells)))
    rows.sort(key=lambda r: (-r.total, r.word))
    return rows, mode


def naive_coverage_curve(dictionary, ks):
    ordered = sorted(dictionary.counts.items(), key=lambda e: (-e[1], e[0]))
    out = []
    for k in ks:
        if dictionary.total == 0:
            out.append(0.0)
        else:
            out.append(sum(c for _, c in ordered[:k]) / dictionary.total)
    return out


def naive_select(table, policy):
    rows = sorted(table.rows, key=lambda r: (-r.total, r.word))  # re-derive the order
    eligible = [r for r in rows if len([c for c in r.counts if c > 0]) >= policy.min_genres]
    if policy.top_k is not None:
        chosen = eligible[: policy.top_k]
    else:
        chosen = [r for r in eligible if r.total >= policy.min_sum]
    return [r.word for r in chosen]


def naive_text_coverage(words, lemmas):
    if not lemmas:
        return 0.0
    word_list = list(words)
    hits = 0
    for lemma in lemmas:
        if lemma in word_list:
            hits += 1
    return hits / len(lemmas)


ALPHABET = tuple(f"w{i:02d}" for i in range(20))


def random_tokens(rng: random.Random, max_tokens=1000, alphabet=ALPHABET):
    vocab = alphabet[: rng.randint(1, len(alphabet))]
    return [rng.choice(vocab) for _ in range(rng.randrange(max_tokens + 1))]


def random_corpus(rng: random.Random, max_genres=6, max_tokens=1000):
    genres = [f"genre{i}" for i in range(rng.randint(2, max_genres))]
    corpus = {g: random_tokens(rng, max_tokens) for g in genres}
    if rng.random() < 0.5:
        # equalize totals so the raw merge path gets exercised too
        floor = min(len(tokens) for tokens in corpus.values())
        corpus = {g: tokens[:floor] for g, tokens in corpus.items()}
    return corpus


def random_dictionary(rng: random.Random, genre="genre0", max_count=50):
    words = rng.sample(ALPHABET, rng.randint(0, len(ALPHABET)))
    counts = {w: rng.randint(1, max_count) for w in words}
    return FrequencyDictionary(genre, counts, sum(counts.values()))


def random_table(rng: random.Random, max_genres=6):
    dictionaries = [random_dictionary(rng, genre=f"genre{i}") for i in range(rng.randint(1, max_genres))]
    mode = rng.choice(["auto", "raw", "per-million"])
    return merge(dictionaries, mode=mode)


def random_policy(rng: random.Random, max_genres=6):
    min_genres = rng.randint(1, max_genres)
    if rng.random() < 0.5:
        return SelectionPolicy(min_genres=min_genres, top_k=rng.randint(1, 25))
    return SelectionPolicy(min_genres=min_genres, min_sum=rng.randint(1, 120))


def random_base_words(rng: random.Random):
    return tuple(rng.sample(ALPHABET, rng.randint(0, len(ALPHABET))))
