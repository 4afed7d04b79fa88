"""A known ten-word, five-genre frequency sample with hand-checked sums.

Counts are per genre in DEFAULT_GENRES order; a zero means the word does
not occur in that genre's dictionary at all.
"""

from __future__ import annotations

from lexbase import DEFAULT_GENRES, FrequencyDictionary

REFERENCE_COUNTS = {
    "НОВИЙ": (262, 155, 495, 434, 179),
    "ТОМУ": (206, 444, 296, 379, 171),
    "ОРГАНІЗАЦІЯ": (14, 12, 460, 205, 745),
    "МОЖНА": (262, 419, 353, 370, 32),
    "СЛОВО": (445, 337, 415, 208, 23),
    "ПРОЦЕС": (0, 20, 152, 1111, 136),
    "ПИТАННЯ": (43, 74, 521, 283, 477),
    "УВЕСЬ": (254, 455, 403, 173, 110),
    "МІСЦЕ": (223, 202, 330, 240, 380),
    "УКРАЇНСЬКИЙ": (56, 14, 703, 314, 262),
}

REFERENCE_SUMS = {
    "НОВИЙ": 1525,
    "ТОМУ": 1496,
    "ОРГАНІЗАЦІЯ": 1436,
    "МОЖНА": 1436,
    "СЛОВО": 1428,
    "ПРОЦЕС": 1419,
    "ПИТАННЯ": 1398,
    "УВЕСЬ": 1395,
    "МІСЦЕ": 1375,
    "УКРАЇНСЬКИЙ": 1349,
}


def reference_dictionaries() -> list[FrequencyDictionary]:
    """One dictionary per genre; zero-count words are simply absent."""
    dictionaries = []
    for i, genre in enumerate(DEFAULT_GENRES):
        counts = {word: row[i] for word, row in REFERENCE_COUNTS.items() if row[i] > 0}
        dictionaries.append(FrequencyDictionary(genre, counts, sum(counts.values())))
    return dictionaries
