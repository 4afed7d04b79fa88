"""Per-genre frequency dictionaries: building, ranking, coverage, TSV io.

File format (UTF-8, LF line endings, byte-exact):

    # genre:<TAB>label
    # total:<TAB>integer
    lemma<TAB>count        one line per lemma, rank order

Counts are absolute; relative frequencies are always derived so files
never accumulate float drift.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import GenreStream, _check_genre_label
from .errors import DataError, ParseError

_GENRE_PREFIX = "# genre:\t"
_TOTAL_PREFIX = "# total:\t"
_COUNT_RE = re.compile(r"[1-9][0-9]*")
_INT_RE = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True)
class FrequencyDictionary:
    """Lemma -> absolute count for one genre; total is the corpus size."""

    genre: str
    counts: dict[str, int]
    total: int

    def __post_init__(self) -> None:
        _check_genre_label(self.genre)
        running = 0
        for lemma, count in self.counts.items():
            if not lemma or "\t" in lemma or "\n" in lemma or "\r" in lemma:
                raise DataError(f"bad lemma {lemma!r}")
            if count < 1:
                raise DataError(f"count for {lemma!r} must be >= 1, got {count}")
            running += count
        if running != self.total:
            raise DataError(f"total {self.total} does not match the sum of counts {running}")


def build_dictionary(stream: GenreStream) -> FrequencyDictionary:
    """Count lemma occurrences in a stream."""
    counts = Counter(stream.lemmas)
    return FrequencyDictionary(stream.genre, dict(counts), len(stream.lemmas))


def rank_entries(dictionary: FrequencyDictionary) -> list[tuple[str, int]]:
    """Entries by count descending; ties break by code point order."""
    return sorted(dictionary.counts.items(), key=lambda e: (-e[1], e[0]))


def coverage_curve(dictionary: FrequencyDictionary, ks: list[int]) -> list[float]:
    """Fraction of all occurrences covered by the top-k lemmas, per k.

    ``ks`` must be strictly increasing positive integers; a k beyond the
    vocabulary yields 1.0, and an empty dictionary yields 0.0 everywhere.
    """
    previous = 0
    for k in ks:
        if k <= previous:
            raise DataError(f"ks must be strictly increasing positive integers, got {ks}")
        previous = k
    ranked = rank_entries(dictionary)
    prefix = [0]
    for _, count in ranked:
        prefix.append(prefix[-1] + count)
    total = dictionary.total
    return [prefix[min(k, len(ranked))] / total if total else 0.0 for k in ks]


def dumps_dictionary(dictionary: FrequencyDictionary) -> str:
    lines = [f"{_GENRE_PREFIX}{dictionary.genre}", f"{_TOTAL_PREFIX}{dictionary.total}"]
    lines.extend(f"{lemma}\t{count}" for lemma, count in rank_entries(dictionary))
    return "\n".join(lines) + "\n"


def write_dictionary(dictionary: FrequencyDictionary, path: str | Path) -> None:
    Path(path).write_bytes(dumps_dictionary(dictionary).encode("utf-8"))


def loads_dictionary(text: str, source: str | None = None) -> FrequencyDictionary:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise ParseError("expected '# genre:' and '# total:' header lines", source=source, line=1)
    if not lines[0].startswith(_GENRE_PREFIX):
        raise ParseError("expected '# genre:<TAB>label' header", source=source, line=1)
    genre = lines[0][len(_GENRE_PREFIX):]
    if not genre or "\t" in genre:
        raise ParseError(f"bad genre label {genre!r}", source=source, line=1)
    if not lines[1].startswith(_TOTAL_PREFIX):
        raise ParseError("expected '# total:<TAB>integer' header", source=source, line=2)
    raw_total = lines[1][len(_TOTAL_PREFIX):]
    if not _INT_RE.fullmatch(raw_total):
        raise ParseError(f"bad total {raw_total!r}", source=source, line=2)
    total = int(raw_total)

    counts: dict[str, int] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected 'lemma<TAB>count'", source=source, line=lineno)
        lemma, raw_count = parts
        if not _COUNT_RE.fullmatch(raw_count):
            raise ParseError(f"count must be a positive integer, got {raw_count!r}", source=source, line=lineno)
        if lemma in counts:
            raise ParseError(f"duplicate lemma {lemma!r}", source=source, line=lineno)
        counts[lemma] = int(raw_count)
    if sum(counts.values()) != total:
        raise ParseError(
            f"declared total {total} does not match the sum of counts {sum(counts.values())}",
            source=source,
            line=2,
        )
    try:
        return FrequencyDictionary(genre, counts, total)
    except DataError as exc:
        raise ParseError(str(exc), source=source) from exc


def parse_dictionary(path: str | Path) -> FrequencyDictionary:
    path = Path(path)
    from .corpus import _read_text

    return loads_dictionary(_read_text(path), source=str(path))
