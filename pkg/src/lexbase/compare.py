"""Cross-genre comparison tables: merging dictionaries and TSV io.

A table holds one row per word with a count column per genre plus the
row sum, ordered by sum descending, then word ascending by code point.

When the source dictionaries have equal totals the cells are the raw
counts. When totals differ, raw sums would favour the larger corpora,
so each cell is rescaled to occurrences per million (rounded half to
even on the exact rational) before summing; the mode used is recorded
in the file header. ``merge`` picks the mode automatically but accepts
an explicit override.

File format (UTF-8, LF, byte-exact):

    # mode:<TAB>raw
    word<TAB>genre1<TAB>...<TAB>genreN<TAB>sum
    word<TAB>c1<TAB>...<TAB>cN<TAB>sum

The writer emits explicit zeros by default; the parser also accepts an
empty cell as 0, matching tables that print blanks for absent words
(``blank_zeros`` reproduces that layout).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .errors import DataError, ParseError
from .freqdict import FrequencyDictionary

MODES = ("raw", "per-million")
PER_MILLION = 1_000_000

_MODE_PREFIX = "# mode:\t"
_CELL_RE = re.compile(r"0|[1-9][0-9]*")


class Row(NamedTuple):
    word: str
    counts: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class ComparisonTable:
    genre_order: tuple[str, ...]
    rows: tuple[Row, ...]
    mode: str = "raw"

    def __post_init__(self) -> None:
        if not self.genre_order:
            raise DataError("a comparison table needs at least one genre")
        if len(set(self.genre_order)) != len(self.genre_order):
            raise DataError(f"duplicate genre labels: {self.genre_order}")
        if self.mode not in MODES:
            raise DataError(f"unknown table mode {self.mode!r}")
        width = len(self.genre_order)
        seen: set[str] = set()
        for row in self.rows:
            if not row.word or "\t" in row.word or "\n" in row.word or "\r" in row.word:
                raise DataError(f"bad word {row.word!r}")
            if row.word in seen:
                raise DataError(f"duplicate word {row.word!r}")
            seen.add(row.word)
            if len(row.counts) != width:
                raise DataError(f"row {row.word!r} has {len(row.counts)} cells, expected {width}")
            if any(c < 0 for c in row.counts):
                raise DataError(f"negative count in row {row.word!r}")
            if row.total != sum(row.counts):
                raise DataError(f"row {row.word!r} sum {row.total} does not match its cells")
        ordered = tuple(sorted(self.rows, key=lambda r: (-r.total, r.word)))
        object.__setattr__(self, "rows", ordered)

    def column_totals(self) -> tuple[int, ...]:
        return tuple(sum(row.counts[i] for row in self.rows) for i in range(len(self.genre_order)))


def _per_million(count: int, total: int) -> int:
    # Round half to even on the exact rational count * 1e6 / total.
    q, r = divmod(count * PER_MILLION, total)
    if 2 * r > total or (2 * r == total and q % 2 == 1):
        q += 1
    return q


def merge(dictionaries: list[FrequencyDictionary], mode: str = "auto") -> ComparisonTable:
    """Merge dictionaries into one table over the union of their words."""
    if not dictionaries:
        raise DataError("nothing to merge: empty dictionary list")
    genres = tuple(d.genre for d in dictionaries)
    if len(set(genres)) != len(genres):
        raise DataError(f"duplicate genre labels: {genres}")
    if mode == "auto":
        mode = "raw" if len({d.total for d in dictionaries}) == 1 else "per-million"
    elif mode not in MODES:
        raise DataError(f"unknown merge mode {mode!r}")

    words: set[str] = set()
    for d in dictionaries:
        words.update(d.counts)
    rows = []
    for word in words:
        if mode == "raw":
            cells = tuple(d.counts.get(word, 0) for d in dictionaries)
        else:
            cells = tuple(
                _per_million(d.counts[word], d.total) if word in d.counts else 0 for d in dictionaries
            )
        rows.append(Row(word, cells, sum(cells)))
    return ComparisonTable(genres, tuple(rows), mode)


def dumps_table(table: ComparisonTable, blank_zeros: bool = False) -> str:
    lines = [f"{_MODE_PREFIX}{table.mode}", "word\t" + "\t".join(table.genre_order) + "\tsum"]
    for row in table.rows:
        if blank_zeros:
            cells = "\t".join(str(c) if c else "" for c in row.counts)
        else:
            cells = "\t".join(str(c) for c in row.counts)
        lines.append(f"{row.word}\t{cells}\t{row.total}")
    return "\n".join(lines) + "\n"


def write_table(table: ComparisonTable, path: str | Path, blank_zeros: bool = False) -> None:
    Path(path).write_bytes(dumps_table(table, blank_zeros=blank_zeros).encode("utf-8"))


def loads_table(text: str, source: str | None = None) -> ComparisonTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise ParseError("expected mode and column header lines", source=source, line=1)
    if not lines[0].startswith(_MODE_PREFIX):
        raise ParseError("expected '# mode:<TAB>raw|per-million' header", source=source, line=1)
    mode = lines[0][len(_MODE_PREFIX):]
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}", source=source, line=1)
    header = lines[1].split("\t")
    if len(header) < 3 or header[0] != "word" or header[-1] != "sum":
        raise ParseError("expected 'word<TAB>genres...<TAB>sum' column header", source=source, line=2)
    genres = tuple(header[1:-1])
    if any(not g for g in genres) or len(set(genres)) != len(genres):
        raise ParseError(f"bad genre columns {genres}", source=source, line=2)

    width = len(genres)
    rows = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split("\t")
        if len(parts) != width + 2:
            raise ParseError(f"ragged row: {len(parts)} cells, expected {width + 2}", source=source, line=lineno)
        word = parts[0]
        if not word:
            raise ParseError("empty word cell", source=source, line=lineno)
        if word in seen:
            raise ParseError(f"duplicate word {word!r}", source=source, line=lineno)
        seen.add(word)
        cells = []
        for raw in parts[1:-1]:
            if raw == "":
                cells.append(0)  # blank cell means absent from that genre
            elif _CELL_RE.fullmatch(raw):
                cells.append(int(raw))
            else:
                raise ParseError(f"bad count {raw!r}", source=source, line=lineno)
        raw_sum = parts[-1]
        if not _CELL_RE.fullmatch(raw_sum):
            raise ParseError(f"bad sum {raw_sum!r}", source=source, line=lineno)
        total = int(raw_sum)
        if total != sum(cells):
            raise ParseError(f"row sum {total} does not match its cells ({sum(cells)})", source=source, line=lineno)
        rows.append(Row(word, tuple(cells), total))
    try:
        return ComparisonTable(genres, tuple(rows), mode)
    except DataError as exc:
        raise ParseError(str(exc), source=source) from exc


def parse_table(path: str | Path) -> ComparisonTable:
    path = Path(path)
    from .corpus import _read_text

    return loads_table(_read_text(path), source=str(path))
