"""Lexical-base selection from a comparison table, plus text coverage.

A word is eligible when it occurs with nonzero frequency in at least
``min_genres`` genres (functional unrestrictedness); the eligible rows
are then cut either to the first ``top_k`` in table order or at a
minimum row sum. ``min_sum`` is read in the table's own units (raw
counts or per-million, per its mode).

Base file format (UTF-8, LF, byte-exact): a ``# policy:`` header line,
then one word per line in selection order.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path

from .compare import ComparisonTable, dumps_table
from .corpus import GenreStream
from .errors import DataError, ParseError

_POLICY_PREFIX = "# policy:\t"
_POLICY_INT_RE = re.compile(r"[1-9][0-9]*")


@dataclass(frozen=True)
class SelectionPolicy:
    """How to pick a base: unrestrictedness floor plus exactly one cutoff."""

    min_genres: int = 5
    top_k: int | None = None
    min_sum: int | None = None

    def __post_init__(self) -> None:
        if self.min_genres < 1:
            raise DataError(f"min_genres must be >= 1, got {self.min_genres}")
        cutoffs = [c for c in (self.top_k, self.min_sum) if c is not None]
        if len(cutoffs) != 1:
            raise DataError("exactly one of top_k and min_sum must be set")
        if cutoffs[0] < 1:
            raise DataError(f"cutoff must be positive, got {cutoffs[0]}")


@dataclass(frozen=True)
class LexicalBase:
    """The selected word list, in table order, with its selection policy.

    ``table_digest`` records which table the base came from (SHA-256 of
    the table's canonical serialization); it is provenance metadata, not
    part of the file format or of equality.
    """

    words: tuple[str, ...]
    policy: SelectionPolicy
    table_digest: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for word in self.words:
            if not word or any(ch.isspace() for ch in word):
                raise DataError(f"bad base word {word!r}")
            if word in seen:
                raise DataError(f"duplicate base word {word!r}")
            seen.add(word)


def select(table: ComparisonTable, policy: SelectionPolicy) -> LexicalBase:
    """Filter by genre spread, then cut; keeps table order throughout."""
    if policy.min_genres > len(table.genre_order):
        raise DataError(
            f"min_genres={policy.min_genres} exceeds the table's {len(table.genre_order)} genres"
        )
    eligible = [row for row in table.rows if sum(1 for c in row.counts if c > 0) >= policy.min_genres]
    if policy.top_k is not None:
        chosen = eligible[: policy.top_k]
    else:
        chosen = [row for row in eligible if row.total >= policy.min_sum]
    digest = hashlib.sha256(dumps_table(table).encode("utf-8")).hexdigest()
    return LexicalBase(tuple(row.word for row in chosen), policy, digest)


def text_coverage(base: LexicalBase, stream: GenreStream) -> float:
    """Fraction of the stream's occurrences whose lemma is in the base."""
    if not stream.lemmas:
        return 0.0
    words = set(base.words)
    hits = sum(1 for lemma in stream.lemmas if lemma in words)
    return hits / len(stream.lemmas)


def _policy_header(policy: SelectionPolicy) -> str:
    if policy.top_k is not None:
        cutoff = f"top_k={policy.top_k}"
    else:
        cutoff = f"min_sum={policy.min_sum}"
    return f"{_POLICY_PREFIX}min_genres={policy.min_genres}\t{cutoff}"


def dumps_base(base: LexicalBase) -> str:
    lines = [_policy_header(base.policy)]
    lines.extend(base.words)
    return "\n".join(lines) + "\n"


def write_base(base: LexicalBase, path: str | Path) -> None:
    Path(path).write_bytes(dumps_base(base).encode("utf-8"))


def _parse_policy(line: str, source: str | None) -> SelectionPolicy:
    if not line.startswith(_POLICY_PREFIX):
        raise ParseError("expected '# policy:' header", source=source, line=1)
    fields = line[len(_POLICY_PREFIX):].split("\t")
    if len(fields) != 2 or not fields[0].startswith("min_genres="):
        raise ParseError(f"bad policy header {line!r}", source=source, line=1)
    values = {}
    for item in fields:
        key, _, raw = item.partition("=")
        if key not in ("min_genres", "top_k", "min_sum") or not _POLICY_INT_RE.fullmatch(raw):
            raise ParseError(f"bad policy field {item!r}", source=source, line=1)
        values[key] = int(raw)
    try:
        return SelectionPolicy(
            min_genres=values["min_genres"],
            top_k=values.get("top_k"),
            min_sum=values.get("min_sum"),
        )
    except (DataError, KeyError) as exc:
        raise ParseError(f"bad policy header {line!r}", source=source, line=1) from exc


def loads_base(text: str, source: str | None = None) -> LexicalBase:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("expected '# policy:' header", source=source, line=1)
    policy = _parse_policy(lines[0], source)
    words = []
    seen: set[str] = set()
    for lineno, word in enumerate(lines[1:], start=2):
        if not word or any(ch.isspace() for ch in word):
            raise ParseError(f"bad base word {word!r}", source=source, line=lineno)
        if word in seen:
            raise ParseError(f"duplicate base word {word!r}", source=source, line=lineno)
        seen.add(word)
        words.append(word)
    return LexicalBase(tuple(words), policy)


def parse_base(path: str | Path) -> LexicalBase:
    path = Path(path)
    from .corpus import _read_text

    return loads_base(_read_text(path), source=str(path))
