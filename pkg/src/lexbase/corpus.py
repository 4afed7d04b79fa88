"""Corpus ingestion: manifests, tokenization, lemma normalization, genre caps.

Documents are plain UTF-8 text files listed in a manifest (one
``genre<TAB>path`` line per document, ``#`` comments and blank lines
ignored; relative paths resolve against the manifest's directory).
A token is a maximal run of letters and configured intra-word marks that
starts and ends with a letter; runs of decimal digits count as tokens
only when numerals are kept. Each genre's lemma stream is concatenated
in manifest order and cut at a fixed occurrence cap so that per-genre
corpora stay comparable.
"""

from __future__ import annotations

import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataError, ParseError

DEFAULT_CAP = 300_000

# Canonical functional genres; labels are otherwise open-ended strings.
DEFAULT_GENRES = ("belles-lettres", "colloquial", "journalistic", "scientific", "official")

# Straight apostrophe, right single quotation mark, hyphen-minus.
DEFAULT_INTRA_WORD_MARKS = frozenset({"'", "’", "-"})

_DECLARED_PREFIX = "# declared:\t"


@dataclass(frozen=True)
class TokenizationConfig:
    """One tokenizer setup per run; instances are immutable.

    ``intra_word_marks`` may join letters inside a token ("м'ясо-молочний")
    but never start or end one. Decimal digits are dropped unless
    ``keep_numerals`` is set. ``case_fold`` lowercases tokens before the
    lemma lookup so lemma tables are case-insensitive.
    """

    intra_word_marks: frozenset[str] = DEFAULT_INTRA_WORD_MARKS
    case_fold: bool = True
    keep_numerals: bool = False

    def __post_init__(self) -> None:
        marks = frozenset(self.intra_word_marks)
        for mark in marks:
            if len(mark) != 1:
                raise ValueError(f"intra-word mark must be a single character: {mark!r}")
            if mark.isspace() or mark.isalpha() or mark.isdecimal():
                raise ValueError(f"intra-word mark may not be a letter, digit, or whitespace: {mark!r}")
        object.__setattr__(self, "intra_word_marks", marks)


@dataclass(frozen=True)
class Document:
    """One text with a genre label; the unit of ingestion."""

    genre: str
    source_id: str
    text: str

    def __post_init__(self) -> None:
        _check_genre_label(self.genre)
        if not self.source_id:
            raise DataError("document source_id must be nonempty")


@dataclass(frozen=True)
class ManifestEntry:
    """A genre-labelled reference to a document file."""

    genre: str
    path: Path

    @property
    def source_id(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class LemmaTable:
    """Surface form -> lemma; unlisted forms fall back to themselves."""

    entries: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for surface, lemma in self.entries.items():
            if not surface or not lemma:
                raise DataError("lemma table entries must map nonempty surface to nonempty lemma")
            if any(ch.isspace() for ch in surface) or any(ch.isspace() for ch in lemma):
                raise DataError(f"whitespace inside lemma table entry: {surface!r} -> {lemma!r}")
        # Normalization must be idempotent: a string used as a lemma may not
        # itself be mapped onto some other lemma.
        for lemma in set(self.entries.values()):
            target = self.entries.get(lemma, lemma)
            if target != lemma:
                raise DataError(f"lemma {lemma!r} has its own distinct entry ({lemma!r} -> {target!r})")

    def lookup(self, surface: str) -> str:
        return self.entries.get(surface, surface)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class GenreStream:
    """The normalized lemma sequence of one genre, possibly capped."""

    genre: str
    lemmas: tuple[str, ...]
    cap: int | None = None

    def __post_init__(self) -> None:
        _check_genre_label(self.genre)
        if self.cap is not None:
            if self.cap < 1:
                raise DataError(f"cap must be positive, got {self.cap}")
            if len(self.lemmas) > self.cap:
                raise DataError(f"stream for {self.genre!r} exceeds its cap ({len(self.lemmas)} > {self.cap})")


@dataclass(frozen=True)
class CapShortfall:
    """A genre that ended up below the requested occurrence cap."""

    genre: str
    occurrences: int
    cap: int

    def message(self) -> str:
        return f"genre {self.genre!r} has only {self.occurrences} occurrences (cap {self.cap})"


@dataclass(frozen=True)
class IngestResult:
    streams: dict[str, GenreStream]
    shortfalls: tuple[CapShortfall, ...]


def _check_genre_label(genre: str) -> None:
    if not genre or genre != genre.strip():
        raise DataError(f"genre label must be nonempty without surrounding whitespace: {genre!r}")
    if "\t" in genre or "\n" in genre or "\r" in genre:
        raise DataError(f"genre label may not contain tabs or line breaks: {genre!r}")


def _token_pattern(text: str, config: TokenizationConfig) -> re.Pattern[str] | None:
    # A text's character inventory is tiny compared to its length, so
    # classify the distinct characters once and compile an explicit class;
    # the scan itself then stays inside the regex engine.
    seen = set(text)
    letters = "".join(re.escape(c) for c in sorted(c for c in seen if c.isalpha()))
    alternatives = []
    if letters:
        marks = "".join(re.escape(c) for c in sorted(config.intra_word_marks & seen))
        if marks:
            alternatives.append(f"[{letters}](?:[{letters}{marks}]*[{letters}])?")
        else:
            alternatives.append(f"[{letters}]+")
    if config.keep_numerals:
        digits = "".join(re.escape(c) for c in sorted(c for c in seen if c.isdecimal()))
        if digits:
            alternatives.append(f"[{digits}]+")
    if not alternatives:
        return None
    return re.compile("|".join(alternatives))


def tokenize(text: str, config: TokenizationConfig | None = None) -> list[str]:
    """Split text into surface tokens, preserving text order."""
    if config is None:
        config = TokenizationConfig()
    if not text:
        return []
    pattern = _token_pattern(text, config)
    if pattern is None:
        return []
    return pattern.findall(text)


def normalize(token: str, config: TokenizationConfig, lemmas: LemmaTable) -> str:
    """Map one surface token to its lemma (identity when unlisted)."""
    if not token:
        raise ValueError("token must be nonempty")
    key = token.casefold() if config.case_fold else token
    return lemmas.lookup(key)


def _normalize_all(tokens: list[str], config: TokenizationConfig, lemmas: LemmaTable) -> list[str]:
    # sys.intern dedupes lemma strings; capped streams hold hundreds of
    # thousands of tokens over a much smaller vocabulary.
    intern = sys.intern
    keys = [t.casefold() for t in tokens] if config.case_fold else tokens
    if lemmas.entries:
        get = lemmas.entries.get
        return [intern(get(k, k)) for k in keys]
    return [intern(k) for k in keys]


def read_manifest(path: str | Path) -> list[ManifestEntry]:
    """Read a ``genre<TAB>path`` manifest; paths resolve against its directory."""
    path = Path(path)
    text = _read_text(path)
    base = path.parent
    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError("expected 'genre<TAB>path'", source=str(path), line=lineno)
        genre, raw = parts
        try:
            _check_genre_label(genre)
        except DataError as exc:
            raise ParseError(str(exc), source=str(path), line=lineno) from exc
        doc_path = Path(raw)
        if not doc_path.is_absolute():
            doc_path = base / doc_path
        entry = ManifestEntry(genre, doc_path)
        if entry.source_id in seen:
            raise ParseError(f"duplicate document {entry.source_id!r}", source=str(path), line=lineno)
        seen.add(entry.source_id)
        entries.append(entry)
    return entries


def read_declared_percentages(path: str | Path) -> dict[str, float]:
    """Collect optional ``# declared:<TAB>genre<TAB>percent`` manifest annotations."""
    path = Path(path)
    declared: dict[str, float] = {}
    for lineno, line in enumerate(_read_text(path).split("\n"), start=1):
        if not line.startswith(_DECLARED_PREFIX):
            continue
        parts = line[len(_DECLARED_PREFIX):].split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected '# declared:<TAB>genre<TAB>percent'", source=str(path), line=lineno)
        genre, raw = parts
        try:
            value = float(raw)
        except ValueError as exc:
            raise ParseError(f"bad declared percentage {raw!r}", source=str(path), line=lineno) from exc
        if genre in declared:
            raise ParseError(f"duplicate declared percentage for {genre!r}", source=str(path), line=lineno)
        declared[genre] = value
    return declared


def read_lemma_table(path: str | Path, case_fold: bool = True) -> LemmaTable:
    """Read a ``surface<TAB>lemma`` table, case-folding both columns by default."""
    path = Path(path)
    entries: dict[str, str] = {}
    for lineno, line in enumerate(_read_text(path).split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError("expected 'surface<TAB>lemma'", source=str(path), line=lineno)
        surface, lemma = parts
        if case_fold:
            surface, lemma = surface.casefold(), lemma.casefold()
        if any(ch.isspace() for ch in surface) or any(ch.isspace() for ch in lemma):
            raise ParseError("whitespace inside surface or lemma", source=str(path), line=lineno)
        if surface in entries and entries[surface] != lemma:
            raise ParseError(f"conflicting lemma for {surface!r}", source=str(path), line=lineno)
        entries[surface] = lemma
    return LemmaTable(entries)


def load_documents(entries: list[ManifestEntry]) -> list[Document]:
    """Read every referenced file, failing with the offending source_id."""
    documents = []
    for entry in entries:
        try:
            data = entry.path.read_bytes()
        except OSError as exc:
            raise DataError(f"cannot read {entry.source_id!r}: {exc}") from exc
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DataError(f"{entry.source_id!r} is not valid UTF-8: {exc}") from exc
        documents.append(Document(entry.genre, entry.source_id, text))
    return documents


def _ingest_genre(
    genre: str,
    documents: list[Document],
    config: TokenizationConfig,
    lemmas: LemmaTable,
    cap: int | None,
) -> GenreStream:
    out: list[str] = []
    for doc in documents:
        if cap is not None and len(out) >= cap:
            break  # cap reached; later documents cannot contribute
        tokens = tokenize(doc.text, config)
        if cap is not None:
            tokens = tokens[: cap - len(out)]
        out.extend(_normalize_all(tokens, config, lemmas))
    return GenreStream(genre, tuple(out), cap)


def ingest(
    documents: list[Document],
    config: TokenizationConfig | None = None,
    lemmas: LemmaTable | None = None,
    cap: int | None = DEFAULT_CAP,
    workers: int = 1,
) -> IngestResult:
    """Tokenize and normalize documents into one capped stream per genre.

    Documents are processed in list order within each genre; distinct
    genres may be processed in parallel (``workers``) without affecting
    the result. Genres that end below the cap are reported as shortfalls
    rather than errors so that pilot corpora run end to end.
    """
    if not documents:
        raise DataError("no documents to ingest")
    if cap is not None and cap < 1:
        raise DataError(f"cap must be positive, got {cap}")
    config = config or TokenizationConfig()
    lemmas = lemmas or LemmaTable()

    seen: set[str] = set()
    groups: dict[str, list[Document]] = {}
    for doc in documents:
        if doc.source_id in seen:
            raise DataError(f"duplicate document source_id {doc.source_id!r}")
        seen.add(doc.source_id)
        groups.setdefault(doc.genre, []).append(doc)

    if workers > 1 and len(groups) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {g: pool.submit(_ingest_genre, g, docs, config, lemmas, cap) for g, docs in groups.items()}
            streams = {g: futures[g].result() for g in groups}
    else:
        streams = {g: _ingest_genre(g, docs, config, lemmas, cap) for g, docs in groups.items()}

    shortfalls = tuple(
        CapShortfall(g, len(s.lemmas), cap) for g, s in streams.items() if cap is not None and len(s.lemmas) < cap
    )
    return IngestResult(streams, shortfalls)


def ingest_manifest(
    path: str | Path,
    genre: str | None = None,
    config: TokenizationConfig | None = None,
    lemmas: LemmaTable | None = None,
    cap: int | None = DEFAULT_CAP,
    workers: int = 1,
) -> IngestResult:
    """Read a manifest and ingest its documents, optionally one genre only."""
    entries = read_manifest(path)
    if genre is not None:
        entries = [e for e in entries if e.genre == genre]
        if not entries:
            raise DataError(f"genre {genre!r} not present in manifest {str(path)!r}")
    return ingest(load_documents(entries), config=config, lemmas=lemmas, cap=cap, workers=workers)


def _read_text(path: Path) -> str:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read {str(path)!r}: {exc}") from exc
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"{str(path)!r} is not valid UTF-8: {exc}") from exc
