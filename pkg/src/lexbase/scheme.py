"""Semantic classification data for a word list, with coverage reports.

The classification itself is supplied as data, not computed: a scheme
file maps each word to a part of speech, one or more relation groups,
and exactly one top-level semantic field. The toolkit validates the
data, tags a lexical base against it, summarizes how the base spreads
over the field inventory (flagging empty fields), and reports pair
asymmetries: relation pairs with exactly one member in the base.

Scheme file: ``word<TAB>pos<TAB>kind:group[,kind:group...]<TAB>field``
lines; ``#`` comments and blank lines allowed; an optional
``# fields:<TAB>label<TAB>...`` directive before the first entry
overrides the default field inventory.
Pairs file: ``word_a<TAB>word_b<TAB>relation`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple

from .errors import DataError, ParseError
from .selection import LexicalBase
from .util import apportion_percentages

POS_TAGS = (
    "noun",
    "verb",
    "adjective",
    "pronoun",
    "adverb",
    "numeral",
    "preposition",
    "conjunction",
    "particle",
)

GROUP_KINDS = (
    "synonymic",
    "antonymic",
    "hypero-hyponymic",
    "partial-holonymic",
    "conversive",
    "lexical-semantic",
    "thematic",
)

PAIR_RELATIONS = ("antonym", "conversive", "complement")

# Top-level fields shared by ideographic schemes across languages:
# nature, the human being (body and mind), social relations, and the
# abstract categories (existence, space, time, movement, quantity,
# quality, relation). Overridable per scheme file.
DEFAULT_FIELD_INVENTORY = ("nature", "human", "society", "abstract")

_FIELDS_PREFIX = "# fields:\t"


@dataclass(frozen=True)
class SchemeEntry:
    pos: str
    groups: frozenset[tuple[str, str]]  # (kind, label)
    field: str


@dataclass(frozen=True)
class SemanticScheme:
    field_inventory: tuple[str, ...] = DEFAULT_FIELD_INVENTORY
    entries: dict[str, SchemeEntry] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.field_inventory or len(set(self.field_inventory)) != len(self.field_inventory):
            raise DataError(f"field inventory must be nonempty and distinct: {self.field_inventory}")
        for word, entry in self.entries.items():
            _check_word(word)
            if entry.pos not in POS_TAGS:
                raise DataError(f"unknown part of speech {entry.pos!r} for {word!r}")
            if not entry.groups:
                raise DataError(f"{word!r} must belong to at least one group")
            for kind, label in entry.groups:
                if kind not in GROUP_KINDS:
                    raise DataError(f"unknown group kind {kind!r} for {word!r}")
                if not label:
                    raise DataError(f"empty group label for {word!r}")
            if entry.field not in self.field_inventory:
                raise DataError(f"field {entry.field!r} of {word!r} not in the inventory")


class Pair(NamedTuple):
    word_a: str
    word_b: str
    relation: str


class GapRecord(NamedTuple):
    present: str
    missing: str
    relation: str


@dataclass(frozen=True)
class TaggingResult:
    """Base words in base order, each with its scheme entry or None."""

    rows: tuple[tuple[str, SchemeEntry | None], ...]

    @property
    def tagged(self) -> tuple[tuple[str, SchemeEntry], ...]:
        return tuple((w, e) for w, e in self.rows if e is not None)

    @property
    def unknown(self) -> tuple[str, ...]:
        return tuple(w for w, e in self.rows if e is None)


class FieldShare(NamedTuple):
    field: str
    count: int
    percent: float


@dataclass(frozen=True)
class SynopsisReport:
    classified: int
    fields: tuple[FieldShare, ...]
    pos_counts: tuple[tuple[str, int], ...]
    unknown: tuple[str, ...]
    empty_fields: tuple[str, ...]


def _check_word(word: str) -> None:
    if not word or any(ch.isspace() for ch in word):
        raise DataError(f"bad word {word!r}")


def _parse_groups(raw: str, source: str | None, lineno: int) -> frozenset[tuple[str, str]]:
    groups = set()
    for item in raw.split(","):
        kind, sep, label = item.partition(":")
        if not sep or kind not in GROUP_KINDS or not label:
            raise ParseError(f"bad group {item!r} (expected 'kind:label')", source=source, line=lineno)
        groups.add((kind, label))
    return frozenset(groups)


def loads_scheme(text: str, source: str | None = None) -> SemanticScheme:
    inventory = DEFAULT_FIELD_INVENTORY
    entries: dict[str, SchemeEntry] = {}
    first_line: dict[str, int] = {}
    inventory_overridden = False
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.startswith(_FIELDS_PREFIX):
            if entries:
                raise ParseError("'# fields:' directive must precede all entries", source=source, line=lineno)
            if inventory_overridden:
                raise ParseError("duplicate '# fields:' directive", source=source, line=lineno)
            labels = tuple(line[len(_FIELDS_PREFIX):].split("\t"))
            if any(not l for l in labels) or len(set(labels)) != len(labels):
                raise ParseError(f"bad field inventory {labels}", source=source, line=lineno)
            inventory = labels
            inventory_overridden = True
            continue
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ParseError("expected 'word<TAB>pos<TAB>groups<TAB>field'", source=source, line=lineno)
        word, pos, raw_groups, fld = parts
        if not word or any(ch.isspace() for ch in word):
            raise ParseError(f"bad word {word!r}", source=source, line=lineno)
        if pos not in POS_TAGS:
            raise ParseError(f"unknown part of speech {pos!r}", source=source, line=lineno)
        if fld not in inventory:
            raise ParseError(f"field {fld!r} not in the inventory", source=source, line=lineno)
        entry = SchemeEntry(pos, _parse_groups(raw_groups, source, lineno), fld)
        if word in entries:
            if entries[word] != entry:
                raise ParseError(
                    f"conflicting duplicate for {word!r} (first seen on line {first_line[word]})",
                    source=source,
                    line=lineno,
                )
            continue  # identical duplicates merge silently
        entries[word] = entry
        first_line[word] = lineno
    return SemanticScheme(inventory, entries)


def load_scheme(path: str | Path) -> SemanticScheme:
    path = Path(path)
    from .corpus import _read_text

    return loads_scheme(_read_text(path), source=str(path))


def loads_pairs(text: str, source: str | None = None) -> list[Pair]:
    pairs = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError("expected 'word_a<TAB>word_b<TAB>relation'", source=source, line=lineno)
        word_a, word_b, relation = parts
        for word in (word_a, word_b):
            if not word or any(ch.isspace() for ch in word):
                raise ParseError(f"bad word {word!r}", source=source, line=lineno)
        if word_a == word_b:
            raise ParseError(f"pair members must differ, got {word_a!r} twice", source=source, line=lineno)
        if relation not in PAIR_RELATIONS:
            raise ParseError(f"unknown relation {relation!r}", source=source, line=lineno)
        pairs.append(Pair(word_a, word_b, relation))
    return pairs


def load_pairs(path: str | Path) -> list[Pair]:
    path = Path(path)
    from .corpus import _read_text

    return loads_pairs(_read_text(path), source=str(path))


def _base_words(base: LexicalBase | Iterable[str]) -> tuple[str, ...]:
    if isinstance(base, LexicalBase):
        return base.words
    return tuple(base)


def tag(base: LexicalBase | Iterable[str], scheme: SemanticScheme) -> TaggingResult:
    """Annotate base words with their scheme entries; unknowns are data."""
    rows = tuple((word, scheme.entries.get(word)) for word in _base_words(base))
    return TaggingResult(rows)


def field_synopsis(tagging: TaggingResult, scheme: SemanticScheme) -> SynopsisReport:
    """Per-field and per-pos counts over the classified part of a base.

    Percentages are taken over the classified words only, and are
    apportioned so the printed one-decimal column sums to 100.0.
    """
    field_counts = {f: 0 for f in scheme.field_inventory}
    pos_counts = {p: 0 for p in POS_TAGS}
    for _, entry in tagging.tagged:
        field_counts[entry.field] += 1
        pos_counts[entry.pos] += 1
    percents = apportion_percentages(list(field_counts.values()))
    fields = tuple(
        FieldShare(f, count, pct) for (f, count), pct in zip(field_counts.items(), percents)
    )
    empty = tuple(f for f, count in field_counts.items() if count == 0)
    return SynopsisReport(
        classified=len(tagging.tagged),
        fields=fields,
        pos_counts=tuple(pos_counts.items()),
        unknown=tagging.unknown,
        empty_fields=empty,
    )


def gap_report(base: LexicalBase | Iterable[str], pairs: list[Pair]) -> list[GapRecord]:
    """Pairs with exactly one member in the base, ordered by present word.

    Orientation does not matter: (a, b, r) and (b, a, r) produce the same
    record, and duplicates collapse.
    """
    words = set(_base_words(base))
    records = set()
    for pair in pairs:
        a_in, b_in = pair.word_a in words, pair.word_b in words
        if a_in == b_in:
            continue
        if a_in:
            records.add(GapRecord(pair.word_a, pair.word_b, pair.relation))
        else:
            records.add(GapRecord(pair.word_b, pair.word_a, pair.relation))
    return sorted(records)


def _format_groups(groups: frozenset[tuple[str, str]]) -> str:
    return ",".join(f"{kind}:{label}" for kind, label in sorted(groups))


def tagging_tsv(tagging: TaggingResult) -> str:
    """One row per base word in base order; unknowns marked with '-'."""
    lines = ["word\tpos\tgroups\tfield"]
    for word, entry in tagging.rows:
        if entry is None:
            lines.append(f"{word}\t-\t-\t-")
        else:
            lines.append(f"{word}\t{entry.pos}\t{_format_groups(entry.groups)}\t{entry.field}")
    return "\n".join(lines) + "\n"


def synopsis_tsv(report: SynopsisReport) -> str:
    lines = [f"# classified:\t{report.classified}", f"# unknown:\t{len(report.unknown)}"]
    for share in report.fields:
        lines.append(f"field\t{share.field}\t{share.count}\t{share.percent:.1f}")
    for pos, count in report.pos_counts:
        lines.append(f"pos\t{pos}\t{count}")
    for fld in report.empty_fields:
        lines.append(f"empty-field\t{fld}")
    for word in report.unknown:
        lines.append(f"unknown\t{word}")
    return "\n".join(lines) + "\n"


def synopsis_text(report: SynopsisReport) -> str:
    lines = [f"classified words: {report.classified} ({len(report.unknown)} unknown)"]
    lines.append("fields:")
    for share in report.fields:
        if report.classified:
            lines.append(f"  {share.field}: {share.count} ({share.percent:.1f}%)")
        else:
            lines.append(f"  {share.field}: 0")
    pos_present = [(p, c) for p, c in report.pos_counts if c]
    if pos_present:
        lines.append("parts of speech:")
        for pos, count in pos_present:
            lines.append(f"  {pos}: {count}")
    if report.empty_fields:
        lines.append("empty fields: " + ", ".join(report.empty_fields))
    if report.unknown:
        lines.append("unknown words: " + ", ".join(report.unknown))
    return "\n".join(lines) + "\n"


def gaps_tsv(records: list[GapRecord]) -> str:
    lines = ["present\tmissing\trelation"]
    lines.extend(f"{r.present}\t{r.missing}\t{r.relation}" for r in records)
    return "\n".join(lines) + "\n"


def gaps_text(records: list[GapRecord]) -> str:
    if not records:
        return "no pair gaps\n"
    lines = [f"{r.present}: missing {r.relation} partner {r.missing!r}" for r in records]
    return "\n".join(lines) + "\n"


def sample_scheme() -> SemanticScheme:
    """The bundled sample classification (transliterated Ukrainian)."""
    text = resources.files("lexbase").joinpath("data/sample_scheme.tsv").read_text(encoding="utf-8")
    return loads_scheme(text, source="data/sample_scheme.tsv")


def sample_pairs() -> list[Pair]:
    text = resources.files("lexbase").joinpath("data/sample_pairs.tsv").read_text(encoding="utf-8")
    return loads_pairs(text, source="data/sample_pairs.tsv")
