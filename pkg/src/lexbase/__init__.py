"""Genre frequency dictionaries, comparison tables, and lexical-base extraction."""

from .compare import ComparisonTable, Row, dumps_table, loads_table, merge, parse_table, write_table
from .corpus import (
    DEFAULT_CAP,
    DEFAULT_GENRES,
    CapShortfall,
    Document,
    GenreStream,
    IngestResult,
    LemmaTable,
    ManifestEntry,
    TokenizationConfig,
    ingest,
    ingest_manifest,
    load_documents,
    normalize,
    read_declared_percentages,
    read_lemma_table,
    read_manifest,
    tokenize,
)
from .errors import DataError, LexbaseError, ParseError
from .freqdict import (
    FrequencyDictionary,
    build_dictionary,
    coverage_curve,
    dumps_dictionary,
    loads_dictionary,
    parse_dictionary,
    rank_entries,
    write_dictionary,
)
from .scheme import (
    DEFAULT_FIELD_INVENTORY,
    GROUP_KINDS,
    PAIR_RELATIONS,
    POS_TAGS,
    GapRecord,
    Pair,
    SchemeEntry,
    SemanticScheme,
    SynopsisReport,
    TaggingResult,
    field_synopsis,
    gap_report,
    load_pairs,
    load_scheme,
    loads_pairs,
    loads_scheme,
    sample_pairs,
    sample_scheme,
    tag,
)
from .selection import (
    LexicalBase,
    SelectionPolicy,
    dumps_base,
    loads_base,
    parse_base,
    select,
    text_coverage,
    write_base,
)

__version__ = "0.1.0"

__all__ = [
    "CapShortfall",
    "ComparisonTable",
    "DEFAULT_CAP",
    "DEFAULT_FIELD_INVENTORY",
    "DEFAULT_GENRES",
    "DataError",
    "Document",
    "FrequencyDictionary",
    "GapRecord",
    "GenreStream",
    "GROUP_KINDS",
    "IngestResult",
    "LemmaTable",
    "LexbaseError",
    "LexicalBase",
    "ManifestEntry",
    "PAIR_RELATIONS",
    "POS_TAGS",
    "Pair",
    "ParseError",
    "Row",
    "SchemeEntry",
    "SelectionPolicy",
    "SemanticScheme",
    "SynopsisReport",
    "TaggingResult",
    "TokenizationConfig",
    "build_dictionary",
    "coverage_curve",
    "dumps_base",
    "dumps_dictionary",
    "dumps_table",
    "field_synopsis",
    "gap_report",
    "ingest",
    "ingest_manifest",
    "load_documents",
    "load_pairs",
    "load_scheme",
    "loads_base",
    "loads_dictionary",
    "loads_pairs",
    "loads_scheme",
    "loads_table",
    "merge",
    "normalize",
    "parse_base",
    "parse_dictionary",
    "parse_table",
    "rank_entries",
    "read_declared_percentages",
    "read_lemma_table",
    "read_manifest",
    "sample_pairs",
    "sample_scheme",
    "select",
    "tag",
    "text_coverage",
    "tokenize",
    "write_base",
    "write_dictionary",
    "write_table",
]
