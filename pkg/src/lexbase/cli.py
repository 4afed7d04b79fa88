"""Command line driver: a file-centric pipeline over the toolkit.

Subcommands mirror the pipeline stages (build-freq, merge, select,
coverage, genre-report, tag, synopsis, gaps) so every intermediate
artifact lands in an inspectable file. Exit codes: 0 success, 1 usage
error, 2 data error. Diagnostics go to stderr; data goes to the output
file (``-o``) or stdout.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .compare import MODES, dumps_table, merge, parse_table
from .corpus import (
    DEFAULT_CAP,
    IngestResult,
    LemmaTable,
    TokenizationConfig,
    ingest_manifest,
    read_declared_percentages,
    read_lemma_table,
)
from .errors import DataError, LexbaseError
from .freqdict import build_dictionary, coverage_curve, dumps_dictionary, parse_dictionary
from .scheme import (
    field_synopsis,
    gap_report,
    gaps_text,
    gaps_tsv,
    load_pairs,
    load_scheme,
    synopsis_text,
    synopsis_tsv,
    tag,
    tagging_tsv,
)
from .selection import SelectionPolicy, dumps_base, parse_base, select, text_coverage
from .util import apportion_percentages


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation; paths a subcommand does not use stay None."""

    subcommand: str
    manifest: Path | None = None
    dicts: tuple[Path, ...] = ()
    table: Path | None = None
    base: Path | None = None
    scheme: Path | None = None
    pairs: Path | None = None
    lemmas: Path | None = None
    dictionary: Path | None = None
    genre: str | None = None
    cap: int | None = DEFAULT_CAP
    workers: int = 1
    keep_numerals: bool = False
    case_fold: bool = True
    mode: str = "auto"
    paper_style: bool = False
    min_genres: int = 5
    top_k: int | None = None
    min_sum: int | None = None
    ks: tuple[int, ...] = ()
    fmt: str = "tsv"
    output: Path | None = None


@dataclass(frozen=True)
class GenreReport:
    rows: tuple[tuple[str, int, float], ...]
    grand_total: int
    note: str | None = None


def genre_report(totals: Mapping[str, int], declared: Mapping[str, float] | None = None) -> GenreReport:
    """Genre composition: occurrences and one-decimal percentages.

    Percentages are apportioned so the printed column sums to 100.0.
    When the input carries declared percentages that do not sum to 100,
    the report carries a note instead of failing.
    """
    if not totals:
        raise DataError("at least one genre required")
    grand = sum(totals.values())
    percents = apportion_percentages(list(totals.values()))
    rows = tuple((g, t, p) for (g, t), p in zip(totals.items(), percents))
    note = None
    if declared:
        declared_sum = sum(declared.values())
        if abs(declared_sum - 100.0) > 1e-9:
            note = f"declared percentages sum to {declared_sum:g}, not 100"
    return GenreReport(rows, grand, note)


def render_genre_report(report: GenreReport) -> str:
    lines = [f"# total:\t{report.grand_total}", "genre\toccurrences\tpercent"]
    lines.extend(f"{g}\t{t}\t{p:.1f}" for g, t, p in report.rows)
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _k_list(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")
    if not ks or ks[0] < 1 or any(b <= a for a, b in zip(ks, ks[1:])):
        raise argparse.ArgumentTypeError("ranks must be positive and strictly increasing")
    return ks


def build_parser() -> _Parser:
    parser = _Parser(prog="lexbase", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_output(p):
        p.add_argument("-o", "--output", type=Path, help="output file (default: stdout)")

    def add_ingest_flags(p):
        p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP,
                       help=f"occurrence cap per genre (default {DEFAULT_CAP})")
        p.add_argument("--no-cap", action="store_true", help="ingest whole genres, no cap")
        p.add_argument("--lemmas", type=Path, help="surface<TAB>lemma table")
        p.add_argument("--keep-numerals", action="store_true", help="keep digit runs as tokens")
        p.add_argument("--no-case-fold", action="store_true", help="keep surface case")
        p.add_argument("--workers", type=_positive_int, default=1,
                       help="parallel genre ingestion (results are identical)")

    p = sub.add_parser("build-freq", help="build one genre's frequency dictionary from a manifest")
    p.add_argument("--manifest", type=Path, required=True)
    p.add_argument("--genre", required=True)
    add_ingest_flags(p)
    add_output(p)

    p = sub.add_parser("merge", help="merge frequency dictionaries into a comparison table")
    p.add_argument("dicts", nargs="+", type=Path, metavar="DICT")
    p.add_argument("--mode", choices=("auto",) + MODES, default="auto",
                   help="auto: raw when totals are equal, per-million otherwise")
    p.add_argument("--paper-style", action="store_true", help="render zero cells as blanks")
    add_output(p)

    p = sub.add_parser("select", help="select a lexical base from a comparison table")
    p.add_argument("--table", type=Path, required=True)
    p.add_argument("--min-genres", type=_positive_int, default=5,
                   help="genres a word must occur in (default 5)")
    cutoff = p.add_mutually_exclusive_group(required=True)
    cutoff.add_argument("--top-k", type=_positive_int)
    cutoff.add_argument("--min-sum", type=_positive_int)
    add_output(p)

    p = sub.add_parser("coverage", help="coverage curve of a dictionary, or base coverage over text")
    p.add_argument("--dict", dest="dictionary", type=Path, help="dictionary for a top-k coverage curve")
    p.add_argument("--ks", type=_k_list, help="comma-separated ranks, strictly increasing")
    p.add_argument("--base", type=Path, help="base whose text coverage to measure")
    p.add_argument("--manifest", type=Path, help="text to cover (required with --base)")
    p.add_argument("--genre", help="restrict coverage to one manifest genre")
    add_ingest_flags(p)
    add_output(p)

    p = sub.add_parser("genre-report", help="genre composition of a manifest or dictionary set")
    p.add_argument("dicts", nargs="*", type=Path, metavar="DICT")
    p.add_argument("--manifest", type=Path)
    add_ingest_flags(p)
    add_output(p)

    p = sub.add_parser("tag", help="annotate a base with scheme entries")
    p.add_argument("--base", type=Path, required=True)
    p.add_argument("--scheme", type=Path, required=True)
    add_output(p)

    p = sub.add_parser("synopsis", help="field and part-of-speech synopsis of a tagged base")
    p.add_argument("--base", type=Path, required=True)
    p.add_argument("--scheme", type=Path, required=True)
    p.add_argument("--format", dest="fmt", choices=("tsv", "text"), default="tsv")
    add_output(p)

    p = sub.add_parser("gaps", help="relation pairs with exactly one member in the base")
    p.add_argument("--base", type=Path, required=True)
    p.add_argument("--pairs", type=Path, required=True)
    p.add_argument("--format", dest="fmt", choices=("tsv", "text"), default="tsv")
    add_output(p)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    get = lambda name, default=None: getattr(args, name, default)
    return RunConfig(
        subcommand=args.subcommand,
        manifest=get("manifest"),
        dicts=tuple(get("dicts") or ()),
        table=get("table"),
        base=get("base"),
        scheme=get("scheme"),
        pairs=get("pairs"),
        lemmas=get("lemmas"),
        dictionary=get("dictionary"),
        genre=get("genre"),
        cap=None if get("no_cap") else get("cap", DEFAULT_CAP),
        workers=get("workers", 1),
        keep_numerals=bool(get("keep_numerals")),
        case_fold=not get("no_case_fold"),
        mode=get("mode", "auto"),
        paper_style=bool(get("paper_style")),
        min_genres=get("min_genres", 5),
        top_k=get("top_k"),
        min_sum=get("min_sum"),
        ks=get("ks") or (),
        fmt=get("fmt", "tsv"),
        output=get("output"),
    )


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_bytes(text.encode("utf-8"))


def _warn_shortfalls(result: IngestResult) -> None:
    for shortfall in result.shortfalls:
        print(f"warning: {shortfall.message()}", file=sys.stderr)


def _tokenization(cfg: RunConfig) -> TokenizationConfig:
    return TokenizationConfig(case_fold=cfg.case_fold, keep_numerals=cfg.keep_numerals)


def _lemma_table(cfg: RunConfig) -> LemmaTable:
    if cfg.lemmas is None:
        return LemmaTable()
    return read_lemma_table(cfg.lemmas, case_fold=cfg.case_fold)


def _cmd_build_freq(cfg: RunConfig) -> int:
    result = ingest_manifest(
        cfg.manifest, genre=cfg.genre, config=_tokenization(cfg), lemmas=_lemma_table(cfg),
        cap=cfg.cap, workers=cfg.workers,
    )
    _warn_shortfalls(result)
    dictionary = build_dictionary(result.streams[cfg.genre])
    _emit(dumps_dictionary(dictionary), cfg.output)
    return 0


def _cmd_merge(cfg: RunConfig) -> int:
    dictionaries = [parse_dictionary(path) for path in cfg.dicts]
    table = merge(dictionaries, mode=cfg.mode)
    _emit(dumps_table(table, blank_zeros=cfg.paper_style), cfg.output)
    return 0


def _cmd_select(cfg: RunConfig) -> int:
    table = parse_table(cfg.table)
    policy = SelectionPolicy(min_genres=cfg.min_genres, top_k=cfg.top_k, min_sum=cfg.min_sum)
    base = select(table, policy)
    _emit(dumps_base(base), cfg.output)
    return 0


def _cmd_coverage(cfg: RunConfig) -> int:
    if (cfg.dictionary is None) == (cfg.base is None):
        print("error: coverage needs exactly one of --dict or --base", file=sys.stderr)
        return 1
    if cfg.dictionary is not None:
        if not cfg.ks:
            print("error: --dict coverage requires --ks", file=sys.stderr)
            return 1
        dictionary = parse_dictionary(cfg.dictionary)
        fractions = coverage_curve(dictionary, list(cfg.ks))
        lines = [f"{k}\t{fraction:.6f}" for k, fraction in zip(cfg.ks, fractions)]
        _emit("\n".join(["k\tcoverage"] + lines) + "\n", cfg.output)
        return 0
    if cfg.manifest is None:
        print("error: --base coverage requires --manifest", file=sys.stderr)
        return 1
    base = parse_base(cfg.base)
    result = ingest_manifest(
        cfg.manifest, genre=cfg.genre, config=_tokenization(cfg), lemmas=_lemma_table(cfg),
        cap=cfg.cap, workers=cfg.workers,
    )
    _warn_shortfalls(result)
    lines = [f"{genre}\t{text_coverage(base, stream):.6f}" for genre, stream in result.streams.items()]
    _emit("\n".join(["genre\tcoverage"] + lines) + "\n", cfg.output)
    return 0


def _cmd_genre_report(cfg: RunConfig) -> int:
    if (cfg.manifest is None) == (not cfg.dicts):
        print("error: genre-report needs a manifest or dictionary files, not both", file=sys.stderr)
        return 1
    declared = None
    if cfg.manifest is not None:
        result = ingest_manifest(
            cfg.manifest, config=_tokenization(cfg), lemmas=_lemma_table(cfg),
            cap=cfg.cap, workers=cfg.workers,
        )
        _warn_shortfalls(result)
        totals = {genre: len(stream.lemmas) for genre, stream in result.streams.items()}
        declared = read_declared_percentages(cfg.manifest) or None
    else:
        totals = {}
        for path in cfg.dicts:
            dictionary = parse_dictionary(path)
            if dictionary.genre in totals:
                raise DataError(f"duplicate genre {dictionary.genre!r} in {str(path)!r}")
            totals[dictionary.genre] = dictionary.total
    report = genre_report(totals, declared)
    if report.note:
        print(f"note: {report.note}", file=sys.stderr)
    _emit(render_genre_report(report), cfg.output)
    return 0


def _cmd_tag(cfg: RunConfig) -> int:
    tagging = tag(parse_base(cfg.base), load_scheme(cfg.scheme))
    unknown = len(tagging.unknown)
    if unknown:
        print(f"note: {unknown} of {len(tagging.rows)} base words missing from the scheme", file=sys.stderr)
    _emit(tagging_tsv(tagging), cfg.output)
    return 0


def _cmd_synopsis(cfg: RunConfig) -> int:
    scheme = load_scheme(cfg.scheme)
    report = field_synopsis(tag(parse_base(cfg.base), scheme), scheme)
    render = synopsis_text if cfg.fmt == "text" else synopsis_tsv
    _emit(render(report), cfg.output)
    return 0


def _cmd_gaps(cfg: RunConfig) -> int:
    records = gap_report(parse_base(cfg.base), load_pairs(cfg.pairs))
    render = gaps_text if cfg.fmt == "text" else gaps_tsv
    _emit(render(records), cfg.output)
    return 0


_HANDLERS = {
    "build-freq": _cmd_build_freq,
    "merge": _cmd_merge,
    "select": _cmd_select,
    "coverage": _cmd_coverage,
    "genre-report": _cmd_genre_report,
    "tag": _cmd_tag,
    "synopsis": _cmd_synopsis,
    "gaps": _cmd_gaps,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.subcommand](_config_from(args))
    except LexbaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
