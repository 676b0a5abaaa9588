"""Citation corpora: ingestion, edge classification, and per-entity aggregation.

A corpus is a closed world. Only citations between papers present in the
stream are counted; references to unknown ids are tallied as dangling and
otherwise ignored, so a corpus survives a round trip through its own
serialization unchanged.

Two entity modes share all the machinery here. In author mode an edge is a
self-citation when the citing and cited author sets intersect, and a paper
contributes its counts to every one of its authors. In journal mode the
entity is the venue string and an edge is a self-citation when both papers
appeared in the same venue.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Literal, NamedTuple

from .errors import CorpusIntegrityError, CorpusParseError, DomainError, UnknownEntityError
from .metrics import CitationCounts, h_index

logger = logging.getLogger(__name__)

Mode = Literal["author", "journal"]

MODES = ("author", "journal")

AGGREGATE_CSV_COLUMNS = ("entity_id", "cd", "c", "sc", "h")

__all__ = [
    "Mode",
    "MODES",
    "AGGREGATE_CSV_COLUMNS",
    "Paper",
    "Corpus",
    "CitationClass",
    "PaperCitations",
    "EntityAggregate",
    "AuditReport",
    "ingest_corpus",
    "serialize_corpus",
    "classify_citation",
    "aggregate_entity",
    "aggregate_all",
    "self_citation_fraction",
    "generate_synthetic_corpus",
    "read_aggregate_csv",
    "write_aggregate_csv",
    "audit_corpus",
    "audit_aggregate",
]


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Paper:
    """One publication node: identity, ownership, venue, and outgoing references."""

    id: str
    authors: tuple[str, ...]
    venue: str | None = None
    year: int | None = None
    refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Corpus:
    """An immutable set of papers keyed by id.

    ``dangling_refs`` counts references whose target is absent from the
    corpus. They stay recorded on their papers (serialization preserves
    them) but never enter any citation tally.
    """

    papers: dict[str, Paper]
    dangling_refs: int = 0

    def __len__(self) -> int:
        return len(self.papers)

    def __iter__(self) -> Iterator[Paper]:
        return iter(self.papers.values())

    def __contains__(self, paper_id: str) -> bool:
        return paper_id in self.papers

    def paper(self, paper_id: str) -> Paper:
        try:
            return self.papers[paper_id]
        except KeyError:
            raise UnknownEntityError(f"unknown paper id {paper_id!r}") from None


@dataclass(frozen=True)
class CitationClass:
    """The label of one citation edge under a chosen entity mode."""

    citing: str
    cited: str
    label: Literal["self", "genuine"]
    mode: Mode


class PaperCitations(NamedTuple):
    """Citations one paper received from inside the corpus."""

    paper_id: str
    citations_received: int
    self_citations_received: int


@dataclass(frozen=True)
class EntityAggregate:
    """Citation statistics for one author or venue over a full corpus.

    ``h`` is the h-index over raw received counts and ``h_star`` the h-index
    after subtracting each paper's self-received citations; h_star <= h
    always, because the filtered counts are dominated elementwise.
    """

    entity_id: str
    mode: Mode
    cd: int
    c: int
    sc: int
    h: int
    h_star: int
    per_paper: tuple[PaperCitations, ...]

    def counts(self) -> CitationCounts:
        """View as plain aggregate counts, dropping the per-paper detail."""
        return CitationCounts(
            citations_total=self.c,
            self_citations=self.sc,
            citable_documents=self.cd,
            h_index=self.h,
        )


# ---------------------------------------------------------------------------
# parsing and serialization
# ---------------------------------------------------------------------------

def _open_lines(source: str | Path | IO | bytes | Iterable[str]) -> tuple[Iterator[str], str | None]:
    """Turn any reasonable source into an iterator of text lines plus a name."""
    if isinstance(source, (str, Path)):
        path = Path(source)
        return iter(path.read_text(encoding="utf-8").splitlines()), path.name
    if isinstance(source, bytes):
        return iter(source.decode("utf-8").splitlines()), None
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        name = getattr(source, "name", None)
        if isinstance(name, str) and not name.startswith("<"):
            name = Path(name).name
        else:
            name = None
        return iter(data.splitlines()), name
    return iter(source), None


def _string_list(value: object, what: str, line: int, source: str | None) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(
        isinstance(item, str) and item for item in value
    ):
        raise CorpusParseError(
            f"{what} must be a list of non-empty strings", line=line, source=source
        )
    return tuple(value)


def _paper_from_record(record: object, line: int, source: str | None) -> tuple[Paper, int]:
    """Validate one decoded JSONL record; returns the paper and the number of
    self-referencing entries stripped from its refs."""
    if not isinstance(record, dict):
        raise CorpusParseError("record must be a JSON object", line=line, source=source)
    paper_id = record.get("id")
    if not isinstance(paper_id, str) or not paper_id:
        raise CorpusParseError("'id' must be a non-empty string", line=line, source=source)
    if "authors" not in record:
        raise CorpusParseError(f"paper {paper_id!r} has no 'authors'", line=line, source=source)
    authors = _string_list(record["authors"], "'authors'", line, source)
    if not authors:
        raise CorpusParseError(
            f"paper {paper_id!r} needs at least one author", line=line, source=source
        )
    venue = record.get("venue")
    if venue is not None and not isinstance(venue, str):
        raise CorpusParseError("'venue' must be a string", line=line, source=source)
    if venue == "":
        venue = None
    year = record.get("year")
    if year is not None and (isinstance(year, bool) or not isinstance(year, int)):
        raise CorpusParseError("'year' must be an integer", line=line, source=source)
    raw_refs = record.get("refs", [])
    refs = _string_list(raw_refs, "'refs'", line, source)
    deduped = tuple(dict.fromkeys(refs))
    self_loops = sum(1 for ref in deduped if ref == paper_id)
    cleaned = tuple(ref for ref in deduped if ref != paper_id)
    paper = Paper(id=paper_id, authors=authors, venue=venue, year=year, refs=cleaned)
    return paper, self_loops


def ingest_corpus(source: str | Path | IO | bytes | Iterable[str]) -> Corpus:
    """Load a JSONL corpus, one paper object per line.

    Accepts a path, an open text or binary file, raw bytes, or an iterable
    of lines. Blank lines are skipped. A malformed line aborts with
    CorpusParseError carrying its line number; a duplicate id aborts with
    CorpusIntegrityError. Self-referencing entries in ``refs`` are stripped
    with a logged warning, duplicate refs are collapsed, and refs pointing
    outside the corpus are counted as dangling.
    """
    lines, name = _open_lines(source)
    papers: dict[str, Paper] = {}
    stripped_loops = 0
    for line_no, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(
                f"invalid JSON ({exc.msg})", line=line_no, source=name
            ) from exc
        paper, loops = _paper_from_record(record, line_no, name)
        stripped_loops += loops
        if paper.id in papers:
            prefix = f"{name}, " if name else ""
            raise CorpusIntegrityError(
                f"{prefix}line {line_no}: duplicate paper id {paper.id!r}"
            )
        papers[paper.id] = paper
    if stripped_loops:
        logger.warning("stripped %d self-referencing citation(s)", stripped_loops)
    dangling = sum(1 for p in papers.values() for ref in p.refs if ref not in papers)
    return Corpus(papers=papers, dangling_refs=dangling)


def serialize_corpus(corpus: Corpus) -> str:
    """Render a corpus back to JSONL, one line per paper, in corpus order.

    Optional fields are emitted only when present, so ingest and serialize
    compose to the identity on anything ingest accepts.
    """
    lines = []
    for paper in corpus:
        record: dict[str, object] = {"id": paper.id, "authors": list(paper.authors)}
        if paper.venue is not None:
            record["venue"] = paper.venue
        if paper.year is not None:
            record["year"] = paper.year
        record["refs"] = list(paper.refs)
        lines.append(json.dumps(record))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# edge classification and aggregation
# ---------------------------------------------------------------------------

def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise DomainError(f"unknown entity mode {mode!r}; expected 'author' or 'journal'")


def _is_self_edge(citing: Paper, cited: Paper, mode: Mode) -> bool:
    if mode == "author":
        return bool(set(citing.authors) & set(cited.authors))
    if citing.venue is None or cited.venue is None:
        return False
    return citing.venue == cited.venue


def classify_citation(corpus: Corpus, citing_id: str, cited_id: str, mode: Mode) -> CitationClass:
    """Classify the edge citing -> cited as a self-citation or genuine.

    Author mode uses the author-set intersection rule: one shared author on
    both sides makes the edge a self-citation for every entity involved.
    Journal mode compares venues; a missing venue on either side classifies
    the edge genuine, so sparse metadata never inflates self-citation counts.
    """
    _check_mode(mode)
    citing = corpus.paper(citing_id)
    cited = corpus.paper(cited_id)
    if cited_id not in citing.refs:
        raise DomainError(f"paper {citing_id!r} does not cite {cited_id!r}")
    label: Literal["self", "genuine"] = (
        "self" if _is_self_edge(citing, cited, mode) else "genuine"
    )
    return CitationClass(citing=citing_id, cited=cited_id, label=label, mode=mode)


def _received_counts(corpus: Corpus, mode: Mode) -> dict[str, tuple[int, int]]:
    """Per paper id: (citations received, the subset classified self).

    One pass over every in-corpus edge; dangling refs are skipped here.
    """
    received: dict[str, list[int]] = {pid: [0, 0] for pid in corpus.papers}
    missing_venue_edges = 0
    for citing in corpus:
        for ref in citing.refs:
            cited = corpus.papers.get(ref)
            if cited is None:
                continue
            entry = received[ref]
            entry[0] += 1
            if mode == "journal" and (citing.venue is None or cited.venue is None):
                missing_venue_edges += 1
            elif _is_self_edge(citing, cited, mode):
                entry[1] += 1
    if missing_venue_edges:
        logger.warning(
            "%d citation edge(s) lack venue metadata and were classified genuine",
            missing_venue_edges,
        )
    return {pid: (tallies[0], tallies[1]) for pid, tallies in received.items()}


def _entity_papers(corpus: Corpus, mode: Mode) -> dict[str, list[Paper]]:
    """Map each entity id to its papers, in corpus order."""
    owners: dict[str, list[Paper]] = {}
    for paper in corpus:
        if mode == "author":
            keys: Iterable[str] = dict.fromkeys(paper.authors)
        else:
            keys = (paper.venue,) if paper.venue is not None else ()
        for key in keys:
            owners.setdefault(key, []).append(paper)
    return owners


def _build_aggregate(
    entity_id: str,
    mode: Mode,
    papers: list[Paper],
    stats: dict[str, tuple[int, int]],
) -> EntityAggregate:
    per_paper = tuple(
        PaperCitations(paper.id, stats[paper.id][0], stats[paper.id][1])
        for paper in papers
    )
    c = sum(item.citations_received for item in per_paper)
    sc = sum(item.self_citations_received for item in per_paper)
    h = h_index(item.citations_received for item in per_paper)
    h_star = h_index(
        item.citations_received - item.self_citations_received for item in per_paper
    )
    return EntityAggregate(
        entity_id=entity_id,
        mode=mode,
        cd=len(per_paper),
        c=c,
        sc=sc,
        h=h,
        h_star=h_star,
        per_paper=per_paper,
    )


def aggregate_entity(corpus: Corpus, entity_id: str, mode: Mode) -> EntityAggregate:
    """Aggregate counts, h, and the self-citation-filtered h* for one entity."""
    _check_mode(mode)
    owners = _entity_papers(corpus, mode)
    if entity_id not in owners:
        raise UnknownEntityError(f"no {mode} {entity_id!r} in the corpus")
    stats = _received_counts(corpus, mode)
    return _build_aggregate(entity_id, mode, owners[entity_id], stats)


def aggregate_all(corpus: Corpus, mode: Mode) -> list[EntityAggregate]:
    """One aggregate per distinct entity, in lexicographic entity order."""
    _check_mode(mode)
    owners = _entity_papers(corpus, mode)
    stats = _received_counts(corpus, mode)
    return [
        _build_aggregate(entity_id, mode, owners[entity_id], stats)
        for entity_id in sorted(owners)
    ]


def self_citation_fraction(corpus: Corpus, mode: Mode = "author") -> float:
    """Share of in-corpus citation edges classified self; 0.0 for no edges."""
    _check_mode(mode)
    stats = _received_counts(corpus, mode)
    total = sum(received for received, _ in stats.values())
    if total == 0:
        return 0.0
    return sum(self_received for _, self_received in stats.values()) / total


# ---------------------------------------------------------------------------
# synthetic corpora
# ---------------------------------------------------------------------------

_VENUE_POOL = tuple(f"v{i:02d}" for i in range(1, 7))


def generate_synthetic_corpus(
    seed: int,
    n_papers: int,
    n_authors: int,
    self_cite_bias: float = 0.0,
) -> Corpus:
    """Deterministic random corpus for exercising the full pipeline.

    Papers are created in order; each gets 1 to 4 authors drawn from a pool
    of ``n_authors`` names, a venue, and up to 4 references to strictly
    earlier papers, so the graph is acyclic by construction. Each reference
    slot prefers a target sharing at least one author with probability
    ``self_cite_bias`` and a disjoint-author target otherwise, falling back
    to whatever pool is non-empty. The same seed always reproduces the same
    corpus, byte for byte.
    """
    if n_papers < 1:
        raise DomainError(f"n_papers must be >= 1, got {n_papers}")
    if n_authors < 1:
        raise DomainError(f"n_authors must be >= 1, got {n_authors}")
    if not 0.0 <= self_cite_bias <= 1.0:
        raise DomainError(f"self_cite_bias must lie in [0, 1], got {self_cite_bias!r}")
    rng = random.Random(seed)
    author_pool = [f"a{i:03d}" for i in range(1, n_authors + 1)]
    by_author: dict[str, list[int]] = {name: [] for name in author_pool}
    papers: dict[str, Paper] = {}
    for index in range(n_papers):
        team_size = rng.randint(1, min(4, n_authors))
        authors = tuple(rng.sample(author_pool, team_size))
        shared = sorted({j for name in authors for j in by_author[name]})
        shared_set = set(shared)
        disjoint = [j for j in range(index) if j not in shared_set]
        n_refs = rng.randint(0, min(4, index))
        chosen: list[int] = []
        for _ in range(n_refs):
            prefer_shared = rng.random() < self_cite_bias
            pool = shared if prefer_shared else disjoint
            if not pool:
                pool = disjoint if prefer_shared else shared
            if not pool:
                break
            chosen.append(pool.pop(rng.randrange(len(pool))))
        paper_id = f"p{index + 1:04d}"
        paper = Paper(
            id=paper_id,
            authors=authors,
            venue=rng.choice(_VENUE_POOL),
            year=2000 + index % 12,
            refs=tuple(f"p{j + 1:04d}" for j in sorted(chosen)),
        )
        papers[paper_id] = paper
        for name in authors:
            by_author[name].append(index)
    return Corpus(papers=papers, dangling_refs=0)


# ---------------------------------------------------------------------------
# aggregate CSV interchange
# ---------------------------------------------------------------------------

def read_aggregate_csv(
    source: str | Path | IO | bytes | Iterable[str],
) -> list[tuple[str, CitationCounts]]:
    """Read pre-aggregated entity rows from CSV.

    The header must be exactly ``entity_id,cd,c,sc,h``. Rows violating the
    count invariants (negative values, sc > c, h > cd) raise DomainError
    naming the offending entity; duplicate entities raise
    CorpusIntegrityError.
    """
    lines, name = _open_lines(source)
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusParseError("empty file, expected a header row", line=1, source=name) from None
    if header and header[0].startswith("﻿"):
        header[0] = header[0].lstrip("﻿")
    if tuple(header) != AGGREGATE_CSV_COLUMNS:
        raise CorpusParseError(
            f"header must be exactly {','.join(AGGREGATE_CSV_COLUMNS)!r}, "
            f"got {','.join(header)!r}",
            line=1,
            source=name,
        )
    rows: list[tuple[str, CitationCounts]] = []
    seen: set[str] = set()
    for line_no, fields in enumerate(reader, start=2):
        if not fields:
            continue
        if len(fields) != len(AGGREGATE_CSV_COLUMNS):
            raise CorpusParseError(
                f"expected {len(AGGREGATE_CSV_COLUMNS)} fields, got {len(fields)}",
                line=line_no,
                source=name,
            )
        entity_id = fields[0]
        if not entity_id:
            raise CorpusParseError("entity_id must be non-empty", line=line_no, source=name)
        try:
            cd, c, sc, h = (int(field) for field in fields[1:])
        except ValueError:
            raise CorpusParseError(
                f"entity {entity_id!r}: counts must be integers, got {fields[1:]!r}",
                line=line_no,
                source=name,
            ) from None
        if entity_id in seen:
            prefix = f"{name}, " if name else ""
            raise CorpusIntegrityError(
                f"{prefix}line {line_no}: duplicate entity {entity_id!r}"
            )
        seen.add(entity_id)
        try:
            counts = CitationCounts(
                citations_total=c, self_citations=sc, citable_documents=cd, h_index=h
            )
        except DomainError as exc:
            raise DomainError(f"line {line_no}, entity {entity_id!r}: {exc}") from None
        rows.append((entity_id, counts))
    return rows


def write_aggregate_csv(aggregates: Iterable[EntityAggregate]) -> str:
    """Serialize aggregates to the ``entity_id,cd,c,sc,h`` CSV format."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(AGGREGATE_CSV_COLUMNS)
    for agg in aggregates:
        writer.writerow([agg.entity_id, agg.cd, agg.c, agg.sc, agg.h])
    return out.getvalue()


# ---------------------------------------------------------------------------
# validation without aborting
# ---------------------------------------------------------------------------

@dataclass
class AuditReport:
    """Outcome of a validation pass: hard errors plus advisory warnings."""

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def audit_corpus(
    source: str | Path | IO | bytes | Iterable[str], mode: Mode = "author"
) -> AuditReport:
    """Check a JSONL corpus, collecting every problem instead of stopping.

    Hard errors: unparseable lines and duplicate ids. Warnings: stripped
    self-references, dangling references, and, in journal mode, papers
    without a venue.
    """
    _check_mode(mode)
    report = AuditReport()
    lines, _ = _open_lines(source)
    papers: dict[str, Paper] = {}
    missing_venue = 0
    for line_no, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            report.errors.append(f"line {line_no}: invalid JSON ({exc.msg})")
            continue
        try:
            paper, loops = _paper_from_record(record, line_no, None)
        except CorpusParseError as exc:
            report.errors.append(str(exc))
            continue
        if loops:
            report.warnings.append(
                f"line {line_no}: paper {paper.id!r} cites itself ({loops} entry(ies) stripped)"
            )
        if paper.id in papers:
            report.errors.append(f"line {line_no}: duplicate paper id {paper.id!r}")
            continue
        papers[paper.id] = paper
        if mode == "journal" and paper.venue is None:
            missing_venue += 1
    dangling = sum(1 for p in papers.values() for ref in p.refs if ref not in papers)
    if dangling:
        report.warnings.append(
            f"{dangling} reference(s) point outside the corpus and will be ignored"
        )
    if missing_venue:
        report.warnings.append(
            f"{missing_venue} paper(s) have no venue; their citations count as genuine"
        )
    return report


def audit_aggregate(source: str | Path | IO | bytes | Iterable[str]) -> AuditReport:
    """Check an aggregate CSV: header, field types, and count invariants."""
    report = AuditReport()
    lines, _ = _open_lines(source)
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        report.errors.append("line 1: empty file, expected a header row")
        return report
    if header and header[0].startswith("﻿"):
        header[0] = header[0].lstrip("﻿")
    if tuple(header) != AGGREGATE_CSV_COLUMNS:
        report.errors.append(
            f"line 1: header must be exactly {','.join(AGGREGATE_CSV_COLUMNS)!r}, "
            f"got {','.join(header)!r}"
        )
        return report
    seen: set[str] = set()
    for line_no, fields in enumerate(reader, start=2):
        if not fields:
            continue
        if len(fields) != len(AGGREGATE_CSV_COLUMNS):
            report.errors.append(
                f"line {line_no}: expected {len(AGGREGATE_CSV_COLUMNS)} fields, "
                f"got {len(fields)}"
            )
            continue
        entity_id = fields[0]
        if not entity_id:
            report.errors.append(f"line {line_no}: entity_id must be non-empty")
            continue
        try:
            cd, c, sc, h = (int(field) for field in fields[1:])
        except ValueError:
            report.errors.append(
                f"line {line_no}: entity {entity_id!r}: counts must be integers"
            )
            continue
        if entity_id in seen:
            report.errors.append(f"line {line_no}: duplicate entity {entity_id!r}")
            continue
        seen.add(entity_id)
        try:
            CitationCounts(citations_total=c, self_citations=sc, citable_documents=cd, h_index=h)
        except DomainError as exc:
            report.errors.append(f"line {line_no}: entity {entity_id!r}: {exc}")
    return report
