"""Rankings, correlation, descriptive statistics, and table rendering.

This layer never touches raw counts; it consumes finished metric rows and
entity aggregates. Numerics run at full double precision throughout, with
rounding applied only at the rendering boundary: three decimals, ties away
from zero.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Literal, Sequence

import numpy as np
from scipy.special import betainc

from .errors import DomainError
from .graph import EntityAggregate
from .metrics import MetricsRow

SortKey = Literal["v_index", "h_index", "cd"]
TableFormat = Literal["csv", "markdown"]

TABLE_COLUMNS = (
    "entity_id",
    "CD",
    "pos_cd",
    "C",
    "SC",
    "C_P",
    "h",
    "pos_h",
    "h_star",
    "V_rate",
    "V_P",
    "V_index",
    "pos_v",
    "ratio",
)

__all__ = [
    "SortKey",
    "TableFormat",
    "TABLE_COLUMNS",
    "RankedRow",
    "RankedTable",
    "CorrelationResult",
    "BatchStats",
    "CitationCurves",
    "rank",
    "pearson",
    "batch_stats",
    "export_citation_curves",
    "render_table",
    "round3",
    "fmt3",
]


# ---------------------------------------------------------------------------
# display rounding
# ---------------------------------------------------------------------------

def _quant3(value: float) -> Decimal:
    return Decimal(str(value)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP)


def round3(value: float) -> float:
    """Round to three decimals with ties going away from zero."""
    return float(_quant3(value))


def fmt3(value: float) -> str:
    """Format a real with exactly three decimals, ties away from zero."""
    return str(_quant3(value))


# ---------------------------------------------------------------------------
# ranking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankedRow:
    """A metrics row with its 1-based position under each ranking criterion."""

    row: MetricsRow
    rank_by_cd: int
    rank_by_h: int
    rank_by_v: int


@dataclass(frozen=True)
class RankedTable:
    """Rows ordered by one criterion, carrying positions under all three."""

    rows: tuple[RankedRow, ...]
    sort_key: SortKey


_SORT_ACCESSORS: dict[str, Callable[[MetricsRow], float]] = {
    "v_index": lambda row: row.v_index,
    "h_index": lambda row: row.counts.h_index,
    "cd": lambda row: row.counts.citable_documents,
}


def _ordered(rows: Sequence[MetricsRow], key: SortKey) -> list[MetricsRow]:
    """Descending by the criterion; ties break on h, then CD, then entity id."""
    value = _SORT_ACCESSORS[key]
    return sorted(
        rows,
        key=lambda row: (
            -value(row),
            -row.counts.h_index,
            -row.counts.citable_documents,
            row.entity_id,
        ),
    )


def rank(rows: Sequence[MetricsRow], key: SortKey = "v_index") -> RankedTable:
    """Rank rows under all three criteria and order the table by ``key``.

    Positions are 1-based and unique. Ties resolve deterministically in
    favor of the higher h-index, then more citable documents, then the
    lexicographically smaller entity id, so equal inputs always produce
    identical tables.
    """
    if key not in _SORT_ACCESSORS:
        raise DomainError(f"unknown sort key {key!r}")
    if not rows:
        raise DomainError("cannot rank an empty batch")
    positions: dict[tuple[str, int], int] = {}
    for criterion in ("cd", "h_index", "v_index"):
        for pos, row in enumerate(_ordered(rows, criterion), start=1):
            positions[criterion, id(row)] = pos
    ranked = tuple(
        RankedRow(
            row=row,
            rank_by_cd=positions["cd", id(row)],
            rank_by_h=positions["h_index", id(row)],
            rank_by_v=positions["v_index", id(row)],
        )
        for row in _ordered(rows, key)
    )
    return RankedTable(rows=ranked, sort_key=key)


# ---------------------------------------------------------------------------
# correlation and batch statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorrelationResult:
    rho: float
    n: int
    p_value: float


def pearson(x: Sequence[float], y: Sequence[float]) -> CorrelationResult:
    """Pearson correlation with a two-sided significance level.

    rho is the sample covariance normalized by both standard deviations.
    The p-value is exact under the usual normality assumption: with
    t = rho * sqrt((n - 2) / (1 - rho^2)) and nu = n - 2 degrees of
    freedom, the two-sided tail of Student's t is the regularized
    incomplete beta I(nu/2, 1/2) evaluated at nu / (nu + t^2).
    """
    if len(x) != len(y):
        raise DomainError(f"series length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 3:
        raise DomainError(f"need at least 3 paired observations, got {n}")
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    xd = xs - xs.mean()
    yd = ys - ys.mean()
    sxx = float(xd @ xd)
    syy = float(yd @ yd)
    if sxx == 0.0 or syy == 0.0:
        raise DomainError("correlation is undefined when a series is constant")
    rho = float(xd @ yd) / math.sqrt(sxx * syy)
    rho = max(-1.0, min(1.0, rho))
    dof = n - 2
    if abs(rho) == 1.0:
        # The t statistic diverges; the smallest positive double keeps the
        # p-value inside (0, 1].
        p_value = math.nextafter(0.0, 1.0)
    else:
        t_squared = rho * rho * dof / (1.0 - rho * rho)
        p_value = float(betainc(dof / 2.0, 0.5, dof / (dof + t_squared)))
        if p_value <= 0.0:
            p_value = math.nextafter(0.0, 1.0)
        p_value = min(p_value, 1.0)
    return CorrelationResult(rho=rho, n=n, p_value=p_value)


@dataclass(frozen=True)
class BatchStats:
    mean: float
    median: float
    std_dev: float
    min: float
    max: float


def batch_stats(values: Sequence[float]) -> BatchStats:
    """Mean, median, sample standard deviation (n - 1), min, and max.

    A single observation has no dispersion, so its std_dev is 0.0.
    """
    if len(values) == 0:
        raise DomainError("cannot summarize an empty batch")
    data = np.asarray(values, dtype=float)
    std_dev = float(data.std(ddof=1)) if data.size > 1 else 0.0
    return BatchStats(
        mean=float(data.mean()),
        median=float(np.median(data)),
        std_dev=std_dev,
        min=float(data.min()),
        max=float(data.max()),
    )


# ---------------------------------------------------------------------------
# citation curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CitationCurves:
    """Plot-ready rank-frequency curves for one entity.

    ``g`` holds per-paper citation counts sorted descending; ``f`` holds the
    counts with self-citations removed, sorted descending independently. The
    area under g is C, the area under f is C - SC, and the intersection of
    each curve with the diagonal is the corresponding h-index.
    """

    g: tuple[int, ...]
    f: tuple[int, ...]

    def to_csv(self) -> str:
        """CSV with header ``rank,g,f`` and one row per paper rank."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "g", "f"])
        for position, (g_value, f_value) in enumerate(zip(self.g, self.f), start=1):
            writer.writerow([position, g_value, f_value])
        return out.getvalue()


def export_citation_curves(aggregate: EntityAggregate) -> CitationCurves:
    """Build both citation curves from an entity's per-paper counts."""
    if not aggregate.per_paper:
        raise DomainError(f"entity {aggregate.entity_id!r} has no papers to chart")
    g = sorted((item.citations_received for item in aggregate.per_paper), reverse=True)
    f = sorted(
        (item.citations_received - item.self_citations_received for item in aggregate.per_paper),
        reverse=True,
    )
    return CitationCurves(g=tuple(g), f=tuple(f))


# ---------------------------------------------------------------------------
# table rendering
# ---------------------------------------------------------------------------

def _table_cells(ranked: RankedRow) -> list[str]:
    row = ranked.row
    counts = row.counts
    return [
        row.entity_id,
        str(counts.citable_documents),
        str(ranked.rank_by_cd),
        str(counts.citations_total),
        str(counts.self_citations),
        fmt3(row.c_p),
        str(counts.h_index),
        str(ranked.rank_by_h),
        "" if row.h_star is None else str(row.h_star),
        fmt3(row.v_rate),
        fmt3(row.v_p),
        fmt3(row.v_index),
        str(ranked.rank_by_v),
        fmt3(row.ratio),
    ]


def render_table(table: RankedTable, format: TableFormat = "csv") -> str:
    """Render a ranked table as CSV or a Markdown pipe table.

    The column order is fixed, reals carry exactly three decimals, and a
    missing h* leaves its cell empty. Equal tables render to identical
    bytes.
    """
    body = [_table_cells(ranked) for ranked in table.rows]
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(body)
        return out.getvalue()
    if format == "markdown":
        lines = [
            "| " + " | ".join(TABLE_COLUMNS) + " |",
            "| " + " | ".join("---" for _ in TABLE_COLUMNS) + " |",
        ]
        for cells in body:
            escaped = [cell.replace("|", "\\|") for cell in cells]
            lines.append("| " + " | ".join(escaped) + " |")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown table format {format!r}")
