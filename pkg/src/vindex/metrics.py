"""Self-citation-aware impact metrics.

The central quantity is the virtuosity rate, the fraction of an entity's
citations that come from outside the entity itself. The v-index discounts
the h-index by the square root of that rate, so an author with no
self-citations keeps their h unchanged while heavy self-citers shrink
toward zero. A small closed family of alternative discount weights is
provided for sensitivity analysis.

Everything here is a pure function of its arguments: no I/O, no shared
state. Counts are exact integers; derived metrics are IEEE doubles and
rounding for display is left to the renderer.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

__all__ = [
    "CitationCounts",
    "WeightFunction",
    "MetricsRow",
    "h_index",
    "v_rate",
    "v_index",
    "generalized_v_index",
    "citations_per_publication",
    "adjusted_citations_per_publication",
    "metrics_row",
]


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

_COUNT_FIELDS = ("citations_total", "self_citations", "citable_documents", "h_index")


@dataclass(frozen=True)
class CitationCounts:
    """Aggregate citation statistics for one author, venue, or country.

    ``citations_total`` (C) counts every citation received, ``self_citations``
    (SC) the subset coming from the entity itself, ``citable_documents`` (CD)
    the publications able to receive citations, and ``h_index`` the h-index
    observed over all citations, self-citations included.
    """

    citations_total: int
    self_citations: int
    citable_documents: int
    h_index: int

    def __post_init__(self) -> None:
        for name in _COUNT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise DomainError(f"{name} must be >= 0, got {value}")
        if self.self_citations > self.citations_total:
            raise DomainError(
                f"self_citations ({self.self_citations}) exceed "
                f"citations_total ({self.citations_total})"
            )
        if self.h_index > self.citable_documents:
            raise DomainError(
                f"h_index ({self.h_index}) exceeds "
                f"citable_documents ({self.citable_documents})"
            )


_POWER_KINDS = ("power_concave", "power_convex")
_WEIGHT_KINDS = ("canonical_sqrt", "unity", "linear") + _POWER_KINDS


@dataclass(frozen=True)
class WeightFunction:
    """A discount weight f mapping [0, 1] into [0, 1].

    The family is closed by construction: the canonical square root, the
    constant 1 (which recovers the plain h-index), the identity, and the
    integer power laws x^(1/n) (concave, milder than sqrt for n > 2) and
    x^n (convex, harsher than the identity) with n >= 2. Every member is
    non-decreasing and fixes f(1) = 1, so a clean record is never penalized.
    """

    kind: str
    exponent: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _WEIGHT_KINDS:
            raise DomainError(f"unknown weight kind {self.kind!r}")
        if self.kind in _POWER_KINDS:
            exp = self.exponent
            if isinstance(exp, bool) or not isinstance(exp, int) or exp < 2:
                raise DomainError("power weights need an integer exponent >= 2")
        elif self.exponent is not None:
            raise DomainError(f"weight kind {self.kind!r} takes no exponent")

    # -- constructors -------------------------------------------------------

    @classmethod
    def sqrt(cls) -> WeightFunction:
        return cls("canonical_sqrt")

    @classmethod
    def unity(cls) -> WeightFunction:
        return cls("unity")

    @classmethod
    def linear(cls) -> WeightFunction:
        return cls("linear")

    @classmethod
    def concave(cls, n: int) -> WeightFunction:
        return cls("power_concave", n)

    @classmethod
    def convex(cls, n: int) -> WeightFunction:
        return cls("power_convex", n)

    @classmethod
    def parse(cls, spec: str) -> WeightFunction:
        """Parse a weight spec string.

        Accepted forms: "sqrt", "unity", "linear", "x^N" and "x^(1/N)" with
        integer N >= 2. Anything else raises DomainError.
        """
        text = spec.strip().lower()
        if text == "sqrt":
            return cls.sqrt()
        if text == "unity":
            return cls.unity()
        if text == "linear":
            return cls.linear()
        match = re.fullmatch(r"x\^\(1/(\d+)\)", text)
        if match:
            n = int(match.group(1))
            if n < 2:
                raise DomainError(f"weight spec {spec!r}: exponent must be >= 2 (use 'linear' for 1)")
            return cls.concave(n)
        match = re.fullmatch(r"x\^(\d+)", text)
        if match:
            n = int(match.group(1))
            if n < 2:
                raise DomainError(f"weight spec {spec!r}: exponent must be >= 2 (use 'linear' for 1)")
            return cls.convex(n)
        raise DomainError(
            f"unrecognized weight spec {spec!r}; expected 'sqrt', 'unity', "
            "'linear', 'x^N' or 'x^(1/N)' with integer N >= 2"
        )

    @property
    def spec(self) -> str:
        """The canonical spec string, the inverse of :meth:`parse`."""
        if self.kind == "canonical_sqrt":
            return "sqrt"
        if self.kind == "unity":
            return "unity"
        if self.kind == "linear":
            return "linear"
        if self.kind == "power_concave":
            return f"x^(1/{self.exponent})"
        return f"x^{self.exponent}"

    def __call__(self, x: float) -> float:
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"weight argument must lie in [0, 1], got {x!r}")
        if self.kind == "canonical_sqrt":
            return math.sqrt(x)
        if self.kind == "unity":
            return 1.0
        if self.kind == "linear":
            return float(x)
        if self.kind == "power_concave":
            assert self.exponent is not None
            return float(x) ** (1.0 / self.exponent)
        assert self.exponent is not None
        return float(x) ** self.exponent


@dataclass(frozen=True)
class MetricsRow:
    """Every derived metric for one entity, ready for ranking and rendering.

    ``h_star`` is the h-index recomputed after dropping self-citations from
    each paper's count. It needs a full citation graph, so rows built from
    pre-aggregated statistics leave it None.
    """

    entity_id: str
    counts: CitationCounts
    v_rate: float
    c_p: float
    v_p: float
    v_index: float
    ratio: float
    h_star: int | None = None


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def h_index(citations_per_paper: Iterable[int]) -> int:
    """Largest h such that at least h papers have h or more citations each.

    The empty collection yields 0.
    """
    counts = sorted(citations_per_paper, reverse=True)
    h = 0
    for position, received in enumerate(counts, start=1):
        if received >= position:
            h = position
        else:
            break
    return h


def _check_citation_pair(citations: int, self_citations: int) -> None:
    if citations < 0 or self_citations < 0:
        raise DomainError(
            f"citation counts must be >= 0, got C={citations}, SC={self_citations}"
        )
    if self_citations > citations:
        raise DomainError(
            f"self-citations ({self_citations}) exceed total citations ({citations})"
        )


def v_rate(citations: int, self_citations: int) -> float:
    """Fraction of received citations that are genuine: (C - SC) / C.

    An entity nobody has cited has nothing to answer for, so C = 0 maps to 1.
    """
    _check_citation_pair(citations, self_citations)
    if citations == 0:
        return 1.0
    return (citations - self_citations) / citations


def v_index(h: int, citations: int, self_citations: int) -> float:
    """The h-index discounted by the square root of the virtuosity rate.

    The square root is not arbitrary: removing a fraction k of citations
    uniformly from a power-law citation record shrinks the h-index by the
    factor sqrt(1 - k), so h * sqrt((C - SC) / C) estimates the h-index the
    entity would have without its self-citations.
    """
    if h < 0:
        raise DomainError(f"h must be >= 0, got {h}")
    return h * math.sqrt(v_rate(citations, self_citations))


def generalized_v_index(h: int, rate: float, weight: WeightFunction) -> float:
    """The discounted index f(rate) * h for any weight in the closed family."""
    if h < 0:
        raise DomainError(f"h must be >= 0, got {h}")
    if not 0.0 <= rate <= 1.0:
        raise DomainError(f"rate must lie in [0, 1], got {rate!r}")
    return weight(rate) * h


def citations_per_publication(citations: int, citable_documents: int) -> float:
    """Average citations per citable document, C / CD."""
    if citations < 0:
        raise DomainError(f"citations must be >= 0, got {citations}")
    if citable_documents <= 0:
        raise DomainError("an entity needs at least one citable document")
    return citations / citable_documents


def adjusted_citations_per_publication(
    citations: int, self_citations: int, citable_documents: int
) -> float:
    """Citations per document after removing self-citations, (C - SC) / CD."""
    _check_citation_pair(citations, self_citations)
    if citable_documents <= 0:
        raise DomainError("an entity needs at least one citable document")
    return (citations - self_citations) / citable_documents


_DEFAULT_WEIGHT = WeightFunction.sqrt()


def metrics_row(
    entity_id: str,
    counts: CitationCounts,
    weight: WeightFunction = _DEFAULT_WEIGHT,
) -> MetricsRow:
    """Assemble the full metric set for one entity from its aggregate counts.

    The ratio column is v_index / h, a direct read of how much the discount
    cost the entity; h = 0 leaves nothing to discount, so the ratio is 1
    there. ``h_star`` stays None because it cannot be derived from aggregate
    counts; pipelines that own the citation graph attach it afterwards with
    ``dataclasses.replace``.
    """
    rate = v_rate(counts.citations_total, counts.self_citations)
    index = generalized_v_index(counts.h_index, rate, weight)
    ratio = index / counts.h_index if counts.h_index > 0 else 1.0
    return MetricsRow(
        entity_id=entity_id,
        counts=counts,
        v_rate=rate,
        c_p=citations_per_publication(counts.citations_total, counts.citable_documents),
        v_p=adjusted_citations_per_publication(
            counts.citations_total, counts.self_citations, counts.citable_documents
        ),
        v_index=index,
        ratio=ratio,
    )
