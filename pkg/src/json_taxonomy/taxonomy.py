"""Classification of a document into size, content, redundancy and
nesting categories, with the canonical qualifier strings and four-letter
acronyms.

All threshold comparisons use exact integer arithmetic; rounded
percentages are display-only and never feed a classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import DocumentValue
from .stats import (
    SCALAR_CLASSES,
    ClassAggregate,
    DocumentStats,
    ValueClass,
    compute_stats,
)


class SizeTier(Enum):
    TIER1 = "tier1"
    TIER2 = "tier2"
    TIER3 = "tier3"


class Redundancy(Enum):
    REDUNDANT = "redundant"
    NON_REDUNDANT = "non-redundant"


class Nesting(Enum):
    FLAT = "flat"
    NESTED = "nested"


TIER_QUALIFIERS = {
    SizeTier.TIER1: "tier 1 minified < 100 bytes",
    SizeTier.TIER2: "tier 2 minified >= 100 < 1000 bytes",
    SizeTier.TIER3: "tier 3 minified >= 1000 bytes",
}

_TIER_LETTERS = {SizeTier.TIER1: "T", SizeTier.TIER2: "S", SizeTier.TIER3: "L"}
_CLASS_LETTERS = {
    ValueClass.TEXTUAL: "T",
    ValueClass.NUMERIC: "N",
    ValueClass.BOOLEANISH: "B",
}

NO_ACRONYM_STRUCTURAL = "no acronym: structural"

SIZE_TIER2_THRESHOLD = 100
SIZE_TIER3_THRESHOLD = 1000
NESTING_PRODUCT_THRESHOLD = 10
STRUCTURAL_NESTED_HEIGHT = 5


@dataclass(frozen=True, slots=True)
class ContentProfile:
    """Qualifying content classes with their count-times-bytes scores.

    ``qualifying`` is a nonempty ordered subset of the scalar classes,
    or the structural singleton when the document holds no scalar
    values at all.
    """

    qualifying: tuple[ValueClass, ...]
    scores: dict[ValueClass, int]

    @property
    def is_structural(self) -> bool:
        return self.qualifying == (ValueClass.STRUCTURAL,)

    @property
    def primary(self) -> ValueClass:
        return self.qualifying[0]


@dataclass(frozen=True, slots=True)
class TaxonomyLabel:
    tier: SizeTier
    content: ContentProfile
    redundancy: Redundancy
    nesting: Nesting
    qualifiers: tuple[str, ...]
    acronym: str | None


def classify_size(minified_size: int) -> SizeTier:
    """Boundary sizes belong to the upper tier."""
    if minified_size < SIZE_TIER2_THRESHOLD:
        return SizeTier.TIER1
    if minified_size < SIZE_TIER3_THRESHOLD:
        return SizeTier.TIER2
    return SizeTier.TIER3


def classify_content(per_class: dict[ValueClass, ClassAggregate]) -> ContentProfile:
    """Score each scalar class as count times cumulative byte-size; a
    class qualifies when present and its score is no smaller than the
    other two. Several classes can qualify at once; a document with no
    scalar values is structural."""
    scores = {
        cls: per_class[cls].count * per_class[cls].byte_size
        for cls in SCALAR_CLASSES
    }
    if all(per_class[cls].count == 0 for cls in SCALAR_CLASSES):
        return ContentProfile((ValueClass.STRUCTURAL,), scores)
    qualifying = tuple(
        cls
        for cls in SCALAR_CLASSES
        if per_class[cls].count >= 1
        and all(scores[cls] >= scores[other] for other in SCALAR_CLASSES if other is not cls)
    )
    return ContentProfile(qualifying, scores)


def classify_redundancy(total_duplicates: int, total_values: int) -> Redundancy:
    """Redundant when duplicates make up at least a quarter of all
    values; exact integer cross-multiplication, no floating point."""
    if total_values < 1:
        raise ValueError("total_values must be at least 1")
    if 4 * total_duplicates >= total_values:
        return Redundancy.REDUNDANT
    return Redundancy.NON_REDUNDANT


def classify_nesting(stats: DocumentStats, content: ContentProfile) -> Nesting:
    """Nested when height times largest level reaches 10, or for
    structural documents of height 5 and up."""
    if content.is_structural and stats.height >= STRUCTURAL_NESTED_HEIGHT:
        return Nesting.NESTED
    if stats.height * stats.largest_level >= NESTING_PRODUCT_THRESHOLD:
        return Nesting.NESTED
    return Nesting.FLAT


def qualifiers_for(
    tier: SizeTier,
    content: ContentProfile,
    redundancy: Redundancy,
    nesting: Nesting,
) -> tuple[str, ...]:
    return (
        TIER_QUALIFIERS[tier],
        *(cls.label for cls in content.qualifying),
        redundancy.value,
        nesting.value,
    )


def acronym_for(
    tier: SizeTier,
    content: ContentProfile,
    redundancy: Redundancy,
    nesting: Nesting,
) -> str | None:
    """Four-letter code; absent for structural documents, which sit
    outside the 36 named categories. Multi-class ties use the first
    qualifying class."""
    if content.is_structural:
        return None
    return (
        _TIER_LETTERS[tier]
        + _CLASS_LETTERS[content.primary]
        + ("R" if redundancy is Redundancy.REDUNDANT else "N")
        + ("F" if nesting is Nesting.FLAT else "N")
    )


def label_from_parts(
    tier: SizeTier,
    content: ContentProfile,
    redundancy: Redundancy,
    nesting: Nesting,
) -> TaxonomyLabel:
    return TaxonomyLabel(
        tier=tier,
        content=content,
        redundancy=redundancy,
        nesting=nesting,
        qualifiers=qualifiers_for(tier, content, redundancy, nesting),
        acronym=acronym_for(tier, content, redundancy, nesting),
    )


def classify_stats(stats: DocumentStats) -> TaxonomyLabel:
    tier = classify_size(stats.minified_size)
    content = classify_content(stats.per_class)
    redundancy = classify_redundancy(stats.total_duplicates, stats.total_values)
    nesting = classify_nesting(stats, content)
    return label_from_parts(tier, content, redundancy, nesting)


def classify(root: DocumentValue) -> TaxonomyLabel:
    """Full classification of a parsed document."""
    return classify_stats(compute_stats(root))
