"""The five ordered analysis sections, serializable to a stable JSON
schema consumed by the CLI, the HTTP service and the web UI.

Schema (camelCase, versioned): schemaVersion, classification,
contentDistribution (byCount/byBytes), summary, byClass, byLevel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .model import DocumentValue
from .stats import DocumentStats, LevelAggregate, ValueClass, compute_stats
from .taxonomy import TaxonomyLabel, classify_stats

SCHEMA_VERSION = 1

# Section and row order is fixed; classes always appear in this order.
CLASS_ORDER = (
    ValueClass.TEXTUAL,
    ValueClass.NUMERIC,
    ValueClass.BOOLEANISH,
    ValueClass.STRUCTURAL,
)


@dataclass(frozen=True, slots=True)
class ContentDistribution:
    """Value-count and minified-byte shares per content class.

    Counts sum to the total value count; bytes sum to the minified
    size, with structural overhead bytes assigned to the structural
    class."""

    by_count: dict[ValueClass, int]
    by_bytes: dict[ValueClass, int]


@dataclass(frozen=True, slots=True)
class Summary:
    minified_size: int
    total_values: int
    height: int
    duplicated_values: int


@dataclass(frozen=True, slots=True)
class ClassRow:
    value_class: ValueClass
    count: int
    byte_size: int
    duplicates: int
    duplicate_percent: float


@dataclass(frozen=True, slots=True)
class AnalysisReport:
    classification: TaxonomyLabel
    content_distribution: ContentDistribution
    summary: Summary
    by_class: tuple[ClassRow, ...]
    by_level: tuple[LevelAggregate, ...]


def build_report(root: DocumentValue) -> AnalysisReport:
    stats = compute_stats(root)
    return report_from_stats(stats)


def report_from_stats(stats: DocumentStats) -> AnalysisReport:
    label = classify_stats(stats)
    by_class = tuple(
        ClassRow(
            value_class=cls,
            count=stats.per_class[cls].count,
            byte_size=stats.per_class[cls].byte_size,
            duplicates=stats.per_class[cls].duplicates,
            duplicate_percent=_percent(
                stats.per_class[cls].duplicates, stats.per_class[cls].count
            ),
        )
        for cls in CLASS_ORDER
    )
    distribution = ContentDistribution(
        by_count={cls: stats.per_class[cls].count for cls in CLASS_ORDER},
        by_bytes={cls: stats.per_class[cls].byte_size for cls in CLASS_ORDER},
    )
    summary = Summary(
        minified_size=stats.minified_size,
        total_values=stats.total_values,
        height=stats.height,
        duplicated_values=stats.total_duplicates,
    )
    return AnalysisReport(
        classification=label,
        content_distribution=distribution,
        summary=summary,
        by_class=by_class,
        by_level=stats.per_level,
    )


def _percent(part: int, whole: int) -> float:
    """Display-only percentage, two decimals; classification never
    reads this."""
    if whole == 0:
        return 0.0
    return round(100.0 * part / whole, 2)


def report_to_dict(report: AnalysisReport) -> dict[str, Any]:
    label = report.classification
    return {
        "schemaVersion": SCHEMA_VERSION,
        "classification": {
            "qualifiers": list(label.qualifiers),
            "acronym": label.acronym,
        },
        "contentDistribution": {
            "byCount": {
                cls.label: report.content_distribution.by_count[cls]
                for cls in CLASS_ORDER
            },
            "byBytes": {
                cls.label: report.content_distribution.by_bytes[cls]
                for cls in CLASS_ORDER
            },
        },
        "summary": {
            "minifiedSize": report.summary.minified_size,
            "totalValues": report.summary.total_values,
            "height": report.summary.height,
            "duplicatedValues": report.summary.duplicated_values,
        },
        "byClass": [
            {
                "class": row.value_class.label,
                "count": row.count,
                "byteSize": row.byte_size,
                "duplicates": row.duplicates,
                "duplicatePercent": row.duplicate_percent,
            }
            for row in report.by_class
        ],
        "byLevel": [
            {
                "level": row.level,
                "valueCount": row.value_count,
                "scalarByteSize": row.scalar_byte_size,
            }
            for row in report.by_level
        ],
    }


def serialize_report(report: AnalysisReport) -> str:
    """Stable compact serialization; re-serializing the parsed output
    yields identical bytes."""
    return json.dumps(
        report_to_dict(report), ensure_ascii=False, separators=(",", ":"), allow_nan=False
    )
