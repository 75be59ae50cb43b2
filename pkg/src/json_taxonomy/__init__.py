"""Structural statistics and taxonomy classification for JSON documents.

Parse a document into an annotated tree, compute size/content/
redundancy/nesting statistics over its minified UTF-8 form, and
classify it into one of 36 categories.
"""

__version__ = "0.1.0"

from .model import DocumentSyntaxError, DocumentValue, ParseFailure, ValueKind
from .parsing import parse, parse_bytes
from .report import AnalysisReport, build_report, report_to_dict, serialize_report
from .serialize import minify, scalar_size
from .stats import (
    ClassAggregate,
    DocumentStats,
    LevelAggregate,
    ValueClass,
    compute_stats,
    count_duplicates,
    height,
    value_equals,
)
from .taxonomy import (
    ContentProfile,
    Nesting,
    Redundancy,
    SizeTier,
    TaxonomyLabel,
    classify,
    classify_content,
    classify_nesting,
    classify_redundancy,
    classify_size,
)

__all__ = [
    "AnalysisReport",
    "ClassAggregate",
    "ContentProfile",
    "DocumentStats",
    "DocumentSyntaxError",
    "DocumentValue",
    "LevelAggregate",
    "Nesting",
    "ParseFailure",
    "Redundancy",
    "SizeTier",
    "TaxonomyLabel",
    "ValueClass",
    "ValueKind",
    "build_report",
    "classify",
    "classify_content",
    "classify_nesting",
    "classify_redundancy",
    "classify_size",
    "compute_stats",
    "count_duplicates",
    "height",
    "minify",
    "parse",
    "parse_bytes",
    "report_to_dict",
    "scalar_size",
    "serialize_report",
    "value_equals",
]
