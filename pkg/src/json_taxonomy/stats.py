"""Aggregate statistics over a parsed document.

Everything downstream (taxonomy, report) is a pure function of the
numbers computed here: counts and byte-sizes per content class, per
non-root level, document height, and duplicate counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import DocumentValue, ValueKind
from .serialize import escape_string, minify, render_number, scalar_size


class ValueClass(Enum):
    """Content class of a node; booleans and nulls share one class."""

    TEXTUAL = "textual"
    NUMERIC = "numeric"
    BOOLEANISH = "booleanish"
    STRUCTURAL = "structural"

    @property
    def label(self) -> str:
        """External display name (used in qualifiers and reports)."""
        return "boolean" if self is ValueClass.BOOLEANISH else self.value


SCALAR_CLASSES = (ValueClass.TEXTUAL, ValueClass.NUMERIC, ValueClass.BOOLEANISH)

_KIND_TO_CLASS = {
    ValueKind.STRING: ValueClass.TEXTUAL,
    ValueKind.NUMBER: ValueClass.NUMERIC,
    ValueKind.BOOLEAN: ValueClass.BOOLEANISH,
    ValueKind.NULL: ValueClass.BOOLEANISH,
    ValueKind.OBJECT: ValueClass.STRUCTURAL,
    ValueKind.ARRAY: ValueClass.STRUCTURAL,
}


def value_class_of(node: DocumentValue) -> ValueClass:
    return _KIND_TO_CLASS[node.kind]


@dataclass(frozen=True, slots=True)
class ClassAggregate:
    """Count, byte-size and duplicate count for one content class.

    For scalar classes ``byte_size`` sums each node's own minified
    bytes; for the structural class it sums structural overhead only
    (braces, brackets, commas, colons and quoted keys).
    """

    count: int = 0
    byte_size: int = 0
    duplicates: int = 0


@dataclass(frozen=True, slots=True)
class LevelAggregate:
    """Per-level figures for one non-root level (1..height).

    ``scalar_byte_size`` counts textual, numeric and booleanish bytes
    only; structural overhead never contributes.
    """

    level: int
    value_count: int
    scalar_byte_size: int


@dataclass(frozen=True, slots=True)
class DocumentStats:
    minified_size: int
    total_values: int
    height: int
    total_duplicates: int
    per_class: dict[ValueClass, ClassAggregate]
    per_level: tuple[LevelAggregate, ...]
    largest_level: int


def height(root: DocumentValue) -> int:
    """Maximum level over all nodes; a bare scalar or empty composite
    root has height 0."""
    return max(node.level for node in root.walk())


def value_equals(a: DocumentValue, b: DocumentValue) -> bool:
    """True iff the two nodes minify to identical bytes."""
    return minify(a) == minify(b)


def count_duplicates(root: DocumentValue) -> dict[ValueClass, int]:
    """Duplicate counts per class over every node, root included.

    Nodes are grouped by (class, minified serialization); a group of n
    equal nodes contributes n-1 duplicates. Composite equality is deep
    and order-sensitive. Serializations are built bottom-up so each
    subtree is rendered once.
    """
    groups: dict[tuple[ValueClass, str], int] = {}
    rendered: dict[int, str] = {}
    # Post-order: children before parents, so parents can concatenate.
    order: list[DocumentValue] = list(root.walk())
    for node in reversed(order):
        if node.kind is ValueKind.OBJECT:
            body = ",".join(
                escape_string(key) + ":" + rendered[id(value)]
                for key, value in node.entries
            )
            text = "{" + body + "}"
        elif node.kind is ValueKind.ARRAY:
            text = "[" + ",".join(rendered[id(item)] for item in node.items) + "]"
        elif node.kind is ValueKind.STRING:
            text = escape_string(node.text or "")
        elif node.kind is ValueKind.NUMBER:
            text = render_number(node.number or 0.0)
        elif node.kind is ValueKind.BOOLEAN:
            text = "true" if node.truth else "false"
        else:
            text = "null"
        rendered[id(node)] = text
        key = (value_class_of(node), text)
        groups[key] = groups.get(key, 0) + 1

    duplicates = {cls: 0 for cls in ValueClass}
    for (cls, _), count in groups.items():
        duplicates[cls] += count - 1
    return duplicates


def compute_stats(root: DocumentValue) -> DocumentStats:
    """All aggregate statistics for one document; deterministic for
    equal trees."""
    counts = {cls: 0 for cls in ValueClass}
    byte_sizes = {cls: 0 for cls in ValueClass}
    level_counts: dict[int, int] = {}
    level_scalar_bytes: dict[int, int] = {}
    max_level = 0

    for node in root.walk():
        cls = value_class_of(node)
        counts[cls] += 1
        if node.is_scalar:
            byte_sizes[cls] += scalar_size(node)
        else:
            overhead = node.serialized_size - sum(
                child.serialized_size for child in node.children
            )
            byte_sizes[cls] += overhead
        if node.level > max_level:
            max_level = node.level
        if node.level > 0:
            level_counts[node.level] = level_counts.get(node.level, 0) + 1
            if node.is_scalar:
                level_scalar_bytes[node.level] = (
                    level_scalar_bytes.get(node.level, 0) + scalar_size(node)
                )

    duplicates = count_duplicates(root)
    per_class = {
        cls: ClassAggregate(counts[cls], byte_sizes[cls], duplicates[cls])
        for cls in ValueClass
    }
    per_level = tuple(
        LevelAggregate(
            level, level_counts[level], level_scalar_bytes.get(level, 0)
        )
        for level in range(1, max_level + 1)
    )

    # Deeper level wins a byte-size tie; 0 when no non-root scalar bytes.
    largest_level = 0
    largest_bytes = 0
    for aggregate in per_level:
        if aggregate.scalar_byte_size > 0 and aggregate.scalar_byte_size >= largest_bytes:
            largest_level = aggregate.level
            largest_bytes = aggregate.scalar_byte_size

    return DocumentStats(
        minified_size=root.serialized_size,
        total_values=sum(counts.values()),
        height=max_level,
        total_duplicates=sum(duplicates.values()),
        per_class=per_class,
        per_level=per_level,
        largest_level=largest_level,
    )
