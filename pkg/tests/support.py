"""Shared test helpers: a seeded random document generator, independent
brute-force oracles, and the recorded statistics of the eleven
demonstration documents used for table-driven classification checks.

The oracles deliberately avoid the library's serialization and grouping
code paths: duplicate counting is O(n^2) pairwise deep equality, height
and counts are recomputed from plain Python values.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from json_taxonomy.model import DocumentValue, ValueKind
from json_taxonomy.stats import ValueClass

# ---------------------------------------------------------------------------
# Random document generation (plain Python values -> JSON text)

WORDS = [
    "auth",
    "form",
    "nav",
    "on",
    "x",
    "",
    "space bar",
    "café",
    "データ",
    "🚀",
    "line\nbreak",
    'quote"and\\slash',
    "tab\there",
]

NUMBERS = [0, 1, -1, 2, 7, 10, 100, 1000, -99, 3.5, -0.25, 0.1, 123.456, 1e6, 2.5e-3]

SCALARS = [True, False, None, *WORDS, *NUMBERS]


def count_nodes(value) -> int:
    if isinstance(value, dict):
        return 1 + sum(count_nodes(child) for child in value.values())
    if isinstance(value, list):
        return 1 + sum(count_nodes(child) for child in value)
    return 1


def random_value(rng: random.Random, budget: int, depth: int = 0):
    """A random JSON value using at most ``budget`` nodes."""
    if budget <= 1 or depth >= 6 or rng.random() < 0.3:
        return rng.choice(SCALARS)
    remaining = budget - 1
    children: list = []
    while remaining > 0 and len(children) < 6 and rng.random() < 0.8:
        size = rng.randint(1, remaining)
        child = random_value(rng, size, depth + 1)
        remaining -= count_nodes(child)
        children.append(child)
    if rng.random() < 0.5:
        return children
    keys = rng.sample(range(100), len(children))
    return {f"k{key}": child for key, child in zip(keys, children)}


def random_document_text(rng: random.Random, max_nodes: int = 50) -> str:
    """JSON text for a random document with varied whitespace style."""
    value = random_value(rng, rng.randint(1, max_nodes))
    style = rng.randrange(4)
    if style == 0:
        return json.dumps(value, separators=(",", ":"))
    if style == 1:
        return json.dumps(value, indent=2)
    if style == 2:
        return json.dumps(value, separators=(" , ", " : "), ensure_ascii=True)
    return json.dumps(value)


def document_corpus(seed: int, size: int, max_nodes: int = 50) -> list[str]:
    rng = random.Random(seed)
    return [random_document_text(rng, max_nodes) for _ in range(size)]


# ---------------------------------------------------------------------------
# Independent oracles

_ORACLE_CLASS = {
    ValueKind.STRING: ValueClass.TEXTUAL,
    ValueKind.NUMBER: ValueClass.NUMERIC,
    ValueKind.BOOLEAN: ValueClass.BOOLEANISH,
    ValueKind.NULL: ValueClass.BOOLEANISH,
    ValueKind.OBJECT: ValueClass.STRUCTURAL,
    ValueKind.ARRAY: ValueClass.STRUCTURAL,
}


def oracle_nodes(root: DocumentValue) -> list[DocumentValue]:
    collected: list[DocumentValue] = []
    pending = [root]
    while pending:
        node = pending.pop()
        collected.append(node)
        if node.kind is ValueKind.OBJECT:
            pending.extend(value for _, value in node.entries)
        elif node.kind is ValueKind.ARRAY:
            pending.extend(node.items)
    return collected


def oracle_deep_equal(a: DocumentValue, b: DocumentValue) -> bool:
    """Order-sensitive structural equality on decoded payloads.

    Assumes finite numbers (the generators never emit infinities).
    """
    if a.kind is not b.kind:
        return False
    if a.kind is ValueKind.OBJECT:
        if len(a.entries) != len(b.entries):
            return False
        return all(
            ka == kb and oracle_deep_equal(va, vb)
            for (ka, va), (kb, vb) in zip(a.entries, b.entries)
        )
    if a.kind is ValueKind.ARRAY:
        if len(a.items) != len(b.items):
            return False
        return all(oracle_deep_equal(x, y) for x, y in zip(a.items, b.items))
    if a.kind is ValueKind.STRING:
        return a.text == b.text
    if a.kind is ValueKind.NUMBER:
        return a.number == b.number
    if a.kind is ValueKind.BOOLEAN:
        return a.truth == b.truth
    return True  # null


def oracle_count_duplicates(root: DocumentValue) -> dict[ValueClass, int]:
    """O(n^2) pairwise duplicate count: every node equal to an earlier
    node of the same class counts once."""
    nodes = oracle_nodes(root)
    classes = [_ORACLE_CLASS[node.kind] for node in nodes]
    duplicates = {cls: 0 for cls in ValueClass}
    for i, node in enumerate(nodes):
        for j in range(i):
            if classes[j] is classes[i] and oracle_deep_equal(nodes[j], node):
                duplicates[classes[i]] += 1
                break
    return duplicates


def oracle_height(value) -> int:
    """Height recomputed from a plain Python value."""
    if isinstance(value, dict):
        return 0 if not value else 1 + max(oracle_height(v) for v in value.values())
    if isinstance(value, list):
        return 0 if not value else 1 + max(oracle_height(v) for v in value)
    return 0


def oracle_class_counts(value) -> dict[ValueClass, int]:
    """Per-class node counts recomputed from a plain Python value."""
    counts = {cls: 0 for cls in ValueClass}

    def visit(node) -> None:
        if isinstance(node, dict):
            counts[ValueClass.STRUCTURAL] += 1
            for child in node.values():
                visit(child)
        elif isinstance(node, list):
            counts[ValueClass.STRUCTURAL] += 1
            for child in node:
                visit(child)
        elif isinstance(node, bool) or node is None:
            counts[ValueClass.BOOLEANISH] += 1
        elif isinstance(node, (int, float)):
            counts[ValueClass.NUMERIC] += 1
        else:
            counts[ValueClass.TEXTUAL] += 1

    visit(value)
    return counts


def whitespace_outside_strings(text: str) -> list[str]:
    """Whitespace characters appearing outside string literals."""
    found: list[str] = []
    in_string = False
    escaped = False
    for ch in text:
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch in " \t\n\r\f\v":
            found.append(ch)
    return found


# ---------------------------------------------------------------------------
# Recorded statistics of the eleven demonstration documents


@dataclass(frozen=True)
class RecordedDocument:
    name: str
    minified_size: int
    total_values: int
    height: int
    duplicates: int
    largest_level: int
    dominant: ValueClass
    tier_qualifier: str
    content_label: str
    redundancy_label: str
    nesting_label: str
    acronym: str


RECORDED_DOCUMENTS = [
    RecordedDocument(
        "task-runner-clean", 92, 10, 3, 3, 2, ValueClass.TEXTUAL,
        "tier 1 minified < 100 bytes", "textual", "redundant", "flat", "TTRF",
    ),
    RecordedDocument(
        "ci-matrix", 94, 13, 9, 0, 9, ValueClass.NUMERIC,
        "tier 1 minified < 100 bytes", "numeric", "non-redundant", "nested", "TNNN",
    ),
    RecordedDocument(
        "linter-basic", 66, 5, 4, 0, 4, ValueClass.BOOLEANISH,
        "tier 1 minified < 100 bytes", "boolean", "non-redundant", "nested", "TBNN",
    ),
    RecordedDocument(
        "entry-point-manifest", 519, 32, 4, 10, 3, ValueClass.TEXTUAL,
        "tier 2 minified >= 100 < 1000 bytes", "textual", "redundant", "nested", "STRN",
    ),
    RecordedDocument(
        "ci-notifications", 672, 16, 3, 12, 3, ValueClass.TEXTUAL,
        "tier 2 minified >= 100 < 1000 bytes", "textual", "redundant", "flat", "STRF",
    ),
    RecordedDocument(
        "geo-polygon", 189, 53, 5, 21, 5, ValueClass.NUMERIC,
        "tier 2 minified >= 100 < 1000 bytes", "numeric", "redundant", "nested", "SNRN",
    ),
    RecordedDocument(
        "funding-empty", 182, 11, 1, 8, 1, ValueClass.BOOLEANISH,
        "tier 2 minified >= 100 < 1000 bytes", "boolean", "redundant", "flat", "SBRF",
    ),
    RecordedDocument(
        "package-manifest", 2258, 72, 3, 3, 1, ValueClass.TEXTUAL,
        "tier 3 minified >= 1000 bytes", "textual", "non-redundant", "flat", "LTNF",
    ),
    RecordedDocument(
        "resume-example", 3047, 99, 4, 2, 3, ValueClass.TEXTUAL,
        "tier 3 minified >= 1000 bytes", "textual", "non-redundant", "nested", "LTNN",
    ),
    RecordedDocument(
        "linter-config", 1140, 54, 4, 39, 2, ValueClass.NUMERIC,
        "tier 3 minified >= 1000 bytes", "numeric", "redundant", "flat", "LNRF",
    ),
    RecordedDocument(
        "browser-automation-config", 1506, 66, 3, 42, 1, ValueClass.BOOLEANISH,
        "tier 3 minified >= 1000 bytes", "boolean", "redundant", "flat", "LBRF",
    ),
]

# The 36 named categories: tier letter x content letter x redundancy x nesting.
ALL_ACRONYMS = {
    "TNRF", "TNRN", "TNNF", "TNNN", "TTRF", "TTRN", "TTNF", "TTNN",
    "TBRF", "TBRN", "TBNF", "TBNN",
    "SNRF", "SNRN", "SNNF", "SNNN", "STRF", "STRN", "STNF", "STNN",
    "SBRF", "SBRN", "SBNF", "SBNN",
    "LNRF", "LNRN", "LNNF", "LNNN", "LTRF", "LTRN", "LTNF", "LTNN",
    "LBRF", "LBRN", "LBNF", "LBNN",
}
