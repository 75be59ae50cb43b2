"""Annotated JSON value tree.

Every node records its depth from the root and the UTF-8 byte length of
its minified serialization, which is the raw material for all statistics.
Nodes are frozen and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator


class ValueKind(Enum):
    STRING = "string"
    NUMBER = "number"
    BOOLEAN = "boolean"
    NULL = "null"
    OBJECT = "object"
    ARRAY = "array"


SCALAR_KINDS = frozenset({ValueKind.STRING, ValueKind.NUMBER, ValueKind.BOOLEAN, ValueKind.NULL})
COMPOSITE_KINDS = frozenset({ValueKind.OBJECT, ValueKind.ARRAY})


@dataclass(frozen=True, slots=True)
class DocumentValue:
    """One node of a parsed JSON document.

    Scalar kinds carry exactly one payload field; composites carry
    ``entries`` (objects, key order as parsed) or ``items`` (arrays).
    ``serialized_size`` includes delimiters, quoted keys and all
    descendants for composites.
    """

    kind: ValueKind
    level: int
    serialized_size: int
    text: str | None = None
    number: float | None = None
    truth: bool | None = None
    entries: tuple[tuple[str, "DocumentValue"], ...] = ()
    items: tuple["DocumentValue", ...] = field(default=())

    @property
    def is_scalar(self) -> bool:
        return self.kind in SCALAR_KINDS

    @property
    def children(self) -> tuple["DocumentValue", ...]:
        if self.kind is ValueKind.OBJECT:
            return tuple(value for _, value in self.entries)
        return self.items

    def walk(self) -> Iterator["DocumentValue"]:
        """Yield this node and every descendant (pre-order, iterative)."""
        stack: list[DocumentValue] = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_python(self) -> Any:
        """Rebuild the plain Python value (dict/list/str/float/bool/None)."""
        if self.kind is ValueKind.OBJECT:
            return {key: value.to_python() for key, value in self.entries}
        if self.kind is ValueKind.ARRAY:
            return [item.to_python() for item in self.items]
        if self.kind is ValueKind.STRING:
            return self.text
        if self.kind is ValueKind.NUMBER:
            return self.number
        if self.kind is ValueKind.BOOLEAN:
            return self.truth
        return None


@dataclass(frozen=True, slots=True)
class ParseFailure:
    """Structured syntax-error information for display surfaces.

    ``line`` and ``column`` are 1-based and point inside or at the end
    of the input text.
    """

    message: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.message} at line {self.line} column {self.column}"


class DocumentSyntaxError(ValueError):
    """Raised by the parser; carries a :class:`ParseFailure`."""

    def __init__(self, failure: ParseFailure) -> None:
        super().__init__(str(failure))
        self.failure = failure

    @property
    def line(self) -> int:
        return self.failure.line

    @property
    def column(self) -> int:
        return self.failure.column
