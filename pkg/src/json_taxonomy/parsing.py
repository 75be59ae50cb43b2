"""JSON parser producing the annotated value tree.

Strict RFC 8259 grammar: no comments, trailing commas, NaN/Infinity
literals or single quotes. Error positions follow the conventions of
the standard library scanner (1-based line and column, errors reported
where the offending token was expected), so failures can be checked
against an independent parser.

Containers are parsed with an explicit frame stack rather than
recursion; the nesting cap is a resource guard, not an interpreter
limit.
"""

from __future__ import annotations

import re
from typing import NoReturn

from .model import DocumentSyntaxError, DocumentValue, ParseFailure, ValueKind
from .serialize import escape_string, render_number

# JSON whitespace is exactly space, tab, LF and CR.
_WHITESPACE = " \t\n\r"
_NUMBER_RE = re.compile(r"-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][-+]?\d+)?")
_ESCAPE_MAP = {
    '"': '"',
    "\\": "\\",
    "/": "/",
    "b": "\b",
    "f": "\f",
    "n": "\n",
    "r": "\r",
    "t": "\t",
}

DEFAULT_MAX_DEPTH = 500


def parse(text: str, *, max_depth: int = DEFAULT_MAX_DEPTH) -> DocumentValue:
    """Parse JSON text into an annotated tree.

    The root may be any JSON value, including a bare scalar. Duplicate
    object keys keep the first occurrence's position with the last
    occurrence's value, mirroring in-memory object semantics.

    Raises :class:`DocumentSyntaxError` on malformed input.
    """
    parser = _Parser(text, max_depth)
    root = parser.parse_document()
    parser.skip_whitespace()
    if parser.pos != len(text):
        parser.fail("extra data", parser.pos)
    return root


def parse_bytes(data: bytes, *, max_depth: int = DEFAULT_MAX_DEPTH) -> DocumentValue:
    """Decode UTF-8 and parse; invalid byte sequences are a failure,
    never silently replaced (byte sizes would be meaningless otherwise)."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        prefix = data[: exc.start].decode("utf-8")
        line = prefix.count("\n") + 1
        column = len(prefix) - (prefix.rfind("\n") + 1) + 1
        failure = ParseFailure(
            f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line, column
        )
        raise DocumentSyntaxError(failure) from None
    return parse(text, max_depth=max_depth)


class _ObjectFrame:
    __slots__ = ("level", "entries", "slots", "key")

    def __init__(self, level: int, key: str) -> None:
        self.level = level
        self.entries: list[tuple[str, DocumentValue]] = []
        self.slots: dict[str, int] = {}
        self.key = key

    def attach(self, value: DocumentValue) -> None:
        if self.key in self.slots:
            # Last occurrence wins, first occurrence keeps its slot.
            self.entries[self.slots[self.key]] = (self.key, value)
        else:
            self.slots[self.key] = len(self.entries)
            self.entries.append((self.key, value))

    def finish(self) -> DocumentValue:
        size = 2 + len(self.entries) - 1  # braces and commas
        for key, value in self.entries:
            size += len(escape_string(key).encode("utf-8")) + 1 + value.serialized_size
        return DocumentValue(
            ValueKind.OBJECT, self.level, size, entries=tuple(self.entries)
        )


class _ArrayFrame:
    __slots__ = ("level", "items")

    def __init__(self, level: int) -> None:
        self.level = level
        self.items: list[DocumentValue] = []

    def attach(self, value: DocumentValue) -> None:
        self.items.append(value)

    def finish(self) -> DocumentValue:
        size = 2 + len(self.items) - 1 + sum(item.serialized_size for item in self.items)
        return DocumentValue(ValueKind.ARRAY, self.level, size, items=tuple(self.items))


class _Parser:
    __slots__ = ("text", "pos", "max_depth")

    def __init__(self, text: str, max_depth: int) -> None:
        self.text = text
        self.pos = 0
        self.max_depth = max_depth

    def fail(self, message: str, pos: int) -> NoReturn:
        line = self.text.count("\n", 0, pos) + 1
        column = pos - self.text.rfind("\n", 0, pos)
        raise DocumentSyntaxError(ParseFailure(message, line, column))

    def skip_whitespace(self) -> None:
        text, pos = self.text, self.pos
        while pos < len(text) and text[pos] in _WHITESPACE:
            pos += 1
        self.pos = pos

    def parse_document(self) -> DocumentValue:
        text = self.text
        stack: list[_ObjectFrame | _ArrayFrame] = []

        while True:
            # Value position.
            self.skip_whitespace()
            if self.pos >= len(text):
                self.fail("expecting value", self.pos)
            ch = text[self.pos]
            level = len(stack)

            if ch == "{":
                if level >= self.max_depth:
                    self.fail("maximum nesting depth exceeded", self.pos)
                self.pos += 1
                self.skip_whitespace()
                if self.pos < len(text) and text[self.pos] == "}":
                    self.pos += 1
                    value = DocumentValue(ValueKind.OBJECT, level, 2)
                else:
                    stack.append(_ObjectFrame(level, self.parse_member_key()))
                    continue
            elif ch == "[":
                if level >= self.max_depth:
                    self.fail("maximum nesting depth exceeded", self.pos)
                self.pos += 1
                self.skip_whitespace()
                if self.pos < len(text) and text[self.pos] == "]":
                    self.pos += 1
                    value = DocumentValue(ValueKind.ARRAY, level, 2)
                else:
                    stack.append(_ArrayFrame(level))
                    continue
            else:
                value = self.parse_scalar(level)

            # Attach the completed value, closing containers as they end.
            while True:
                if not stack:
                    return value
                frame = stack[-1]
                frame.attach(value)
                self.skip_whitespace()
                if self.pos >= len(text):
                    self.fail("expecting ',' delimiter", self.pos)
                ch = text[self.pos]
                closing = "}" if isinstance(frame, _ObjectFrame) else "]"
                if ch == closing:
                    self.pos += 1
                    stack.pop()
                    value = frame.finish()
                    continue
                if ch != ",":
                    self.fail("expecting ',' delimiter", self.pos)
                self.pos += 1
                if isinstance(frame, _ObjectFrame):
                    frame.key = self.parse_member_key()
                break

    def parse_scalar(self, level: int) -> DocumentValue:
        text = self.text
        ch = text[self.pos]
        if ch == '"':
            value = self.parse_string()
            size = len(escape_string(value).encode("utf-8"))
            return DocumentValue(ValueKind.STRING, level, size, text=value)
        if ch == "-" or "0" <= ch <= "9":
            match = _NUMBER_RE.match(text, self.pos)
            if match is None:
                self.fail("expecting value", self.pos)
            self.pos = match.end()
            number = float(match.group())
            return DocumentValue(
                ValueKind.NUMBER, level, len(render_number(number)), number=number
            )
        if text.startswith("true", self.pos):
            self.pos += 4
            return DocumentValue(ValueKind.BOOLEAN, level, 4, truth=True)
        if text.startswith("false", self.pos):
            self.pos += 5
            return DocumentValue(ValueKind.BOOLEAN, level, 5, truth=False)
        if text.startswith("null", self.pos):
            self.pos += 4
            return DocumentValue(ValueKind.NULL, level, 4)
        self.fail("expecting value", self.pos)

    def parse_member_key(self) -> str:
        text = self.text
        self.skip_whitespace()
        if self.pos >= len(text) or text[self.pos] != '"':
            self.fail("expecting property name enclosed in double quotes", self.pos)
        key = self.parse_string()
        self.skip_whitespace()
        if self.pos >= len(text) or text[self.pos] != ":":
            self.fail("expecting ':' delimiter", self.pos)
        self.pos += 1
        return key

    def parse_string(self) -> str:
        text = self.text
        start = self.pos  # at the opening quote
        i = start + 1
        chunks: list[str] = []
        while True:
            if i >= len(text):
                self.fail("unterminated string", start)
            ch = text[i]
            if ch == '"':
                self.pos = i + 1
                return "".join(chunks)
            if ch == "\\":
                if i + 1 >= len(text):
                    self.fail("unterminated string", start)
                escape = text[i + 1]
                if escape == "u":
                    code, i = self._decode_unicode_escape(i + 1)
                    chunks.append(chr(code))
                elif escape in _ESCAPE_MAP:
                    chunks.append(_ESCAPE_MAP[escape])
                    i += 2
                else:
                    self.fail(f"invalid \\escape: {escape!r}", i)
            elif ch < "\x20":
                self.fail(f"invalid control character {ch!r}", i)
            else:
                chunks.append(ch)
                i += 1

    def _decode_unicode_escape(self, u_pos: int) -> tuple[int, int]:
        """Decode \\uXXXX starting at the 'u'; combines surrogate pairs.
        Returns (code point, index past the escape)."""
        code = self._hex4(u_pos)
        end = u_pos + 5
        if 0xD800 <= code <= 0xDBFF and self.text.startswith("\\u", end):
            low = self._hex4(end + 1)
            if 0xDC00 <= low <= 0xDFFF:
                code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00)
                end += 6
        # An unpaired surrogate stays as a lone surrogate code point.
        return code, end

    def _hex4(self, u_pos: int) -> int:
        digits = self.text[u_pos + 1 : u_pos + 5]
        # int() would tolerate signs and underscores; JSON does not.
        if len(digits) == 4 and all(d in "0123456789abcdefABCDEF" for d in digits):
            return int(digits, 16)
        self.fail("invalid \\uXXXX escape", u_pos)
