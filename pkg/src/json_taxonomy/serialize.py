"""Minified serialization.

The minified form is the measuring stick for every byte-size statistic:
no inter-token whitespace, key order as parsed, numbers rendered the way
a JavaScript engine renders them (shortest round-trip decimal), strings
minimally escaped and emitted as raw UTF-8.
"""

from __future__ import annotations

import math

from .model import DocumentValue, ValueKind

_SHORT_ESCAPES = {
    "\\": "\\\\",
    '"': '\\"',
    "\b": "\\b",
    "\t": "\\t",
    "\n": "\\n",
    "\f": "\\f",
    "\r": "\\r",
}


def render_number(value: float) -> str:
    """Shortest round-trip decimal rendering of a binary64 value.

    Follows JavaScript's number-to-string formatting: integral values
    drop the decimal point, exponent notation only outside
    [1e-6, 1e21), and non-finite values collapse to "null" exactly as
    JSON serializers in that environment emit them.
    """
    if math.isnan(value) or math.isinf(value):
        return "null"
    if value == 0:
        return "0"
    if value < 0:
        return "-" + render_number(-value)

    digits, point = _shortest_digits(value)
    k = len(digits)
    if k <= point <= 21:
        return digits + "0" * (point - k)
    if 0 < point <= 21:
        return digits[:point] + "." + digits[point:]
    if -6 < point <= 0:
        return "0." + "0" * (-point) + digits
    exponent = point - 1
    sign = "+" if exponent >= 0 else "-"
    mantissa = digits if k == 1 else digits[0] + "." + digits[1:]
    return f"{mantissa}e{sign}{abs(exponent)}"


def _shortest_digits(value: float) -> tuple[str, int]:
    """Digits of the shortest decimal for ``value`` > 0, plus the
    position of the decimal point: value == 0.digits * 10**point."""
    text = repr(value)
    mantissa, _, exp_text = text.partition("e")
    exponent = int(exp_text) if exp_text else 0
    int_part, _, frac_part = mantissa.partition(".")
    raw = int_part + frac_part
    point = len(int_part) + exponent
    stripped = raw.lstrip("0")
    point -= len(raw) - len(stripped)
    return stripped.rstrip("0"), point


def escape_string(text: str) -> str:
    """Quoted JSON form with minimal escaping.

    Only quote, backslash and control characters are escaped; lone
    surrogates become \\uXXXX so the result is always UTF-8 encodable.
    Everything else passes through as-is.
    """
    parts = ['"']
    for ch in text:
        escaped = _SHORT_ESCAPES.get(ch)
        if escaped is not None:
            parts.append(escaped)
        elif ch < "\x20" or "\ud800" <= ch <= "\udfff":
            parts.append(f"\\u{ord(ch):04x}")
        else:
            parts.append(ch)
    parts.append('"')
    return "".join(parts)


def _render_scalar(node: DocumentValue) -> str:
    kind = node.kind
    if kind is ValueKind.STRING:
        return escape_string(node.text or "")
    if kind is ValueKind.NUMBER:
        return render_number(node.number or 0.0)
    if kind is ValueKind.BOOLEAN:
        return "true" if node.truth else "false"
    if kind is ValueKind.NULL:
        return "null"
    raise ValueError(f"not a scalar kind: {kind}")


def scalar_size(node: DocumentValue) -> int:
    """UTF-8 byte length of a scalar's minified form alone.

    String sizes include the surrounding quotes and any escapes.
    """
    if not node.is_scalar:
        raise ValueError(f"scalar_size requires a scalar node, got {node.kind.value}")
    return len(_render_scalar(node).encode("utf-8"))


def minify(value: DocumentValue) -> str:
    """Serialize a subtree with zero inter-token whitespace.

    The UTF-8 byte length of the result equals ``value.serialized_size``
    and the output re-parses to an equal tree. Iterative so arbitrarily
    deep trees cannot overflow the interpreter stack.
    """
    parts: list[str] = []
    stack: list[DocumentValue | str] = [value]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        if item.is_scalar:
            parts.append(_render_scalar(item))
        elif item.kind is ValueKind.ARRAY:
            pending: list[DocumentValue | str] = ["["]
            for index, child in enumerate(item.items):
                if index:
                    pending.append(",")
                pending.append(child)
            pending.append("]")
            stack.extend(reversed(pending))
        else:
            pending = ["{"]
            for index, (key, child) in enumerate(item.entries):
                if index:
                    pending.append(",")
                pending.append(escape_string(key) + ":")
                pending.append(child)
            pending.append("}")
            stack.extend(reversed(pending))
    return "".join(parts)
