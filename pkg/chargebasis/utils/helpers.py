"""Parsing and serialization helpers for command-line and report values."""

import json
from typing import Any, List, Sequence, Tuple

from .errors import ChargeBasisError


def parse_int_list(text: str) -> Tuple[int, ...]:
    """
    Parse a comma separated list of integers.

    Args:
        text: e.g. "3,1" or "3, 1"

    Returns:
        Tuple of integers, order preserved
    """
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ChargeBasisError(f"expected comma separated integers, got {text!r}")


def parse_word(text: str) -> Tuple[int, ...]:
    """
    Parse a word given either as digits ("3516247") or comma separated
    letters ("5,9,1,2,6,7,10,3,8,4"), the latter for letters above 9.
    """
    text = text.strip()
    if "," in text:
        return parse_int_list(text)
    if not text.isdigit():
        raise ChargeBasisError(f"expected a word of digits, got {text!r}")
    return tuple(int(ch) for ch in text)


def parse_decomposition(text: str) -> List[Tuple[int, ...]]:
    """Parse a JSON list of 1-based position lists."""
    try:
        blocks = json.loads(text)
    except json.JSONDecodeError as e:
        raise ChargeBasisError(f"decomposition is not valid JSON: {e}")
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ChargeBasisError("decomposition must be a list of position lists")
    return [tuple(int(p) for p in block) for block in blocks]


def format_word(word: Sequence[int]) -> str:
    """Render a word compactly; comma separated once any letter exceeds 9."""
    if any(letter > 9 for letter in word):
        return ",".join(str(letter) for letter in word)
    return "".join(str(letter) for letter in word)


def to_jsonable(value: Any) -> Any:
    """Convert tuples, sets and frozensets into JSON-friendly lists."""
    if isinstance(value, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value
