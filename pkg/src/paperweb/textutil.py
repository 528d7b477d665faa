"""Small text utilities: tokenizers and stable digests."""

from __future__ import annotations

import hashlib
import re

_CODE_TOKEN = re.compile(r"\w+|[^\w\s]")


def code_tokens(text: str) -> list[str]:
    """Tokenize source text for size measurement.

    A token is either a maximal run of word characters (letters, digits,
    underscore) or a single non-word, non-whitespace character; whitespace
    only separates tokens. This is the tokenizer behind all reported
    code-size numbers.
    """
    return _CODE_TOKEN.findall(text)


def count_code_tokens(text: str) -> int:
    return len(_CODE_TOKEN.findall(text))


def whitespace_tokens(text: str) -> list[str]:
    """Whitespace-separated tokens, used for prose truncation budgets."""
    return text.split()


def truncate_to_tokens(text: str, budget: int, marker: str = "[truncated]") -> str:
    """Keep at most ``budget`` whitespace tokens, appending a marker if cut."""
    if budget < 0:
        raise ValueError("token budget must be >= 0")
    tokens = text.split()
    if len(tokens) <= budget:
        return text
    return " ".join(tokens[:budget] + [marker])


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def stable_text_digest(text: str) -> str:
    return sha256_hex(text.encode("utf-8"))
