"""Identifier sub-token splitting and token-level views of expressions."""

from __future__ import annotations

import re
from typing import Union

from .lexer import TokenKind, tokenize
from .nodes import Node

# An uppercase run directly followed by Upper+lower gives up its last letter
# to the next word: HTTPResponse -> HTTP | Response.
_WORD_RE = re.compile(
    r"[A-Z]+(?=[A-Z][a-z])"
    r"|[A-Z]?[a-z]+"
    r"|[A-Z]+"
    r"|\d+"
    r"|[^\W\d_A-Za-z]+"
)

PLACEHOLDER = "<placeholder>"


def split_subtokens(identifier: str) -> list[str]:
    """Split an identifier into lowercase words.

    >>> split_subtokens("HTTPResponse2xx")
    ['http', 'response', '2', 'xx']
    """
    return [w.lower() for w in _WORD_RE.findall(identifier)]


def to_lower_camel(words: list[str]) -> str:
    if not words:
        return ""
    return words[0].lower() + "".join(w[:1].upper() + w[1:].lower() for w in words[1:])


def _text(expr: Union[Node, str]) -> str:
    return expr.text if isinstance(expr, Node) else expr


def identifier_tokens(expr: Union[Node, str]) -> list[str]:
    """Identifier tokens of ``expr`` in source order; literals, keywords and punctuation dropped."""
    return [t.text for t in tokenize(_text(expr)) if t.kind is TokenKind.IDENT]


def subtokens_of(expr: Union[Node, str]) -> list[str]:
    out: list[str] = []
    for ident in identifier_tokens(expr):
        out.extend(split_subtokens(ident))
    return out


def canonicalize_initialization(expr: Union[Node, str]) -> str:
    """Token texts joined by single spaces; whitespace and comments vanish."""
    return " ".join(t.text for t in tokenize(_text(expr)))
