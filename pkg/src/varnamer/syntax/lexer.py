"""Tokenizer for the Java subset understood by :mod:`varnamer.syntax.parser`."""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from enum import Enum


class TokenKind(str, Enum):
    IDENT = "ident"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING = "string"
    CHAR = "char"
    BOOLEAN = "boolean"
    NULL = "null"
    OP = "op"
    UNKNOWN = "unknown"


LITERAL_KINDS = frozenset(
    {TokenKind.NUMBER, TokenKind.STRING, TokenKind.CHAR, TokenKind.BOOLEAN, TokenKind.NULL}
)

# Java SE reserved keywords (JLS 3.9). `var` is contextual and lexes as an identifier.
JAVA_KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue default do
double else enum extends final finally float for goto if implements import instanceof
int interface long native new package private protected public return short static
strictfp super switch synchronized this throw throws transient try void volatile while
""".split())

# `>>` and `>>>` are deliberately absent: closing generics lex as single `>` tokens and the
# expression parser glues adjacent ones back into shift operators.
_OPERATORS = sorted(
    """>>>= <<= >>= ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^= <<
    + - * / % = < > ! ~ ? : & | ^ . , ; ( ) [ ] { } @""".split(),
    key=len,
    reverse=True,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<line_comment>//[^\n]*)
  | (?P<block_comment>/\*.*?(?:\*/|\Z))
  | (?P<textblock>\"\"\".*?(?:\"\"\"|\Z))
  | (?P<string>"(?:[^"\\\n]|\\.)*(?:"|(?=\n)|\Z))
  | (?P<char>'(?:[^'\\\n]|\\.)*(?:'|(?=\n)|\Z))
  | (?P<number>
        0[xX][0-9a-fA-F_]+[lL]?
      | 0[bB][01_]+[lL]?
      | \d[\d_]*(?:\.(?!\.)[\d_]*)?(?:[eE][+-]?\d+)?[fFdDlL]?
      | \.\d[\d_]*(?:[eE][+-]?\d+)?[fFdD]?
    )
  | (?P<ident>(?:[^\W\d]|\$)(?:\w|\$)*)
  | (?P<op>"""
    + "|".join(re.escape(op) for op in _OPERATORS)
    + r""")
  | (?P<unknown>.)
    """,
    re.VERBOSE | re.DOTALL,
)


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: int
    end: int

    def is_op(self, *texts: str) -> bool:
        return self.kind is TokenKind.OP and self.text in texts

    def is_keyword(self, *texts: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.text in texts


class LineIndex:
    """Maps byte offsets to 1-based (line, column) pairs and back."""

    def __init__(self, source: str):
        self.source = source
        self.starts = [0] + [m.end() for m in re.finditer("\n", source)]

    def position(self, offset: int) -> tuple[int, int]:
        line = bisect.bisect_right(self.starts, offset) - 1
        return line + 1, offset - self.starts[line] + 1

    def offset(self, line: int, col: int) -> int:
        if line < 1 or line > len(self.starts):
            raise ValueError(f"line {line} out of range")
        base = self.starts[line - 1]
        limit = self.starts[line] if line < len(self.starts) else len(self.source)
        off = base + col - 1
        if col < 1 or off > limit:
            raise ValueError(f"column {col} out of range on line {line}")
        return off


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens, dropping whitespace and comments.

    Never raises: characters outside the language become ``UNKNOWN`` tokens
    and unterminated literals run to the end of their line.
    """
    tokens: list[Token] = []
    for m in _TOKEN_RE.finditer(source):
        group = m.lastgroup
        if group in ("ws", "line_comment", "block_comment"):
            continue
        text = m.group()
        if group == "ident":
            if text in JAVA_KEYWORDS:
                kind = TokenKind.KEYWORD
            elif text in ("true", "false"):
                kind = TokenKind.BOOLEAN
            elif text == "null":
                kind = TokenKind.NULL
            else:
                kind = TokenKind.IDENT
        elif group in ("string", "textblock"):
            kind = TokenKind.STRING
        elif group == "char":
            kind = TokenKind.CHAR
        elif group == "number":
            kind = TokenKind.NUMBER
        elif group == "op":
            kind = TokenKind.OP
        else:
            kind = TokenKind.UNKNOWN
        tokens.append(Token(kind, text, m.start(), m.end()))
    return tokens
