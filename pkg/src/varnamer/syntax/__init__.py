from .identifiers import (
    PLACEHOLDER, canonicalize_initialization, identifier_tokens, split_subtokens,
    subtokens_of, to_lower_camel,
)
from .lexer import JAVA_KEYWORDS, LineIndex, Token, TokenKind, tokenize
from .nodes import (
    CONTROL_KINDS, EXPRESSION_KINDS, STATEMENT_KINDS, CompilationUnit, Kind, MethodView,
    Node, ParameterView, node_kind_multiset,
)
from .parser import ParseError, UnrecoverableInput, dump_ast, parse_expression, parse_unit

__all__ = [
    "PLACEHOLDER", "canonicalize_initialization", "identifier_tokens", "split_subtokens",
    "subtokens_of", "to_lower_camel", "JAVA_KEYWORDS", "LineIndex", "Token", "TokenKind",
    "tokenize", "CONTROL_KINDS", "EXPRESSION_KINDS", "STATEMENT_KINDS", "CompilationUnit",
    "Kind", "MethodView", "Node", "ParameterView", "node_kind_multiset", "ParseError",
    "UnrecoverableInput", "dump_ast", "parse_expression", "parse_unit",
]
