"""Uniform AST model shared by every analysis in the package."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .lexer import Token


class Kind(str, Enum):
    COMPILATION_UNIT = "compilation-unit"
    PACKAGE_DECLARATION = "package-declaration"
    IMPORT_DECLARATION = "import-declaration"
    TYPE_DECLARATION = "type-declaration"
    FIELD_DECLARATION = "field-declaration"
    METHOD_DECLARATION = "method-declaration"
    INITIALIZER = "initializer"
    OPAQUE_MEMBER = "opaque-member"
    MODIFIER = "modifier"
    ANNOTATION = "annotation"
    PARAMETER = "parameter"
    TYPE = "type"
    VARIABLE_DECLARATOR = "variable-declarator"
    # statements
    BLOCK = "block"
    LOCAL_VARIABLE_DECLARATION = "local-variable-declaration"
    EXPRESSION_STATEMENT = "expression-statement"
    RETURN_STATEMENT = "return-statement"
    THROW_STATEMENT = "throw-statement"
    IF_STATEMENT = "if-statement"
    FOR_STATEMENT = "for-statement"
    ENHANCED_FOR_STATEMENT = "enhanced-for-statement"
    WHILE_STATEMENT = "while-statement"
    DO_STATEMENT = "do-statement"
    TRY_STATEMENT = "try-statement"
    CATCH_CLAUSE = "catch-clause"
    BREAK_STATEMENT = "break-statement"
    CONTINUE_STATEMENT = "continue-statement"
    EMPTY_STATEMENT = "empty-statement"
    OPAQUE_STATEMENT = "opaque-statement"
    # expressions
    METHOD_INVOCATION = "method-invocation"
    FIELD_ACCESS = "field-access"
    SIMPLE_NAME = "simple-name"
    LITERAL = "literal"
    THIS = "this"
    SUPER = "super"
    INFIX_EXPRESSION = "infix-expression"
    PREFIX_EXPRESSION = "prefix-expression"
    POSTFIX_EXPRESSION = "postfix-expression"
    ASSIGNMENT = "assignment"
    CONDITIONAL_EXPRESSION = "conditional-expression"
    INSTANCEOF_EXPRESSION = "instanceof-expression"
    OBJECT_CREATION = "object-creation"
    ARRAY_CREATION = "array-creation"
    ARRAY_INITIALIZER = "array-initializer"
    CAST = "cast"
    ARRAY_ACCESS = "array-access"
    PARENTHESIZED = "parenthesized"
    CLASS_LITERAL = "class-literal"

    def __str__(self) -> str:
        return self.value


STATEMENT_KINDS = frozenset({
    Kind.BLOCK, Kind.LOCAL_VARIABLE_DECLARATION, Kind.EXPRESSION_STATEMENT,
    Kind.RETURN_STATEMENT, Kind.THROW_STATEMENT, Kind.IF_STATEMENT, Kind.FOR_STATEMENT,
    Kind.ENHANCED_FOR_STATEMENT, Kind.WHILE_STATEMENT, Kind.DO_STATEMENT,
    Kind.TRY_STATEMENT, Kind.BREAK_STATEMENT, Kind.CONTINUE_STATEMENT,
    Kind.EMPTY_STATEMENT, Kind.OPAQUE_STATEMENT,
})

CONTROL_KINDS = frozenset({
    Kind.IF_STATEMENT, Kind.FOR_STATEMENT, Kind.ENHANCED_FOR_STATEMENT,
    Kind.WHILE_STATEMENT, Kind.DO_STATEMENT,
})

EXPRESSION_KINDS = frozenset({
    Kind.METHOD_INVOCATION, Kind.FIELD_ACCESS, Kind.SIMPLE_NAME, Kind.LITERAL, Kind.THIS, Kind.SUPER,
    Kind.INFIX_EXPRESSION, Kind.PREFIX_EXPRESSION, Kind.POSTFIX_EXPRESSION,
    Kind.ASSIGNMENT, Kind.CONDITIONAL_EXPRESSION, Kind.INSTANCEOF_EXPRESSION,
    Kind.OBJECT_CREATION, Kind.ARRAY_CREATION, Kind.ARRAY_INITIALIZER, Kind.CAST,
    Kind.ARRAY_ACCESS, Kind.PARENTHESIZED, Kind.CLASS_LITERAL,
})


@dataclass(eq=False)
class Node:
    """A node of the syntax tree.

    ``start``/``end`` are character offsets into ``source``; ``first``/``last``
    index the token stream (``last`` exclusive). ``role`` tags a child's slot
    in its parent (``"condition"``, ``"body"``, ``"name"``, ...).
    """

    kind: Kind
    start: int
    end: int
    first: int
    last: int
    source: str = field(repr=False)
    children: list[Node] = field(default_factory=list, repr=False)
    role: str = ""
    parent: Optional[Node] = field(default=None, repr=False)
    tokens: tuple[Token, ...] = field(default=(), repr=False)

    @property
    def text(self) -> str:
        return self.source[self.start:self.end]

    def child(self, role: str) -> Optional[Node]:
        for c in self.children:
            if c.role == role:
                return c
        return None

    def children_with(self, role: str) -> list[Node]:
        return [c for c in self.children if c.role == role]

    def walk(self) -> Iterator[Node]:
        """Pre-order traversal including ``self``."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def descendants(self) -> Iterator[Node]:
        it = self.walk()
        next(it)
        return it

    def ancestors(self) -> Iterator[Node]:
        node = self.parent
        while node is not None:
            yield node
            node = node.parent

    def contains(self, other: Node) -> bool:
        return self.start <= other.start and other.end <= self.end

    def __repr__(self) -> str:
        return f"Node({self.kind.value}, {self.start}:{self.end}, {self.text[:40]!r})"


def node_kind_multiset(node: Node) -> Counter:
    """Multiset of node kinds over all descendants of ``node`` (root excluded)."""
    return Counter(d.kind for d in node.descendants())


@dataclass(frozen=True)
class ParameterView:
    name: str
    type: str
    node: Node


@dataclass(eq=False)
class MethodView:
    name: str
    parameters: list[ParameterView]
    return_type: Optional[str]
    declaration: Node = field(repr=False)
    body: Optional[Node] = field(repr=False)

    @property
    def arity(self) -> int:
        return len(self.parameters)


@dataclass(eq=False)
class CompilationUnit:
    path: str
    source: str = field(repr=False)
    root: Node = field(repr=False)
    tokens: list[Token] = field(repr=False)
    methods: list[MethodView] = field(repr=False)

    def method_at(self, offset: int) -> Optional[MethodView]:
        """Innermost method whose body contains ``offset``."""
        best = None
        for m in self.methods:
            if m.body is not None and m.body.start <= offset < m.body.end:
                if best is None or m.body.start >= best.body.start:
                    best = m
        return best
