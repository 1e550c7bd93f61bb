"""Locating the expression to extract and the names visible at that point."""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    CONTROL_KINDS, EXPRESSION_KINDS, STATEMENT_KINDS, CompilationUnit, Kind, LineIndex,
    MethodView, Node,
)

HEADER_ROLES = frozenset({"condition", "init", "update", "iterable"})


class SiteResolutionError(ValueError):
    """The requested span does not denote an extractable expression."""


@dataclass(eq=False)
class ExtractionSite:
    expression: Node
    parent_statement: Node
    enclosing_method: MethodView
    unit: CompilationUnit

    @property
    def initialization(self) -> str:
        return self.expression.text


def statement_context(node: Node) -> Node:
    """The statement-level node that holds ``node``.

    Inside the header of an if/for/while/do the header part (condition, init,
    update or iterable) stands in for the whole control structure.
    """
    prev = node
    for anc in node.ancestors():
        if anc.kind in CONTROL_KINDS and prev.role in HEADER_ROLES:
            return prev
        if anc.kind in STATEMENT_KINDS and anc.kind is not Kind.BLOCK:
            return anc
        if anc.kind is Kind.METHOD_DECLARATION:
            break
        prev = anc
    raise SiteResolutionError("expression is not inside a statement")


def _is_name_slot(node: Node) -> bool:
    return node.role == "name" and node.parent is not None and node.parent.kind in (
        Kind.METHOD_INVOCATION, Kind.FIELD_ACCESS)


def find_expression(unit: CompilationUnit, start: int, end: int) -> Node:
    src = unit.source
    while start < end and src[start].isspace():
        start += 1
    while end > start and src[end - 1].isspace():
        end -= 1
    if start >= end:
        raise SiteResolutionError("span is empty or whitespace")
    for node in unit.root.walk():
        if node.start == start and node.end == end and node.kind in EXPRESSION_KINDS \
                and not _is_name_slot(node):
            return node
    raise SiteResolutionError(f"no expression spans {src[start:end]!r}")


def resolve_site(unit: CompilationUnit, start: int, end: int) -> ExtractionSite:
    """Build the site for the expression covering offsets ``[start, end)``."""
    expr = find_expression(unit, start, end)
    method = unit.method_at(expr.start)
    if method is None:
        raise SiteResolutionError("expression is not inside a method body")
    return ExtractionSite(expr, statement_context(expr), method, unit)


def span_offsets(source: str, start_line: int, start_col: int, end_line: int, end_col: int) -> tuple[int, int]:
    """Convert a 1-based inclusive line/column span to ``[start, end)`` offsets."""
    lines = LineIndex(source)
    try:
        return lines.offset(start_line, start_col), lines.offset(end_line, end_col) + 1
    except ValueError as exc:
        raise SiteResolutionError(str(exc)) from None


def resolve_site_at(unit: CompilationUnit, start_line: int, start_col: int,
                    end_line: int, end_col: int) -> ExtractionSite:
    start, end = span_offsets(unit.source, start_line, start_col, end_line, end_col)
    return resolve_site(unit, start, end)


def _declared_names(node: Node) -> list[str]:
    if node.kind in (Kind.LOCAL_VARIABLE_DECLARATION, Kind.FIELD_DECLARATION):
        return [d.child("name").text for d in node.children_with("declarator")]
    if node.kind is Kind.PARAMETER:
        return [node.child("name").text]
    return []


def visible_names(site: ExtractionSite) -> set[str]:
    """Parameters of the enclosing method plus locals declared before the site in enclosing scopes."""
    names = {p.name for p in site.enclosing_method.parameters}
    point = site.expression.start
    for anc in site.expression.ancestors():
        if anc.kind is Kind.METHOD_DECLARATION:
            break
        if anc.kind is Kind.BLOCK:
            for stmt in anc.children:
                if stmt.start >= point:
                    break
                names.update(_declared_names(stmt))
        elif anc.kind is Kind.FOR_STATEMENT:
            for part in anc.children_with("init"):
                names.update(_declared_names(part))
        elif anc.kind is Kind.ENHANCED_FOR_STATEMENT:
            names.update(_declared_names(anc.child("variable")))
        elif anc.kind is Kind.CATCH_CLAUSE:
            names.update(_declared_names(anc.child("parameter")))
        elif anc.kind is Kind.TRY_STATEMENT:
            for res in anc.children_with("resource"):
                if res.start < point:
                    names.update(_declared_names(res))
    return names
