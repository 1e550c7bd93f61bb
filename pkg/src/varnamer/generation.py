"""Name generation from the initialization expression alone."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .morphology import plural_marker, singularize
from .rules import NamingRule, placeholder_marker
from .syntax import Kind, Node, TokenKind, split_subtokens, to_lower_camel, tokenize

DEFAULT_INVOCATION = "default-invocation"
_IDENTIFIER_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


def is_valid_generated(name: str) -> bool:
    return bool(_IDENTIFIER_RE.match(name))


@dataclass(frozen=True)
class GeneratedName:
    name: str
    rule_id: str

    def __post_init__(self):
        if not is_valid_generated(self.name):
            raise ValueError(f"not a valid generated identifier: {self.name!r}")


def load_verbs(path: str | Path) -> frozenset[str]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return frozenset(w.strip().lower() for w in lines if w.strip() and not w.startswith("#"))


def default_verbs() -> frozenset[str]:
    with resources.as_file(resources.files("varnamer") / "data" / "verbs.txt") as p:
        return load_verbs(p)


def _identifiers(expr: Node) -> list[tuple[str, int]]:
    """(text, absolute offset) of every identifier token inside ``expr``."""
    return [(t.text, expr.start + t.start) for t in tokenize(expr.text) if t.kind is TokenKind.IDENT]


def _principal_offset(expr: Node) -> Optional[int]:
    """Offset of the identifier that names what ``expr`` evaluates to."""
    kind = expr.kind
    if kind in (Kind.METHOD_INVOCATION, Kind.FIELD_ACCESS):
        name = expr.child("name")
        return name.start if name is not None and name.kind is Kind.SIMPLE_NAME else None
    if kind is Kind.SIMPLE_NAME:
        return expr.start
    if kind in (Kind.OBJECT_CREATION, Kind.ARRAY_CREATION):
        type_node = expr.child("type")
        if type_node is None:
            return None
        last = None
        for t in tokenize(type_node.text):
            if t.is_op("<"):
                break
            if t.kind is TokenKind.IDENT:
                last = type_node.start + t.start
        return last
    inner = None
    if kind is Kind.CAST:
        inner = expr.child("operand") or (expr.children[-1] if expr.children else None)
    elif kind is Kind.PARENTHESIZED:
        inner = expr.child("expression")
    elif kind is Kind.ARRAY_ACCESS:
        inner = expr.child("array")
    if inner is not None:
        return _principal_offset(inner)
    idents = _identifiers(expr)
    return idents[-1][1] if idents else None


@dataclass(frozen=True)
class _Sub:
    word: str
    ident: int
    pos: int
    last: bool


def _flatten(expr: Node) -> tuple[list[_Sub], Optional[int]]:
    principal = _principal_offset(expr)
    flat: list[_Sub] = []
    p_index = None
    for i, (text, offset) in enumerate(_identifiers(expr)):
        words = split_subtokens(text)
        for j, w in enumerate(words):
            flat.append(_Sub(w, i, j, j == len(words) - 1))
        if offset == principal:
            p_index = i
    return flat, p_index


def _match(rule: NamingRule, flat: list[_Sub], p_index: int, verbs: frozenset[str]) -> Optional[str]:
    ends = [k for k, s in enumerate(flat) if s.ident == p_index and s.last]
    if not ends:
        return None
    end = ends[0] + 1
    before, after = rule.template[:rule.slot], rule.template[rule.slot + 1:]
    marker = placeholder_marker(rule.template[rule.slot])
    p_end = end - len(after)
    if p_end <= 0 or [s.word for s in flat[p_end:end]] != list(after):
        return None
    ident = flat[p_end - 1].ident
    # longest placeholder run first; it may not cross an identifier boundary
    for p_start in sorted(k for k in range(p_end) if flat[k].ident == ident):
        b_start = p_start - len(before)
        if b_start < 0 or [s.word for s in flat[b_start:p_start]] != list(before):
            continue
        if flat[b_start].pos != 0:
            continue
        words = [s.word for s in flat[p_start:p_end]]
        if not before and len(words) > 1 and words[0] in verbs:
            # getItems().next() names an item, not a getItem
            words = words[1:]
        if marker:
            if plural_marker(words[-1]) != marker:
                continue
            words[-1] = singularize(words[-1])
        name = to_lower_camel(words)
        if is_valid_generated(name):
            return name
    return None


def _rules_only(initialization: Node, rules: Iterable[NamingRule],
                verbs: frozenset[str]) -> Optional[GeneratedName]:
    flat, p_index = _flatten(initialization)
    if p_index is None:
        return None
    kind = initialization.kind.value
    for rule in rules:
        if rule.node_kind != kind:
            continue
        name = _match(rule, flat, p_index, verbs)
        if name is not None:
            return GeneratedName(name, rule.rule_id)
    return None


def default_invocation_name(initialization: Node, verbs: Iterable[str]) -> Optional[GeneratedName]:
    """Method name with a leading verb stripped; None for anything but a method call."""
    if initialization.kind is not Kind.METHOD_INVOCATION:
        return None
    name = initialization.child("name")
    if name is None or name.kind is not Kind.SIMPLE_NAME:
        return None
    method = name.text
    words = split_subtokens(method)
    if len(words) > 1 and words[0] in set(verbs):
        residue = to_lower_camel(words[1:])
        if is_valid_generated(residue):
            return GeneratedName(residue, DEFAULT_INVOCATION)
    if is_valid_generated(method):
        return GeneratedName(method, DEFAULT_INVOCATION)
    return None


def apply_rules(initialization: Node, rules: Sequence[NamingRule],
                verbs: Optional[Iterable[str]] = None) -> Optional[GeneratedName]:
    """First matching rule wins; otherwise the default invocation heuristic.

    ``rules`` must already be in priority order (see ``rules.sort_rules``).
    """
    verbs = default_verbs() if verbs is None else frozenset(verbs)
    generated = _rules_only(initialization, rules, verbs)
    if generated is not None:
        return generated
    return default_invocation_name(initialization, verbs)
