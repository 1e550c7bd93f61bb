"""Homogeneous variable search: declarations initialized by the same expression."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

from .syntax import (
    CompilationUnit, Kind, MethodView, Node, UnrecoverableInput, canonicalize_initialization,
    parse_unit,
)

log = logging.getLogger(__name__)


class ScopeLevel(str, Enum):
    DOCUMENT = "document"
    PACKAGE = "package"
    PROJECT = "project"


@dataclass
class SearchScope:
    level: ScopeLevel
    units: list[CompilationUnit] = field(default_factory=list)

    @classmethod
    def document(cls, unit: CompilationUnit) -> SearchScope:
        return cls(ScopeLevel.DOCUMENT, [unit])


@dataclass(eq=False)
class HomogeneousVariable:
    name: str
    declaration: Node = field(repr=False)
    declarator: Node = field(repr=False)
    initializer: Node
    enclosing_method: Optional[MethodView] = field(repr=False)
    unit: CompilationUnit = field(repr=False)

    @property
    def declared_type(self) -> str:
        return self.declaration.child("type").text

    @property
    def is_field(self) -> bool:
        return self.declaration.kind is Kind.FIELD_DECLARATION


def _load_units(paths: Sequence[Path], site_unit: CompilationUnit) -> list[CompilationUnit]:
    site_path = Path(site_unit.path).resolve() if site_unit.path else None
    units = [site_unit]
    for p in sorted(paths):
        if site_path is not None and p.resolve() == site_path:
            continue
        try:
            units.append(parse_unit(p.read_text(encoding="utf-8", errors="replace"), str(p)))
        except (OSError, UnrecoverableInput) as exc:
            log.warning("skipping %s: %s", p, exc)
    return units


def build_scope(site_unit: CompilationUnit, level: ScopeLevel | str = ScopeLevel.DOCUMENT,
                root: Optional[str | Path] = None) -> SearchScope:
    """Collect the units searched for homogeneous variables.

    ``package`` reads the ``.java`` siblings of the site's file (or of ``root``);
    ``project`` reads every ``.java`` file below ``root``.
    """
    level = ScopeLevel(level)
    if level is ScopeLevel.DOCUMENT:
        return SearchScope.document(site_unit)
    base = Path(root) if root is not None else Path(site_unit.path).parent
    paths = list(base.glob("*.java") if level is ScopeLevel.PACKAGE else base.rglob("*.java"))
    return SearchScope(level, _load_units(paths, site_unit))


def _declarators(unit: CompilationUnit):
    for node in unit.root.walk():
        if node.kind is Kind.VARIABLE_DECLARATOR and node.parent is not None and \
                node.parent.kind in (Kind.LOCAL_VARIABLE_DECLARATION, Kind.FIELD_DECLARATION):
            init = node.child("initializer")
            if init is not None:
                yield node, init


def find_homogeneous(site_initialization: Node, scope: SearchScope) -> list[HomogeneousVariable]:
    """Declarations in ``scope`` whose initializer is token-identical to the query.

    The query node itself (when it already initializes a declaration) is skipped.
    Results are ordered by unit path, then source offset.
    """
    target = canonicalize_initialization(site_initialization)
    found = []
    for unit in scope.units:
        for declarator, init in _declarators(unit):
            if init is site_initialization:
                continue
            if init.source is site_initialization.source and init.start == site_initialization.start:
                continue
            if canonicalize_initialization(init) != target:
                continue
            found.append(HomogeneousVariable(
                name=declarator.child("name").text,
                declaration=declarator.parent,
                declarator=declarator,
                initializer=init,
                enclosing_method=unit.method_at(declarator.start),
                unit=unit,
            ))
    found.sort(key=lambda hv: (hv.unit.path, hv.declarator.start))
    return found
