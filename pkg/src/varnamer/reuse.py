"""Deciding whether a homogeneous variable's name can be reused.

A coarse filter drops universal initializations (``null``, ``0``, ...). Each
remaining homogeneous variable must then be long enough to be trusted on its
own, or used in a statement that resembles the extraction site's parent
statement. Survivors are ranked by how similar their enclosing methods are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .search import HomogeneousVariable
from .similarity import context_similarity, literal_similarity, structural_similarity
from .site import ExtractionSite, SiteResolutionError, statement_context
from .syntax import Kind, MethodView, Node, TokenKind, canonicalize_initialization

DEFAULT_UNIVERSAL = ("null", "0", "1", "true", "false", "new StringBuilder()")


@dataclass(frozen=True)
class ReuseConfig:
    fg_sim: float = 0.3
    ini_length: int = 30

    def __post_init__(self):
        if not 0.0 <= self.fg_sim <= 1.0:
            raise ValueError(f"fg_sim must lie in [0, 1], got {self.fg_sim}")
        if self.ini_length < 0:
            raise ValueError(f"ini_length must be >= 0, got {self.ini_length}")


@dataclass(frozen=True)
class UniversalInitializationSet:
    entries: frozenset[str] = frozenset()

    @classmethod
    def of(cls, initializations: Iterable[str]) -> UniversalInitializationSet:
        return cls(frozenset(canonicalize_initialization(s) for s in initializations if s.strip()))

    @classmethod
    def default(cls) -> UniversalInitializationSet:
        return cls.of(DEFAULT_UNIVERSAL)

    @classmethod
    def load(cls, path: str | Path) -> UniversalInitializationSet:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls.of(lines)

    def dump(self, path: str | Path) -> None:
        Path(path).write_text("".join(f"{e}\n" for e in sorted(self.entries)), encoding="utf-8")

    def __contains__(self, init: str) -> bool:
        return init in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def is_universal_initialization(init: str, universal: UniversalInitializationSet) -> bool:
    return init in universal


@dataclass(eq=False)
class VariableDependencyGraph:
    variable: Node
    dependent_nodes: list[Node]
    edges: list[tuple[Node, Node]] = field(default_factory=list)


def _is_reference(node: Node, name: str) -> bool:
    if node.kind is not Kind.SIMPLE_NAME or node.text != name:
        return False
    if node.role == "name" and node.parent is not None and node.parent.kind in (
            Kind.METHOD_INVOCATION, Kind.FIELD_ACCESS, Kind.VARIABLE_DECLARATOR, Kind.PARAMETER):
        return False
    return node.role != "pattern"


def _references(body: Node, name: str, after: int) -> list[Node]:
    deps: dict[int, Node] = {}
    for node in body.walk():
        if node.start < after:
            continue
        if node.kind is Kind.OPAQUE_STATEMENT:
            if any(t.kind is TokenKind.IDENT and t.text == name for t in node.tokens):
                deps.setdefault(id(node), node)
        elif _is_reference(node, name):
            try:
                dep = statement_context(node)
            except SiteResolutionError:
                continue
            deps.setdefault(id(dep), dep)
    return sorted(deps.values(), key=lambda n: (n.start, -n.end))


def build_vdg(method: Optional[MethodView], variable: HomogeneousVariable) -> VariableDependencyGraph:
    """Dependency graph of ``variable`` over the body of ``method``.

    A field (``method`` is None) is tracked through every method of its unit.
    """
    decl = variable.declaration
    if method is not None:
        if method.body is None or not method.declaration.contains(variable.declarator):
            raise ValueError(f"variable {variable.name!r} is not declared in method {method.name!r}")
        bodies = [method.body]
        after = variable.declarator.end
    else:
        if not variable.is_field:
            raise ValueError(f"local variable {variable.name!r} needs its enclosing method")
        bodies = [m.body for m in variable.unit.methods if m.body is not None]
        after = 0
    deps: list[Node] = []
    for body in bodies:
        deps.extend(d for d in _references(body, variable.name, after) if d is not decl)
    return VariableDependencyGraph(decl, deps, [(decl, d) for d in deps])


def dependent_nodes(vdg: VariableDependencyGraph) -> list[Node]:
    return list(vdg.dependent_nodes)


class Verdict(str, Enum):
    RELIABLE_BY_LENGTH = "reliable-by-length"
    RELIABLE_BY_CONTEXT = "reliable-by-context"
    REJECTED = "rejected"


@dataclass
class Validation:
    verdict: Verdict
    score: Optional[float] = None
    node_scores: list[dict] = field(default_factory=list)

    @property
    def reliable(self) -> bool:
        return self.verdict is not Verdict.REJECTED


def validate_candidate(site: ExtractionSite, hv: HomogeneousVariable, cfg: ReuseConfig) -> Validation:
    if len(site.expression.text) > cfg.ini_length:
        return Validation(Verdict.RELIABLE_BY_LENGTH)
    vdg = build_vdg(hv.enclosing_method, hv)
    pev = site.parent_statement
    node_scores = []
    best = None
    for vdn in vdg.dependent_nodes:
        structural = structural_similarity(pev, vdn)
        literal = literal_similarity(pev, vdn)
        score = 0.5 * structural + 0.5 * literal
        node_scores.append({"node": vdn.text, "structural": structural, "literal": literal,
                            "context": score})
        if best is None or score > best:
            best = score
    if best is not None and best > cfg.fg_sim:
        return Validation(Verdict.RELIABLE_BY_CONTEXT, best, node_scores)
    return Validation(Verdict.REJECTED, best, node_scores)


def method_similarity(site: ExtractionSite, hv: HomogeneousVariable) -> float:
    if hv.enclosing_method is None:
        return 0.0
    return context_similarity(site.enclosing_method.declaration, hv.enclosing_method.declaration)


@dataclass
class ReuseOutcome:
    name: Optional[str]
    universal: bool = False
    candidates: list[dict] = field(default_factory=list)


def reuse_candidate(site: ExtractionSite, hvs: Sequence[HomogeneousVariable], cfg: ReuseConfig,
                    universal: UniversalInitializationSet) -> ReuseOutcome:
    """Run the coarse filter and fine-grained validator, keeping a trace of every step."""
    if is_universal_initialization(canonicalize_initialization(site.expression), universal):
        return ReuseOutcome(None, universal=True)
    outcome = ReuseOutcome(None)
    best_sim = None
    for hv in hvs:
        check = validate_candidate(site, hv, cfg)
        record = {"name": hv.name, "unit": hv.unit.path, "offset": hv.declarator.start,
                  "verdict": check.verdict.value, "context_score": check.score,
                  "dependent_nodes": check.node_scores}
        if check.reliable:
            sim = method_similarity(site, hv)
            record["method_similarity"] = sim
            if best_sim is None or sim > best_sim:
                best_sim = sim
                outcome.name = hv.name
        outcome.candidates.append(record)
    return outcome


def select_reuse_name(site: ExtractionSite, hvs: Sequence[HomogeneousVariable], cfg: ReuseConfig,
                      universal: UniversalInitializationSet) -> Optional[str]:
    return reuse_candidate(site, hvs, cfg, universal).name
