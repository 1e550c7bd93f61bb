"""Datasets of extract-variable refactorings, exact-match metrics and context analysis."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .generation import default_verbs
from .recommender import recommend_with_trace
from .reuse import ReuseConfig, UniversalInitializationSet
from .rules import NamingRule, default_rules
from .search import SearchScope, find_homogeneous
from .site import ExtractionSite, SiteResolutionError, resolve_site_at
from .syntax import (
    Kind, Node, TokenKind, UnrecoverableInput, identifier_tokens, parse_unit, split_subtokens,
    subtokens_of, tokenize,
)

CONTEXTS = ("initialization", "homogeneous", "data_type", "assignment")
COMBINED = {"declaration": ("initialization", "data_type"), "all": CONTEXTS}


class DatasetSchemaError(ValueError):
    pass


@dataclass
class RefactoringInstance:
    id: str
    source: str
    span: dict
    ground_truth: str
    data_type: Optional[str] = None
    site: Optional[ExtractionSite] = field(default=None, repr=False, compare=False)

    def resolve(self) -> ExtractionSite:
        if self.site is None:
            try:
                unit = parse_unit(self.source, f"{self.id}.java")
            except UnrecoverableInput as exc:
                raise SiteResolutionError(str(exc)) from None
            s = self.span
            self.site = resolve_site_at(unit, s["startLine"], s["startCol"], s["endLine"], s["endCol"])
        return self.site


@dataclass
class Dataset:
    instances: list[RefactoringInstance]
    skipped: int = 0
    skipped_ids: list[str] = field(default_factory=list)


_SPAN_KEYS = ("startLine", "startCol", "endLine", "endCol")


def _instance(record, lineno: int) -> RefactoringInstance:
    if not isinstance(record, dict):
        raise DatasetSchemaError(f"line {lineno}: expected a JSON object")
    for key in ("source", "span", "ground_truth"):
        if key not in record:
            raise DatasetSchemaError(f"line {lineno}: missing field {key!r}")
    span = record["span"]
    if not isinstance(span, dict) or any(not isinstance(span.get(k), int) for k in _SPAN_KEYS):
        raise DatasetSchemaError(f"line {lineno}: span needs integer {', '.join(_SPAN_KEYS)}")
    if not isinstance(record["source"], str) or not isinstance(record["ground_truth"], str):
        raise DatasetSchemaError(f"line {lineno}: source and ground_truth must be strings")
    return RefactoringInstance(str(record.get("id", lineno)), record["source"],
                               {k: span[k] for k in _SPAN_KEYS}, record["ground_truth"],
                               record.get("data_type"))


def parse_dataset(lines: Iterable[str]) -> Dataset:
    data = Dataset([])
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DatasetSchemaError(f"line {lineno}: {exc}") from None
        inst = _instance(record, lineno)
        try:
            inst.resolve()
        except SiteResolutionError:
            data.skipped += 1
            data.skipped_ids.append(inst.id)
            continue
        data.instances.append(inst)
    return data


def load_dataset(path: str | Path) -> Dataset:
    """Read a JSONL dataset; instances whose span does not resolve are skipped and counted."""
    with open(path, encoding="utf-8") as fh:
        return parse_dataset(fh)


def bundled_dataset_path() -> Path:
    return Path(__file__).parent / "data" / "cases.jsonl"


@dataclass
class Engine:
    rules: Sequence[NamingRule] = field(default_factory=default_rules)
    universal: UniversalInitializationSet = field(default_factory=UniversalInitializationSet.default)
    reuse: ReuseConfig = field(default_factory=ReuseConfig)
    verbs: frozenset[str] = field(default_factory=default_verbs)


@dataclass
class EvalReport:
    total_cases: int
    recommendations: int
    exact_matches: int
    em_precision: float
    em_coverage: float
    skipped: int = 0
    records: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def exact_match_metrics(total: int, recommendations: int, exact: int) -> tuple[float, float]:
    """(EM precision, EM coverage); precision is 0 when nothing was recommended."""
    if not 0 <= exact <= recommendations <= total:
        raise ValueError(f"inconsistent counts: total={total} rec={recommendations} exact={exact}")
    precision = exact / recommendations if recommendations else 0.0
    coverage = exact / total if total else 0.0
    return precision, coverage


def evaluate(instances: Sequence[RefactoringInstance], engine: Optional[Engine] = None,
             skipped: int = 0) -> EvalReport:
    engine = engine or Engine()
    records = []
    for inst in instances:
        site = inst.resolve()
        rec = recommend_with_trace(site, SearchScope.document(site.unit), engine.rules,
                                   engine.universal, engine.reuse, engine.verbs)
        records.append({"id": inst.id, "ground_truth": inst.ground_truth, "name": rec.name,
                        "source": rec.source, "exact": rec.name == inst.ground_truth})
    total = len(records)
    recommended = sum(r["name"] is not None for r in records)
    exact = sum(r["exact"] for r in records)
    precision, coverage = exact_match_metrics(total, recommended, exact)
    report = EvalReport(total, recommended, exact, precision, coverage, skipped, records)
    assert report.exact_matches <= report.recommendations <= report.total_cases
    return report


# context analysis

_LITERAL_TYPES = {TokenKind.STRING: "String", TokenKind.CHAR: "char", TokenKind.BOOLEAN: "boolean"}


def _literal_type(node: Node) -> Optional[str]:
    toks = tokenize(node.text)
    if len(toks) != 1:
        return None
    t = toks[0]
    if t.kind is TokenKind.NUMBER:
        text = t.text.lower()
        if text.endswith("l"):
            return "long"
        if text.endswith("f"):
            return "float"
        if not text.startswith("0x") and ("." in text or "e" in text or text.endswith("d")):
            return "double"
        return "int"
    return _LITERAL_TYPES.get(t.kind)


def _call_targets(site: ExtractionSite) -> list[tuple[str, str]]:
    """(parameter name, parameter type) slots of same-unit methods the initialization is passed to."""
    expr = site.expression
    call = expr.parent
    if expr.role != "argument" or call is None or call.kind is not Kind.METHOD_INVOCATION:
        return []
    name = call.child("name")
    if name is None or name.kind is not Kind.SIMPLE_NAME:
        return []
    args = call.children_with("argument")
    position = next(i for i, a in enumerate(args) if a is expr)
    slots = []
    for m in site.unit.methods:
        if m.name == name.text and m.arity == len(args):
            p = m.parameters[position]
            slots.append((p.name, p.type))
    return slots


def infer_data_type(site: ExtractionSite, hv_types: Sequence[str] = ()) -> Optional[str]:
    expr = site.expression
    while expr.kind is Kind.PARENTHESIZED and expr.child("expression") is not None:
        expr = expr.child("expression")
    if expr.kind is Kind.METHOD_INVOCATION:
        name = expr.child("name")
        arity = len(expr.children_with("argument"))
        for m in site.unit.methods:
            if name is not None and m.name == name.text and m.arity == arity and m.return_type:
                return m.return_type
    if expr.kind in (Kind.OBJECT_CREATION, Kind.CAST) and expr.child("type") is not None:
        return expr.child("type").text
    if expr.kind is Kind.ARRAY_CREATION and expr.child("type") is not None:
        return expr.child("type").text + "[]"
    if expr.kind is Kind.LITERAL:
        lit = _literal_type(expr)
        if lit:
            return lit
    for _, ptype in _call_targets(site):
        return ptype
    for t in hv_types:
        return t
    return None


def _simple_type_name(type_text: str) -> str:
    idents = []
    for t in tokenize(type_text):
        if t.is_op("<"):
            break
        if t.kind in (TokenKind.IDENT, TokenKind.KEYWORD):
            idents.append(t.text)
    return idents[-1] if idents else type_text


@dataclass
class InstanceContexts:
    id: str
    name: str
    name_subtokens: list[str]
    contexts: dict[str, str]
    hits: dict[str, list[int]]
    exact: dict[str, bool]


def instance_contexts(inst: RefactoringInstance) -> InstanceContexts:
    site = inst.resolve()
    hvs = find_homogeneous(site.expression, SearchScope.document(site.unit))
    data_type = inst.data_type or infer_data_type(site, [hv.declared_type for hv in hvs])
    assigned = [pname for pname, _ in _call_targets(site)]
    texts = {
        "initialization": site.initialization,
        "homogeneous": " ".join(hv.name for hv in hvs),
        "data_type": data_type or "",
        "assignment": " ".join(assigned),
    }
    words = {c: set(subtokens_of(texts[c])) for c in CONTEXTS}
    for combo, parts in COMBINED.items():
        words[combo] = set().union(*(words[p] for p in parts))
    name_words = split_subtokens(inst.ground_truth)
    hits = {c: [int(w in words[c]) for w in name_words] for c in words}
    gt = inst.ground_truth
    exact = {
        "initialization": gt == "".join(identifier_tokens(site.expression)),
        "homogeneous": gt in {hv.name for hv in hvs},
        "data_type": bool(data_type) and gt.lower() == _simple_type_name(data_type).lower(),
        "assignment": gt in assigned,
    }
    exact["declaration"] = exact["initialization"] or exact["data_type"]
    exact["all"] = any(exact[c] for c in CONTEXTS)
    return InstanceContexts(inst.id, gt, name_words, texts, hits, exact)


@dataclass
class ContextStats:
    hits: int = 0
    total_subtokens: int = 0
    hitting_rate: float = 0.0
    exact_matches: int = 0
    exact_match_rate: float = 0.0


@dataclass
class ContextHitReport:
    total_cases: int
    skipped: int
    contexts: dict[str, ContextStats]
    instances: list[InstanceContexts]

    def hit_vectors(self, index: int = 0) -> list[list[int]]:
        """Per-context hit vectors of one instance, in the four base contexts' order."""
        return [self.instances[index].hits[c] for c in CONTEXTS]

    def to_json(self) -> dict:
        return asdict(self)


def analyze_contexts(instances: Sequence[RefactoringInstance], skipped: int = 0) -> ContextHitReport:
    per = [instance_contexts(i) for i in instances]
    stats = {}
    for c in CONTEXTS + tuple(COMBINED):
        s = ContextStats()
        for ic in per:
            s.hits += sum(ic.hits[c])
            s.total_subtokens += len(ic.hits[c])
            s.exact_matches += ic.exact[c]
        s.hitting_rate = s.hits / s.total_subtokens if s.total_subtokens else 0.0
        s.exact_match_rate = s.exact_matches / len(per) if per else 0.0
        stats[c] = s
    return ContextHitReport(len(per), skipped, stats, per)
