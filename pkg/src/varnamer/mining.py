"""Mining naming rules and universal initializations from a corpus of projects."""

from __future__ import annotations

import json
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .fpgrowth import fp_growth, generate_association_rules
from .morphology import plural_marker, singularize
from .reuse import UniversalInitializationSet
from .rules import NamingRule, is_placeholder_item
from .syntax import (
    PLACEHOLDER, Kind, UnrecoverableInput, canonicalize_initialization, parse_unit, split_subtokens,
    subtokens_of,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MiningConfig:
    min_support: int = 50
    min_confidence: float = 0.8
    project_num: int = 80

    def __post_init__(self):
        if self.min_support < 1:
            raise ValueError("min_support must be >= 1")
        if not 0.0 <= self.min_confidence <= 1.0:
            raise ValueError("min_confidence must lie in [0, 1]")
        if self.project_num < 1:
            raise ValueError("project_num must be >= 1")


@dataclass(frozen=True)
class DeclarationRecord:
    name: str
    name_subtokens: tuple[str, ...]
    init_subtokens: tuple[str, ...]
    node_kind: str
    project: str
    init_canonical: str
    path: str = ""
    offset: int = 0


@dataclass(frozen=True)
class Transaction:
    items: tuple[str, ...]
    node_kind: str


def load_corpus(root: str | Path, manifest: Optional[str | Path] = None) -> dict[str, list[Path]]:
    """Group ``.java`` files by project.

    Each top-level directory under ``root`` is a project unless ``manifest``
    (a JSON object mapping project id to a list of paths relative to ``root``)
    says otherwise. Files directly under ``root`` form the project ``"."``.
    """
    root = Path(root)
    if manifest is not None:
        mapping = json.loads(Path(manifest).read_text(encoding="utf-8"))
        return {str(pid): sorted(root / p for p in paths) for pid, paths in sorted(mapping.items())}
    projects: dict[str, list[Path]] = defaultdict(list)
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root)
        projects[rel.parts[0] if len(rel.parts) > 1 else "."].append(path)
    return dict(sorted(projects.items()))


def declarations_in_source(source: str, project: str, path: str = "<memory>") -> list[DeclarationRecord]:
    unit = parse_unit(source, path)
    records = []
    for node in unit.root.walk():
        if node.kind is not Kind.LOCAL_VARIABLE_DECLARATION:
            continue
        for declarator in node.children_with("declarator"):
            init = declarator.child("initializer")
            if init is None or init.kind is Kind.ARRAY_INITIALIZER:
                continue
            name = declarator.child("name").text
            records.append(DeclarationRecord(
                name=name,
                name_subtokens=tuple(split_subtokens(name)),
                init_subtokens=tuple(subtokens_of(init)),
                node_kind=init.kind.value,
                project=project,
                init_canonical=canonicalize_initialization(init),
                path=path,
                offset=declarator.start,
            ))
    return records


def extract_declarations(corpus: dict[str, Sequence[Path]]) -> list[DeclarationRecord]:
    """Local declarations with initializers, in (project, path, offset) order."""
    records = []
    for project in sorted(corpus):
        for path in sorted(corpus[project]):
            try:
                text = Path(path).read_text(encoding="utf-8", errors="replace")
                records.extend(declarations_in_source(text, project, str(path)))
            except (OSError, UnrecoverableInput) as exc:
                log.warning("skipping %s: %s", path, exc)
    return records


def _find_run(needle: Sequence[str], haystack: Sequence[str]) -> int:
    n = len(needle)
    for i in range(len(haystack) - n + 1):
        if list(haystack[i:i + n]) == list(needle):
            return i
    return -1


def align_and_replace(name_subtokens: Sequence[str], init_subtokens: Sequence[str]) -> Optional[list[str]]:
    """Replace the first contiguous occurrence of the name inside the initializer.

    When the name only matches with its last word pluralized in the
    initializer, the placeholder item carries the plural suffix
    (``<placeholder>s`` or ``<placeholder>es``).
    """
    name = [t.lower() for t in name_subtokens]
    init = [t.lower() for t in init_subtokens]
    if not name or not init or len("".join(name)) <= 1:
        return None
    i = _find_run(name, init)
    if i >= 0:
        return init[:i] + [PLACEHOLDER] + init[i + len(name):]
    n = len(name)
    for i in range(len(init) - n + 1):
        last = init[i + n - 1]
        marker = plural_marker(last)
        if marker and init[i:i + n - 1] == name[:-1] and singularize(last) == name[-1]:
            return init[:i] + [PLACEHOLDER + marker] + init[i + n:]
    return None


def build_transactions(records: Iterable[DeclarationRecord]) -> list[Transaction]:
    out = []
    for r in records:
        items = align_and_replace(r.name_subtokens, r.init_subtokens)
        if items is not None and any(is_placeholder_item(i) for i in items):
            out.append(Transaction(tuple(items), r.node_kind))
    return out


def _template_order(itemset: frozenset, transactions: Sequence[Transaction]) -> tuple[str, ...]:
    """Most frequent left-to-right order of ``itemset`` among transactions containing it."""
    orders: Counter = Counter()
    for t in transactions:
        if itemset <= set(t.items):
            firsts = {}
            for pos, item in enumerate(t.items):
                firsts.setdefault(item, pos)
            orders[tuple(sorted(itemset, key=firsts.__getitem__))] += 1
    return min(orders.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def mine_rules(transactions: Sequence[Transaction], cfg: MiningConfig = MiningConfig()) -> list[NamingRule]:
    """Candidate rules ``X => placeholder`` mined separately for each initializer kind."""
    by_kind: dict[str, list[Transaction]] = defaultdict(list)
    for t in transactions:
        by_kind[t.node_kind].append(t)
    rules = []
    for kind in sorted(by_kind):
        group = by_kind[kind]
        itemsets = fp_growth([t.items for t in group], cfg.min_support)
        assoc = generate_association_rules(
            itemsets, cfg.min_confidence,
            consequent_filter=lambda c: len(c) == 1 and is_placeholder_item(next(iter(c))))
        for a in assoc:
            if any(is_placeholder_item(i) for i in a.antecedent):
                continue
            template = _template_order(a.antecedent | a.consequent, group)
            rules.append(NamingRule(kind, template, a.support, a.confidence))
    return rules


def mine_universal_initializations(records: Iterable[DeclarationRecord],
                                   project_num: int) -> UniversalInitializationSet:
    """Initializations given two or more names in at least ``project_num`` projects."""
    names: dict[tuple[str, str], set[str]] = defaultdict(set)
    for r in records:
        names[(r.project, r.init_canonical)].add(r.name)
    projects: Counter = Counter()
    for (_, init), distinct in names.items():
        if len(distinct) >= 2:
            projects[init] += 1
    return UniversalInitializationSet(frozenset(i for i, n in projects.items() if n >= project_num))
