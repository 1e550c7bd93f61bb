"""Naming rule records, their JSON form, and the curation filter."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .syntax import PLACEHOLDER

PLACEHOLDER_ITEMS = (PLACEHOLDER, PLACEHOLDER + "s", PLACEHOLDER + "es")


def is_placeholder_item(item: str) -> bool:
    return item in PLACEHOLDER_ITEMS


def placeholder_marker(item: str) -> Optional[str]:
    """Plural suffix carried by a placeholder item ("", "s" or "es")."""
    if not is_placeholder_item(item):
        raise ValueError(f"not a placeholder item: {item!r}")
    return item[len(PLACEHOLDER):]


class RuleFormatError(ValueError):
    pass


@dataclass(frozen=True)
class NamingRule:
    """``template`` is the ordered item pattern; exactly one item is a placeholder."""

    node_kind: str
    template: tuple[str, ...]
    support: Optional[int] = None
    confidence: Optional[float] = None

    def __post_init__(self):
        slots = [i for i in self.template if is_placeholder_item(i)]
        if len(slots) != 1:
            raise RuleFormatError(f"template needs exactly one placeholder: {self.template!r}")
        if len(self.template) < 2:
            raise RuleFormatError(f"rule antecedent is empty: {self.template!r}")

    @property
    def slot(self) -> int:
        return next(i for i, item in enumerate(self.template) if is_placeholder_item(item))

    @property
    def antecedent(self) -> tuple[str, ...]:
        return tuple(i for i in self.template if not is_placeholder_item(i))

    @property
    def consequent(self) -> str:
        return f"{PLACEHOLDER} = " + " + ".join(self.template)

    @property
    def rule_id(self) -> str:
        return f"{self.node_kind}:{' + '.join(self.template)}"

    @property
    def rank_confidence(self) -> float:
        # hand-curated rules without statistics rank as certain
        return 1.0 if self.confidence is None else self.confidence

    def to_json(self) -> dict:
        return {"node_kind": self.node_kind, "antecedent": list(self.antecedent),
                "consequent": self.consequent, "support": self.support,
                "confidence": self.confidence}

    @classmethod
    def from_json(cls, record: dict) -> NamingRule:
        try:
            kind = record["node_kind"]
            consequent = record["consequent"]
        except (KeyError, TypeError) as exc:
            raise RuleFormatError(f"rule record missing field: {exc}") from None
        lhs, sep, rhs = consequent.partition("=")
        if not sep or lhs.strip() != PLACEHOLDER:
            raise RuleFormatError(f"bad consequent: {consequent!r}")
        template = tuple(part.strip() for part in rhs.split("+"))
        rule = cls(kind, template, record.get("support"), record.get("confidence"))
        antecedent = record.get("antecedent")
        if antecedent is not None and tuple(antecedent) != rule.antecedent:
            raise RuleFormatError(f"antecedent {antecedent!r} disagrees with {consequent!r}")
        return rule


def sort_rules(rules: Iterable[NamingRule]) -> list[NamingRule]:
    """Descending confidence, then support; the input order breaks remaining ties."""
    indexed = list(enumerate(rules))
    indexed.sort(key=lambda p: (-p[1].rank_confidence, -(p[1].support or 0), p[0]))
    return [r for _, r in indexed]


def load_rules(path: str | Path) -> list[NamingRule]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise RuleFormatError(f"{path}: {exc}") from None
    if not isinstance(data, list):
        raise RuleFormatError(f"{path}: expected a JSON array of rules")
    return sort_rules(NamingRule.from_json(r) for r in data)


def dump_rules(rules: Sequence[NamingRule], path: str | Path) -> None:
    Path(path).write_text(json.dumps([r.to_json() for r in rules], indent=2) + "\n",
                          encoding="utf-8")


def default_rules() -> list[NamingRule]:
    with resources.as_file(resources.files("varnamer") / "data" / "rules.json") as p:
        return load_rules(p)


class CurationError(ValueError):
    pass


@dataclass(frozen=True)
class CurationEntry:
    allow: bool
    items: frozenset[str]
    node_kind: Optional[str] = None

    def matches(self, rule: NamingRule) -> bool:
        if self.node_kind is not None and self.node_kind != rule.node_kind:
            return False
        return self.items == frozenset(rule.template)


@dataclass(frozen=True)
class Curation:
    """Allow/deny list. Deny always wins; ``strict`` keeps only allowed rules."""

    strict: bool = False
    entries: tuple[CurationEntry, ...] = ()

    @classmethod
    def parse(cls, text: str) -> Curation:
        strict = False
        entries = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "mode" and len(parts) == 2 and parts[1] in ("strict", "permissive"):
                strict = parts[1] == "strict"
                continue
            if parts[0] in ("allow", "deny") and len(parts) in (2, 3):
                items = [i.strip() for i in parts[-1].split(",")]
                kind = parts[1] if len(parts) == 3 else None
                if all(items) and sum(is_placeholder_item(i) for i in items) == 1:
                    entries.append(CurationEntry(parts[0] == "allow", frozenset(items), kind))
                    continue
            raise CurationError(f"line {lineno}: malformed curation entry {raw.strip()!r}")
        return cls(strict, tuple(entries))

    @classmethod
    def load(cls, path: str | Path) -> Curation:
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def admits(self, rule: NamingRule) -> bool:
        hits = [e for e in self.entries if e.matches(rule)]
        if any(not e.allow for e in hits):
            return False
        return any(e.allow for e in hits) or not self.strict


def compile_rules(candidates: Iterable[NamingRule], curation: Optional[Curation] = None) -> list[NamingRule]:
    curation = curation or Curation()
    return sort_rules(r for r in candidates if curation.admits(r))
