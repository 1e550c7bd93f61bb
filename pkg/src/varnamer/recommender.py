"""Combining name reuse and name generation into one recommendation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional, Sequence

from .generation import apply_rules
from .reuse import ReuseConfig, UniversalInitializationSet, reuse_candidate
from .rules import NamingRule
from .search import SearchScope, find_homogeneous
from .site import ExtractionSite, visible_names


@lru_cache(maxsize=1)
def reserved_words() -> frozenset[str]:
    text = (resources.files("varnamer") / "data" / "keywords.txt").read_text(encoding="utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def validate_name(name: Optional[str], site: ExtractionSite) -> bool:
    """False for reserved words and for names already visible at the extraction point."""
    if not name:
        return False
    return name not in reserved_words() and name not in visible_names(site)


@dataclass
class Recommendation:
    name: Optional[str]
    source: Optional[str]
    diagnostics: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, "diagnostics": self.diagnostics}


def _rejection(name: str, site: ExtractionSite) -> Optional[str]:
    if name in reserved_words():
        return "reserved-word"
    if name in visible_names(site):
        return "name-collision"
    return None


def recommend_with_trace(site: ExtractionSite, scope: SearchScope, rules: Sequence[NamingRule],
                         universal: UniversalInitializationSet, cfg: ReuseConfig = ReuseConfig(),
                         verbs: Optional[Iterable[str]] = None) -> Recommendation:
    """Always returns a record; ``name`` is None when nothing valid was found."""
    hvs = find_homogeneous(site.expression, scope)
    reuse = reuse_candidate(site, hvs, cfg, universal)
    generated = apply_rules(site.expression, rules, verbs)
    diag: dict = {
        "initialization": site.initialization,
        "parent_statement": site.parent_statement.text,
        "method": site.enclosing_method.name,
        "reuse": {"universal": reuse.universal, "homogeneous": [hv.name for hv in hvs],
                  "candidates": reuse.candidates, "name": reuse.name, "rejected": None},
        "generation": {"name": generated.name if generated else None,
                       "rule": generated.rule_id if generated else None, "rejected": None},
    }
    chosen = None
    if reuse.name is not None:
        reason = _rejection(reuse.name, site)
        diag["reuse"]["rejected"] = reason
        if reason is None:
            chosen = Recommendation(reuse.name, "reuse", diag)
    if generated is not None:
        reason = _rejection(generated.name, site)
        diag["generation"]["rejected"] = reason
        if chosen is None and reason is None:
            chosen = Recommendation(generated.name, "generation", diag)
    return chosen or Recommendation(None, None, diag)


def recommend(site: ExtractionSite, scope: SearchScope, rules: Sequence[NamingRule],
              universal: UniversalInitializationSet, cfg: ReuseConfig = ReuseConfig(),
              verbs: Optional[Iterable[str]] = None) -> Optional[Recommendation]:
    rec = recommend_with_trace(site, scope, rules, universal, cfg, verbs)
    return rec if rec.name is not None else None
