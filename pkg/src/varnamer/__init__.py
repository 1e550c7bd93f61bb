"""Name recommendation for extract-local-variable refactorings."""

from .evaluation import Engine, analyze_contexts, evaluate, load_dataset
from .generation import GeneratedName, apply_rules, default_invocation_name
from .recommender import Recommendation, recommend, validate_name
from .reuse import ReuseConfig, UniversalInitializationSet
from .rules import NamingRule, compile_rules, default_rules
from .search import ScopeLevel, SearchScope, build_scope, find_homogeneous
from .site import ExtractionSite, resolve_site, resolve_site_at
from .syntax import parse_unit

__all__ = [
    "Engine", "analyze_contexts", "evaluate", "load_dataset", "GeneratedName", "apply_rules",
    "default_invocation_name", "Recommendation", "recommend", "validate_name", "ReuseConfig",
    "UniversalInitializationSet", "NamingRule", "compile_rules", "default_rules", "ScopeLevel",
    "SearchScope", "build_scope", "find_homogeneous", "ExtractionSite", "resolve_site",
    "resolve_site_at", "parse_unit",
]
__version__ = "0.1.0"
