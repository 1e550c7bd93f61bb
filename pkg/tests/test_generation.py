import pytest
from conftest import site_in
from hypothesis import assume, given
from hypothesis import strategies as st

from varnamer.generation import (
    DEFAULT_INVOCATION, GeneratedName, apply_rules, default_invocation_name, default_verbs,
    is_valid_generated, load_verbs,
)
from varnamer.morphology import singularize
from varnamer.rules import NamingRule, default_rules, sort_rules
from varnamer.syntax import JAVA_KEYWORDS, PLACEHOLDER, parse_expression

RULES = default_rules()


def generate(expr, rules=RULES, verbs=None):
    result = apply_rules(parse_expression(expr), rules, verbs)
    return result.name if result else None


@pytest.mark.parametrize("expr, name", [
    ("buildId(serviceInstance)", "id"),
    ("features.next()", "feature"),
    ("checkConfig.getMessages()", "messages"),
    ("generateUrls(names)", "urls"),
    ("fetchExecutionStatus()", "executionStatus"),
    ("aliases.next()", "alias"),
])
def test_known_generations(expr, name):
    assert generate(expr) == name


def test_rule_provenance():
    assert apply_rules(parse_expression("features.next()"), RULES).rule_id == \
        f"method-invocation:{PLACEHOLDER}s + next"
    assert apply_rules(parse_expression("buildId(x)"), RULES).rule_id == DEFAULT_INVOCATION


@pytest.mark.parametrize("expr, name", [
    ("checkConfig.getMessages()", "messages"),
    ("name().lastIndexOf('.')", "lastIndexOf"),
    ("0", None),
    ("a + b", None),
    ("this.get()", "get"),
    ("client.isOpen()", "open"),
])
def test_default_invocation(expr, name):
    result = default_invocation_name(parse_expression(expr), default_verbs())
    assert (result.name if result else None) == name


def test_empty_verb_list_is_identity():
    for expr, method in [("getName()", "getName"), ("a.fetchAll()", "fetchAll"), ("run()", "run")]:
        assert default_invocation_name(parse_expression(expr), []).name == method


# twenty words: regular -s, sibilant -es, -ies, words already singular, and look-alikes
SINGULAR = {
    "aliases": "alias", "features": "feature", "status": "status", "classes": "class",
    "boxes": "box", "matches": "match", "hashes": "hash", "entries": "entry", "cases": "case",
    "responses": "response", "databases": "database", "statuses": "status", "ids": "id",
    "indexes": "index", "caches": "cache", "bus": "bus", "analysis": "analysis",
    "series": "series", "urls": "url", "quizzes": "quiz",
}


@pytest.mark.parametrize("plural, singular", sorted(SINGULAR.items()))
def test_singularize_table(plural, singular):
    assert singularize(plural) == singular


def test_singularize_leaves_non_plurals():
    for word in ("name", "index", "data", "x"):
        assert singularize(word) == word


def test_unmatched_marker_falls_through():
    # "status" is not a plural, so neither next-rule applies
    assert generate("status.next()") == "next"


def test_rules_only_fire_for_their_kind():
    rule = NamingRule("object-creation", ("hash", PLACEHOLDER))
    assert generate("new HashMap<String, Integer>()", [rule]) == "map"
    assert generate("hashMap()", [rule]) == "hashMap"


def test_rule_priority_follows_confidence():
    weak = NamingRule("method-invocation", ("get", PLACEHOLDER), 100, 0.81)
    strong = NamingRule("method-invocation", ("get", "user", PLACEHOLDER), 90, 0.95)
    assert generate("getUserName()", sort_rules([weak, strong])) == "name"
    assert generate("getUserName()", sort_rules([weak])) == "userName"


def test_generation_ignores_surroundings():
    a = site_in("void f() { go(fetchExecutionStatus()); }", "fetchExecutionStatus()")
    b = site_in("class Z { int executionStatus; void g(int q) { if (fetchExecutionStatus() > q) {} } }",
                "fetchExecutionStatus()")
    assert apply_rules(a.expression, RULES) == apply_rules(b.expression, RULES)


def test_verbs_file(tmp_path):
    path = tmp_path / "verbs.txt"
    path.write_text("# custom\nmake\n\n")
    assert load_verbs(path) == {"make"}
    assert generate("makeWidget()", verbs=load_verbs(path)) == "widget"
    assert generate("getWidget()", verbs=load_verbs(path)) == "getWidget"


def test_generated_name_validation():
    with pytest.raises(ValueError):
        GeneratedName("123", "x")
    with pytest.raises(ValueError):
        GeneratedName("", "x")


_IDENT = st.from_regex(r"[a-z][A-Za-z0-9_]{0,12}", fullmatch=True)


@given(_IDENT, _IDENT, st.sampled_from(["", ".next()", ".get(0)", ".length"]))
def test_generated_names_always_valid(receiver, method, tail):
    reserved = JAVA_KEYWORDS | {"true", "false", "null"}
    assume(receiver not in reserved and method not in reserved)
    expr = f"{receiver}.{method}(){tail}"
    result = apply_rules(parse_expression(expr), RULES)
    if result is not None:
        assert is_valid_generated(result.name)
        assert not result.name.isdigit()
