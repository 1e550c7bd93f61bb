import pytest
from conftest import site_in
from hypothesis import given
from hypothesis import strategies as st

from varnamer.reuse import (
    ReuseConfig, UniversalInitializationSet, Verdict, build_vdg, dependent_nodes,
    is_universal_initialization, method_similarity, reuse_candidate, select_reuse_name,
    validate_candidate,
)
from varnamer.search import SearchScope, find_homogeneous
from varnamer.similarity import context_similarity

DEFAULT = UniversalInitializationSet.default()


def hvs_for(site):
    return find_homogeneous(site.expression, SearchScope.document(site.unit))


@pytest.mark.parametrize("init, expected", [
    ("null", True),
    ("new StringBuilder ( )", True),
    ("name ( ) . lastIndexOf ( '.' )", False),
])
def test_universal_membership(init, expected):
    assert is_universal_initialization(init, DEFAULT) is expected


def test_universal_file_round_trip(tmp_path):
    path = tmp_path / "u.txt"
    path.write_text("null\nnew  StringBuilder()\n\n", encoding="utf-8")
    loaded = UniversalInitializationSet.load(path)
    assert "new StringBuilder ( )" in loaded and len(loaded) == 2
    loaded.dump(tmp_path / "v.txt")
    assert UniversalInitializationSet.load(tmp_path / "v.txt") == loaded


def test_config_ranges():
    with pytest.raises(ValueError):
        ReuseConfig(fg_sim=1.5)
    with pytest.raises(ValueError):
        ReuseConfig(ini_length=-1)


def test_dotidx_vdg(dotidx_site):
    hv = hvs_for(dotidx_site)[0]
    vdg = build_vdg(hv.enclosing_method, hv)
    assert [n.text for n in dependent_nodes(vdg)] == [
        "dotIdx < 0", "return name().substring(dotIdx + 1);"]
    assert vdg.variable not in vdg.dependent_nodes
    assert all(edge[0] is vdg.variable for edge in vdg.edges)


def test_unreferenced_variable_has_no_dependents():
    site = site_in("void a() { int n = size(); } void b() { go(size()); }", "size()", occurrence=1)
    hv = hvs_for(site)[0]
    assert dependent_nodes(build_vdg(hv.enclosing_method, hv)) == []


def test_for_condition_is_the_dependent_node():
    src = """
    void a() {
        int limit = count();
        for (int i = 0; i < limit; i++) { System.out.println(i); }
    }
    void b() { go(count()); }
    """
    site = site_in(src, "count()", occurrence=1)
    hv = hvs_for(site)[0]
    assert [n.text for n in dependent_nodes(build_vdg(hv.enclosing_method, hv))] == ["i < limit"]


def test_variable_not_in_method_raises(dotidx_site):
    hv = hvs_for(dotidx_site)[0]
    with pytest.raises(ValueError):
        build_vdg(dotidx_site.enclosing_method, hv)


def test_reliable_by_length():
    init = "registry.lookupService(serviceName)"
    assert len(init) == 35
    src = f"void a() {{ Object svc = {init}; }} void b() {{ go({init}); }}"
    site = site_in(src, init, occurrence=1)
    check = validate_candidate(site, hvs_for(site)[0], ReuseConfig())
    assert check.verdict is Verdict.RELIABLE_BY_LENGTH


def test_dotidx_reliable_by_context(dotidx_site):
    check = validate_candidate(dotidx_site, hvs_for(dotidx_site)[0], ReuseConfig())
    assert check.verdict is Verdict.RELIABLE_BY_CONTEXT
    # frozen values; test_acceptance recomputes them by hand-listed multisets
    assert check.score == pytest.approx(0.6414027, abs=1e-6)
    assert [round(n["context"], 6) for n in check.node_scores] == [0.205128, 0.641403]


def test_no_dependents_and_short_init_rejected():
    site = site_in("void a() { int n = size(); } void b() { go(size()); }", "size()", occurrence=1)
    check = validate_candidate(site, hvs_for(site)[0], ReuseConfig())
    assert check.verdict is Verdict.REJECTED and check.score is None


def test_select_dotidx(dotidx_site):
    assert select_reuse_name(dotidx_site, hvs_for(dotidx_site), ReuseConfig(), DEFAULT) == "dotIdx"


def test_null_is_never_reused():
    src = "void a() { Object v = null; use(v); } void b() { use(null); }"
    site = site_in(src, "null", occurrence=1)
    outcome = reuse_candidate(site, hvs_for(site), ReuseConfig(), DEFAULT)
    assert outcome.universal and outcome.name is None


TWO_HVS = """
void target(List<String> items) {
    process(items.iterator().next().trim());
    log(items.size());
}
void near(List<String> items) {
    String head = items.iterator().next().trim();
    process(head);
    log(items.size());
}
void far() {
    String other = items.iterator().next().trim();
    if (other != null) { throw new IllegalStateException(other + " unexpected"); }
}
"""


def test_highest_method_similarity_wins():
    site = site_in(TWO_HVS, "items.iterator().next().trim()")
    hvs = hvs_for(site)
    assert [hv.name for hv in hvs] == ["head", "other"]
    sims = [context_similarity(site.enclosing_method.declaration, hv.enclosing_method.declaration)
            for hv in hvs]
    assert sims[0] > sims[1]
    assert [method_similarity(site, hv) for hv in hvs] == sims
    assert select_reuse_name(site, hvs, ReuseConfig(ini_length=0), DEFAULT) == "head"
    # order of the candidates must not matter
    assert select_reuse_name(site, hvs[::-1], ReuseConfig(ini_length=0), DEFAULT) == "head"


@pytest.mark.parametrize("order, winner", [(("qq", "zz"), "qq"), (("zz", "qq"), "zz")])
def test_ties_go_to_earliest(order, winner):
    # q and z never occur in the site method, so both edit distances are equal
    first, second = order
    src = f"""
    void a() {{ int {first} = size(); go({first}); }}
    void a() {{ int {second} = size(); go({second}); }}
    void b() {{ go(size()); }}
    """
    site = site_in(src, "size()", occurrence=2)
    hvs = hvs_for(site)
    assert method_similarity(site, hvs[0]) == method_similarity(site, hvs[1])
    assert select_reuse_name(site, hvs, ReuseConfig(fg_sim=0.0), DEFAULT) == winner


@given(st.floats(0, 1), st.floats(0, 1))
def test_raising_threshold_never_admits(lo, hi):
    lo, hi = sorted((lo, hi))
    src = "void a() { int n = size(); if (n > 3) { go(n); } } void b() { go(size()); }"
    site = site_in(src, "size()", occurrence=1)
    hv = hvs_for(site)[0]
    weak = validate_candidate(site, hv, ReuseConfig(fg_sim=lo))
    strong = validate_candidate(site, hv, ReuseConfig(fg_sim=hi))
    assert not (strong.reliable and not weak.reliable)


def test_growing_universal_set_never_adds_reuse(dotidx_site):
    hvs = hvs_for(dotidx_site)
    grown = UniversalInitializationSet.of(list(DEFAULT.entries) + ["name().lastIndexOf('.')"])
    assert select_reuse_name(dotidx_site, hvs, ReuseConfig(), DEFAULT) == "dotIdx"
    assert select_reuse_name(dotidx_site, hvs, ReuseConfig(), grown) is None


def test_field_homogeneous_variable():
    src = """
    class C {
        private final String prefix = config.prefix();
        String label() { return prefix + "-label"; }
        String tag() { return config.prefix() + "-tag"; }
    }
    """
    site = site_in(src, "config.prefix()", occurrence=1)
    hv = hvs_for(site)[0]
    vdg = build_vdg(None, hv)
    assert [n.text for n in vdg.dependent_nodes] == ['return prefix + "-label";']
    assert method_similarity(site, hv) == 0.0
    assert select_reuse_name(site, [hv], ReuseConfig(), DEFAULT) == "prefix"
