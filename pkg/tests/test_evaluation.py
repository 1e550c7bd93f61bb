import json
import random

import pytest
from conftest import marked_record, write_jsonl

from varnamer.evaluation import (
    CONTEXTS, DatasetSchemaError, analyze_contexts, bundled_dataset_path, evaluate,
    exact_match_metrics, load_dataset,
)

DOTIDX = """default String packageName() {
    return name().substring(0, «name().lastIndexOf('.')»);
}
default String simpleName() {
    final int dotIdx = name().lastIndexOf('.');
    if (dotIdx < 0) {
        return name();
    } else {
        return name().substring(dotIdx + 1);
    }
}
"""

EXCHANGE = """public void process(Exchange exchange) {
    splitBody(«exchange.getIn()»);
}
private void splitBody(Message message) {
    message.setBody(null);
}
"""


def test_bundled_dataset_loads_thirty():
    data = load_dataset(bundled_dataset_path())
    assert len(data.instances) == 30 and data.skipped == 0
    assert len({i.id for i in data.instances}) == 30


def test_empty_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    data = load_dataset(path)
    assert data.instances == [] and data.skipped == 0


def test_whitespace_span_is_skipped(tmp_path):
    good = marked_record(DOTIDX, "dotIdx", "good")
    bad = dict(good, id="bad", span={"startLine": 2, "startCol": 1, "endLine": 2, "endCol": 4})
    assert good["source"].splitlines()[1][:4] == "    "
    data = load_dataset(write_jsonl(tmp_path / "d.jsonl", [good, bad]))
    assert [i.id for i in data.instances] == ["good"]
    assert data.skipped == 1 and data.skipped_ids == ["bad"]


@pytest.mark.parametrize("line", ['{"source": "x"}', "not json", '[1, 2]',
                                  '{"source": "x", "ground_truth": "y", "span": {"startLine": 1}}'])
def test_schema_errors(tmp_path, line):
    path = tmp_path / "d.jsonl"
    path.write_text(line + "\n")
    with pytest.raises(DatasetSchemaError, match="line 1"):
        load_dataset(path)


def test_metric_conventions():
    assert exact_match_metrics(10, 8, 4) == (0.5, 0.4)
    assert exact_match_metrics(5, 0, 0) == (0.0, 0.0)
    assert exact_match_metrics(0, 0, 0) == (0.0, 0.0)
    with pytest.raises(ValueError):
        exact_match_metrics(3, 2, 3)


def test_dotidx_alone(tmp_path):
    data = load_dataset(write_jsonl(tmp_path / "d.jsonl", [marked_record(DOTIDX, "dotIdx")]))
    report = evaluate(data.instances)
    assert (report.total_cases, report.recommendations, report.exact_matches) == (1, 1, 1)
    assert report.em_precision == 1.0


def test_exact_match_is_case_sensitive(tmp_path):
    data = load_dataset(write_jsonl(tmp_path / "d.jsonl", [marked_record(DOTIDX, "DotIdx")]))
    report = evaluate(data.instances)
    assert report.recommendations == 1 and report.exact_matches == 0


def test_declines_count_only_in_total(tmp_path):
    rec = marked_record("void f() { go(«0»); }", "zero")
    report = evaluate(load_dataset(write_jsonl(tmp_path / "d.jsonl", [rec])).instances)
    assert (report.total_cases, report.recommendations, report.em_precision, report.em_coverage) == \
        (1, 0, 0.0, 0.0)


def test_order_invariance():
    instances = load_dataset(bundled_dataset_path()).instances
    base = evaluate(instances)
    shuffled = instances[:]
    random.Random(4).shuffle(shuffled)
    other = evaluate(shuffled)
    assert (base.total_cases, base.recommendations, base.exact_matches) == \
        (other.total_cases, other.recommendations, other.exact_matches)


def test_report_identities():
    report = evaluate(load_dataset(bundled_dataset_path()).instances)
    assert report.exact_matches <= report.recommendations <= report.total_cases
    assert report.em_precision == report.exact_matches / report.recommendations
    assert report.em_coverage == report.exact_matches / report.total_cases
    json.dumps(report.to_json())


def test_dotidx_hit_vectors(tmp_path):
    data = load_dataset(write_jsonl(tmp_path / "d.jsonl", [marked_record(DOTIDX, "dotIdx")]))
    report = analyze_contexts(data.instances)
    assert report.hit_vectors(0) == [[0, 0], [1, 1], [0, 0], [0, 0]]
    assert report.instances[0].exact["homogeneous"] is True
    assert report.contexts["all"].hits == 2


def test_exchange_data_type_exact_match(tmp_path):
    data = load_dataset(write_jsonl(tmp_path / "d.jsonl", [marked_record(EXCHANGE, "message")]))
    ic = analyze_contexts(data.instances).instances[0]
    assert ic.contexts["data_type"] == "Message"
    assert ic.exact["data_type"] is True
    assert ic.contexts["assignment"] == "message" and ic.exact["assignment"] is True
    assert ic.exact["initialization"] is False


def test_explicit_data_type_field(tmp_path):
    rec = marked_record("void f() { go(«load()»); }", "config", data_type="Config")
    ic = analyze_contexts(load_dataset(write_jsonl(tmp_path / "d.jsonl", [rec])).instances).instances[0]
    assert ic.exact["data_type"] is True and ic.hits["data_type"] == [1]


def test_no_homogeneous_gives_zero_vector(tmp_path):
    rec = marked_record("void f() { go(«user.getFullName()»); }", "fullName")
    ic = analyze_contexts(load_dataset(write_jsonl(tmp_path / "d.jsonl", [rec])).instances).instances[0]
    assert ic.hits["homogeneous"] == [0, 0]
    assert ic.hits["initialization"] == [1, 1]


def test_rates_bounded_on_bundled_set():
    report = analyze_contexts(load_dataset(bundled_dataset_path()).instances)
    for name in CONTEXTS + ("declaration", "all"):
        stats = report.contexts[name]
        assert 0.0 <= stats.hitting_rate <= 1.0
        assert 0.0 <= stats.exact_match_rate <= 1.0
    assert report.contexts["all"].hits >= report.contexts["initialization"].hits
