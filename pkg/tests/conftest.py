import json
from pathlib import Path

import pytest

from varnamer.site import resolve_site
from varnamer.syntax import parse_unit

FIXTURES = Path(__file__).parent / "fixtures"


def site_in(source, snippet, occurrence=0, path="<memory>"):
    """Extraction site for the ``occurrence``-th appearance of ``snippet`` in ``source``."""
    unit = parse_unit(source, path)
    start = -1
    for _ in range(occurrence + 1):
        start = source.index(snippet, start + 1)
    return resolve_site(unit, start, start + len(snippet))


@pytest.fixture
def dotidx_source():
    return (FIXTURES / "dotidx.java").read_text(encoding="utf-8")


@pytest.fixture
def dotidx_site(dotidx_source):
    return site_in(dotidx_source, "name().lastIndexOf('.')", path=str(FIXTURES / "dotidx.java"))


def marked_record(marked, truth, case_id="case", **extra):
    """Dataset record for source whose extraction span is wrapped in « and »."""
    start = marked.index("«")
    end = marked.index("»") - 1
    source = marked.replace("«", "").replace("»", "")

    def line_col(offset):
        return source.count("\n", 0, offset) + 1, offset - (source.rfind("\n", 0, offset) + 1) + 1

    (sl, sc), (el, ec) = line_col(start), line_col(end - 1)
    span = {"startLine": sl, "startCol": sc, "endLine": el, "endCol": ec}
    return {"id": case_id, "source": source, "span": span, "ground_truth": truth, **extra}


def write_jsonl(path, records):
    path.write_text("".join(json.dumps(r) + "\n" for r in records), encoding="utf-8")
    return path


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
