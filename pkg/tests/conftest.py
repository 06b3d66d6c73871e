import os
import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from folkman.graph import Graph, build_graph
from folkman.graph6 import read_stage_file
from folkman.pipeline import load_schedule, run_schedule

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

EARLY_LABELS = ("wHn(5)(6)(7)(10)", "wHn(5)(6)(7)(11)")


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return build_graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@st.composite
def graphs(draw, min_n=1, max_n=10, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if density is None:
        p = draw(st.sampled_from([0.2, 0.4, 0.5, 0.6, 0.8]))
    else:
        p = density
    rnd = random.Random(draw(st.integers(0, 2**32 - 1)))
    return build_graph(n, [e for e in pairs if rnd.random() < p])


def random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rnd.random() < p])


def random_permutation(rnd: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rnd.shuffle(perm)
    return perm


@pytest.fixture(scope="session")
def early_run(tmp_path_factory):
    """The sec4 schedule run through n = 10 (alpha >= 3) and n = 11 (alpha = 2)."""
    out = tmp_path_factory.mktemp("sec4")
    manifest = run_schedule(load_schedule("sec4.cfg"), out, until=EARLY_LABELS)
    return manifest


@pytest.fixture(scope="session")
def early_stage_graphs(early_run):
    """stage id -> (StageSpec, list of graphs)."""
    return {sid: (rec.stage, read_stage_file(early_run.stage_path(rec)))
            for sid, rec in early_run.records.items()}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("FOLKMAN_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended reproduction; set FOLKMAN_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(name: str, ok: bool, detail: str = "") -> None:
        line = f"{name}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
