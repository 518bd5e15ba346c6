"""Shared fixtures and the acceptance summary printer."""

from __future__ import annotations

import pytest

ACCEPTANCE_RESULTS = []


def record_acceptance(num, title, ok):
    ACCEPTANCE_RESULTS.append((num, title, bool(ok)))


@pytest.fixture(scope="session")
def corpus_report():
    """One full survey of the default corpus, shared by the acceptance tests."""
    from hopfdepth.survey import run_survey

    return run_survey()


@pytest.fixture(scope="session")
def group_pairs():
    """Every (G, subgroup, subalgebra, depth data) tuple over the default corpus."""
    from hopfdepth.algebras import builtin_group_algebra, subgroup_subalgebra
    from hopfdepth.depth import depth_pair
    from hopfdepth.groups import builtin_group, enumerate_subgroups
    from hopfdepth.survey import DEFAULT_GROUPS

    pairs = []
    for name in DEFAULT_GROUPS:
        G = builtin_group(name)
        H = builtin_group_algebra(name)
        for sub in enumerate_subgroups(G):
            K = subgroup_subalgebra(G, sub, algebra=H)
            pairs.append((G, sub, K, depth_pair(K)))
    return pairs


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, title, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {num:02d} {title}: {'PASS' if ok else 'FAIL'}")
