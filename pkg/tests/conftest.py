"""Shared pytest wiring.

The acceptance tests in test_acceptance.py carry one criterion each; the
terminal summary below prints a PASS/FAIL line per criterion so the verdicts
can be read off a full run without scrolling the dots.
"""

import pytest

CRITERIA = {
    "test_c01_mutation_involution": "mutation involution, 1000 random matrices, exact, <5s",
    "test_c02_pentagon_recurrence": "pentagon recurrence with the 5 hand-derived variables",
    "test_c03_laurent_phenomenon": "Laurent phenomenon, 200 random sequences, <60s",
    "test_c04_finite_type_counts": "finite-type seed/variable counts, |R_+|+n labeling",
    "test_c05_two_finiteness": "2-finiteness verdicts (Dynkin, big entries, 3-cycle)",
    "test_c06_wps_reduction_oracle": "weight reduction agrees with step-loop oracle exhaustively",
    "test_c07_isomorphism_oracle": "lattice isomorphism agrees with brute-force unimodular search",
    "test_c08_degree_formula": "extension degree closed forms and top-chart identity",
    "test_c09_chern_integers": "canonical coefficients and strict positivity boundaries",
    "test_c10_numeric_kahler": "numeric Hessian positivity, two-path agreement, <10s",
    "test_c11_weighted_quiver_rules": "weight update rules, periodic triangle, relation homogeneity",
    "test_c12_super_seed_oddness": "odd-part linearity along mutation sequences",
}


def pytest_configure(config):
    config._criterion_verdicts = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    base = item.name.split("[")[0]
    if base in CRITERIA and rep.when == "call":
        item.config._criterion_verdicts[base] = rep.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = getattr(config, "_criterion_verdicts", {})
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in verdicts:
            verdict = "PASS" if verdicts[name] else "FAIL"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line("ACCEPTANCE: %s: %s" % (label, verdict))
