from itertools import product
from math import comb, prod


def brute(weight, n_list):
    """sum over k in prod [-n_i, n_i] of prod C(2n_i, n_i + k_i) * weight(*k).

    Deliberately independent of the package: plain math.comb and itertools.
    """
    total = 0
    for ks in product(*(range(-n, n + 1) for n in n_list)):
        total += prod(comb(2 * n, n + k) for n, k in zip(n_list, ks)) * weight(*ks)
    return total


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                rows.append((nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(rows):
            terminalreporter.write_line(f"{status}  {name}")
