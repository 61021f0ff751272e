from pathlib import Path

import pytest

from jacograph import build_jaco

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle_graph():
    """J_2001 built once; sweep tests read per-vertex data from it."""
    return build_jaco(2001)


@pytest.fixture(scope="session")
def oracle_edge_counts(oracle_graph):
    """Edge counts of J_1..J_2001 as running sums of the oracle's in-degrees.

    Valid because an in-degree never depends on vertices past its own index,
    so J_n's in-degrees are a prefix of J_2001's; test_prefix_stability in
    test_oracle.py pins that down against fresh builds.
    """
    counts = []
    running = 0
    for d in oracle_graph.in_deg:
        running += d
        counts.append(running)
    return counts
