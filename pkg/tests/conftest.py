import numpy as np
import pytest

from alphaenergy import graphcore

CORPUS_SEED = 20240811


def build_er_corpus(seed: int, trials: int, n_min: int = 4, n_max: int = 12):
    """Seeded connected Erdos-Renyi graphs; shared by property and acceptance tests."""
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.uniform(0.25, 0.75))
        graphs.append(
            graphcore.erdos_renyi(n, p, int(rng.integers(0, 2**63)), connected=True)
        )
    return graphs


@pytest.fixture(scope="session")
def er_corpus():
    """200 seeded random connected graphs with 4 <= n <= 12."""
    return build_er_corpus(CORPUS_SEED, 200)


@pytest.fixture(scope="session")
def er_corpus_small():
    """A 60-graph slice for the denser per-bound property checks."""
    return build_er_corpus(CORPUS_SEED + 1, 60)
