import pytest

from support import random_delta_matroids, vf_closed_corpus


@pytest.fixture(scope="session")
def delta_corpus():
    """At least 200 rejection-sampled delta-matroids, ground sizes 1..6."""
    return random_delta_matroids(seed=20240801, count=220, n_max=6)


@pytest.fixture(scope="session")
def vf_corpus():
    """At least 100 graph-derived vf-closed systems (some pivoted), sizes 1..6."""
    return vf_closed_corpus(seed=20240802, count=120, n_max=6)
