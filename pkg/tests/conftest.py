import pytest

import helpers


@pytest.fixture(scope="session")
def small_graph_corpus():
    """All graphs up to isomorphism on 1..6 vertices."""
    corpus = helpers.graph_corpus(6)
    for n, count in corpus.items():
        assert len(count) == helpers.KNOWN_GRAPH_COUNTS[n]
    return corpus


@pytest.fixture(scope="session")
def full_graph_corpus():
    """All graphs up to isomorphism on 1..8 vertices (used by acceptance)."""
    corpus = helpers.graph_corpus(8)
    for n in corpus:
        assert len(corpus[n]) == helpers.KNOWN_GRAPH_COUNTS[n]
    return corpus
