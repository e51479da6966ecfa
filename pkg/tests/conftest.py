import itertools
from functools import lru_cache

import pytest

from bigelow_jones.braid import BraidWord, parse_braid
from bigelow_jones.pipeline import analyze


@lru_cache(maxsize=None)
def analysis(text, strands):
    return analyze(parse_braid(text, strands))


@pytest.fixture(scope="session")
def trefoil():
    return analysis("-1 -1 -1", 2)


def corpus_words(max_len=6, strand_counts=(2, 3)):
    """Every braid word up to max_len letters, in a fixed order."""
    for s in strand_counts:
        letters = [(i, e) for i in range(1, s) for e in (1, -1)]
        for n in range(max_len + 1):
            for w in itertools.product(letters, repeat=n):
                yield BraidWord(s, w)
