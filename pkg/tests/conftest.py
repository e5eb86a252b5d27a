import itertools
import random

import pytest

from csym_order import fixtures
from csym_order.poset import from_cover_relations


def brute_force_posets(d):
    """All strict partial orders on 1..d, straight from the definition.

    Scans every irreflexive relation (2^(d^2 - d) of them) and keeps the
    transitive, antisymmetric ones.  Independent of the enumeration under test.
    """
    pairs = [(a, b) for a in range(1, d + 1) for b in range(1, d + 1) if a != b]
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if all((a, c) in rel for a, b in rel for b2, c in rel if b == b2):
            out.append(frozenset(rel))
    return out


def random_poset(d, seed, density=0.5):
    rng = random.Random(seed)
    covers = [(a, b) for a, b in itertools.combinations(range(1, d + 1), 2) if rng.random() < density]
    perm = list(range(1, d + 1))
    rng.shuffle(perm)
    return from_cover_relations(d, [(perm[a - 1], perm[b - 1]) for a, b in covers])


@pytest.fixture(scope="session")
def example_poset():
    return fixtures.example_poset()
