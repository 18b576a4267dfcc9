import random

import pytest

from polycomplete.fixtures import (
    crosspolytope_incidence,
    cube_km,
    cyclic_incidence,
    delete_minor,
    prism,
    simplex_incidence,
)


@pytest.fixture(scope="session")
def km():
    return cube_km()


def corpus_bases():
    """Complete fixture matrices with n <= 10, used to breed minors."""
    bases = [
        ("triangle", cyclic_incidence(2, 3)),
        ("square", cyclic_incidence(2, 4)),
        ("pentagon", cyclic_incidence(2, 5)),
        ("hexagon", cyclic_incidence(2, 6)),
        ("decagon", cyclic_incidence(2, 10)),
        ("cube-km", cube_km()),
        ("crosspolytope-3", crosspolytope_incidence(3)),
        ("crosspolytope-4", crosspolytope_incidence(4)),
        ("cyclic-3-6", cyclic_incidence(3, 6)),
        ("cyclic-3-7", cyclic_incidence(3, 7)),
        ("cyclic-4-7", cyclic_incidence(4, 7)),
        ("cyclic-4-8", cyclic_incidence(4, 8)),
        ("cyclic-5-8", cyclic_incidence(5, 8)),
        ("prism-triangle", prism(cyclic_incidence(2, 3))),
        ("prism-square", prism(cyclic_incidence(2, 4))),
    ]
    bases += [(f"simplex-{d}", simplex_incidence(d)) for d in range(1, 6)]
    return bases


@pytest.fixture(scope="session")
def corpus():
    """Deterministic corpus of >= 200 minors of complete fixture matrices.

    Each entry is (name, minor); the first entry per base is the complete
    matrix itself, the rest delete random row/column subsets.
    """
    rng = random.Random(20030110)
    entries = []
    for name, base in corpus_bases():
        entries.append((f"{name}/complete", base))
        for t in range(10):
            rows = sorted(rng.sample(range(1, base.m + 1), rng.randint(0, min(3, base.m))))
            cols = sorted(rng.sample(range(1, base.n + 1), rng.randint(0, min(2, base.n))))
            if not rows and not cols:
                rows = [rng.randint(1, base.m)]
            entries.append((f"{name}/minor-{t}", delete_minor(base, rows, cols)))
    assert len(entries) >= 200
    return entries
