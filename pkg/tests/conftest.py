import random

import pytest
from hypothesis import settings

from matsplit import BinaryMatroid, Gf2Matrix, catalog_matroid

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def cols_of(M: BinaryMatroid):
    """Column vectors of a matroid's matrix as label -> 0/1 tuple."""
    rows = M.matrix.row_masks()
    out = {}
    for j, lab in enumerate(M.ground):
        out[lab] = tuple((r >> j) & 1 for r in rows)
    return out


def graph_data(G):
    """(vertices, edges) in the plain form the oracles expect."""
    return list(G.vertices), {lab: G.endpoints(lab) for lab in G.edge_labels()}


def random_matroid(seed: int, max_rows: int = 4, max_cols: int = 7) -> BinaryMatroid:
    rng = random.Random(seed)
    r = rng.randint(1, max_rows)
    n = rng.randint(r, max_cols)
    while True:
        entries = [[rng.randint(0, 1) for _ in range(n)] for _ in range(r)]
        if any(any(row) for row in entries):
            break
    labels = [f"e{j}" for j in range(n)]
    return BinaryMatroid.from_rows(entries, labels, name=f"R{seed}")


@pytest.fixture
def fano():
    return catalog_matroid("F7")


@pytest.fixture
def mk4():
    return catalog_matroid("MK4")
