"""
Shared fixtures for the sekwl test suite
"""

import logging

import numpy as np
import pytest

from src.graph import Graph, erdos_renyi, rook4x4, shrikhande
from src.refine import ColorHasher


@pytest.fixture
def hasher():
    return ColorHasher("sekwl-test")


@pytest.fixture(scope="session")
def rook():
    return rook4x4()


@pytest.fixture(scope="session")
def shrikhande_graph():
    return shrikhande()


@pytest.fixture(scope="session")
def er_graphs():
    """A handful of small G(n, p) graphs with fixed seeds"""
    return [erdos_renyi(9, 0.35, seed) for seed in range(6)]


@pytest.fixture
def permute():
    """Relabel a graph by a seeded random permutation; returns (graph, perm)"""

    def _permute(g: Graph, seed: int = 0):
        perm = np.random.default_rng(seed).permutation(g.n)
        return g.relabel(perm), perm

    return _permute


@pytest.fixture(autouse=True)
def restore_root_logging():
    """main() reconfigures the root logger; put it back after every test"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
