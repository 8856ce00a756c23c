import itertools

import pytest

from lattice_lab.fixtures import (
    build_fixture,
    chain,
    diamond_m3,
    divisor_ladder,
    ladder,
    lattice_n,
    lattice_q,
    lattice_r,
    lk,
    pentagon_n5,
)
from lattice_lab.lattice import build_lattice


def product_lattice(a, b):
    """Direct product, elements named 'x.y'."""
    elements = [f"{p}.{q}" for p in a.elements for q in b.elements]
    covers = []
    for p in a.elements:
        for q in b.elements:
            for (lo, hi) in a.covers:
                if lo == p:
                    covers.append((f"{p}.{q}", f"{hi}.{q}"))
            for (lo, hi) in b.covers:
                if lo == q:
                    covers.append((f"{p}.{q}", f"{p}.{hi}"))
    return build_lattice(elements, covers)


def small_corpus():
    """Lattices with at most 12 elements, used by exhaustive invariants."""
    return [
        ("Chain4", chain(4)),
        ("M3", diamond_m3()),
        ("N5", pentagon_n5()),
        ("B2", ladder(2)),
        ("Ladder3", ladder(3)),
        ("Q", lattice_q()),
        ("N", lattice_n()),
        ("R", lattice_r()),
        ("Lk(2,1)", lk(2, 1)),
        ("Lk(3,1)", lk(3, 1)),
    ]


def distributive_corpus():
    return [
        ("Chain5", chain(5)),
        ("B2", ladder(2)),
        ("Ladder3", ladder(3)),
        ("Ladder4", ladder(4)),
        ("DivLadder2", divisor_ladder(2)),
        ("Chain2xChain3", product_lattice(chain(2), chain(3))),
    ]


def radical_fixture_corpus():
    """Lattices whose join-meet ideal is radical (distributive ones, the
    seven-element example with squarefree lex basis, the two-rail family,
    and the ten-element extension verified by its prime decomposition)."""
    return [
        ("Chain4", chain(4)),
        ("B2", ladder(2)),
        ("Ladder3", ladder(3)),
        ("Q", lattice_q()),
        ("Lk(2,1)", lk(2, 1)),
        ("Lk(3,1)", lk(3, 1)),
        ("Lk(3,2)", lk(3, 2)),
        ("R", lattice_r()),
    ]


@pytest.fixture(scope="session")
def lattice_Q():
    return lattice_q()


@pytest.fixture(scope="session")
def lattice_N():
    return lattice_n()


@pytest.fixture(scope="session")
def lattice_R():
    return lattice_r()
