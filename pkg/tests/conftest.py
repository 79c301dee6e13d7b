"""Shared fixture data: the small connection graphs and their named faces."""
from __future__ import annotations

import pytest

from spinatlas.chains import ChainStep, SpinChain
from spinatlas.faces import Face
from spinatlas.graph import ConnectionGraph, Vertex


def V(cls: int, tilded: bool = False) -> Vertex:
    return Vertex(cls, tilded)


def F(*verts: Vertex) -> Face:
    return Face.from_cycle(tuple(verts))


def mk_chain(start: Vertex, *steps) -> SpinChain:
    return SpinChain(start, tuple(ChainStep(frozenset(cell), face, target) for cell, face, target in steps))


P, Pt = V(0), V(0, True)
P1, P1t = V(1), V(1, True)
P2, P2t = V(2), V(2, True)
P3, P3t = V(3), V(3, True)
P4, P4t = V(4), V(4, True)

CELL2 = frozenset({0, 1, 2})
CELL3 = frozenset({0, 1, 2, 3})


@pytest.fixture
def hexagon_one_chord() -> ConnectionGraph:
    """Order 2, only pair 2 connected."""
    return ConnectionGraph(2, frozenset({2}))


@pytest.fixture
def hexagon_two_chords() -> ConnectionGraph:
    return ConnectionGraph(2, frozenset({1, 2}))


@pytest.fixture
def hexagon_full() -> ConnectionGraph:
    return ConnectionGraph(2, frozenset({0, 1, 2}))


@pytest.fixture
def order3_one_chord() -> ConnectionGraph:
    """Order 3, only pair 3 connected."""
    return ConnectionGraph(3, frozenset({3}))


@pytest.fixture
def order3_two_chords() -> ConnectionGraph:
    return ConnectionGraph(3, frozenset({2, 3}))


@pytest.fixture
def order3_three_chords() -> ConnectionGraph:
    return ConnectionGraph(3, frozenset({1, 2, 3}))


@pytest.fixture
def order3_full() -> ConnectionGraph:
    return ConnectionGraph(3, frozenset({0, 1, 2, 3}))


# faces of the order-3 graph with pair 3 connected (chord faces need that chord)
BASIC3_FACES = {
    "F1": F(P, P1, P3t, P2),
    "F2": F(P, P1, P2t, P3),
    "F3": F(P1, P3t, Pt, P2t),
    "F1'": F(Pt, P1t, P3, P2t),
    "F2'": F(Pt, P1t, P2, P3t),
    "F3'": F(P1t, P3, P, P2),
}
CHORD3_FACES = {
    "F4": F(P, P1, P3t, P3),
    "F5": F(P, P2, P3t, P3),
    "F6": F(P1, P2t, P3, P3t),
    "F4'": F(Pt, P1t, P3, P3t),
    "F5'": F(Pt, P2t, P3, P3t),
    "F6'": F(P1t, P2, P3t, P3),
}
CHORD2_FACES = {
    "F7": F(P, P3, P2t, P2),
    "F8": F(P, P1, P2t, P2),
    "F9": F(P1, P3t, P2, P2t),
    "F10": F(P3, P2t, P2, P3t),
    "F7'": F(Pt, P3t, P2, P2t),
    "F8'": F(Pt, P1t, P2, P2t),
    "F9'": F(P1t, P3, P2t, P2),
}
