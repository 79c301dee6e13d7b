"""Isomorphism-class parameters of exceptional vertex configurations.

A class is described by the order r, the non-negative exponent i of the
conjugate point in the head's divisor, and the r increments p_1..p_r of the
multiplicity tuple k = (k_0, ..., k_r), where k_0 = i + 1 and
k_l = k_{l-1} + p_l.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class InvalidClassError(ValueError):
    """Parameters do not describe a valid class; the message names the violated rule."""


def k_tuple(i: int, p: tuple[int, ...]) -> tuple[int, ...]:
    """Multiplicity tuple (k_0, ..., k_r) from the exponent i and increments p."""
    ks = [i + 1]
    for step in p:
        ks.append(ks[-1] + step)
    return tuple(ks)


def genus_of(order: int, i: int, p: tuple[int, ...]) -> int:
    """Genus carrying the class (order, i, p); linear in i and the increments."""
    if order < 0 or i < 0 or len(p) != order or any(x < 0 for x in p):
        raise InvalidClassError(f"malformed parameters (order={order}, i={i}, p={p})")
    return (order + 1) * (i + 1) - 1 + sum((order + 1 - l) * pl for l, pl in enumerate(p, start=1))


@dataclass(frozen=True, order=True)
class GraphClass:
    """One isomorphism class: genus, order r, exponent i and increments p."""

    genus: int
    order: int
    i: int
    p: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise InvalidClassError(f"genus must be >= 2, got {self.genus}")
        if not 0 <= self.order < self.genus:
            raise InvalidClassError(f"order must satisfy 0 <= r < genus, got r={self.order}")
        object.__setattr__(self, "p", tuple(self.p))
        if genus_of(self.order, self.i, self.p) != self.genus:
            raise InvalidClassError(
                f"(i={self.i}, p={self.p}) does not produce genus {self.genus} at order {self.order}"
            )

    @property
    def k(self) -> tuple[int, ...]:
        return k_tuple(self.i, self.p)

    @property
    def i_max(self) -> int:
        return (self.genus - self.order) // (self.order + 1)

    @property
    def connected_pairs(self) -> frozenset[int]:
        """Conjugate pairs joined by an edge: exactly the classes with k_l >= 2."""
        return frozenset(l for l, kl in enumerate(self.k) if kl >= 2)

    def label(self) -> str:
        inner = ",".join(str(x) for x in (self.i, *self.p))
        return f"S({inner})"


def heads(gc: GraphClass) -> frozenset[int]:
    """Classes whose vertices carry the minimal own-pair multiplicity k_0."""
    ks = gc.k
    return frozenset(l for l, kl in enumerate(ks) if kl == ks[0])


def _increment_tuples(order: int, total: int):
    """All p with sum((r+1-l) * p_l) == total, in lexicographic order."""
    if order == 0:
        if total == 0:
            yield ()
        return
    weight = order  # coefficient of p_1
    for first in range(total // weight + 1):
        for rest in _increment_tuples(order - 1, total - weight * first):
            yield (first, *rest)


def enumerate_classes(genus: int, order: int | None = None) -> list[GraphClass]:
    """Every class of the given genus (optionally one order), sorted by (order, i, p)."""
    if genus < 2:
        raise InvalidClassError(f"genus must be >= 2, got {genus}")
    orders = range(genus) if order is None else [order]
    out: list[GraphClass] = []
    for r in orders:
        if not 0 <= r < genus:
            raise InvalidClassError(f"order must satisfy 0 <= r < genus, got r={r}")
        for i in itertools.count():
            base = (r + 1) * (i + 1) - 1
            if base > genus:
                break
            for p in _increment_tuples(r, genus - base):
                out.append(GraphClass(genus, r, i, p))
    out.sort(key=lambda gc: (gc.order, gc.i, gc.p))
    return out
