"""Plain tuple permutations, naive product closure, and small-group recognition."""
from __future__ import annotations

import math
from dataclasses import dataclass

Perm = tuple[int, ...]


class CapExceededError(RuntimeError):
    """Closure grew past the element cap."""


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a first, then b."""
    return tuple(b[x] for x in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for k, x in enumerate(a):
        out[x] = k
    return tuple(out)


def is_permutation(a: Perm) -> bool:
    return sorted(a) == list(range(len(a)))


def cycle_type(a: Perm) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included."""
    seen = [False] * len(a)
    out = []
    for k in range(len(a)):
        if seen[k]:
            continue
        length, j = 0, k
        while not seen[j]:
            seen[j] = True
            length += 1
            j = a[j]
        out.append(length)
    return tuple(sorted(out, reverse=True))


def parity(a: Perm) -> int:
    """0 for even, 1 for odd."""
    return sum(length - 1 for length in cycle_type(a)) % 2


def cycles_str(a: Perm) -> str:
    """One-based cycle notation, fixed points suppressed."""
    parts = []
    seen = [False] * len(a)
    for k in range(len(a)):
        if seen[k] or a[k] == k:
            seen[k] = True
            continue
        cyc, j = [], k
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = a[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def closure(gens, n: int, cap: int = 400_000) -> tuple[Perm, ...]:
    """Subgroup generated by `gens`, by breadth-first products, in sorted order."""
    ident = identity_perm(n)
    gen_list = sorted({tuple(g) for g in gens})
    for g in gen_list:
        if len(g) != n or not is_permutation(g):
            raise ValueError(f"not a permutation of {n} points: {g}")
    elems = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gen_list:
                b = compose(a, g)
                if b not in elems:
                    if len(elems) >= cap:
                        raise CapExceededError(f"closure exceeded cap {cap} on {n} points")
                    elems.add(b)
                    fresh.append(b)
        frontier = sorted(fresh)
    return tuple(sorted(elems))


@dataclass(frozen=True, order=True)
class GroupVerdict:
    kind: str  # "trivial" | "C2" | "C3" | "A" | "S" | "other"
    degree: int
    order: int

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "1"
        if self.kind in ("C2", "C3"):
            return self.kind
        if self.kind in ("A", "S"):
            return f"{self.kind}{self.degree}"
        return f"G[{self.order}]"

    @staticmethod
    def parse(text: str) -> "GroupVerdict":
        if text == "1":
            return TRIVIAL
        if text == "C2":
            return C2
        if text == "C3":
            return C3
        if text.startswith("A") and text[1:].isdigit():
            return alternating(int(text[1:]))
        if text.startswith("S") and text[1:].isdigit():
            return symmetric(int(text[1:]))
        if text.startswith("G[") and text.endswith("]"):
            return GroupVerdict("other", 0, int(text[2:-1]))
        raise ValueError(f"cannot parse group verdict {text!r}")


TRIVIAL = GroupVerdict("trivial", 0, 1)
C2 = GroupVerdict("C2", 0, 2)
C3 = GroupVerdict("C3", 0, 3)


def symmetric(n: int) -> GroupVerdict:
    return GroupVerdict("S", n, math.factorial(n))


def alternating(n: int) -> GroupVerdict:
    return GroupVerdict("A", n, max(1, math.factorial(n) // 2))


def recognize(group, n: int) -> GroupVerdict:
    """Classify a closed element set by order, with the parity check for A(n)."""
    order = len(group)
    if order == 1:
        return TRIVIAL
    if order == 2:
        return C2
    if order == 3:
        return C3
    full = math.factorial(n)
    if order == full:
        return symmetric(n)
    if 2 * order == full and all(parity(g) == 0 for g in group):
        return alternating(n)
    return GroupVerdict("other", 0, order)
