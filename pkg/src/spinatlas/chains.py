"""Chains: based loops with a (cell, face) choice per step, evaluated to permutations.

A chain is admissible when the carried label set survives every composition.
Tracking starts from the first face's domain at the base vertex; an element
lost at any later step breaks the chain, except that on return to a base
vertex of maximal degree the one missing label is repaired onto the one
missing image.  At order 2 a loop is admissible exactly when all its vertices
share one degree.  Inadmissible chains evaluate to the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .faces import Face, FaceKind, cells_containing, enumerate_faces, face_map
from .graph import ConnectionGraph, Vertex


class ChainStructureError(ValueError):
    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class ChainStep:
    cell: frozenset[int]
    face: Face
    target: Vertex


@dataclass(frozen=True)
class SpinChain:
    start: Vertex
    steps: tuple[ChainStep, ...]

    def loop(self) -> tuple[Vertex, ...]:
        return (self.start, *(s.target for s in self.steps))

    def reversed(self) -> "SpinChain":
        loop = self.loop()
        flipped = [ChainStep(step.cell, step.face, loop[idx]) for idx, step in enumerate(self.steps)]
        return SpinChain(self.start, tuple(flipped[::-1]))

    def describe(self) -> str:
        parts = [self.start.name]
        for s in self.steps:
            parts.append(f"-[{s.face.name}]-> {s.target.name}")
        return " ".join(parts)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    failing_step: int | None
    reason: str  # "Composable" | "DomainMismatch"


def validate_structure(cg: ConnectionGraph, chain: SpinChain) -> None:
    """Raise ChainStructureError unless every step sits on its face inside its cell."""
    if not chain.steps or chain.steps[-1].target != chain.start:
        raise ChainStructureError("LoopNotClosed", f"loop does not return to {chain.start.name}")
    faces = set(enumerate_faces(cg))
    current = chain.start
    for k, step in enumerate(chain.steps):
        if step.face not in faces:
            raise ChainStructureError("StepNotOnFace", f"step {k}: {step.face.name} is not a face of the graph")
        if current == step.target or current not in step.face or step.target not in step.face:
            raise ChainStructureError(
                "StepNotOnFace",
                f"step {k}: {current.name}->{step.target.name} does not lie on face {step.face.name}",
            )
        if step.cell not in cells_containing(cg, step.face):
            raise ChainStructureError(
                "FaceNotInCell",
                f"step {k}: face {step.face.name} is not contained in cell {sorted(step.cell)}",
            )
        current = step.target


def _compose(cg: ConnectionGraph, chain: SpinChain) -> tuple[dict[int, int], int | None]:
    """Carry the first domain through all steps; report the 1-based step of first loss."""
    current = chain.start
    first = face_map(cg, chain.steps[0].cell, chain.steps[0].face, current, chain.steps[0].target)
    carried = {c: first[c] for c in cg.label_classes(current) if c in first}
    current = chain.steps[0].target
    for k, step in enumerate(chain.steps[1:], start=2):
        mapping = face_map(cg, step.cell, step.face, current, step.target)
        if any(val not in mapping for val in carried.values()):
            return carried, k
        carried = {src: mapping[val] for src, val in carried.items()}
        current = step.target
    return carried, None


def is_admissible(cg: ConnectionGraph, chain: SpinChain) -> AdmissibilityVerdict:
    validate_structure(cg, chain)
    if cg.order <= 2:
        degrees = [cg.epsilon_degree(v) for v in chain.loop()]
        for k, d in enumerate(degrees):
            if d != degrees[0]:
                return AdmissibilityVerdict(False, k, "DomainMismatch")
        return AdmissibilityVerdict(True, None, "Composable")
    _, lost_at = _compose(cg, chain)
    if lost_at is not None:
        return AdmissibilityVerdict(False, lost_at, "DomainMismatch")
    return AdmissibilityVerdict(True, None, "Composable")


def evaluate(cg: ConnectionGraph, chain: SpinChain) -> tuple[int, ...]:
    """Permutation of the base vertex's label positions; identity if inadmissible."""
    labels = cg.label_classes(chain.start)
    identity = tuple(range(len(labels)))
    if not is_admissible(cg, chain).admissible:
        return identity
    carried, lost_at = _compose(cg, chain)
    assert lost_at is None
    images = set(carried.values())
    missing_src = [c for c in labels if c not in carried]
    missing_tgt = [c for c in labels if c not in images]
    assert len(missing_src) == len(missing_tgt) <= 1
    for a, b in zip(missing_src, missing_tgt):
        carried[a] = b
    pos = {c: k for k, c in enumerate(labels)}
    return tuple(pos[carried[c]] for c in labels)


def is_basic(cg: ConnectionGraph, chain: SpinChain) -> bool:
    """True when the whole chain lives in the chord-free skeleton."""
    validate_structure(cg, chain)
    return all(step.face.kind is FaceKind.STANDARD for step in chain.steps)


@lru_cache(maxsize=None)
def _step_choices(cg: ConnectionGraph, a: Vertex, b: Vertex) -> tuple[tuple[frozenset[int], Face], ...]:
    out = []
    for face in enumerate_faces(cg):
        if a in face and b in face:
            for cell in cells_containing(cg, face):
                out.append((cell, face))
    return tuple(out)


def enumerate_chains(cg: ConnectionGraph, start: Vertex, max_steps: int):
    """All structurally valid chains at `start`, shortest first, in a fixed order."""
    if max_steps < 2:
        raise ValueError(f"max_steps must be >= 2, got {max_steps}")
    verts = cg.vertices()

    def extend(current: Vertex, steps: list[ChainStep], remaining: int):
        if remaining == 1:
            if current != start:
                for cell, face in _step_choices(cg, current, start):
                    yield SpinChain(start, (*steps, ChainStep(cell, face, start)))
            return
        for w in verts:
            if w == current:
                continue
            for cell, face in _step_choices(cg, current, w):
                steps.append(ChainStep(cell, face, w))
                yield from extend(w, steps, remaining - 1)
                steps.pop()

    for length in range(2, max_steps + 1):
        yield from extend(start, [], length)
