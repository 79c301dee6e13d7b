"""Per-vertex group computation and comparison with the closed-form prediction."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import groups
from .chains import ChainStep, SpinChain, _step_choices
from .faces import face_map
from .graph import ConnectionGraph, Vertex, build_connection_graph
from .params import GraphClass
from .groups import GroupVerdict

DEFAULT_MAX_STEPS = 6
DEFAULT_CLOSURE_CAP = 400_000


def predict_group(cg: ConnectionGraph, v: Vertex) -> GroupVerdict:
    """Closed-form verdict: trivial through order 1, the three-way split at order 2,
    and the full symmetric group on the label set from order 3 on."""
    r = cg.order
    if r <= 1:
        return groups.TRIVIAL
    if r == 2:
        chords = cg.connected
        if chords == frozenset({2}):
            return groups.C3 if v.cls == 2 else groups.TRIVIAL
        if chords == frozenset({1, 2}):
            return groups.symmetric(3) if v.cls in (1, 2) else groups.TRIVIAL
        if chords == frozenset({0, 1, 2}):
            return groups.symmetric(3)
        # no valid class produces other chord sets; fall back to triviality
        return groups.TRIVIAL
    return groups.symmetric(cg.epsilon_degree(v))


@dataclass
class SpinGroupResult:
    vertex: Vertex
    verdict: GroupVerdict
    predicted: GroupVerdict
    elements: tuple[groups.Perm, ...]
    witnesses: tuple[SpinChain, ...]
    chains_tried: int

    @property
    def match(self) -> bool:
        return self.verdict == self.predicted


_RESULT_CACHE: dict[tuple, SpinGroupResult] = {}


def clear_caches() -> None:
    """Drop every memoized result (group runs, face maps, face lists, step choices)."""
    from . import chains, faces, graph

    _RESULT_CACHE.clear()
    chains._step_choices.cache_clear()
    faces._face_map_pairs.cache_clear()
    faces.enumerate_faces.cache_clear()
    faces.cells_containing.cache_clear()
    faces.decorated_cell.cache_clear()
    graph.edge_multiplicities_r_le_2.cache_clear()


def _admissible_evaluations(cg: ConnectionGraph, start: Vertex, max_steps: int):
    """Yield (chain, permutation) for every admissible chain at `start`, shortest first.

    Equivalent to evaluating the full chain stream, but a prefix whose carried
    label set has already lost an element (or, at order <= 2, mixed degrees)
    is dropped with all its extensions: those chains evaluate to the identity.
    """
    labels = cg.label_classes(start)
    pos = {c: k for k, c in enumerate(labels)}
    verts = cg.vertices()
    by_degree = cg.order <= 2
    start_degree = cg.epsilon_degree(start)

    def close_out(carried: dict[int, int]) -> tuple[int, ...]:
        images = set(carried.values())
        missing_src = [c for c in labels if c not in carried]
        missing_tgt = [c for c in labels if c not in images]
        full = dict(carried)
        for a, b in zip(missing_src, missing_tgt):
            full[a] = b
        return tuple(pos[full[c]] for c in labels)

    def extend(current: Vertex, carried: dict[int, int] | None, steps: list[ChainStep], remaining: int):
        if remaining == 1:
            if current == start:
                return
            for cell, face in _step_choices(cg, current, start):
                mapping = face_map(cg, cell, face, current, start)
                if carried is None:
                    moved = {c: mapping[c] for c in labels if c in mapping}
                else:
                    if any(val not in mapping for val in carried.values()):
                        continue
                    moved = {src: mapping[val] for src, val in carried.items()}
                yield SpinChain(start, (*steps, ChainStep(cell, face, start))), close_out(moved)
            return
        for w in verts:
            if w == current or (by_degree and cg.epsilon_degree(w) != start_degree):
                continue
            for cell, face in _step_choices(cg, current, w):
                mapping = face_map(cg, cell, face, current, w)
                if carried is None:
                    moved = {c: mapping[c] for c in labels if c in mapping}
                else:
                    if any(val not in mapping for val in carried.values()):
                        continue
                    moved = {src: mapping[val] for src, val in carried.items()}
                steps.append(ChainStep(cell, face, w))
                yield from extend(w, moved, steps, remaining - 1)
                steps.pop()

    for length in range(2, max_steps + 1):
        yield from extend(start, None, [], length)


def spin_group_at(
    cg: ConnectionGraph,
    v: Vertex,
    max_steps: int = DEFAULT_MAX_STEPS,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    exhaustive: bool = False,
) -> SpinGroupResult:
    """Close the permutations of enumerated chains at v.

    Stops as soon as the prediction is reached (or the full symmetric group,
    which nothing can exceed) unless `exhaustive` asks for the whole budget.
    """
    key = (cg.order, cg.connected, v, max_steps, closure_cap, exhaustive)
    hit = _RESULT_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(cg.label_classes(v))
    predicted = predict_group(cg, v)
    if math.factorial(n) > closure_cap:
        raise groups.CapExceededError(f"label set of size {n} needs cap >= {math.factorial(n)}")
    ident = groups.identity_perm(n)
    elems: set[groups.Perm] = {ident}
    gens: list[groups.Perm] = []
    witnesses: list[SpinChain] = []
    tried = 0
    full_order = math.factorial(n)
    for chain, perm in _admissible_evaluations(cg, v, max_steps):
        tried += 1
        if perm == ident or perm in elems:
            continue
        gens.append(perm)
        witnesses.append(chain)
        elems = set(groups.closure(gens, n, closure_cap))
        if not exhaustive:
            verdict = groups.recognize(elems, n)
            if verdict == predicted or len(elems) == full_order:
                break
    ordered = tuple(sorted(elems))
    result = SpinGroupResult(v, groups.recognize(ordered, n), predicted, ordered, tuple(witnesses), tried)
    _RESULT_CACHE[key] = result
    return result


@dataclass
class VertexRow:
    vertex: Vertex
    degree: int
    predicted: GroupVerdict
    computed: GroupVerdict
    match: bool
    witnesses: tuple[SpinChain, ...]


@dataclass
class ClassReport:
    graph_class: GraphClass
    rows: list[VertexRow] = field(default_factory=list)

    @property
    def match_all(self) -> bool:
        return all(row.match for row in self.rows)


def verify_class(
    gc: GraphClass,
    max_steps: int = DEFAULT_MAX_STEPS,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    exhaustive: bool = False,
) -> ClassReport:
    """Compute and compare the group at every vertex of the class's connection graph."""
    cg = build_connection_graph(gc)
    report = ClassReport(gc)
    for v in cg.vertices():
        res = spin_group_at(cg, v, max_steps=max_steps, closure_cap=closure_cap, exhaustive=exhaustive)
        ok = res.match
        if exhaustive:
            # over-generation guard: the computed group may never exceed the prediction
            ok = ok and len(res.elements) <= res.predicted.order
        report.rows.append(VertexRow(v, cg.epsilon_degree(v), res.predicted, res.verdict, ok, res.witnesses))
    return report
