"""Order-3 face-map tables: computation, text serialization, and the active store.

Every 4-class cell of a higher-order graph reduces to one of five order-3
decoration patterns (no chord, or chords on a top slice of the classes).  The
tables hold, per pattern, per face, per ordered vertex pair, the label map as
class pairs.  The text format is line-oriented and round-trips byte-exactly.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .graph import ConnectionGraph, Vertex
from .faces import Face, enumerate_faces, _build_face_map

FORMAT_HEADER = "spin-atlas-face-tables v1"
ENV_VAR = "SPIN_ATLAS_TABLES"

# chord patterns an order-3 cell of a larger graph can carry
PATTERNS: tuple[frozenset[int], ...] = (
    frozenset(),
    frozenset({3}),
    frozenset({2, 3}),
    frozenset({1, 2, 3}),
    frozenset({0, 1, 2, 3}),
)

MapPairs = tuple[tuple[int, int], ...]


class TableError(ValueError):
    """Malformed or incomplete face-map table data."""


@dataclass(frozen=True)
class FaceTables:
    entries: dict[frozenset[int], dict[Face, dict[tuple[Vertex, Vertex], MapPairs]]]

    def lookup(self, pattern: frozenset[int], face: Face, u: Vertex, v: Vertex) -> MapPairs:
        try:
            return self.entries[pattern][face][(u, v)]
        except KeyError as exc:
            raise TableError(f"no table entry for pattern {sorted(pattern)}, face {face.name}, {u.name}->{v.name}") from exc


def compute_order3_tables() -> FaceTables:
    """Build the five-pattern atlas directly from the order-3 graphs."""
    entries: dict[frozenset[int], dict[Face, dict[tuple[Vertex, Vertex], MapPairs]]] = {}
    for pattern in PATTERNS:
        cg = ConnectionGraph(3, pattern)
        cell = frozenset(cg.classes)
        per_face: dict[Face, dict[tuple[Vertex, Vertex], MapPairs]] = {}
        for face in enumerate_faces(cg):
            per_pair: dict[tuple[Vertex, Vertex], MapPairs] = {}
            for u in face.cycle:
                for v in face.cycle:
                    if u != v:
                        per_pair[(u, v)] = tuple(sorted(_build_face_map(cg, cell, face, u, v).items()))
            per_face[face] = per_pair
        entries[pattern] = per_face
    return FaceTables(entries)


def _vertex_token(v: Vertex) -> str:
    return f"{v.cls}{'-' if v.tilded else '+'}"


def _parse_vertex(token: str) -> Vertex:
    if len(token) != 2 or token[1] not in "+-" or not token[0].isdigit():
        raise TableError(f"bad vertex token {token!r}")
    return Vertex(int(token[0]), token[1] == "-")


def _pattern_token(pattern: frozenset[int]) -> str:
    return "".join(str(c) for c in sorted(pattern)) or "-"


def _parse_pattern(token: str) -> frozenset[int]:
    if token == "-":
        return frozenset()
    if not token.isdigit():
        raise TableError(f"bad pattern token {token!r}")
    return frozenset(int(ch) for ch in token)


def render_tables(tables: FaceTables) -> str:
    lines = [FORMAT_HEADER]
    for pattern in sorted(tables.entries, key=sorted):
        lines.append(f"pattern {_pattern_token(pattern)}")
        per_face = tables.entries[pattern]
        for face in sorted(per_face):
            lines.append("face " + " ".join(_vertex_token(w) for w in face.cycle))
            per_pair = per_face[face]
            for (u, v) in sorted(per_pair):
                sends = " ".join(f"{a}>{b}" for a, b in per_pair[(u, v)])
                lines.append(f"pair {_vertex_token(u)} {_vertex_token(v)} {sends}")
    return "\n".join(lines) + "\n"


def parse_tables(text: str) -> FaceTables:
    lines = text.splitlines()
    if not lines or lines[0] != FORMAT_HEADER:
        raise TableError(f"missing header line {FORMAT_HEADER!r}")
    entries: dict[frozenset[int], dict[Face, dict[tuple[Vertex, Vertex], MapPairs]]] = {}
    pattern: frozenset[int] | None = None
    face: Face | None = None
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "pattern" and len(fields) == 2:
            pattern = _parse_pattern(fields[1])
            entries.setdefault(pattern, {})
            face = None
        elif fields[0] == "face" and len(fields) == 5:
            if pattern is None:
                raise TableError(f"line {lineno}: face before any pattern")
            face = Face(tuple(_parse_vertex(t) for t in fields[1:]))
            entries[pattern].setdefault(face, {})
        elif fields[0] == "pair" and len(fields) >= 3:
            if pattern is None or face is None:
                raise TableError(f"line {lineno}: pair before pattern/face")
            u, v = _parse_vertex(fields[1]), _parse_vertex(fields[2])
            sends = []
            for tok in fields[3:]:
                a, sep, b = tok.partition(">")
                if sep != ">" or not a.isdigit() or not b.isdigit():
                    raise TableError(f"line {lineno}: bad map token {tok!r}")
                sends.append((int(a), int(b)))
            entries[pattern][face][(u, v)] = tuple(sends)
        else:
            raise TableError(f"line {lineno}: unrecognized line {raw!r}")
    return FaceTables(entries)


def load_tables(path: str) -> FaceTables:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tables(fh.read())


def shipped_tables_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "order3_tables.txt")


_active: FaceTables | None = None


@lru_cache(maxsize=1)
def _computed() -> FaceTables:
    return compute_order3_tables()


def active_tables() -> FaceTables:
    if _active is not None:
        return _active
    env = os.environ.get(ENV_VAR)
    if env:
        set_active_tables(load_tables(env))
        return _active  # type: ignore[return-value]
    return _computed()


def set_active_tables(tables: FaceTables | None) -> None:
    """Install an explicit table store (None restores the computed default)."""
    global _active
    _active = tables
    from . import classify

    classify.clear_caches()
