"""Orientable rotation systems: face tracing, Euler genus, and the
classification of the 7776 rotation systems of K5 under relabelling and
orientation reversal.

A rotation system stores, per vertex, the cyclic order of its neighbours;
the text form is one line per vertex.  Face tracing follows the standard
rule: after arriving along the dart (u, v), leave along (v, w) where w is
the successor of u in the rotation at v.  Each dart lies on exactly one
face and V - E + F = 2 - 2g defines the (orientable) genus.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

Dart = tuple[int, int]


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so its smallest entry comes first."""
    k = seq.index(min(seq))
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True)
class RotationSystem:
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rotation)
        for v, neigh in enumerate(self.rotation):
            if len(set(neigh)) != len(neigh):
                raise ValueError(f"repeated neighbour at vertex {v}")
            for w in neigh:
                if not 0 <= w < n or w == v:
                    raise ValueError(f"bad neighbour {w} at vertex {v}")
                if v not in self.rotation[w]:
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @property
    def n(self) -> int:
        return len(self.rotation)

    def edges(self) -> set[tuple[int, int]]:
        return {(min(v, w), max(v, w))
                for v, neigh in enumerate(self.rotation) for w in neigh}

    def canonical(self) -> "RotationSystem":
        return RotationSystem(tuple(_canonical_cycle(r) for r in self.rotation))

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rotation)

    @classmethod
    def from_text(cls, text: str) -> "RotationSystem":
        rows = tuple(tuple(int(tok) for tok in line.split())
                     for line in text.strip().splitlines() if line.strip())
        return cls(rows)


def _is_connected(rs: RotationSystem) -> bool:
    if rs.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in rs.rotation[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == rs.n


def trace_faces(rs: RotationSystem) -> list[tuple[Dart, ...]]:
    """Face boundary walks as dart sequences; together they use every dart
    exactly once."""
    if not _is_connected(rs):
        raise ValueError("face tracing requires a connected graph")
    succ: dict[Dart, Dart] = {}
    for v, neigh in enumerate(rs.rotation):
        deg = len(neigh)
        for i, u in enumerate(neigh):
            # arriving from u at v, leave towards the successor of u
            succ[(u, v)] = (v, neigh[(i + 1) % deg])
    faces = []
    remaining = set(succ)
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        cur = succ[start]
        while cur != start:
            walk.append(cur)
            remaining.discard(cur)
            cur = succ[cur]
        faces.append(tuple(walk))
    return faces


def face_lengths(rs: RotationSystem) -> list[int]:
    return sorted(len(f) for f in trace_faces(rs))


def genus(rs: RotationSystem) -> int:
    """(2 - V + E - F) / 2; always a nonnegative integer for a connected
    orientable rotation system."""
    v = rs.n
    e = len(rs.edges())
    f = len(trace_faces(rs))
    num = 2 - v + e - f
    if num % 2:  # pragma: no cover - impossible for valid systems
        raise AssertionError("odd Euler defect")
    g = num // 2
    if g < 0:  # pragma: no cover
        raise AssertionError("negative genus")
    return g


def reverse_system(rs: RotationSystem) -> RotationSystem:
    """Global orientation reversal: every rotation reversed."""
    return RotationSystem(tuple(tuple(reversed(r)) for r in rs.rotation)).canonical()


def relabel_system(rs: RotationSystem, perm: Sequence[int]) -> RotationSystem:
    rows: list[tuple[int, ...]] = [()] * rs.n
    for v, neigh in enumerate(rs.rotation):
        rows[perm[v]] = tuple(perm[w] for w in neigh)
    return RotationSystem(tuple(rows)).canonical()


# ---------------------------------------------------------------------------
# K5 classification
# ---------------------------------------------------------------------------

@dataclass
class EmbeddingClass:
    representative: RotationSystem
    genus: int
    orbit_size: int


@dataclass
class K5Classification:
    genus_counts: dict[int, int]                      # genus -> systems
    classes_with_reversal: dict[int, list[EmbeddingClass]]
    classes_without_reversal: dict[int, list[EmbeddingClass]]

    def class_counts(self, reversal: bool) -> dict[int, int]:
        classes = self.classes_with_reversal if reversal else self.classes_without_reversal
        return {g: len(cs) for g, cs in sorted(classes.items())}


def all_k5_systems() -> list[RotationSystem]:
    """All ((4-1)!)^5 = 7776 orientation systems of K5, canonically rotated."""
    per_vertex = []
    for v in range(5):
        neigh = [w for w in range(5) if w != v]
        first = neigh[0]
        rest = neigh[1:]
        per_vertex.append([(first,) + p for p in itertools.permutations(rest)])
    systems = []
    for choice in itertools.product(*per_vertex):
        systems.append(RotationSystem(tuple(choice)))
    return systems


def classify_k5() -> K5Classification:
    """Group the 7776 systems into orbits of S5 relabelling, with and
    without global orientation reversal, recording genus per class."""
    systems = all_k5_systems()
    genus_of = {rs.rotation: genus(rs) for rs in systems}
    genus_counts = Counter(genus_of.values())
    perms = list(itertools.permutations(range(5)))

    def classes(with_reversal: bool) -> dict[int, list[EmbeddingClass]]:
        seen: set[tuple[tuple[int, ...], ...]] = set()
        out: dict[int, list[EmbeddingClass]] = {}
        for rs in systems:
            if rs.rotation in seen:
                continue
            orbit = set()
            for perm in perms:
                img = relabel_system(rs, perm)
                orbit.add(img.rotation)
                if with_reversal:
                    orbit.add(reverse_system(img).rotation)
            seen.update(orbit)
            g = genus_of[rs.rotation]
            if any(genus_of[o] != g for o in orbit):  # pragma: no cover
                raise AssertionError("genus not constant on an orbit")
            out.setdefault(g, []).append(
                EmbeddingClass(RotationSystem(min(orbit)), g, len(orbit)))
        return out

    return K5Classification(dict(sorted(genus_counts.items())),
                            classes(True), classes(False))
