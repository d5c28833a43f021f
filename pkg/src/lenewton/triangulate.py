"""Vertex triangulations of the cones over Newton diagrams.

Each maximal face of the (restricted) diagram is triangulated by pulling its
vertices in a global order: the earliest vertex ``v`` of a face is joined to
the triangulations of the facets of that face not containing ``v``.  The
recursion only looks at a face's own vertices, so two faces sharing a
subface induce the same triangulation on it, and every simplex vertex is a
0-dimensional face of the diagram.  Coning with the origin gives the
decomposition of the cone over the diagram.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .errors import InputError, TriangulationError
from .geometry import Face, NewtonDiagram, restrict
from .linalg import det, rank


@dataclass(frozen=True)
class Simplex:
    """A lattice simplex with apex at the origin inside ``(R_+^n)^I``."""

    verts: tuple
    index_set: tuple

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(sorted(tuple(v) for v in self.verts)))
        object.__setattr__(self, "index_set", tuple(sorted(self.index_set)))

    @cached_property
    def dim(self) -> int:
        return rank(self.verts)

    @property
    def is_full(self) -> bool:
        """True when the simplex has dimension ``|I|``."""
        k = len(self.index_set)
        return len(self.verts) == k and self.dim == k

    def axis_vertex(self, i: int):
        """The vertex on the ``i``-th coordinate axis, or ``None``."""
        found = [v for v in self.verts if v[i - 1] and sum(1 for a in v if a) == 1]
        if len(found) > 1:
            raise TriangulationError(f"simplex {self.verts} has two vertices on axis {i}")
        return found[0] if found else None

    def normalized_volume(self) -> int:
        """``|I|! * Vol_|I|``, an integer; zero unless the simplex is full."""
        if len(self.verts) != len(self.index_set):
            return 0
        cols = [k - 1 for k in self.index_set]
        return abs(det([[v[c] for c in cols] for v in self.verts]))

    def volume(self) -> Fraction:
        return Fraction(self.normalized_volume(), factorial(len(self.index_set)))


@dataclass(frozen=True)
class ConeDecomposition:
    index_set: tuple
    simplices: tuple

    @property
    def full_simplices(self) -> tuple:
        return tuple(s for s in self.simplices if s.is_full)

    def is_empty(self) -> bool:
        return not self.simplices


def lexicographic_order(diagram: NewtonDiagram) -> list:
    return sorted(diagram.vertices)


def random_order(diagram: NewtonDiagram, seed: int) -> list:
    verts = sorted(diagram.vertices)
    random.Random(seed).shuffle(verts)
    return verts


def _rank_map(order: Sequence | None, diagram: NewtonDiagram) -> dict:
    if order is None:
        order = lexicographic_order(diagram)
    ranks = {tuple(v): i for i, v in enumerate(order)}
    missing = [v for v in diagram.vertices if v not in ranks]
    if missing:
        raise InputError(f"vertex order does not cover the diagram vertices {missing}")
    return ranks


def pulling_triangulation(diagram: NewtonDiagram, face: Face, ranks: dict,
                          _cache: dict | None = None) -> list[tuple]:
    """Simplices (as vertex tuples) of the pulling triangulation of ``face``."""
    cache = {} if _cache is None else _cache
    key = face.vertex_set
    if key in cache:
        return cache[key]
    if face.dim == 0:
        out = [face.vertices]
    else:
        apex = min(face.vertices, key=ranks.__getitem__)
        out = []
        for g in diagram.facets_of(face):
            if apex in g.vertex_set:
                continue
            out.extend((apex,) + s for s in pulling_triangulation(diagram, g, ranks, cache))
        if not out:
            raise TriangulationError(f"face {face.vertices} has no facet opposite {apex}")
    cache[key] = out
    return out


def triangulate_cone(diagram: NewtonDiagram, index_set: Iterable[int],
                     order: Sequence | None = None) -> ConeDecomposition:
    """Decomposition of the cone over ``diagram`` restricted to ``index_set``.

    ``order`` is a sequence of the diagram's vertices; it defaults to the
    lexicographic order.  The result is empty when the restriction is.
    """
    index_set = tuple(sorted(set(index_set)))
    sub = restrict(diagram, index_set)
    if sub.is_empty():
        return ConeDecomposition(index_set, ())
    ranks = _rank_map(order, diagram)
    cache: dict = {}
    simplices = {}
    for face in sub.maximal_faces:
        for verts in pulling_triangulation(sub, face, ranks, cache):
            s = Simplex(verts, index_set)
            if s.dim != len(verts):
                raise TriangulationError(
                    f"degenerate simplex {verts} in the triangulation of {face.vertices}"
                )
            simplices[s.verts] = s
    ordered = tuple(simplices[k] for k in sorted(simplices))
    return ConeDecomposition(index_set, ordered)


def simplex_volume(s: Simplex) -> Fraction:
    return s.volume()


def cone_volume(xi: ConeDecomposition) -> Fraction:
    return sum((s.volume() for s in xi.full_simplices), Fraction(0))


def nonempty_subsets(n: int) -> list[tuple]:
    return [c for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class ConeFamily:
    """The collection of decompositions ``Xi_I`` for every non-empty ``I``."""

    diagram: NewtonDiagram
    cones: dict

    @property
    def n(self) -> int:
        return self.diagram.n

    def __getitem__(self, index_set) -> ConeDecomposition:
        return self.cones[tuple(sorted(index_set))]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "cones": [
                {
                    "I": list(idx),
                    "simplices": [
                        {"verts": [list(v) for v in s.verts], "volume": str(s.volume())}
                        for s in xi.simplices
                    ],
                }
                for idx, xi in self.cones.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def decompose(diagram: NewtonDiagram, order: Sequence | None = None) -> ConeFamily:
    """Triangulate the cones for every non-empty coordinate subset, sharing one order."""
    ranks_order = order if order is not None else lexicographic_order(diagram)
    cones = {idx: triangulate_cone(diagram, idx, ranks_order) for idx in nonempty_subsets(diagram.n)}
    return ConeFamily(diagram, cones)
