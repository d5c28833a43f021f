"""Newton polyhedra and their compact faces, in exact integer arithmetic.

The Newton polyhedron ``conv(supp f) + R_+^n`` is homogenised into the cone
generated by ``(1, alpha)`` for support points and ``(0, e_i)`` for the
orthant rays.  Its facets come out of a double-description pass on the dual
cone; every face is an intersection of facets, and a face is compact exactly
when no orthant ray is incident to it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import affine_rank, dot, inverse, primitive, rank
from .poly import Polynomial

MAX_DIMENSION = 8


def _popcount(x: int) -> int:
    return bin(x).count("1")


def dual_extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of ``{y : <r, y> >= 0 for every row r}``.

    The rows must span the ambient space.  Returns ``(ray, mask)`` pairs where
    bit ``i`` of ``mask`` is set iff row ``i`` vanishes on the ray.  This is the
    incremental double-description method with the combinatorial adjacency
    test; rays are kept primitive so all arithmetic stays in small integers.
    """
    if not rows:
        raise ValueError("no rows")
    dim = len(rows[0])
    basis: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    if len(basis) < dim:
        raise ValueError("rows do not span the ambient space")

    inv = inverse([rows[i] for i in basis])
    rays: list[tuple[tuple[int, ...], int]] = []
    for j in range(dim):
        col = [inv[i][j] for i in range(dim)]
        den = 1
        for x in col:
            den = den * x.denominator // _gcd(den, x.denominator)
        ray = primitive([int(x * den) for x in col])
        mask = 0
        for k, i in enumerate(basis):
            if k != j:
                mask |= 1 << i
        rays.append((ray, mask))

    in_basis = set(basis)
    for i, row in enumerate(rows):
        if i in in_basis:
            continue
        bit = 1 << i
        pos, neg, zero = [], [], []
        for ray, mask in rays:
            s = dot(row, ray)
            if s > 0:
                pos.append((ray, mask, s))
            elif s < 0:
                neg.append((ray, mask, s))
            else:
                zero.append((ray, mask | bit))
        if not neg:
            rays = [(r, m) for r, m, _ in pos] + zero
            continue
        new = []
        all_masks = [m for _, m in rays]
        for rp, mp, sp in pos:
            for rn, mn, sn in neg:
                common = mp & mn
                if _popcount(common) < dim - 2:
                    continue
                adjacent = True
                for m in all_masks:
                    if m & common == common and m != mp and m != mn:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                ray = primitive([sp * b - sn * a for a, b in zip(rp, rn)])
                new.append((ray, common | bit))
        rays = [(r, m) for r, m, _ in pos] + zero + new
    return rays


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class Face:
    """A compact face of a Newton polyhedron.

    ``vertices`` are its 0-dimensional faces, ``points`` every support point
    lying on it, and ``normal`` a strictly positive primitive integer vector
    whose minimum over the polyhedron is ``level`` and is attained exactly on
    this face.
    """

    vertices: tuple
    points: tuple
    dim: int
    normal: tuple
    level: int

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def contains(self, other: "Face") -> bool:
        return other.vertex_set <= self.vertex_set

    def lies_in(self, index_set: Iterable[int]) -> bool:
        keep = {i - 1 for i in index_set}
        return all(v[k] == 0 for v in self.vertices for k in range(len(v)) if k not in keep)


@dataclass(frozen=True)
class NewtonDiagram:
    """The compact faces of a Newton polyhedron, possibly restricted to a
    coordinate subspace.

    Points always keep all ``n`` coordinates; ``index_set`` (1-based) records
    which coordinate subspace the diagram lives in.
    """

    n: int
    faces: tuple
    index_set: tuple = field(default=None)

    def __post_init__(self):
        if self.index_set is None:
            object.__setattr__(self, "index_set", tuple(range(1, self.n + 1)))

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.faces for v in f.vertices}))

    @cached_property
    def maximal_faces(self) -> tuple:
        return tuple(
            f for f in self.faces
            if not any(g is not f and g.dim > f.dim and g.contains(f) for g in self.faces)
        )

    @cached_property
    def _by_vertices(self) -> dict:
        return {f.vertex_set: f for f in self.faces}

    def face_with_vertices(self, vertices: Iterable) -> Face | None:
        return self._by_vertices.get(frozenset(tuple(v) for v in vertices))

    def facets_of(self, face: Face) -> list[Face]:
        """The codimension-one faces of ``face`` (in the face's own dimension)."""
        return [g for g in self.faces if g.dim == face.dim - 1 and face.contains(g)]

    def is_empty(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        return max((f.dim for f in self.faces), default=-1)

    @cached_property
    def axis_data(self) -> dict[int, int]:
        """Map ``i -> a_i`` for each axis (within the index set) the diagram meets."""
        out = {}
        for v in self.vertices:
            nz = [k for k, a in enumerate(v) if a]
            if len(nz) == 1:
                out[nz[0] + 1] = v[nz[0]]
        return dict(sorted(out.items()))

    def same_faces(self, other: "NewtonDiagram") -> bool:
        return (self.n == other.n and
                {f.vertex_set for f in self.faces} == {f.vertex_set for f in other.faces})

    def restrict(self, index_set: Iterable[int]) -> "NewtonDiagram":
        return restrict(self, index_set)

    def to_dict(self) -> dict:
        verts = list(self.vertices)
        pos = {v: i for i, v in enumerate(verts)}
        return {
            "n": self.n,
            "index_set": list(self.index_set),
            "vertices": [list(v) for v in verts],
            "faces": [
                {
                    "dim": f.dim,
                    "vertices": [pos[v] for v in f.vertices],
                    "points": [list(p) for p in f.points],
                    "normal": list(f.normal),
                    "level": f.level,
                }
                for f in self.faces
            ],
            "maximal_faces": [self.faces.index(f) for f in self.maximal_faces],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NewtonDiagram":
        verts = [tuple(v) for v in data["vertices"]]
        faces = tuple(
            Face(
                vertices=tuple(verts[i] for i in f["vertices"]),
                points=tuple(tuple(p) for p in f["points"]),
                dim=f["dim"],
                normal=tuple(f["normal"]),
                level=f["level"],
            )
            for f in data["faces"]
        )
        return cls(n=data["n"], faces=faces, index_set=tuple(data["index_set"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _face_sort_key(face: Face):
    return (face.dim, face.vertices)


def compact_faces(f: Polynomial) -> NewtonDiagram:
    """Newton diagram of ``f``: every compact face of its Newton polyhedron."""
    if f.is_zero():
        raise InputError("the zero polynomial has no Newton diagram")
    n = f.n
    if n > MAX_DIMENSION:
        raise InputError(f"at most {MAX_DIMENSION} variables are supported, got {n}")
    pts = sorted(f.support)
    npts = len(pts)
    rows = [(1,) + p for p in pts] + [
        (0,) + tuple(int(k == i) for k in range(n)) for i in range(n)
    ]
    point_mask = (1 << npts) - 1
    facets = []
    for ray, mask in dual_extreme_rays(rows):
        normal = ray[1:]
        if not any(normal):
            continue  # the facet at infinity, x0 >= 0
        facets.append((normal, mask))

    seen = {m for _, m in facets}
    frontier = list(seen)
    while frontier:
        nxt = []
        for face_mask in frontier:
            for _, fm in facets:
                m = face_mask & fm
                if m & point_mask and m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt

    compact = [m for m in seen if m & ~point_mask == 0]
    vertex_bits = {m for m in compact if _popcount(m) == 1}
    faces = []
    for m in compact:
        vertices = tuple(pts[i] for i in range(npts) if m >> i & 1 and (1 << i) in vertex_bits)
        points = tuple(pts[i] for i in range(npts) if m >> i & 1)
        total = [0] * n
        for normal, fm in facets:
            if fm & m == m:
                total = [a + b for a, b in zip(total, normal)]
        normal = primitive(total)
        if min(normal) <= 0:
            raise AssertionError(f"compact face {points} without a positive normal")
        faces.append(Face(
            vertices=vertices,
            points=points,
            dim=affine_rank(vertices),
            normal=normal,
            level=dot(normal, vertices[0]),
        ))
    faces.sort(key=_face_sort_key)
    return NewtonDiagram(n=n, faces=tuple(faces))


def support_data(f: Polynomial, v: Sequence) -> tuple[Fraction, Face]:
    """Minimum of ``<v, .>`` on the Newton polyhedron and the face it cuts out."""
    v = [Fraction(x) for x in v]
    if len(v) != f.n or min(v) <= 0:
        raise InputError(f"{v} is not a strictly positive vector of length {f.n}")
    values = {a: dot(v, a) for a in f.support}
    level = min(values.values())
    on = frozenset(a for a, x in values.items() if x == level)
    for face in compact_faces(f).faces:
        if frozenset(face.points) == on:
            return level, face
    raise AssertionError(f"no diagram face carries the support points {sorted(on)}")


def restrict(diagram: NewtonDiagram, index_set: Iterable[int]) -> NewtonDiagram:
    """Faces of the diagram lying in the coordinate subspace ``index_set``."""
    index_set = tuple(sorted(set(index_set)))
    if not index_set or not set(index_set) <= set(diagram.index_set):
        raise InputError(f"{index_set} is not a non-empty subset of {diagram.index_set}")
    faces = tuple(f for f in diagram.faces if f.lies_in(index_set))
    return NewtonDiagram(n=diagram.n, faces=faces, index_set=index_set)


def is_convenient(f: Polynomial | NewtonDiagram) -> tuple[bool, set[int]]:
    diagram = f if isinstance(f, NewtonDiagram) else compact_faces(f)
    missing = set(diagram.index_set) - set(diagram.axis_data)
    return not missing, missing


def m_bound(f: Polynomial | NewtonDiagram) -> Fraction:
    """Largest axis intercept of the supporting half-spaces of the maximal faces.

    Any exponent strictly above this value keeps non-degeneracy when a pure
    power ``z_i^a`` is added.  The witness normals are the ones stored on the
    diagram faces, so the bound may exceed a hand-picked one.
    """
    diagram = f if isinstance(f, NewtonDiagram) else compact_faces(f)
    if diagram.is_empty():
        raise InputError("m_bound needs at least one compact face")
    best = Fraction(0)
    for face in diagram.maximal_faces:
        for k in range(diagram.n):
            best = max(best, Fraction(face.level, face.normal[k]))
    return best


def face_function(f: Polynomial, face: Face) -> Polynomial:
    own = compact_faces(f).face_with_vertices(face.vertices)
    if own is None:
        raise InputError(f"{face.vertices} is not a face of the Newton diagram of f")
    return Polynomial(f.n, {a: f.coefficient(a) for a in own.points})
