import random
from itertools import combinations

import numpy as np
import pytest
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from lenewton import Polynomial, parse_polynomial

SIX = "z1^2*z2^2 + z2^4 + z3^4"
SIX_F1 = SIX + " + z1^5"

A, B, C, D, E = (2, 2, 0), (0, 4, 0), (0, 0, 4), (1, 0, 0), (5, 0, 0)


@pytest.fixture
def six():
    return parse_polynomial(SIX, 3)


@pytest.fixture
def six_f1():
    return parse_polynomial(SIX_F1, 3)


def random_germ(seed, convenient=None, max_n=4, max_points=12):
    """Random germ with n <= max_n and at most max_points support points."""
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    if convenient is None:
        convenient = rng.random() < 0.5
    pts = set()
    if convenient:
        for i in range(n):
            pts.add(tuple(rng.randint(2, 6) if k == i else 0 for k in range(n)))
    target = rng.randint(len(pts) + 1, max_points)
    while len(pts) < target:
        a = tuple(rng.randint(0, 4) for _ in range(n))
        if sum(a) >= 2:
            pts.add(a)
    return Polynomial(n, {a: rng.randint(1, 9) * rng.choice((1, -1)) for a in pts})


def four_variable_fixture(seed=11):
    """Non-convenient germ in 4 variables (no pure power of z1)."""
    rng = random.Random(seed)
    pts = set()
    for i in range(1, 4):
        a = [0] * 4
        a[i] = rng.randint(3, 6)
        pts.add(tuple(a))
    while len(pts) < 9:
        a = [rng.randint(0, 3) for _ in range(4)]
        if a[0] == 0 or sum(1 for x in a if x) < 2:
            continue
        pts.add(tuple(a))
    return Polynomial(4, {p: rng.randint(1, 5) for p in pts})


# Independent oracles -------------------------------------------------------

def lp_face(points, chosen):
    """Is ``chosen`` (a subset of ``points``) exactly the points of some
    compact face?  Feasibility of: v >= 1, <v, b - a> = 0 on chosen,
    <v, b - a> >= 1 elsewhere (the gap can be scaled, so this is strictness)."""
    pts = [np.array(p, dtype=float) for p in points]
    base = np.array(chosen[0], dtype=float)
    n = len(base)
    a_eq = [np.array(c, dtype=float) - base for c in chosen[1:]]
    a_ub = [-(p - base) for p, q in zip(pts, points) if q not in chosen]
    res = linprog(
        np.zeros(n),
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=-np.ones(len(a_ub)) if a_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.zeros(len(a_eq)) if a_eq else None,
        bounds=[(1, None)] * n,
        method="highs",
    )
    return res.status == 0


def _collinear(a, b, c):
    u = np.array(b) - np.array(a)
    w = np.array(c) - np.array(a)
    return np.linalg.matrix_rank(np.vstack([u, w])) < 2


def lp_vertices_and_edges(points):
    points = sorted(points)
    verts = [p for p in points if lp_face(points, [p])]
    edges = set()
    for a, b in combinations(verts, 2):
        on_line = [c for c in points if c in (a, b) or _collinear(a, b, c)]
        if lp_face(points, on_line):
            edges.add(frozenset((a, b)))
    return set(verts), edges


def qhull_cone_volume(diagram, index_set):
    """Vol_|I| of the cone over the restricted diagram, summing qhull volumes
    of conv(O, F) over its top-dimensional faces."""
    cols = [i - 1 for i in sorted(index_set)]
    k = len(cols)
    faces = [F for F in diagram.restrict(index_set).faces if F.dim == k - 1]
    total = 0.0
    for F in faces:
        pts = np.array([[0.0] * k] + [[p[c] for c in cols] for p in F.points])
        total += float(pts[1:, 0].max()) if k == 1 else ConvexHull(pts).volume
    return total


def random_line_germ(seed, max_n=4, max_points=12):
    """Random germ meeting the axes 2..n but not axis 1."""
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    pts = {tuple(rng.randint(2, 6) if k == i else 0 for k in range(n)) for i in range(1, n)}
    target = rng.randint(len(pts) + 1, max_points)
    while len(pts) < target:
        a = tuple(rng.randint(0, 4) for _ in range(n))
        if sum(1 for x in a if x) >= 2:
            pts.add(a)
    return Polynomial(n, {a: rng.randint(1, 9) * rng.choice((1, -1)) for a in pts})
