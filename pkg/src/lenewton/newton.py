"""Kouchnirenko's Newton number and the modified Newton numbers.

Sums are carried out on normalized volumes ``|I|! Vol_|I|`` so every
contribution is an integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Iterable, Sequence

from .errors import InputError
from .geometry import NewtonDiagram, compact_faces, is_convenient, m_bound
from .poly import Polynomial
from .triangulate import ConeFamily, Simplex, decompose

DEFAULT_HORIZON = 6


@dataclass(frozen=True)
class NewtonNumber:
    """A Newton number; ``value is None`` means the supremum is infinite."""

    value: int | None
    evaluations: tuple = field(default=(), compare=False)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self):
        return "INFINITE" if self.value is None else str(self.value)


INFINITE = NewtonNumber(None)


def _sign(n: int, k: int) -> int:
    return -1 if (n - k) % 2 else 1


def kouchnirenko_sum(family: ConeFamily) -> int:
    """The alternating volume sum, including the ``(-1)^n`` term for ``I = {}``."""
    n = family.n
    total = _sign(n, 0)
    for idx, xi in family.cones.items():
        total += _sign(n, len(idx)) * sum(s.normalized_volume() for s in xi.full_simplices)
    return total


def newton_number_convenient(f: Polynomial | NewtonDiagram, order: Sequence | None = None) -> int:
    diagram = f if isinstance(f, NewtonDiagram) else compact_faces(f)
    ok, missing = is_convenient(diagram)
    if not ok:
        raise InputError(f"germ is not convenient: axes {sorted(missing)} are not met")
    return kouchnirenko_sum(decompose(diagram, order))


def newton_number(f: Polynomial, horizon: int = DEFAULT_HORIZON) -> NewtonNumber:
    """Newton number of ``f``, extended to non-convenient germs as a supremum.

    For a non-convenient germ, pure powers ``z_i^m`` are added on the missing
    axes for ``m = m0, 2 m0, 4 m0, ...`` with ``m0 = ceil(m(f)) + 1``.  Two
    consecutive equal values stop the search; ``horizon`` doublings of
    growth without repetition give :data:`INFINITE`.
    """
    diagram = compact_faces(f)
    ok, missing = is_convenient(diagram)
    if ok:
        return NewtonNumber(kouchnirenko_sum(decompose(diagram)))
    m = int(ceil(m_bound(diagram))) + 1
    seen: list[tuple[int, int]] = []
    for _ in range(horizon + 1):
        g = Polynomial(f.n, dict(f.terms) | {
            tuple(m if k == i - 1 else 0 for k in range(f.n)): 1 for i in missing
        })
        value = newton_number_convenient(g)
        if seen and seen[-1][1] == value:
            seen.append((m, value))
            return NewtonNumber(value, tuple(seen))
        seen.append((m, value))
        m *= 2
    return NewtonNumber(None, tuple(seen))


def _check_axes(family: ConeFamily, J: Iterable[int]) -> tuple:
    J = tuple(sorted(set(J)))
    bad = [i for i in J if not 1 <= i <= family.n]
    if bad:
        raise InputError(f"indices {bad} are out of range 1..{family.n}")
    axes = family.diagram.axis_data
    missing = [i for i in J if i not in axes]
    if missing:
        raise InputError(f"the Newton diagram does not meet the axes {missing} in J")
    return J


def _axis_edges(s: Simplex, J: Sequence[int]) -> list[int]:
    """Indices ``i`` in ``J`` for which the simplex meets axis ``i`` in an edge.

    That happens exactly when one vertex lies on the axis: the other vertices
    have a positive coordinate off the axis, so they cannot contribute.
    """
    # axis_vertex raises if two vertices share an axis
    return [i for i in J if s.axis_vertex(i) is not None]


def classify(family: ConeFamily, J: Iterable[int], i0: int) -> dict[tuple, list[Simplex]]:
    """Full-dimensional simplices whose only ``J``-axis edge is on axis ``i0``.

    ``i0 = 0`` selects the simplices with no ``J``-axis edge at all.
    """
    J = _check_axes(family, J)
    if i0 != 0 and i0 not in J:
        if not 1 <= i0 <= family.n:
            raise InputError(f"i0={i0} is out of range")
        return {idx: [] for idx in family.cones}
    out = {}
    for idx, xi in family.cones.items():
        if i0 != 0 and i0 not in idx:
            out[idx] = []
            continue
        want = [] if i0 == 0 else [i0]
        out[idx] = [s for s in xi.full_simplices if _axis_edges(s, J) == want]
    return out


def reduce_simplex(s: Simplex, i0: int) -> Simplex:
    """Replace the vertex on axis ``i0`` by the unit vector ``e_i0``."""
    v = s.axis_vertex(i0)
    if v is None:
        raise InputError(f"simplex {s.verts} has no vertex on axis {i0}")
    unit = tuple(int(k == i0 - 1) for k in range(len(v)))
    return Simplex(tuple(unit if w == v else w for w in s.verts), s.index_set)


def modified_newton_number(family: ConeFamily, J: Iterable[int], i0: int) -> int:
    J = _check_axes(family, J)
    if i0 not in J:
        return 0
    n = family.n
    total = 0
    for idx, simplices in classify(family, J, i0).items():
        for s in simplices:
            total += _sign(n, len(idx)) * reduce_simplex(s, i0).normalized_volume()
    return total


def special_modified_newton_number(family: ConeFamily, J: Iterable[int]) -> int:
    """Alternating sum over unreduced simplices with no ``J``-axis edge.

    The ``I = {}`` term ``(-1)^n`` is not included.
    """
    n = family.n
    total = 0
    for idx, simplices in classify(family, J, 0).items():
        for s in simplices:
            total += _sign(n, len(idx)) * s.normalized_volume()
    return total


def decomposition_table(family: ConeFamily, J: Iterable[int]) -> list[dict]:
    """Per-subset data behind the modified Newton numbers, one row per ``I``.

    Each row holds the sign-factorial weight, the reduced simplices of every
    class ``i0`` in ``J`` and the unreduced simplices of class 0, with volumes.
    """
    J = _check_axes(family, J)
    n = family.n
    classes = {i0: classify(family, J, i0) for i0 in J}
    zero = classify(family, J, 0)
    rows = []
    for idx in family.cones:
        k = len(idx)
        weight = _sign(n, k)
        for j in range(2, k + 1):
            weight *= j
        reduced = {
            i0: [(s.verts, s.volume()) for s in (reduce_simplex(t, i0) for t in classes[i0][idx])]
            for i0 in J
        }
        rows.append({
            "I": idx,
            "weight": weight,
            "reduced": reduced,
            "zero": [(s.verts, s.volume()) for s in zero[idx]],
        })
    return rows
