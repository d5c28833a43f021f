"""Randomized search for witnesses of Newton degeneracy.

Finding no witness proves nothing; finding one is strong numerical evidence
that a face function has a critical point on the torus.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .geometry import compact_faces
from .poly import Polynomial

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class Witness:
    face: tuple
    point: tuple
    residual: float


def _relative_gradient(exps: np.ndarray, coeffs: np.ndarray):
    n = exps.shape[1]

    def residual(params):
        w = params[:n] + 1j * params[n:]
        mons = coeffs * np.exp(exps @ w)
        scale = np.sqrt(np.sum(np.abs(mons) ** 2))
        # z_i df/dz_i vanishes on the torus iff df/dz_i does
        r = (exps.T @ mons) / scale
        return np.concatenate([r.real, r.imag])

    return residual


def degeneracy_witness_search(f: Polynomial, trials: int = 20, seed: int = 0,
                              tol: float = DEFAULT_TOL) -> Witness | None:
    """Look for a torus point where all partials of some face function vanish.

    Monomial faces are skipped: their partials never vanish simultaneously
    on the torus.  Other faces get ``trials`` random starts of a least-squares
    descent in logarithmic coordinates ``z = exp(w)``.
    """
    rng = np.random.default_rng(seed)
    n = f.n
    for face in compact_faces(f).faces:
        if len(face.points) < 2:
            continue
        exps = np.array(face.points, dtype=float)
        coeffs = np.array([complex(f.coefficient(a)) for a in face.points])
        fun = _relative_gradient(exps, coeffs)
        bounds = ([-30.0] * n + [-np.inf] * n, [30.0] * n + [np.inf] * n)
        for _ in range(trials):
            x0 = np.concatenate([rng.normal(0, 1, n), rng.uniform(-np.pi, np.pi, n)])
            sol = least_squares(fun, x0, bounds=bounds, xtol=1e-15, ftol=1e-15,
                                gtol=1e-15, max_nfev=2000)
            res = float(np.linalg.norm(fun(sol.x)))
            if res < tol:
                z = np.exp(sol.x[:n] + 1j * sol.x[n:])
                return Witness(face.vertices, tuple(complex(c) for c in z), res)
    return None
