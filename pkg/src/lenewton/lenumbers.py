"""Lê numbers of a non-degenerate germ from the Newton diagram of ``f_d``.

Pipeline: pick exponents ``alpha_1 < ... `` large enough (``choose_exponents``),
form ``f_d = f + z_1^alpha_1 + ... + z_d^alpha_d``, triangulate the cones over
its diagram and read the Lê numbers off the special and modified Newton
numbers of ``f_d`` (``le_numbers``).  Polar ratios are not computed; instead
the whole computation is repeated with boosted exponents and the two answers
must agree.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from math import ceil
from typing import Sequence

from .errors import (ConsistencyError, HypothesisViolation, InconclusiveError,
                     InputError, PurePowerError, StabilizationError)
from .geometry import compact_faces, m_bound
from .newton import (DEFAULT_HORIZON, newton_number, modified_newton_number,
                     special_modified_newton_number)
from .poly import Polynomial, augment, pure_power_indices
from .triangulate import decompose, random_order

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExponentPlan:
    """Exponents added to ``z_1 ... z_d`` and how they were obtained.

    ``provenance[p]`` records, for ``alpha_{p+1}``, the bound ``m(f_p)``, the
    homogeneous degree used as a polar-ratio stand-in (or ``None``) and the
    resulting lower bound.
    """

    d: int
    alphas: tuple
    boosted_alphas: tuple
    provenance: tuple = field(default=(), compare=False)
    explicit: bool = False


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LeResult:
    n: int
    d: int
    alphas: tuple
    boosted_alphas: tuple
    lambdas: tuple
    nu0: int
    nutilde: tuple
    euler: int | None
    mu_fd: int
    newton_fd: int | None
    checks: tuple = ()
    d_source: str = "given"
    variables: tuple = ()
    assumptions: tuple = ()

    @property
    def accepted(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class CompareReport:
    diagrams_equal: bool
    d_f: int | None
    d_g: int | None
    lambda_f: tuple | None
    lambda_g: tuple | None
    verdict: str


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _lower_bound(g: Polynomial, f: Polynomial) -> tuple[int, dict]:
    mb = m_bound(compact_faces(g))
    hdeg = f.degree() if f.is_homogeneous() else None
    lo = max(3, int(ceil(mb)) + 1, (hdeg or 0) + 1)
    return lo, {"m_bound": mb, "homogeneous_degree": hdeg, "lower_bound": lo}


def _validate_d(f: Polynomial, d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise InputError(f"d must be a positive integer, got {d!r}")
    if d > f.n - 1:
        raise InputError(
            f"d={d} exceeds n-1={f.n - 1}: the critical locus of a germ in {f.n} "
            "variables has dimension at most n-1"
        )
    bad = pure_power_indices(f, d)
    if bad:
        raise PurePowerError(
            "f contains pure powers of "
            + ", ".join(f"z{i}" for i in sorted(bad))
            + f" with index <= d={d}; a non-degenerate germ with critical locus of "
            "dimension d has no such terms, so the hypotheses cannot all hold"
        )


def _boost(f: Polynomial, alphas: Sequence[int]) -> tuple:
    out: list[int] = []
    g = f
    for a in alphas:
        lo, _ = _lower_bound(g, f)
        out.append(max(2 * a, lo))
        g = augment(f, out)
    return tuple(out)


def choose_exponents(f: Polynomial, d: int) -> ExponentPlan:
    """Exponents ``alpha_p = max(3, ceil(m(f_{p-1})) + 1, deg f + 1)``.

    The degree term only applies to homogeneous ``f``, where it bounds the
    maximum polar ratio.  A boosted plan with every exponent at least doubled
    is attached for the stabilization check.
    """
    _validate_d(f, d)
    alphas: list[int] = []
    provenance = []
    g = f
    for _ in range(d):
        lo, prov = _lower_bound(g, f)
        alphas.append(lo)
        provenance.append(prov)
        g = augment(f, alphas)
    return ExponentPlan(d, tuple(alphas), _boost(f, alphas), tuple(provenance))


def plan_from_alphas(f: Polynomial, alphas: Sequence[int]) -> ExponentPlan:
    """Validate user-supplied exponents: each must exceed ``max(2, m(f_{p-1}))``."""
    alphas = tuple(int(a) for a in alphas)
    d = len(alphas)
    _validate_d(f, d)
    provenance = []
    g = f
    for p, a in enumerate(alphas, 1):
        mb = m_bound(compact_faces(g))
        if a <= max(2, mb):
            raise InputError(
                f"alpha_{p}={a} must exceed max(2, m(f_{p - 1}))={max(2, mb)}"
            )
        provenance.append({"m_bound": mb, "homogeneous_degree": None, "lower_bound": None})
        g = augment(f, alphas[:p])
    return ExponentPlan(d, alphas, _boost(f, alphas), tuple(provenance), explicit=True)


def lambdas_from(n: int, nu0: int, nutilde: Sequence[int]) -> tuple:
    """Lê numbers from the special and modified Newton numbers of ``f_d``."""
    d = len(nutilde)
    lam = [_sign(n) + nu0 + nutilde[0]]
    for k in range(1, d):
        lam.append(_sign(k - 1) * (nutilde[k - 1] - nutilde[k]))
    lam.append(_sign(d - 1) * nutilde[d - 1])
    return tuple(lam)


def modified_numbers(f: Polynomial, alphas: Sequence[int],
                     order_seed: int | None = None) -> tuple[int, tuple]:
    """``(nu_0(f_d), (nu~_1(f_d), ..., nu~_d(f_d)))`` for the given exponents."""
    fd = augment(f, alphas)
    diagram = compact_faces(fd)
    order = None if order_seed is None else random_order(diagram, order_seed)
    family = decompose(diagram, order)
    J = range(1, len(alphas) + 1)
    nu0 = special_modified_newton_number(family, J)
    nutilde = tuple(modified_newton_number(family, J, k) for k in J)
    return nu0, nutilde


def milnor_from_lambdas(lambdas: Sequence[int], alphas: Sequence[int]) -> int:
    """``lambda^0 + sum_k prod_{q<=k}(alpha_q - 1) lambda^k``."""
    total = lambdas[0]
    weight = 1
    for k in range(1, len(lambdas)):
        weight *= alphas[k - 1] - 1
        total += weight * lambdas[k]
    return total


def euler_characteristic(result: LeResult, n: int | None = None) -> int:
    """Reduced Euler characteristic of the Milnor fibre (prepolar coordinates).

    Computed from ``nu_0(f_d)`` and again from the Lê numbers; the two must
    agree.
    """
    n = result.n if n is None else n
    from_nu0 = _sign(n - 1) * (result.nu0 + _sign(n))
    from_lambdas = sum(_sign(n - 1 - k) * lam for k, lam in enumerate(result.lambdas))
    if from_nu0 != from_lambdas:
        raise ConsistencyError(
            f"Euler characteristic {from_nu0} from nu_0 disagrees with "
            f"{from_lambdas} from the Lê numbers"
        )
    return from_nu0


def consistency_check(f: Polynomial, plan: ExponentPlan, result: LeResult,
                      horizon: int = DEFAULT_HORIZON, nu_fd=None) -> Check:
    """Compare the Milnor number of ``f_d`` rebuilt from the Lê numbers with
    the Newton number of ``f_d`` (computed unless passed as ``nu_fd``)."""
    mu = milnor_from_lambdas(result.lambdas, plan.alphas)
    nu = nu_fd if nu_fd is not None else newton_number(augment(f, plan.alphas), horizon)
    passed = nu.is_finite and nu.value == mu
    return Check("iomdine_le_massey", passed, f"mu_rec={mu}, nu(f_d)={nu}")


def le_numbers(f: Polynomial, d: int, plan: ExponentPlan | None = None,
               order_seed: int | None = None,
               horizon: int = DEFAULT_HORIZON) -> LeResult:
    """Lê numbers ``lambda^0 ... lambda^d`` of ``f`` in its given coordinates.

    Raises :class:`StabilizationError` if the boosted plan changes the
    answer and :class:`HypothesisViolation` on a negative Lê number.
    Consistency failures are recorded in ``checks`` instead.
    """
    _validate_d(f, d)
    if plan is None:
        plan = choose_exponents(f, d)
    if plan.d != d:
        raise InputError(f"exponent plan is for d={plan.d}, not d={d}")

    nu0, nutilde = modified_numbers(f, plan.alphas, order_seed)
    lambdas = lambdas_from(f.n, nu0, nutilde)
    b_nu0, b_nutilde = modified_numbers(f, plan.boosted_alphas, order_seed)
    b_lambdas = lambdas_from(f.n, b_nu0, b_nutilde)
    log.debug("alphas %s -> %s; boosted %s -> %s",
              plan.alphas, lambdas, plan.boosted_alphas, b_lambdas)
    if b_lambdas != lambdas:
        raise StabilizationError(
            f"Lê numbers {list(lambdas)} for exponents {list(plan.alphas)} change to "
            f"{list(b_lambdas)} for {list(plan.boosted_alphas)}; use larger exponents"
        )
    negative = [k for k, lam in enumerate(lambdas) if lam < 0]
    if negative:
        raise HypothesisViolation(
            f"negative Lê numbers {list(lambdas)}: f is degenerate, d is wrong, or "
            "the Lê numbers are not defined in these coordinates"
        )

    telescoped = sum(_sign(k - 1) * lambdas[k] for k in range(1, d + 1))
    checks = [
        Check("stabilization", True,
              f"boosted exponents {list(plan.boosted_alphas)} give the same Lê numbers"),
        Check("telescoping", telescoped == nutilde[0],
              f"sum (-1)^(k-1) lambda^k = {telescoped}, nu~_1 = {nutilde[0]}"),
    ]
    result = LeResult(
        n=f.n, d=d, alphas=plan.alphas, boosted_alphas=plan.boosted_alphas,
        lambdas=lambdas, nu0=nu0, nutilde=nutilde, euler=None,
        mu_fd=milnor_from_lambdas(lambdas, plan.alphas), newton_fd=None,
        variables=tuple(f"z{i}" for i in range(1, f.n + 1)),
        assumptions=(
            "f is Newton non-degenerate",
            "the Lê numbers exist in these coordinates",
            "coordinates are prepolar (Euler characteristic)",
        ),
    )
    euler = euler_characteristic(result)
    checks.append(Check("euler_agreement", True, f"both formulas give {euler}"))
    nu = newton_number(augment(f, plan.alphas), horizon)
    checks.append(consistency_check(f, plan, result, horizon, nu_fd=nu))
    return replace(result, euler=euler, newton_fd=nu.value, checks=tuple(checks))


def estimate_critical_dimension(f: Polynomial, horizon: int = DEFAULT_HORIZON) -> int:
    """Least ``q`` such that adding ``z_1^M + ... + z_q^M`` gives a finite
    Newton number.

    Heuristic: infinity is only detected up to the doubling horizon.
    """
    alphas: list[int] = []
    g = f
    for q in range(f.n):
        if newton_number(g, horizon).is_finite:
            return q
        lo, _ = _lower_bound(g, f)
        alphas.append(lo)
        g = augment(f, alphas)
    raise InconclusiveError(
        f"no augmentation of z1..z{f.n - 1} gives a finite Newton number within "
        f"horizon {horizon}; cannot estimate the critical dimension"
    )


def run(f: Polynomial, d: int | None = None, alphas: Sequence[int] | None = None,
        order_seed: int | None = None, horizon: int = DEFAULT_HORIZON) -> LeResult:
    """Full pipeline with optional ``d`` and exponents."""
    source = "given"
    if alphas is not None:
        if d is not None and d != len(alphas):
            raise InputError(f"{len(alphas)} exponents given for d={d}")
        plan = plan_from_alphas(f, alphas)
        d = plan.d
    else:
        if d is None:
            d = estimate_critical_dimension(f, horizon)
            source = "estimated (heuristic)"
            if d == 0:
                raise InputError(
                    "f has an isolated singularity (d=0); its only Lê number is "
                    "the Milnor number, see the `newton` command"
                )
        plan = choose_exponents(f, d)
    result = le_numbers(f, d, plan, order_seed=order_seed, horizon=horizon)
    return replace(result, d_source=source)


def compare(f: Polynomial, g: Polynomial, d: int | None = None,
            order_seed: int | None = None,
            horizon: int = DEFAULT_HORIZON) -> CompareReport:
    """Check that equal Newton diagrams give equal Lê numbers."""
    if f.n != g.n:
        raise InputError(f"germs live in {f.n} and {g.n} variables")
    equal = compact_faces(f).same_faces(compact_faces(g))
    if not equal:
        return CompareReport(False, None, None, None, None, "NO_VERDICT")
    rf = run(f, d=d, order_seed=order_seed, horizon=horizon)
    rg = run(g, d=d, order_seed=order_seed, horizon=horizon)
    same = rf.d == rg.d and rf.lambdas == rg.lambdas
    return CompareReport(True, rf.d, rg.d, rf.lambdas, rg.lambdas,
                         "PASS" if same else "FAIL")
