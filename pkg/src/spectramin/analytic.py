"""Closed-form spectral radius machinery for the dumbbell family B(m, p, q).

On every degree-2 stretch of B(m, p, q) the Perron vector satisfies the
three-term recurrence ``rho x_i = x_{i-1} + x_{i+1}``, whose solution with
prescribed endpoint values a, b is the hyperbolic-sine interpolant

    f_i(t, k, a, b) = (b sinh(it) + a sinh((k-i)t)) / sinh(kt),

with ``rho = 2 cosh t``.  The two hub equations then turn into a symmetric
2x2 system M(rho) (a, b)^T = 0, so rho is the largest root of det M and
(a, b) spans its kernel.  This module solves that boundary problem, rebuilds
the full Perron vector in closed form, exposes the shared equitable-partition
quotient behind rho(P(m,p,m)) = rho(B(m,p,m)), and evaluates the positive
gap expression certifying rho(B(m,p,m)) < rho(B(m,m,p)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import acosh, cosh, exp, log, sqrt

import numpy as np

from .graphs import (
    Graph,
    InvalidParameterError,
    VertexLabeling,
    build_bicyclic,
    spec_B,
    spec_P,
)
from .spectral import NumericFailure

_SCAN_POINTS = 4096


def f_value(i: int, t: float, k: int, a: float, b: float) -> float:
    """The recurrence interpolant f_i(t, k, a, b), evaluated overflow-free.

    Factoring e^{kt} out of numerator and denominator leaves only
    non-positive exponents, so large kt cannot overflow.
    """
    if t <= 0.0:
        raise InvalidParameterError(f"f is defined for t > 0, got t={t}")
    if not 0 <= i <= k:
        raise InvalidParameterError(f"index i={i} outside 0..k={k}")
    num = b * (exp((i - k) * t) - exp(-(i + k) * t)) + a * (
        exp(-i * t) - exp(-(2 * k - i) * t)
    )
    den = 1.0 - exp(-2.0 * k * t)
    return num / den


def f_limit(i: int, k: int, a: float, b: float) -> float:
    """t -> 0 limit of f: plain linear interpolation between a and b."""
    return (b * i + a * (k - i)) / k


def t_of_rho(rho: float) -> float:
    """Inverse of rho = 2 cosh t, i.e. log((rho + sqrt(rho^2 - 4)) / 2)."""
    if rho < 2.0:
        raise InvalidParameterError(f"need rho >= 2, got {rho}")
    return acosh(rho / 2.0)


def _sinh_ratio(t: float, k: int) -> float:
    """sinh(t) / sinh(kt) without overflow."""
    return exp((1 - k) * t) * (1.0 - exp(-2.0 * t)) / (1.0 - exp(-2.0 * k * t))


def boundary_matrix(m: int, p: int, q: int, rho: float) -> np.ndarray:
    """Coefficient matrix M(rho) of the two hub equations of B(m, p, q).

    Row 1 is the hub-a balance ``rho a = 2 f_1(t,m,a,a) + f_1(t,p,a,b)``
    split into coefficients of a and b, row 2 the hub-b counterpart; the
    spectral radius is the largest rho > 2 with det M(rho) = 0.
    """
    spec_B(m, p, q)  # validates the family parameters
    if rho <= 2.0:
        raise InvalidParameterError(f"boundary matrix needs rho > 2, got {rho}")
    t = t_of_rho(rho)
    m11 = rho - 2.0 * f_value(1, t, m, 1.0, 1.0) - f_value(1, t, p, 1.0, 0.0)
    m22 = rho - 2.0 * f_value(1, t, q, 1.0, 1.0) - f_value(p - 1, t, p, 0.0, 1.0)
    off = -f_value(1, t, p, 0.0, 1.0)
    return np.array([[m11, off], [off, m22]])


def boundary_det(m: int, p: int, q: int, rho: float) -> float:
    mat = boundary_matrix(m, p, q, rho)
    return float(mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0])


@dataclass(frozen=True)
class AnalyticSolution:
    """Solved boundary problem for one B(m, p, q): t, hub values, residuals.

    ``rho`` is derived as 2 cosh t; ``a``/``b`` are the hub entries of the
    (unnormalized) Perron vector scaled so min(a, b) = 1; the residuals are
    the absolute errors of the two hub balance equations.
    """

    m: int
    p: int
    q: int
    t: float
    a: float
    b: float
    residual_a: float
    residual_b: float

    @property
    def rho(self) -> float:
        return 2.0 * cosh(self.t)


def rho_analytic(m: int, p: int, q: int, tol: float = 1e-10) -> AnalyticSolution:
    """Spectral radius of B(m, p, q) from the boundary determinant alone.

    Scans det M(rho) from the degree bound downward, takes the first sign
    change (the largest root), bisects it tight, applies one Newton polish,
    and extracts the positive kernel direction (a, b).  Independent of the
    eigensolver route; residuals of the hub equations certify the solve.
    """
    spec = spec_B(m, p, q)
    hi = 1.0 + 3.0  # spectral radius is below 1 + max degree
    lo_limit = 2.0 + 1e-9
    step = (hi - lo_limit) / _SCAN_POINTS
    x_hi = hi
    d_hi = boundary_det(m, p, q, x_hi)
    x = x_hi
    bracket = None
    while x - step >= lo_limit:
        x_lo = x - step
        d_lo = boundary_det(m, p, q, x_lo)
        if d_lo == 0.0:
            bracket = (x_lo, x_lo)
            break
        if (d_lo < 0.0) != (d_hi < 0.0):
            bracket = (x_lo, x)
            break
        x, d_hi = x_lo, d_lo
    if bracket is None:
        raise NumericFailure(f"no sign change of det M below {hi} for B({m},{p},{q})")
    lo, hi = bracket
    if lo != hi:
        f_lo = boundary_det(m, p, q, lo)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if hi - lo <= 1e-15 * max(1.0, hi):
                break
            f_mid = boundary_det(m, p, q, mid)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if (f_mid < 0.0) == (f_lo < 0.0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
    root = 0.5 * (lo + hi)
    # one Newton polish on the determinant
    h = 1e-7
    d0 = boundary_det(m, p, q, root)
    dp = boundary_det(m, p, q, root + h)
    dm = boundary_det(m, p, q, root - h)
    slope = (dp - dm) / (2 * h)
    if slope != 0.0:
        cand = root - d0 / slope
        if lo_limit < cand < 4.0 and abs(boundary_det(m, p, q, cand)) <= abs(d0):
            root = cand

    mat = boundary_matrix(m, p, q, root)
    a, b = -mat[0, 1], mat[0, 0]
    if a <= 0.0 or b <= 0.0:
        raise NumericFailure(
            f"kernel of det M is not positive at rho={root} for B({m},{p},{q})"
        )
    scale = min(a, b)
    a, b = a / scale, b / scale
    t = t_of_rho(root)
    res_a = abs(root * a - (2.0 * f_value(1, t, m, a, a) + f_value(1, t, p, a, b)))
    res_b = abs(root * b - (2.0 * f_value(1, t, q, b, b) + f_value(p - 1, t, p, a, b)))
    sol = AnalyticSolution(m, p, q, t, a, b, res_a, res_b)
    if max(res_a, res_b) > tol:
        raise NumericFailure(
            f"hub equation residuals {res_a:.3g}/{res_b:.3g} above {tol} "
            f"for B({m},{p},{q})"
        )
    _ = spec
    return sol


def perron_closed_form(sol: AnalyticSolution) -> np.ndarray:
    """Full positive eigenvector of B(m, p, q) assembled from f alone.

    Indexed like ``build_bicyclic(spec_B(m, p, q))``: the m-cycle walk takes
    f_i(t, m, a, a), the path f_i(t, p, a, b), the q-cycle f_i(t, q, b, b).
    """
    m, p, q, t, a, b = sol.m, sol.p, sol.q, sol.t, sol.a, sol.b
    n = m + p + q - 1
    x = np.empty(n)
    for i in range(m):
        x[i] = f_value(i, t, m, a, a)
    for j in range(1, p):
        x[m + j - 1] = f_value(j, t, p, a, b)
    x[m + p - 1] = b
    for i in range(1, q):
        x[m + p - 1 + i] = f_value(i, t, q, b, b)
    return x


def hub_identity_residuals(sol: AnalyticSolution) -> tuple[float, float]:
    """Absolute errors of the two rearranged hub identities.

    The hub balance equations can be rewritten with all interpolants taken
    at equal endpoint values:

        a cosh t - f_1(t,m,a,a) - f_1(t,p,a,a)/2 = -(a-b)/2 * sinh t / sinh pt
        a cosh t - f_1(t,q,a,a) - f_1(t,p,a,a)/2 = a(a-b)/(2b) * sinh t / sinh pt

    Both must vanish-match at the solved (rho, a, b); they are exact
    rearrangements, so the residuals are numerically zero.
    """
    m, p, q, t, a, b = sol.m, sol.p, sol.q, sol.t, sol.a, sol.b
    ch = cosh(t)
    ratio = _sinh_ratio(t, p)
    lhs1 = a * ch - f_value(1, t, m, a, a) - 0.5 * f_value(1, t, p, a, a)
    rhs1 = -(a - b) / 2.0 * ratio
    lhs2 = a * ch - f_value(1, t, q, a, a) - 0.5 * f_value(1, t, p, a, a)
    rhs2 = a * (a - b) / (2.0 * b) * ratio
    return abs(lhs1 - rhs1), abs(lhs2 - rhs2)


# ---------------------------------------------------------------------------
# equitable partition route for the m = q case


@dataclass(frozen=True)
class QuotientMatrix:
    """Equitable-partition quotient: class list plus neighbor-count matrix."""

    matrix: np.ndarray
    classes: tuple[tuple[int, ...], ...]

    def top_eigenvalue(self) -> float:
        vals = np.linalg.eigvals(self.matrix)
        return float(np.max(vals.real))


def _symmetric_classes(lab: VertexLabeling, m: int, p: int) -> list[tuple[int, ...]]:
    """Mirror classes {hubs}, {u_j, u_{m-j}, v_j, v_{m-j}}, {w_j, w_{p-j}}."""
    classes: list[tuple[int, ...]] = [(lab.hub_a, lab.hub_b)]
    um = (lab.hub_a,) + lab.seg_m  # positions 0..m-1 along the m-part
    vq = (lab.hub_b,) + lab.seg_q
    for j in range(1, m // 2 + 1):
        cls = {um[j], um[m - j], vq[j], vq[m - j]}
        classes.append(tuple(sorted(cls)))
    w = (lab.hub_a,) + lab.seg_p + (lab.hub_b,)  # positions 0..p along the path
    for j in range(1, p // 2 + 1):
        cls = {w[j], w[p - j]}
        classes.append(tuple(sorted(cls)))
    return classes


def _quotient_of(g: Graph, classes: list[tuple[int, ...]]) -> np.ndarray:
    """Neighbor-count matrix of a partition, verifying it is equitable."""
    cls_of = {}
    for ci, cls in enumerate(classes):
        for v in cls:
            cls_of[v] = ci
    if len(cls_of) != g.n:
        raise InvalidParameterError("partition does not cover the vertex set")
    k = len(classes)
    mat = np.zeros((k, k))
    for ci, cls in enumerate(classes):
        counts0 = None
        for v in cls:
            counts = [0] * k
            for u in g.neighbors(v):
                counts[cls_of[u]] += 1
            if counts0 is None:
                counts0 = counts
            elif counts != counts0:
                raise NumericFailure(f"partition is not equitable at class {ci}")
        mat[ci] = counts0
    return mat


def quotient_matrix_symmetric(m: int, p: int) -> QuotientMatrix:
    """Shared quotient of B(m, p, m) and P(m, p, m) over the mirror classes.

    Both graphs admit the same symmetric partition with identical neighbor
    counts, which is why their spectral radii coincide; the two quotients
    are computed independently and must agree entry for entry.
    """
    if m < 3 or p < 1:
        raise InvalidParameterError(f"need m >= 3 and p >= 1, got m={m}, p={p}")
    gb, lb = build_bicyclic(spec_B(m, p, m))
    qb = _quotient_of(gb, _symmetric_classes(lb, m, p))
    gp, lp = build_bicyclic(spec_P(m, p, m))
    qp = _quotient_of(gp, _symmetric_classes(lp, m, p))
    if not np.array_equal(qb, qp):
        raise NumericFailure(f"quotients of B({m},{p},{m}) and P({m},{p},{m}) differ")
    return QuotientMatrix(qb, tuple(_symmetric_classes(lb, m, p)))


def path_cycle_swap_gap(m: int, p: int) -> float:
    """Positive residual certifying rho(B(m,p,m)) < rho(B(m,m,p)).

    Solve B(m, m, p) for (sigma, a, b); transplanting its hub values onto
    B(m, p, m) via f leaves each hub equation short by exactly

        (a - b)^2 / (2 b) * sinh(t_sigma) / sinh(m t_sigma),

    which is strictly positive whenever m != p, so the transplanted vector
    is a strict super-solution and the radius of B(m, p, m) sits below sigma.
    """
    if m == p:
        raise InvalidParameterError("gap is defined for distinct parameters")
    if min(m, p) < 3:
        raise InvalidParameterError("both parameters must be at least 3")
    sol = rho_analytic(m, m, p)
    return (sol.a - sol.b) ** 2 / (2.0 * sol.b) * _sinh_ratio(sol.t, m)


def swap_gap_direct(m: int, p: int) -> float:
    """Oracle twin of path_cycle_swap_gap: evaluate the hub defect directly.

    Builds the transplanted vector on B(m, p, m) explicitly and returns
    ``sigma * x_hub - sum of neighbor entries`` at the q-side hub.
    """
    sol = rho_analytic(m, m, p)
    sigma, t, a = sol.rho, sol.t, sol.a
    # entries around the q-side hub of B(m, p, m) built from f with value a
    x_hub = a
    x_cycle = f_value(1, t, m, a, a)
    x_path_end = f_value(p - 1, t, p, a, a)
    return sigma * x_hub - (2.0 * x_cycle + x_path_end)


def log_form_t(rho: float) -> float:
    """Reference formula log((rho + sqrt(rho^2 - 4)) / 2); equals t_of_rho."""
    if rho < 2.0:
        raise InvalidParameterError(f"need rho >= 2, got {rho}")
    return log((rho + sqrt(rho * rho - 4.0)) / 2.0)
