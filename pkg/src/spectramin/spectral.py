"""Numeric and exact-algebraic spectral radius computations.

Three independent routes to the spectral radius: power iteration on A + I
(numeric Perron pair), a dense symmetric eigensolver (full spectrum), and
an exact integer characteristic polynomial with certified rational root
brackets.  Strict orderings and equalities between radii are settled with
the exact route, never by floating-point closeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactpoly as xp
from .graphs import Graph, InvalidInputError, InvalidParameterError, is_connected

DENSE_CAP = 512
EXACT_CAP = 64
RHO_TOL = 1e-12
RESIDUAL_TOL = 1e-10


class NumericFailure(RuntimeError):
    """A numeric routine failed to converge or certify; details in the message."""


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    method: str


def rho_numeric(g: Graph) -> float:
    """Largest adjacency eigenvalue by the dense symmetric solver."""
    if g.n == 1:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])


def perron_pair(g: Graph, tol: float = RESIDUAL_TOL, max_iter: int = 500000) -> SpectralResult:
    """Perron root and positive unit eigenvector by power iteration.

    Iterates on A + I so bipartite graphs (where +-rho are both extreme)
    still converge; the shift is removed from the reported value.  The
    residual is the infinity norm of ``A x - rho x``.
    """
    if tol <= 0:
        raise InvalidParameterError("tolerance must be positive")
    if not is_connected(g):
        raise InvalidInputError("perron_pair requires a connected graph")
    n = g.n
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, "power")
    a = g.adjacency_matrix()
    shifted = a + np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    rho = 0.0
    for _ in range(max_iter):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            if np.min(x) <= 0.0:
                raise NumericFailure("power iteration produced a non-positive vector")
            return SpectralResult(rho, x, residual, "power")
    raise NumericFailure(
        f"power iteration did not reach residual {tol} in {max_iter} iterations "
        f"(n={n}, last rho={rho})"
    )


def full_spectrum(g: Graph, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """All adjacency eigenvalues, descending, with an eigenpair residual check."""
    if g.n > dense_cap:
        raise InvalidInputError(f"dense spectrum capped at n = {dense_cap}")
    a = g.adjacency_matrix()
    vals, vecs = np.linalg.eigh(a)
    residual = float(np.max(np.abs(a @ vecs - vecs * vals)))
    if residual > 1e-9 * max(g.n, 1):
        raise NumericFailure(f"eigensolver residual {residual} too large for n={g.n}")
    return vals[::-1].copy()


# ---------------------------------------------------------------------------
# exact characteristic polynomial


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial, coefficients constant-first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def sign_at(self, x: Fraction) -> int:
        return xp.sign_at(self.coeffs, x)

    def serialize(self) -> str:
        return xp.poly_to_line(self.coeffs)

    @classmethod
    def parse(cls, line: str) -> "CharPoly":
        return cls(xp.poly_from_line(line))


def char_poly(g: Graph) -> CharPoly:
    """Exact characteristic polynomial of the adjacency matrix.

    Faddeev-LeVerrier recurrence over big integers; the division by the step
    index is exact and asserted.  Capped at n = 64.
    """
    n = g.n
    if n > EXACT_CAP:
        raise InvalidInputError(f"exact characteristic polynomial capped at n = {EXACT_CAP}")
    nbrs = [g.neighbors(v) for v in range(n)]
    # M <- A (M + c I), c_k = -tr(M)/k
    m = [[1 if (g.rows[i] >> j) & 1 else 0 for j in range(n)] for i in range(n)]
    coeffs_desc = [1]
    c = -sum(m[i][i] for i in range(n))
    coeffs_desc.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            m[i][i] += c
        nm = [[0] * n for _ in range(n)]
        for i in range(n):
            row = nm[i]
            for u in nbrs[i]:
                mu = m[u]
                for j in range(n):
                    row[j] += mu[j]
        m = nm
        tr = sum(m[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs_desc.append(c)
    return CharPoly(tuple(reversed(coeffs_desc)))


# ---------------------------------------------------------------------------
# certified brackets


@dataclass(frozen=True)
class RhoBracket:
    """Rational interval (lo, hi] certified to contain exactly the top root."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi}]"


def _dyadic(x: float, scale: int = 1 << 24) -> Fraction:
    return Fraction(round(x * scale), scale)


def _as_int(x: Fraction) -> int:
    # a rational root of a monic integer polynomial is an integer
    assert x.denominator == 1, f"expected an integer root, got {x}"
    return x.numerator


class _CertifiedRho:
    """Char poly, Sturm chain, and a shrinking certified bracket for one graph."""

    def __init__(self, g: Graph):
        if not is_connected(g):
            raise InvalidInputError("certified radius requires a connected graph")
        self.poly = char_poly(g).coeffs
        self.chain = xp.sturm_chain(self.poly)
        self.upper = Fraction(1 + max(g.degrees()) if g.edge_count else 1)
        self.exact_root: int | None = None
        self._deflated: tuple[int, ...] | None = None
        seed = rho_numeric(g)
        self.lo, self.hi = self._initial_bracket(seed)

    def _initial_bracket(self, seed: float) -> tuple[Fraction, Fraction]:
        name = "top-root bracket"
        r = round(seed)
        if abs(seed - r) < 1e-7 and xp.eval_at_int(self.poly, r) == 0:
            return self._exact_bracket(r)
        x = _dyadic(seed)
        if xp.sign_at(self.poly, x) == 0:
            # the dyadic seed landed on the root itself (then it is an integer)
            return self._exact_bracket(int(x))
        step = Fraction(1, 1 << 20)
        if xp.sign_at(self.poly, x) > 0:
            hi = x
            lo = x - step
            while xp.sign_at(self.poly, lo) > 0:
                step *= 2
                lo = x - step
                if lo < -self.upper:
                    raise NumericFailure(f"{name}: no sign change below seed {seed}")
            if xp.sign_at(self.poly, lo) == 0:
                return self._exact_bracket(int(lo))
        else:
            lo = x
            hi = x + step
            while xp.sign_at(self.poly, hi) < 0:
                step *= 2
                hi = x + step
                if hi > self.upper:
                    raise NumericFailure(f"{name}: no sign change above seed {seed}")
            if xp.sign_at(self.poly, hi) == 0:
                return self._exact_bracket(int(hi))
        # shrink away any lower roots that slipped into the interval
        tries = 0
        while xp.count_roots_in(self.chain, lo, hi) > 1 and tries < 200:
            mid = (lo + hi) / 2
            s = xp.sign_at(self.poly, mid)
            if s == 0:
                return self._exact_bracket(_as_int(mid))
            if s < 0:
                lo = mid
            else:
                hi = mid
            tries += 1
        self._certify(lo, hi)
        return lo, hi

    def _exact_bracket(self, r: int) -> tuple[Fraction, Fraction]:
        self.exact_root = r
        deflated, mult = xp.deflate_root(self.poly, r)
        if mult != 1:
            raise NumericFailure(f"top root {r} is not simple (multiplicity {mult})")
        self._deflated = deflated
        dchain = xp.sturm_chain(deflated)
        hi = Fraction(r)
        if xp.count_roots_in(dchain, hi, self.upper) != 0:
            raise NumericFailure(f"certification failed: roots above exact root {r}")
        lo = hi - Fraction(1, 1 << 20)
        while xp.sign_at(deflated, lo) == 0 or xp.count_roots_in(dchain, lo, hi) != 0:
            lo = (lo + hi) / 2
        return lo, hi

    def _certify(self, lo: Fraction, hi: Fraction) -> None:
        if xp.count_roots_in(self.chain, lo, hi) != 1:
            raise NumericFailure(f"bracket ({lo}, {hi}) does not isolate one root")
        if xp.count_roots_in(self.chain, hi, self.upper) != 0:
            raise NumericFailure(f"roots remain above bracket ({lo}, {hi})")

    def refine(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            if self.exact_root is not None:
                self.lo = (self.lo + self.hi) / 2
                continue
            mid = (self.lo + self.hi) / 2
            s = xp.sign_at(self.poly, mid)
            if s == 0:
                self.lo, self.hi = self._exact_bracket(_as_int(mid))
            elif s < 0:
                self.lo = mid
            else:
                self.hi = mid

    def bracket(self) -> RhoBracket:
        return RhoBracket(self.lo, self.hi)


def rho_bracket(g: Graph, width: Fraction | float = Fraction(1, 10**12)) -> RhoBracket:
    """Certified rational bracket of at most the given width around the top root.

    The certificate is exact: Sturm counts show one distinct root inside
    ``(lo, hi]`` and none between ``hi`` and the degree bound ``1 + max_deg``.
    """
    w = Fraction(width) if not isinstance(width, Fraction) else width
    if w <= 0:
        raise InvalidParameterError("bracket width must be positive")
    cert = _CertifiedRho(g)
    cert.refine(w)
    return cert.bracket()


def compare_rho_certified(g1: Graph, g2: Graph, max_rounds: int = 60) -> str:
    """Certified ordering of two spectral radii.

    Returns ``"less"``, ``"greater"``, ``"equal"`` or ``"unresolved"``.
    Strict verdicts come from disjoint certified brackets; equality from an
    integer polynomial gcd owning a root in the bracket overlap, never from
    numeric closeness.
    """
    c1, c2 = _CertifiedRho(g1), _CertifiedRho(g2)
    width = Fraction(1, 10**9)
    gcd_poly: tuple[int, ...] | None = None
    gcd_chain = None
    for _ in range(max_rounds):
        c1.refine(width)
        c2.refine(width)
        if c1.hi <= c2.lo:
            return "less"
        if c2.hi <= c1.lo:
            return "greater"
        if c1.exact_root is not None and c2.exact_root is not None:
            return "equal" if c1.exact_root == c2.exact_root else "unresolved"
        if gcd_poly is None:
            gcd_poly = xp.poly_gcd(c1.poly, c2.poly)
            if xp.degree(gcd_poly) >= 1:
                gcd_chain = xp.sturm_chain(gcd_poly)
        if xp.degree(gcd_poly) >= 1:
            a = max(c1.lo, c2.lo)
            b = min(c1.hi, c2.hi)
            if xp.sign_at(gcd_poly, b) == 0:
                return "equal"
            if (
                xp.sign_at(gcd_poly, a) != 0
                and xp.count_roots_in(gcd_chain, a, b) >= 1
            ):
                return "equal"
        width /= 1 << 16
    return "unresolved"


def interlacing_holds(g: Graph, subset, tol: float = 1e-8) -> bool:
    """Check eigenvalue interlacing for the induced subgraph on ``subset``."""
    vs = sorted(set(subset))
    if not vs:
        raise InvalidParameterError("subset must be nonempty")
    lam = full_spectrum(g)
    mu = full_spectrum(g.subgraph(vs))
    n, m = g.n, len(vs)
    for i in range(m):
        if not (lam[i] >= mu[i] - tol and mu[i] >= lam[n - m + i] - tol):
            return False
    return True
