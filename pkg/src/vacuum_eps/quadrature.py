"""Self-contained numerical kernels: adaptive quadrature, semi-infinite
oscillatory sine integrals, and bracketing root-finding.

The adaptive integrator is a globally adaptive bisection scheme driven by an
embedded Gauss(7)/Kronrod(15) rule pair.  Both rules use open nodes, so
integrable endpoint singularities are never sampled.  Evaluation order is
deterministic: the worst panel (largest error estimate, ties broken by
creation order) is always split next, and no randomized nodes are used.

The oscillatory kernel partitions ``[0, inf)`` at the zeros of the sine,
integrates each lobe adaptively, and accelerates the resulting alternating
series of partial sums by iterated averaging.

Integrand functions passed to the integrators are evaluated on NumPy arrays
of abscissae and must return arrays of the same shape.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "ToleranceSpec",
    "IntegralResult",
    "NonConvergenceError",
    "BracketingError",
    "DivergenceError",
    "integrate_adaptive",
    "integrate_oscillatory_sine",
    "find_root",
]

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class ToleranceSpec:
    """Convergence targets: stop once error <= max(abs_tol, rel_tol*|value|)."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_evaluations: int = 1_000_000

    def __post_init__(self) -> None:
        if self.rel_tol < 0.0 or self.abs_tol < 0.0:
            raise ValueError("tolerances must be non-negative")
        if self.rel_tol == 0.0 and self.abs_tol == 0.0:
            raise ValueError("at least one of rel_tol, abs_tol must be positive")
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")

    def target(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class IntegralResult:
    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self) -> None:
        if self.abs_error_estimate < 0.0:
            raise ValueError("abs_error_estimate must be non-negative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be >= 1")


class NonConvergenceError(RuntimeError):
    """Evaluation budget exhausted before reaching tolerance.

    Carries the best estimate obtained so far in the ``best`` attribute.
    """

    def __init__(self, message: str, best: IntegralResult):
        super().__init__(f"{message} (best estimate {best.value!r} +- {best.abs_error_estimate:.3e})")
        self.best = best


class BracketingError(ValueError):
    """A root bracket without a sign change was supplied."""


class DivergenceError(RuntimeError):
    """The oscillatory tail shows no decay; the integral looks divergent."""


# Gauss(7)/Kronrod(15) nodes and weights on [-1, 1].  Kronrod nodes are
# strictly interior; odd-index nodes coincide with the embedded Gauss rule.
_XK = np.array([
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
])


def _panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod panel: returns (integral, error estimate)."""
    h = 0.5 * (b - a)
    x = 0.5 * (a + b) + h * _XK
    y = np.asarray(f(x), dtype=float)
    if y.shape != x.shape:
        raise ValueError("integrand must return an array matching the abscissa shape")
    if not np.all(np.isfinite(y)):
        raise ValueError(f"integrand returned a non-finite value on [{a!r}, {b!r}]")
    k15 = h * float(_WK @ y)
    g7 = h * float(_WG @ y[1::2])
    resabs = abs(h) * float(_WK @ np.abs(y))
    err = abs(k15 - g7)
    if resabs != 0.0 and err != 0.0:
        # Quadpack-style rescaling keeps the estimate conservative without
        # wildly over-reporting on smooth panels.
        err = min(err, resabs * min(1.0, (200.0 * err / resabs) ** 1.5))
    # Roundoff floor: never claim better than ~50 ulp of the L1 mass.
    err = max(err, 50.0 * _EPS * resabs)
    return k15, err


def integrate_adaptive(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: ToleranceSpec | None = None,
) -> IntegralResult:
    """Integrate ``f`` on ``[a, b]`` by globally adaptive Gauss-Kronrod bisection.

    Parameters
    ----------
    f : callable
        Vectorized integrand; called with NumPy arrays of interior abscissae.
    a, b : float
        Finite integration limits, a < b.
    tol : ToleranceSpec, optional
        Convergence targets; the run stops when the summed panel error
        estimate drops below ``max(abs_tol, rel_tol * |integral|)``.

    Returns
    -------
    IntegralResult
        Integral value, summed error estimate and evaluation count.

    Raises
    ------
    ValueError
        If the limits are invalid or the integrand returns non-finite values
        at interior nodes.
    NonConvergenceError
        If ``max_evaluations`` is exhausted first; the best estimate is
        attached to the exception.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if not a < b:
        raise ValueError("require a < b")
    if tol is None:
        tol = ToleranceSpec()

    value, err = _panel(f, a, b)
    evaluations = 15
    total_value, total_err = value, err
    # Heap entries: (-error, creation order, lo, hi, value, error, splittable)
    heap: list[tuple[float, int, float, float, float, float, bool]] = [
        (-err, 0, a, b, value, err, True)
    ]
    order = 1
    while total_err > tol.target(total_value):
        if evaluations + 30 > tol.max_evaluations:
            best = IntegralResult(total_value, total_err, evaluations)
            raise NonConvergenceError("adaptive quadrature exhausted its evaluation budget", best)
        neg_err, _, lo, hi, v, e, splittable = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not splittable or mid <= lo or mid >= hi:
            # Panel at floating-point resolution; keep it, drop it from the
            # refinement race.  If nothing is splittable we are done.
            heapq.heappush(heap, (0.0, order, lo, hi, v, e, False))
            order += 1
            if all(not item[6] for item in heap):
                break
            continue
        v1, e1 = _panel(f, lo, mid)
        v2, e2 = _panel(f, mid, hi)
        evaluations += 30
        total_value += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, order, lo, mid, v1, e1, True))
        heapq.heappush(heap, (-e2, order + 1, mid, hi, v2, e2, True))
        order += 2

    # Compensated re-summation tightens the accumulated totals.
    total_value = math.fsum(item[4] for item in heap)
    total_err = math.fsum(item[5] for item in heap)
    return IntegralResult(total_value, total_err, evaluations)


def _accelerate(partial_sums: np.ndarray) -> tuple[float, float]:
    """Iterated averaging of alternating partial sums.

    Returns the best accelerated estimate and the smallest consecutive
    head-to-head difference seen while collapsing the triangle, which serves
    as the truncation-error estimate.
    """
    row = partial_sums.astype(float)
    scale = float(np.max(np.abs(row))) if row.size else 0.0
    best = float(row[-1])
    best_diff = math.inf
    prev_last = float(row[-1])
    while row.size > 1:
        row = 0.5 * (row[:-1] + row[1:])
        last = float(row[-1])
        diff = abs(last - prev_last)
        prev_last = last
        if diff < best_diff:
            best_diff = diff
            best = last
    if not math.isfinite(best_diff):
        best_diff = 0.0
    # Floor at roundoff of the largest partial sum touched.
    return best, max(best_diff, 4.0 * _EPS * scale)


def integrate_oscillatory_sine(
    g: Callable[[np.ndarray], np.ndarray],
    omega: float,
    tol: ToleranceSpec | None = None,
) -> IntegralResult:
    """Estimate ``int_0^inf g(k) sin(omega k) dk`` for eventually decaying g.

    The half-line is split at the sine zeros k_n = n pi / omega; each lobe is
    integrated adaptively and the alternating sequence of partial sums is
    accelerated by iterated averaging.  Slowly decaying integrands (down to
    ~1/k with logarithms) are the design case.

    Raises
    ------
    DivergenceError
        If the lobe magnitudes keep growing and the accelerated tail shows
        no sign of settling.
    NonConvergenceError
        If the evaluation budget is exhausted before the accelerated tail
        meets the tolerance.
    """
    if not (math.isfinite(omega) and omega > 0.0):
        raise ValueError("omega must be finite and positive")
    if tol is None:
        tol = ToleranceSpec()

    lobe_width = math.pi / omega
    lobe_tol = ToleranceSpec(
        rel_tol=min(1e-13, tol.rel_tol),
        abs_tol=max(tol.abs_tol / 64.0, 5e-18),
        max_evaluations=tol.max_evaluations,
    )

    def lobe(i: int) -> IntegralResult:
        lo = i * lobe_width
        hi = (i + 1) * lobe_width
        return integrate_adaptive(lambda k: g(k) * np.sin(omega * k), lo, hi, lobe_tol)

    terms: list[float] = []
    term_errs: list[float] = []
    evaluations = 0
    chunk = 24
    prev_est_err = math.inf
    while True:
        for _ in range(chunk):
            if evaluations >= tol.max_evaluations:
                est, est_err = _accelerate(np.cumsum(terms))
                best = IntegralResult(est, est_err + math.fsum(term_errs), max(evaluations, 1))
                raise NonConvergenceError("oscillatory integral exhausted its evaluation budget", best)
            res = lobe(len(terms))
            terms.append(res.value)
            term_errs.append(res.abs_error_estimate)
            evaluations += res.evaluations

        partial_sums = np.cumsum(terms)
        est, est_err = _accelerate(partial_sums)
        total_err = est_err + math.fsum(term_errs)
        mags = np.abs(terms)
        window = min(8, len(terms) // 3)
        growing = window >= 4 and bool(np.all(np.diff(mags[-window:]) > 0.0))
        if total_err <= tol.target(est):
            # Iterated averaging Abel-sums even divergent alternating series
            # (e.g. linearly growing lobes collapse to a finite value), so a
            # converged-looking answer is certified only if it clears the
            # rounding floor of its own partial sums; growing lobes below
            # that floor mean the partial sums are not shrinking at all.
            rounding_floor = 4.0 * _EPS * float(np.max(np.abs(partial_sums)))
            if growing and rounding_floor > tol.target(est):
                raise DivergenceError(
                    "oscillatory integrand shows no decay: lobe magnitudes keep "
                    "growing and the cancellation sits below the rounding floor"
                )
            return IntegralResult(est, total_err, evaluations)

        # Magnitudes strictly growing across a long window while the
        # acceleration stops improving also means no limit is in sight.
        if len(terms) >= 64 and est_err >= prev_est_err and bool(np.all(np.diff(mags[-32:]) > 0.0)):
            raise DivergenceError(
                "oscillatory integrand shows no decay: lobe magnitudes keep growing"
            )
        prev_est_err = est_err
        chunk = min(2 * chunk, 64)


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: ToleranceSpec | None = None,
) -> float:
    """Find a root of ``f`` on a sign-changing bracket [lo, hi].

    Brent's method: inverse-quadratic/secant steps with a guaranteed
    bisection fallback, so the returned point always lies inside the initial
    bracket.  Terminates when the bracket width falls below
    ``2 * max(abs_tol, rel_tol * |x|)`` (plus a machine-precision term) or an
    exact zero is hit.

    Raises
    ------
    BracketingError
        If f(lo) and f(hi) do not have opposite signs.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise ValueError("require finite lo < hi")
    if tol is None:
        tol = ToleranceSpec()

    a, b = lo, hi
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketingError(f"no sign change on bracket: f({lo!r})={fa!r}, f({hi!r})={fb!r}")

    c, fc = a, fa
    d = e = b - a
    width = abs(b - a)
    for _ in range(tol.max_evaluations):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        xtol = 2.0 * _EPS * abs(b) + tol.target(b)
        m = 0.5 * (c - b)
        width = abs(m)
        if fb == 0.0 or abs(m) <= xtol:
            return b
        if abs(e) < xtol or abs(fa) <= abs(fb):
            d = e = m  # bisection
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s  # secant
                q = 1.0 - s
            else:
                q = fa / fc  # inverse quadratic
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            e_prev = e
            e = d
            if 2.0 * p < 3.0 * m * q - abs(xtol * q) and p < abs(0.5 * e_prev * q):
                d = p / q  # interpolation accepted
            else:
                d = e = m  # fall back to bisection
        a, fa = b, fb
        if abs(d) > xtol:
            b += d
        else:
            b += math.copysign(xtol, m)
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
    raise NonConvergenceError(
        "root finder exceeded its iteration budget",
        IntegralResult(b, width, tol.max_evaluations),
    )
