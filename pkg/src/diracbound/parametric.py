"""Algebraic core: the six-coefficient parametric radial equation.

Every potential/symmetry pair handled by this package reduces, in a
suitable working variable s, to

    phi'' + (c1 + c2*s) / (s*(1 + c3*s)) * phi'
         + (-L1*s^2 + L2*s - L3) / (s^2*(1 + c3*s)^2) * phi = 0

with constants (c1, c2, c3) fixed by the mapping and (L1, L2, L3)
functions of the trial energy.  Bound solutions are power-times-polynomial:

  * c3 != 0 (Jacobi branch):
        phi = (1 + c3*s)^(-p0) * s^q0 * P_n^(alpha, beta)(1 + 2*c3*s)
  * c3 == 0 (Laguerre branch):
        phi = exp(-p10*s) * s^q10 * L_n^k((2*p10 - c2)*s)

This module evaluates exponents, polynomial indices and quantization
residuals at a caller-supplied trial energy.  It never iterates over E;
root finding lives in the spectrum module.

Branch signs: q0 (and q10) take the + root so that s^q0 is regular at the
inner boundary; p0 takes the + root, which reproduces the standard closed
forms of all mappings used here.  The degree-n termination condition is
quadratic in (q0 - p0), so it carries both asymptotic sign branches; only
q0 - p0 + n = -sqrt(L1)/c3 corresponds to a solution decaying at the outer
boundary.  `jacobi_bound_residual` resolves that sign; the plain
quantization residual keeps the quadratic form for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NoRealExponentError(ValueError):
    """A wavefunction exponent would be complex: the trial energy lies
    outside the window where bound-state asymptotics exist."""


@dataclass(frozen=True)
class ParametricCoefficients:
    c1: float
    c2: float
    c3: float
    lambda1: float
    lambda2: float
    lambda3: float

    def __post_init__(self):
        vals = (self.c1, self.c2, self.c3, self.lambda1, self.lambda2, self.lambda3)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite parametric coefficients: {vals}")


@dataclass(frozen=True)
class BranchSolution:
    branch: str                     # "jacobi" or "laguerre"
    q0: float
    p0: float
    alpha_idx: float | None = None  # Jacobi indices
    beta_idx: float | None = None
    k_idx: float | None = None      # Laguerre index


def _sqrt_or_raise(x: float, what: str) -> float:
    if x < 0.0:
        raise NoRealExponentError(f"negative discriminant in {what}: {x}")
    return math.sqrt(x)


def jacobi_exponents(coeffs: ParametricCoefficients) -> BranchSolution:
    """Exponents and Jacobi indices for the c3 != 0 branch.

    q0 = (1-c1)/2 + sqrt(((1-c1)/2)^2 + L3)
    p0 = D/2 + sqrt((D/2)^2 + H),  D = c2/c3 - c1 - 1,
                                   H = L1/c3^2 + L2/c3 + L3
    alpha = 2*q0 + c1 - 1,  beta = -2*p0 - c1 + c2/c3 - 1
    """
    if coeffs.c3 == 0.0:
        raise ValueError("jacobi branch requires c3 != 0")
    half = 0.5 * (1.0 - coeffs.c1)
    q0 = half + _sqrt_or_raise(half * half + coeffs.lambda3, "inner exponent q0")
    d_half = 0.5 * (coeffs.c2 / coeffs.c3 - coeffs.c1 - 1.0)
    h = (coeffs.lambda1 / coeffs.c3 ** 2 + coeffs.lambda2 / coeffs.c3
         + coeffs.lambda3)
    p0 = d_half + _sqrt_or_raise(d_half * d_half + h, "outer exponent p0")
    alpha = 2.0 * q0 + coeffs.c1 - 1.0
    beta = -2.0 * p0 - coeffs.c1 + coeffs.c2 / coeffs.c3 - 1.0
    return BranchSolution("jacobi", q0=q0, p0=p0, alpha_idx=alpha, beta_idx=beta)


def jacobi_quantization_residual(coeffs: ParametricCoefficients, n: int) -> float:
    """Degree-n termination condition for the Jacobi branch, as a residual:

        (q0-p0)^2 + (c2/c3 + 2n - 1)*(q0-p0) + n*(n + c2/c3 - 1) - L1/c3^2

    For c2/c3 = 1 this equals [(q0 - p0) + n]^2 - L1/c3^2 identically.
    Quadratic in (q0 - p0): vanishes on both asymptotic sign branches.
    """
    sol = jacobi_exponents(coeffs)
    w = sol.q0 - sol.p0
    ratio = coeffs.c2 / coeffs.c3
    return (w * w + (ratio + 2.0 * n - 1.0) * w + n * (n + ratio - 1.0)
            - coeffs.lambda1 / coeffs.c3 ** 2)


def jacobi_bound_residual(coeffs: ParametricCoefficients, n: int) -> float:
    """Sign-resolved termination condition selecting the decaying solution.

    The polynomial solution behaves like s^(q0 - p0 + n) at large s while
    the decaying asymptotic exponent is -sqrt(L1)/|c3| (valid for
    c2/c3 = 1, the only c3 != 0 mapping in scope), so bound states are the
    zeros of

        (q0 - p0 + n) + sqrt(L1)/|c3|.

    Raises NoRealExponentError when L1 < 0 (no decaying envelope: the
    energy bilinear has the wrong sign for binding).
    """
    if abs(coeffs.c2 / coeffs.c3 - 1.0) > 1e-12:
        raise ValueError("sign-resolved residual implemented for c2/c3 = 1 only")
    sol = jacobi_exponents(coeffs)
    sigma = _sqrt_or_raise(coeffs.lambda1, "outer decay rate") / abs(coeffs.c3)
    return (sol.q0 - sol.p0 + n) + sigma


def laguerre_exponents(coeffs: ParametricCoefficients) -> BranchSolution:
    """Exponents and Laguerre index for the c3 = 0 branch.

    q10 = (1-c1)/2 + sqrt(((1-c1)/2)^2 + L3)
    p10 = c2/2 + sqrt((c2/2)^2 + L1)
    k   = c1 + 2*q10 - 1
    """
    if coeffs.c3 != 0.0:
        raise ValueError("laguerre branch requires c3 = 0")
    half = 0.5 * (1.0 - coeffs.c1)
    q10 = half + _sqrt_or_raise(half * half + coeffs.lambda3, "inner exponent q10")
    c2h = 0.5 * coeffs.c2
    p10 = c2h + _sqrt_or_raise(c2h * c2h + coeffs.lambda1, "outer exponent p10")
    k = coeffs.c1 + 2.0 * q10 - 1.0
    return BranchSolution("laguerre", q0=q10, p0=p10, k_idx=k)


def laguerre_quantization_residual(coeffs: ParametricCoefficients, n: int) -> float:
    """Degree-n termination condition for the Laguerre branch, as a residual:

        c1*p10 - q10*(c2 - 2*p10) - L2 - n*(c2 - 2*p10)

    With c1=1, c2=0 this reduces to (2n + 1 + 2*sqrt(L3))*sqrt(L1) - L2;
    the c1=2 and c1=3/2 mappings give the analogous closed forms.  Linear
    in p10 = +sqrt(L1): already selects the decaying envelope.
    """
    sol = laguerre_exponents(coeffs)
    tail = coeffs.c2 - 2.0 * sol.p0
    return coeffs.c1 * sol.p0 - sol.q0 * tail - coeffs.lambda2 - n * tail
