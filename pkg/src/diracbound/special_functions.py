"""Polynomial evaluators and radial spinor assembly.

Jacobi and generalized Laguerre polynomials are evaluated by their
three-term recurrences (stable for the degrees used here, n <= 200).  Note
the bound-state Jacobi indices produced by the outer exponent are generally
below -1, where the polynomials are the analytic continuation of the
classical family; the recurrence evaluates them unchanged and their real
zeros migrate onto the physical half-line of the working variable.

`assemble_wavefunction` maps a verified eigenvalue to the solved radial
component sampled on a grid: s = sinh^2(a r) (Poschl-Teller),
s = exp(-a (r - r0)/r0) (Morse), s = r with one power of r peeled off
(Mie, Kratzer-Fues), s = r^2 likewise (pseudoharmonic).  The partner
component follows from the first-order coupling

    f = [g' + ((kappa + gamma)/r) g] / (E + m - C)      (spin limit)
    g = -[f' - ((kappa + gamma)/r) f] / (E - m - C)     (pseudospin limit)

with the derivative taken by a 4th-order centered stencil on the grid's
uniform internal coordinate (log-radius for the inverse-square-singular
models, plain radius for Morse), then both components are normalized
jointly, int (g^2 + f^2) dr = 1, by composite Simpson quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .parametric import jacobi_exponents, laguerre_exponents
from .potentials import (DiracContext, KratzerFues, Mie, Morse,
                         PotentialModel, PoschlTeller, Pseudoharmonic,
                         effective_potential, parametric_form)
from .quantum_numbers import QuantumState
from .spectrum import energy_residual

ROOT_ACCEPT_TOL = 1e-6  # |quantization residual| allowed for assembly


def jacobi_poly(n: int, alpha: float, beta: float, x) -> np.ndarray | float:
    """Jacobi polynomial P_n^(alpha, beta)(x) by three-term recurrence.

    P0 = 1,  P1 = (alpha + 1) + (alpha + beta + 2)(x - 1)/2.
    """
    if n < 0 or n > 200:
        raise ValueError("require 0 <= n <= 200")
    if alpha <= -1 or beta <= -1:
        # classical-range guard for the public evaluator; assembly calls
        # the continuation evaluator below
        raise ValueError("indices must exceed -1")
    return _jacobi_any(n, alpha, beta, x)


def _jacobi_any(n: int, alpha: float, beta: float, x):
    """Recurrence without the classical-index guard (analytic continuation)."""
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0)
    for k in range(2, n + 1):
        ab = alpha + beta
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        c2 = (2.0 * k + ab - 1.0) * (alpha ** 2 - beta ** 2)
        c3 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0)
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
        p, p_prev = ((c2 + c3 * x) * p - c4 * p_prev) / c1, p
    return p if p.ndim else float(p)


def laguerre_poly(n: int, k: float, x) -> np.ndarray | float:
    """Generalized Laguerre polynomial L_n^k(x) by three-term recurrence.

    L0 = 1,  L1 = 1 + k - x.
    """
    if n < 0 or n > 200:
        raise ValueError("require 0 <= n <= 200")
    if k <= -1:
        raise ValueError("index must exceed -1")
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if n == 0:
        return l_prev if l_prev.ndim else float(l_prev)
    l = 1.0 + k - x
    for j in range(1, n):
        l, l_prev = (((2.0 * j + 1.0 + k - x) * l - (j + k) * l_prev)
                     / (j + 1.0)), l
    return l if l.ndim else float(l)


@dataclass
class RadialSolution:
    """Sampled upper/lower radial components.

    `nodes` counts interior sign changes of the solved component (g in the
    spin limit, f in the pseudospin limit); `norm` is the joint
    int (g^2 + f^2) dr evaluated on the stored grid.
    """
    r_grid: np.ndarray
    g: np.ndarray
    f: np.ndarray
    norm: float
    nodes: int


# --- grids --- #


def default_grid(model: PotentialModel, ctx: DiracContext, kappa: int,
                 E: float, points: int = 4096) -> np.ndarray:
    """Radial grid resolving both the inner power law and the outer tail.

    Uniform in log-radius for the inverse-square-singular models, uniform
    in radius for Morse; the outer edge sits where the leading exponential
    envelope has fallen to ~1e-12 of its peak scale.
    """
    coeffs = parametric_form(model, ctx, kappa, E)
    scale = model.length_scale()
    tail_logs = 12.0 * math.log(10.0)

    if isinstance(model, PoschlTeller):
        rate = 2.0 * model.alpha * math.sqrt(max(coeffs.lambda1, 1e-12))
        r_max = tail_logs / rate + 5.0 * scale
    elif isinstance(model, Morse):
        sol = laguerre_exponents(coeffs)
        a = model.a
        out_rate = a * math.sqrt(max(coeffs.lambda3, 1e-12)) / model.r0
        r_max = model.r0 + tail_logs / out_rate
        # inner edge: double-exponential envelope exp(-p10 * s), s = e^(-a rho)
        s_cut = (tail_logs + 5.0) / max(sol.p0, 1e-12)
        rho_min = -math.log(max(s_cut, 2.0)) / a
        r_min = max(model.r0 * (1.0 + rho_min), 1e-6 * scale)
        return np.linspace(r_min, r_max, points)
    elif isinstance(model, Pseudoharmonic):
        rate = math.sqrt(max(coeffs.lambda1, 1e-12))
        r_max = math.sqrt(tail_logs / rate) + 3.0 * scale
    else:  # Mie, Kratzer-Fues: envelope exp(-sqrt(L1) r)
        rate = math.sqrt(max(coeffs.lambda1, 1e-12))
        r_max = tail_logs / rate + 5.0 * scale
    return np.geomspace(1e-6 * scale, r_max, points)


def _grid_is_log(model: PotentialModel) -> bool:
    return not isinstance(model, Morse)


# --- assembly --- #


def assemble_wavefunction(model: PotentialModel, ctx: DiracContext,
                          state: QuantumState, E: float,
                          r_grid: np.ndarray | None = None) -> RadialSolution:
    """Evaluate the solved radial component at a verified eigenvalue.

    Returns an unnormalized RadialSolution holding only the solved
    component (the partner slot is zero-filled); `partner_component`
    completes and normalizes the pair.
    """
    res = energy_residual(model, ctx, state, E)
    if res is None or abs(res) > ROOT_ACCEPT_TOL:
        raise ValueError(
            f"E={E!r} is not a verified level (residual {res!r}); run the "
            "spectrum solver first")
    if r_grid is None:
        r_grid = default_grid(model, ctx, state.kappa, E)
    r = np.asarray(r_grid, dtype=float)

    coeffs = parametric_form(model, ctx, state.kappa, E)
    n = state.n

    if isinstance(model, PoschlTeller):
        sol = jacobi_exponents(coeffs)
        s = np.sinh(model.alpha * r) ** 2
        # evaluate in log form to keep the huge (1+s)^(-p0) envelope finite
        log_env = sol.q0 * np.log(s) - sol.p0 * np.log1p(s)
        poly = _jacobi_any(n, sol.alpha_idx, sol.beta_idx, 1.0 + 2.0 * s)
        comp = np.exp(log_env - np.max(log_env)) * poly
    else:
        sol = laguerre_exponents(coeffs)
        if isinstance(model, Morse):
            s = np.exp(-model.a * (r - model.r0) / model.r0)
            peel = 0.0
        elif isinstance(model, Pseudoharmonic):
            s = r ** 2
            peel = 1.0  # solved component: r * G(s)
        else:  # Mie, Kratzer-Fues
            s = r
            peel = 1.0
        log_env = (sol.q0 * np.log(s) - sol.p0 * s
                   + peel * np.log(r))
        poly = laguerre_poly(n, sol.k_idx, 2.0 * sol.p0 * s)
        comp = np.exp(log_env - np.max(log_env)) * poly

    nodes = count_interior_nodes(comp)
    zero = np.zeros_like(comp)
    if ctx.symmetry == "spin":
        return RadialSolution(r_grid=r, g=comp, f=zero, norm=math.nan,
                              nodes=nodes)
    return RadialSolution(r_grid=r, g=zero, f=comp, norm=math.nan,
                          nodes=nodes)


def count_interior_nodes(values: np.ndarray, floor: float = 1e-9) -> int:
    """Sign changes of the sampled component, ignoring noise-floor samples."""
    v = np.asarray(values, dtype=float)
    cut = floor * np.max(np.abs(v))
    sig = v[np.abs(v) > cut]
    if sig.size < 2:
        return 0
    return int(np.sum(np.signbit(sig[1:]) != np.signbit(sig[:-1])))


# --- derivatives on the grid --- #


def _derivative_internal(y: np.ndarray, h: float) -> np.ndarray:
    """4th-order first derivative on a uniform internal coordinate,
    one-sided at the edges."""
    y = np.asarray(y, dtype=float)
    d = np.empty_like(y)
    d[2:-2] = (y[:-4] - 8.0 * y[1:-3] + 8.0 * y[3:-1] - y[4:]) / (12.0 * h)
    edge = np.array([-25.0, 48.0, -36.0, 16.0, -3.0])
    near = np.array([-3.0, -10.0, 18.0, -6.0, 1.0])
    d[0] = np.dot(edge, y[:5]) / (12.0 * h)
    d[1] = np.dot(near, y[:5]) / (12.0 * h)
    d[-1] = -np.dot(edge, y[-1:-6:-1]) / (12.0 * h)
    d[-2] = -np.dot(near, y[-1:-6:-1]) / (12.0 * h)
    return d


def grid_derivative(y: np.ndarray, r: np.ndarray, log_grid: bool) -> np.ndarray:
    """d y / d r on the stored grid (chain rule through log-radius when the
    grid is geometric)."""
    r = np.asarray(r, dtype=float)
    if log_grid:
        t = np.log(r)
        h = t[1] - t[0]
        return _derivative_internal(y, h) / r
    h = r[1] - r[0]
    return _derivative_internal(y, h)


def second_derivative(y: np.ndarray, r: np.ndarray, log_grid: bool) -> np.ndarray:
    """d^2 y / d r^2 via repeated 4th-order differentiation."""
    dy = grid_derivative(y, r, log_grid)
    return grid_derivative(dy, r, log_grid)


# --- partner component and normalization --- #


def partner_component(model: PotentialModel, ctx: DiracContext,
                      state: QuantumState, E: float,
                      solution: RadialSolution) -> RadialSolution:
    """Recover the partner spinor component via the first-order coupling and
    normalize the pair jointly.

    The coupling constant is M_D = E + m - C (spin) or M_S = E - m - C
    (pseudospin); a vanishing value makes the first-order relation
    undefined and is reported, not regularized.
    """
    r = solution.r_grid
    log_grid = _grid_is_log(model)
    shift = (state.kappa + ctx.gamma) / r

    if ctx.symmetry == "spin":
        m_d = E + ctx.m - ctx.C
        if m_d == 0.0:
            raise ZeroDivisionError("coupling singular: E + m - C = 0")
        g = solution.g
        f = (grid_derivative(g, r, log_grid) + shift * g) / m_d
    else:
        m_s = E - ctx.m - ctx.C
        if m_s == 0.0:
            raise ZeroDivisionError("coupling singular: E - m - C = 0")
        f = solution.f
        g = -(grid_derivative(f, r, log_grid) - shift * f) / m_s

    norm_sq = simpson(g * g + f * f, x=r)
    if norm_sq <= 0 or not math.isfinite(norm_sq):
        raise ValueError(f"degenerate joint norm {norm_sq!r}")
    scale = 1.0 / math.sqrt(norm_sq)
    g = g * scale
    f = f * scale
    achieved = float(simpson(g * g + f * f, x=r))
    return RadialSolution(r_grid=r, g=g, f=f, norm=achieved,
                          nodes=solution.nodes)


def ode_relative_residual(model: PotentialModel, ctx: DiracContext,
                          state: QuantumState, E: float,
                          solution: RadialSolution,
                          approx: bool = True,
                          edge_trim: int = 8) -> float:
    """Max interior residual of the second-order equation, relative to the
    local term scale, for the solved component."""
    r = solution.r_grid
    comp = solution.g if ctx.symmetry == "spin" else solution.f
    log_grid = _grid_is_log(model)
    d2 = second_derivative(comp, r, log_grid)
    w_eff = effective_potential(model, ctx, state.kappa, E, r, approx=approx)
    bil = ctx.energy_bilinear(E)
    res = d2 + w_eff * comp + bil * comp
    sl = slice(edge_trim, -edge_trim)
    scale = np.max(np.abs(d2[sl]) + np.abs(w_eff[sl] * comp[sl])
                   + np.abs(bil * comp[sl]))
    return float(np.max(np.abs(res[sl])) / scale)
