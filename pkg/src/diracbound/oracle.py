"""Independent eigen-solver: two-sided shooting on the radial equations.

No algebra from the parametric reduction enters the eigenvalue condition
here: the second-order radial equation psi'' = K(r, E) psi is integrated
outward from the inner boundary and inward from the outer boundary with a
classical fixed-step 4th-order Runge-Kutta scheme, and eigenvalues are the
zeros of the scale-normalized Wronskian mismatch of the two solutions at an
interior match point.

    K(r, E) = Omega * (1/r^2 or its per-model replacement)
              + coupling(E) * V(r) - energy_bilinear(E)

Modes: "approx" applies the same centrifugal replacement the closed forms
assume (exponential substitution for Poschl-Teller, Pekeris expansion for
Morse; identity for the Coulomb-like models, whose mappings are exact), so
approx-mode eigenvalues must coincide with the algebraic spectrum.
"exact" keeps the true 1/r^2 and quantifies the approximation error.

Coordinates: problems with an inverse-square inner singularity integrate on
a grid uniform in log-radius (r^2 K is finite at the origin there, and the
power-law inner boundary condition psi ~ r^lam is exact); the Pekeris-
approximated Morse problem is regular in r and integrates on a linear grid
extended below the origin, matching the half-line the closed form
implicitly quantizes on.  Inner boundary data come from the equation
itself: the indicial exponent lam = (1 + sqrt(1 + 4 r^2 K|_0))/2, or the
WKB growth rate sqrt(K) deep inside the inner forbidden region (Morse).
r^2 K|_0 < -1/4 means inverse-square collapse: no bound spectrum, the
energy is classified out of domain.

The solution pair is renormalized during the sweep to avoid overflow; the
mismatch is scale-invariant so renormalization never disturbs roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .potentials import (DiracContext, Morse, PotentialModel,
                         centrifugal_term)
from .quantum_numbers import QuantumState
from .spectrum import EnergyLevel, SearchWindow

_RENORM_EVERY = 32
_RENORM_LIMIT = 1e80
_TINY = 1e-300


@dataclass(frozen=True)
class ShootingConfig:
    """Integration domain and resolution for one shooting problem.

    r_min may be non-positive only for the extended-domain Morse problem in
    approx mode, where the Pekeris-replaced equation is regular on the whole
    real line.
    """
    r_min: float
    r_max: float
    steps: int = 4000
    match_point: float = 0.45
    integrator_order: int = 4

    def __post_init__(self):
        if not self.r_min < self.r_max:
            raise ValueError("require r_min < r_max")
        if self.steps < 2000:
            raise ValueError("require steps >= 2000")
        if not 0.0 < self.match_point < 1.0:
            raise ValueError("match_point is a fraction of r_max in (0, 1)")
        if self.integrator_order != 4:
            raise ValueError("integrator order is fixed at 4")


def auto_config(model: PotentialModel, ctx: DiracContext, mode: str = "approx",
                steps: int = 4000, tail_scale: float = 30.0) -> ShootingConfig:
    """Reasonable default domain for a model: inner edge at 1e-5 of the
    length scale (or the extended Morse inner edge), outer edge several
    envelope lengths out."""
    scale = model.length_scale()
    if isinstance(model, Morse) and mode == "approx":
        a = model.a
        r_lo = model.r0 * (1.0 - 2.5 / a * math.log(10.0))
        return ShootingConfig(r_lo, model.r0 + tail_scale * scale / a,
                              steps=steps)
    return ShootingConfig(1e-5 * scale, tail_scale * scale, steps=steps)


class _Problem:
    """Precomputed position scalars for one (model, ctx-symmetry, mode,
    config) combination; energy and centrifugal strength stay vectorial.

    K at half-step position j for batch element i:
        K[j, i] = cent[j] * omega[i] + pot[j] * mu[i] - bil[i]
    and the integration variable carries c = r^2 K (log grid) or c = K
    (linear grid).
    """

    def __init__(self, model: PotentialModel, cfg: ShootingConfig,
                 mode: str, schrodinger: bool = False):
        if mode not in ("approx", "exact"):
            raise ValueError(f"unknown mode {mode!r}")
        self.cfg = cfg
        self.log_grid = not (isinstance(model, Morse) and mode == "approx")
        n_half = 2 * cfg.steps + 1
        if self.log_grid:
            if cfg.r_min <= 0:
                raise ValueError("log-radius grid requires r_min > 0")
            t = np.linspace(math.log(cfg.r_min), math.log(cfg.r_max), n_half)
            self.h = 2.0 * (t[1] - t[0])          # full RK4 step
            r = np.exp(t)
            jac = r * r                            # c = r^2 K
            t_match = math.log(cfg.match_point * cfg.r_max)
            self.i_match = int(round((t_match - t[0]) / (t[1] - t[0]) / 2.0))
        else:
            r = np.linspace(cfg.r_min, cfg.r_max, n_half)
            self.h = 2.0 * (r[1] - r[0])
            jac = np.ones_like(r)
            r_match = cfg.match_point * cfg.r_max
            self.i_match = int(round((r_match - r[0]) / (r[1] - r[0]) / 2.0))
        self.i_match = min(max(self.i_match, 2), cfg.steps - 2)
        self.r = r
        approx = mode == "approx"
        self.cent = jac * centrifugal_term(model, r, approx)
        with np.errstate(over="ignore"):
            self.pot = jac * model.value(r)
        if not np.all(np.isfinite(self.pot)):
            raise FloatingPointError("non-finite potential on the grid")
        self.jac = jac
        self.r_max = cfg.r_max

    def c_at(self, j: int, omega, mu, bil):
        return self.cent[j] * omega + self.pot[j] * mu - self.jac[j] * bil


def _rk4_sweep(prob: _Problem, omega, mu, bil, j_start: int, j_stop: int,
               v, u, h: float):
    """March the (v, u) pair from half-position j_start to j_stop (both
    even), counting sign changes of v.  Steps advance two half-positions at
    a time; h carries the direction sign."""
    log_term = 1.0 if prob.log_grid else 0.0
    nodes = np.zeros_like(v, dtype=int)
    step = 2 if j_stop > j_start else -2
    count = 0
    j = j_start
    while j != j_stop:
        c0 = prob.c_at(j, omega, mu, bil)
        c1 = prob.c_at(j + step // 2, omega, mu, bil)
        c2 = prob.c_at(j + step, omega, mu, bil)
        k1v = u
        k1u = log_term * u + c0 * v
        v2 = v + 0.5 * h * k1v
        u2 = u + 0.5 * h * k1u
        k2v = u2
        k2u = log_term * u2 + c1 * v2
        v3 = v + 0.5 * h * k2v
        u3 = u + 0.5 * h * k2u
        k3v = u3
        k3u = log_term * u3 + c1 * v3
        v4 = v + h * k3v
        u4 = u + h * k3u
        k4v = u4
        k4u = log_term * u4 + c2 * v4
        v_new = v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        u_new = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        nodes += (v * v_new < 0.0).astype(int)
        v, u = v_new, u_new
        count += 1
        if count % _RENORM_EVERY == 0:
            mag = np.maximum(np.abs(v), np.abs(u))
            big = mag > _RENORM_LIMIT
            if np.any(big):
                scale = np.where(big, 1.0 / np.maximum(mag, _TINY), 1.0)
                v = v * scale
                u = u * scale
        j += step
    return v, u, nodes


def _mismatch_batch(prob: _Problem, omega, mu, bil):
    """Normalized Wronskian mismatch and interior node count for a batch.

    Returns (mismatch, nodes, valid); invalid entries (inverse-square
    collapse at the inner edge, or a non-decaying outer edge) carry NaN.
    """
    omega = np.asarray(omega, dtype=float)
    mu = np.asarray(mu, dtype=float)
    bil = np.asarray(bil, dtype=float)
    n_half = len(prob.r) - 1

    c_in = prob.c_at(0, omega, mu, bil)
    k_out_sq = prob.c_at(n_half, omega, mu, bil) / prob.jac[n_half]
    if prob.log_grid:
        valid = (1.0 + 4.0 * c_in >= 0.0) & (k_out_sq > 0.0)
        lam = 0.5 * (1.0 + np.sqrt(np.maximum(1.0 + 4.0 * c_in, 0.0)))
        u_in = lam
        u_out = -np.sqrt(np.maximum(k_out_sq, 0.0)) * prob.r_max
    else:
        k_in_sq = c_in / prob.jac[0]
        valid = (k_in_sq > 0.0) & (k_out_sq > 0.0)
        u_in = np.sqrt(np.maximum(k_in_sq, 0.0))
        u_out = -np.sqrt(np.maximum(k_out_sq, 0.0))

    ones = np.ones_like(omega)
    j_match = 2 * prob.i_match
    v_l, u_l, nodes_l = _rk4_sweep(prob, omega, mu, bil, 0, j_match,
                                   ones.copy(), u_in, prob.h)
    v_r, u_r, nodes_r = _rk4_sweep(prob, omega, mu, bil, n_half, j_match,
                                   ones.copy(), u_out, -prob.h)
    wron = u_l * v_r - u_r * v_l
    norm = (np.sqrt(v_l * v_l + u_l * u_l)
            * np.sqrt(v_r * v_r + u_r * u_r))
    mism = np.where(valid, wron / np.maximum(norm, _TINY), np.nan)
    return mism, nodes_l + nodes_r, valid


def _dirac_mu_fn(ctx: DiracContext):
    sign = 1.0 if ctx.symmetry == "spin" else -1.0
    return lambda E: np.asarray(E, float) + sign * ctx.m - ctx.C


def _dirac_bil_fn(ctx: DiracContext):
    sign = 1.0 if ctx.symmetry == "spin" else -1.0
    mu = _dirac_mu_fn(ctx)
    return lambda E: (np.asarray(E, float) - sign * ctx.m) * mu(E)


def _dirac_vectors(ctx: DiracContext, kappa: int, E):
    E = np.asarray(E, dtype=float)
    omega = np.full_like(E, float(ctx.omega(kappa)))
    return omega, _dirac_mu_fn(ctx)(E), _dirac_bil_fn(ctx)(E)


def shoot_mismatch(model: PotentialModel, ctx: DiracContext, kappa: int,
                   E: float, cfg: ShootingConfig | None = None,
                   mode: str = "approx") -> float:
    """Wronskian mismatch at a single trial energy (NaN when E is out of
    the bound-state domain)."""
    if cfg is None:
        cfg = auto_config(model, ctx, mode)
    prob = _Problem(model, cfg, mode)
    omega, mu, bil = _dirac_vectors(ctx, kappa, np.array([E]))
    mism, _, _ = _mismatch_batch(prob, omega, mu, bil)
    return float(mism[0])


def _refine_brackets(prob: _Problem, omega_vec, mu_of_e, bil_of_e,
                     lo, hi, f_lo, f_hi, tol: float, max_iter: int = 80):
    """Vectorized Illinois (damped false position) refinement of sign-change
    brackets of the mismatch.  omega_vec carries one centrifugal strength
    per bracket, so brackets from different (kappa, gamma) cells refine in
    one batch; mu_of_e and bil_of_e map an energy vector to the coupling
    and bilinear vectors."""
    lo = np.asarray(lo, float).copy()
    hi = np.asarray(hi, float).copy()
    f_lo = np.asarray(f_lo, float).copy()
    f_hi = np.asarray(f_hi, float).copy()
    omega_vec = np.asarray(omega_vec, float)
    side = np.zeros(lo.shape, dtype=int)

    def evaluate(E):
        mism, nodes, _ = _mismatch_batch(prob, omega_vec, mu_of_e(E),
                                         bil_of_e(E))
        return mism, nodes

    for _ in range(max_iter):
        if np.all(hi - lo < tol):
            break
        denom = f_hi - f_lo
        mid = np.where(np.abs(denom) > _TINY,
                       (lo * f_hi - hi * f_lo) / np.where(denom == 0, 1, denom),
                       0.5 * (lo + hi))
        # keep strictly inside and fall back to bisection when stagnant
        frac = (mid - lo) / (hi - lo)
        mid = np.where((frac > 1e-3) & (frac < 1 - 1e-3), mid,
                       0.5 * (lo + hi))
        f_mid, _ = evaluate(mid)
        f_mid = np.where(np.isnan(f_mid), 0.0, f_mid)
        goes_hi = f_mid * f_lo < 0.0
        hi = np.where(goes_hi, mid, hi)
        f_hi = np.where(goes_hi, f_mid, f_hi)
        f_lo = np.where(goes_hi, np.where(side == 1, 0.5 * f_lo, f_lo), f_lo)
        side = np.where(goes_hi, np.where(side == 1, side, 1), side)
        lo = np.where(~goes_hi, mid, lo)
        f_lo = np.where(~goes_hi, f_mid, f_lo)
        f_hi = np.where(~goes_hi, np.where(side == -1, 0.5 * f_hi, f_hi), f_hi)
        side = np.where(~goes_hi, -1, side)
    root = 0.5 * (lo + hi)
    f_root, nodes = evaluate(root)
    return root, nodes, f_root


def oracle_levels(model: PotentialModel, ctx: DiracContext, kappa: int,
                  window: SearchWindow, cfg: ShootingConfig | None = None,
                  mode: str = "approx", tol: float = 1e-12) -> list[EnergyLevel]:
    """Grid scan plus bracketed refinement of the shooting mismatch.

    Levels are tagged with method="oracle" and carry the interior node
    count as their radial quantum number.  Deterministic for fixed inputs.
    """
    if cfg is None:
        cfg = auto_config(model, ctx, mode)
    prob = _Problem(model, cfg, mode)
    grid = np.linspace(window.e_min, window.e_max, window.grid_points)
    omega, mu, bil = _dirac_vectors(ctx, kappa, grid)
    mism, _, valid = _mismatch_batch(prob, omega, mu, bil)

    lo, hi, f_lo, f_hi = [], [], [], []
    for i in range(len(grid) - 1):
        a, b = mism[i], mism[i + 1]
        if not (valid[i] and valid[i + 1]):
            continue
        if np.isnan(a) or np.isnan(b) or a * b >= 0.0:
            continue
        lo.append(grid[i])
        hi.append(grid[i + 1])
        f_lo.append(a)
        f_hi.append(b)
    if not lo:
        return []
    omega_vec = np.full(len(lo), float(ctx.omega(kappa)))
    roots, nodes, f_roots = _refine_brackets(prob, omega_vec,
                                             _dirac_mu_fn(ctx),
                                             _dirac_bil_fn(ctx),
                                             lo, hi, f_lo, f_hi, tol)
    levels = []
    for root, nd, fr, blo, bhi in zip(roots, nodes, f_roots, lo, hi):
        levels.append(EnergyLevel(state=QuantumState(n=int(nd), kappa=kappa),
                                  energy=float(root), residual=float(fr),
                                  bracket=(float(blo), float(bhi)),
                                  method="oracle"))
    levels.sort(key=lambda lv: lv.energy)
    return levels


def oracle_level_near(model: PotentialModel, ctx: DiracContext, kappa: int,
                      e_guess: float, cfg: ShootingConfig | None = None,
                      mode: str = "approx", rel_bracket: float = 1e-3,
                      tol: float = 1e-12) -> float | None:
    """Refine the oracle eigenvalue nearest a trusted guess.

    Scans a small symmetric bracket around the guess (widening a few times
    if needed) and refines the contained sign change; None when no
    eigenvalue lives nearby.
    """
    results = oracle_match_levels(model, ctx, [(kappa, ctx.gamma, e_guess)],
                                  cfg=cfg, mode=mode, rel_bracket=rel_bracket,
                                  tol=tol)
    return results[0]


def oracle_match_levels(model: PotentialModel, ctx: DiracContext, items,
                        cfg: ShootingConfig | None = None,
                        mode: str = "approx", rel_bracket: float = 1e-3,
                        tol: float = 1e-12) -> list[float | None]:
    """Batched counterpart of `oracle_level_near`.

    items is a sequence of (kappa, gamma, e_guess); all cells share the
    model, symmetry and mode, so their bracket scans and refinements run
    through the integrator together.  Returns one oracle energy (or None)
    per item, in order.
    """
    if cfg is None:
        cfg = auto_config(model, ctx, mode)
    prob = _Problem(model, cfg, mode)
    from dataclasses import replace as _replace

    n_items = len(items)
    results: list[float | None] = [None] * n_items
    pending = list(range(n_items))
    width_mult = 1.0

    for _ in range(4):
        if not pending:
            break
        mu_fn, bil_fn = _dirac_mu_fn(ctx), _dirac_bil_fn(ctx)
        grids, omegas, owners = [], [], []
        for idx in pending:
            kappa, gamma, e_guess = items[idx]
            ctx_g = _replace(ctx, gamma=gamma)
            scale = max(abs(e_guess), 1e-6 * ctx.m)
            width = rel_bracket * scale * width_mult
            grid = np.linspace(e_guess - width, e_guess + width, 9)
            grids.append(grid)
            omegas.append(np.full(9, float(ctx_g.omega(kappa))))
            owners.append(idx)
        all_e = np.concatenate(grids)
        mism, _, valid = _mismatch_batch(prob, np.concatenate(omegas),
                                         mu_fn(all_e), bil_fn(all_e))
        lo, hi, f_lo, f_hi, om, br_owner = [], [], [], [], [], []
        still_pending = []
        for slot, idx in enumerate(owners):
            base = 9 * slot
            grid = grids[slot]
            found = False
            for i in range(8):
                if not (valid[base + i] and valid[base + i + 1]):
                    continue
                a, b = mism[base + i], mism[base + i + 1]
                if np.isnan(a) or np.isnan(b) or a * b >= 0.0:
                    continue
                lo.append(grid[i])
                hi.append(grid[i + 1])
                f_lo.append(a)
                f_hi.append(b)
                om.append(omegas[slot][0])
                br_owner.append(idx)
                found = True
                break
            if not found:
                still_pending.append(idx)
        if lo:
            # gamma enters refinement only through omega; coupling and
            # bilinear are gamma-independent, so one batch serves all cells
            roots, _, _ = _refine_brackets(prob, om, mu_fn, bil_fn,
                                           lo, hi, f_lo, f_hi, tol)
            for idx, root in zip(br_owner, roots):
                results[idx] = float(root)
        pending = still_pending
        width_mult *= 4.0
    return results


# --- nonrelativistic solver sharing the same kernel --- #


def schrodinger_levels(model: PotentialModel, ell: int, mass: float,
                       window: SearchWindow,
                       cfg: ShootingConfig | None = None,
                       tol: float = 1e-12) -> list[float]:
    """Radial Schroedinger eigenvalues for the model's potential profile:

        u'' = [l(l+1)/r^2 + 2m V(r) - 2m eps] u

    The kernel is the Dirac one with strength l(l+1), coupling 2m and
    bilinear 2m*eps."""
    if ell < 0:
        raise ValueError("l must be non-negative")
    if mass <= 0:
        raise ValueError("mass must be positive")
    if cfg is None:
        scale = model.length_scale()
        cfg = ShootingConfig(1e-5 * scale, 40.0 * scale, steps=6000)
    prob = _Problem(model, cfg, mode="exact")
    grid = np.linspace(window.e_min, window.e_max, window.grid_points)
    omega = np.full(grid.shape, float(ell * (ell + 1)))
    mu_fn = lambda E: np.full(np.shape(E), 2.0 * mass)  # noqa: E731
    bil_fn = lambda E: 2.0 * mass * np.asarray(E, float)  # noqa: E731
    mism, _, valid = _mismatch_batch(prob, omega, mu_fn(grid), bil_fn(grid))

    lo, hi, f_lo, f_hi = [], [], [], []
    for i in range(len(grid) - 1):
        if not (valid[i] and valid[i + 1]):
            continue
        a, b = mism[i], mism[i + 1]
        if np.isnan(a) or np.isnan(b) or a * b >= 0.0:
            continue
        lo.append(grid[i])
        hi.append(grid[i + 1])
        f_lo.append(a)
        f_hi.append(b)
    if not lo:
        return []
    omega_vec = np.full(len(lo), float(ell * (ell + 1)))
    roots, _, _ = _refine_brackets(prob, omega_vec, mu_fn, bil_fn,
                                   lo, hi, f_lo, f_hi, tol)
    return sorted(float(r) for r in roots)
