"""Diatomic potential models and their reduction to the parametric equation.

Five radial profiles are supported in either symmetry limit:

  * Poschl-Teller   V(r) = -A(A+a)/cosh^2(a r) + B(B-a)/sinh^2(a r)
  * Morse           V(r) = D [exp(-2b(r-r0)) - 2 exp(-b(r-r0))]
  * Mie             V(r) = V0 [ (a/r)^2 / 2 - a/r ]
  * pseudoharmonic  V(r) = V0 (r/r0 - r0/r)^2
  * Kratzer-Fues    V(r) = De ((r - re)/r)^2

In the spin limit the potential plays the role of Sigma = V + S with
Delta = V - S held at a constant C; the upper component g then obeys

    g'' - [Omega/r^2 + M_D * V(r)] g = -(E - m) * M_D * g,
    M_D = E + m - C,   Omega = (kappa+gamma)(kappa+gamma+1).

In the pseudospin limit (Sigma = C, Delta = V) the lower component f obeys
the mirror equation with M_S = E - m - C, energy bilinear (E + m)*M_S and
the lower-component strength (kappa+gamma)(kappa+gamma-1).

Two centrifugal treatments close the Poschl-Teller and Morse mappings for
arbitrary kappa:

  * exponential substitution  1/r^2 ~= 4a^2 e^(-2ar)/(1 - e^(-2ar))^2
    (= a^2/sinh^2(ar)), accurate for small a^2;
  * Pekeris expansion  1/(1+rho)^2 ~= D0 + D1 e^(-a rho) + D2 e^(-2a rho)
    about the Morse equilibrium radius (exact at rho = 0).

The Mie, pseudoharmonic and Kratzer-Fues mappings absorb the inverse-square
terms exactly, so their "approximate" and exact forms coincide.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal, Union

from .parametric import ParametricCoefficients
from .quantum_numbers import omega_pseudospin, omega_spin

Symmetry = Literal["spin", "pseudospin"]


# --- model definitions --- #


@dataclass(frozen=True)
class PoschlTeller:
    A: float
    B: float
    alpha: float

    kind = "poschl_teller"

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.A * (self.A + self.alpha) <= 0:
            raise ValueError("well shape requires A(A + alpha) > 0")
        if self.B * (self.B - self.alpha) < 0:
            raise ValueError("well shape requires B(B - alpha) >= 0")

    def value(self, r):
        ar = self.alpha * r
        import numpy as np
        return (-self.A * (self.A + self.alpha) / np.cosh(ar) ** 2
                + self.B * (self.B - self.alpha) / np.sinh(ar) ** 2)

    def length_scale(self) -> float:
        return 1.0 / self.alpha

    def depth_scale(self) -> float:
        return abs(self.A * (self.A + self.alpha))


@dataclass(frozen=True)
class Morse:
    D: float
    beta: float
    r0: float

    kind = "morse"

    def __post_init__(self):
        if self.D <= 0 or self.beta <= 0 or self.r0 <= 0:
            raise ValueError("Morse parameters must be positive")

    @property
    def a(self) -> float:
        """Dimensionless range parameter r0 * beta of the Pekeris expansion."""
        return self.r0 * self.beta

    def value(self, r):
        import numpy as np
        x = self.beta * (r - self.r0)
        return self.D * (np.exp(-2.0 * x) - 2.0 * np.exp(-x))

    def length_scale(self) -> float:
        return self.r0

    def depth_scale(self) -> float:
        return self.D


@dataclass(frozen=True)
class Mie:
    V0: float
    a: float

    kind = "mie"

    def __post_init__(self):
        if self.V0 <= 0 or self.a <= 0:
            raise ValueError("Mie parameters must be positive")

    def value(self, r):
        q = self.a / r
        return self.V0 * (0.5 * q * q - q)

    def length_scale(self) -> float:
        return self.a

    def depth_scale(self) -> float:
        return 0.5 * self.V0  # minimum -V0/2 at r = a


@dataclass(frozen=True)
class Pseudoharmonic:
    V0: float
    r0: float

    kind = "pseudoharmonic"

    def __post_init__(self):
        if self.V0 <= 0 or self.r0 <= 0:
            raise ValueError("pseudoharmonic parameters must be positive")

    def value(self, r):
        q = r / self.r0
        return self.V0 * (q - 1.0 / q) ** 2

    def length_scale(self) -> float:
        return self.r0

    def depth_scale(self) -> float:
        return self.V0


@dataclass(frozen=True)
class KratzerFues:
    De: float
    re: float

    kind = "kratzer_fues"

    def __post_init__(self):
        if self.De <= 0 or self.re <= 0:
            raise ValueError("Kratzer-Fues parameters must be positive")

    def value(self, r):
        return self.De * ((r - self.re) / r) ** 2

    def length_scale(self) -> float:
        return self.re

    def depth_scale(self) -> float:
        return self.De


PotentialModel = Union[PoschlTeller, Morse, Mie, Pseudoharmonic, KratzerFues]

MODEL_KINDS = {cls.kind: cls for cls in
               (PoschlTeller, Morse, Mie, Pseudoharmonic, KratzerFues)}


@dataclass(frozen=True)
class DiracContext:
    """Fermion mass, the constant value C of the non-dynamical combination
    (Delta for spin symmetry, Sigma for pseudospin), and the Coulomb-like
    tensor strength gamma (coupling U = -gamma/r)."""

    m: float
    C: float = 0.0
    gamma: float = 0.0
    symmetry: Symmetry = "spin"

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.m, self.C, self.gamma)):
            raise ValueError("context values must be finite")
        if self.symmetry not in ("spin", "pseudospin"):
            raise ValueError(f"unknown symmetry {self.symmetry!r}")

    def coupling(self, E: float) -> float:
        """Multiplier of the potential profile in the second-order equation:
        M_D = E + m - C (spin) or M_S = E - m - C (pseudospin)."""
        if self.symmetry == "spin":
            return E + self.m - self.C
        return E - self.m - self.C

    def energy_bilinear(self, E: float) -> float:
        """(E - m)*M_D (spin) or (E + m)*M_S (pseudospin): the constant on
        the right-hand side of the second-order equation."""
        if self.symmetry == "spin":
            return (E - self.m) * self.coupling(E)
        return (E + self.m) * self.coupling(E)

    def omega(self, kappa: int) -> float:
        """Tensor-shifted centrifugal strength of the solved component."""
        if self.symmetry == "spin":
            return omega_spin(kappa, self.gamma)
        return omega_pseudospin(kappa, self.gamma)


# --- reduction to parametric coefficients --- #


def pekeris_coefficients(alpha: float) -> tuple[float, float, float]:
    """Expansion coefficients of 1/(1+rho)^2 in exp(-alpha rho):

        D0 = 1 - 3/alpha + 3/alpha^2
        D1 = 4/alpha - 6/alpha^2
        D2 = -1/alpha + 3/alpha^2

    D0 + D1 + D2 = 1 exactly (the expansion is exact at rho = 0).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    inv = 1.0 / alpha
    inv2 = inv * inv
    return (1.0 - 3.0 * inv + 3.0 * inv2,
            4.0 * inv - 6.0 * inv2,
            -inv + 3.0 * inv2)


def parametric_form(model: PotentialModel, ctx: DiracContext, kappa: int,
                    E: float) -> ParametricCoefficients:
    """Map (model, symmetry, gamma, kappa, trial energy) to the parametric
    coefficients of the transformed radial equation.

    Working variables: s = sinh^2(a r) for Poschl-Teller,
    s = exp(-a (r-r0)/r0) for Morse, s = r (Mie, Kratzer-Fues) and s = r^2
    (pseudoharmonic), the latter three after peeling one power of r off the
    solved component.
    """
    mu = ctx.coupling(E)
    bil = ctx.energy_bilinear(E)
    omega = ctx.omega(kappa)

    if isinstance(model, PoschlTeller):
        denom = 4.0 * model.alpha ** 2
        h = bil / denom
        lam_a = mu * model.A * (model.A + model.alpha) / denom
        lam_b = mu * model.B * (model.B - model.alpha) / denom + 0.25 * omega
        return ParametricCoefficients(0.5, 1.0, 1.0,
                                      -h, h + lam_a - lam_b, lam_b)

    if isinstance(model, Morse):
        a = model.a
        d0, d1, d2 = pekeris_coefficients(a)
        if d2 < 0:
            warnings.warn(
                f"Pekeris D2 = {d2:.3g} < 0 at r0*beta = {a:.3g}: the "
                "centrifugal replacement may destabilise the outer envelope",
                RuntimeWarning, stacklevel=2)
        a2 = a * a
        dr2 = model.D * model.r0 ** 2
        lam1 = (omega * d2 + mu * dr2) / a2
        lam2 = (-omega * d1 + 2.0 * mu * dr2) / a2
        lam3 = (omega * d0 - bil * model.r0 ** 2) / a2
        return ParametricCoefficients(1.0, 0.0, 0.0, lam1, lam2, lam3)

    if isinstance(model, Mie):
        lam1 = -bil
        lam2 = model.a * model.V0 * mu
        lam3 = omega + 0.5 * model.a ** 2 * model.V0 * mu
        return ParametricCoefficients(2.0, 0.0, 0.0, lam1, lam2, lam3)

    if isinstance(model, Pseudoharmonic):
        ebil_lin = E - ctx.m if ctx.symmetry == "spin" else E + ctx.m
        lam1 = mu * model.V0 / (4.0 * model.r0 ** 2)
        lam2 = 0.25 * mu * (2.0 * model.V0 + ebil_lin)
        lam3 = 0.25 * (omega + mu * model.V0 * model.r0 ** 2)
        return ParametricCoefficients(1.5, 0.0, 0.0, lam1, lam2, lam3)

    if isinstance(model, KratzerFues):
        lam1 = mu * model.De - bil
        lam2 = 2.0 * model.re * mu * model.De
        lam3 = omega + model.re ** 2 * mu * model.De
        return ParametricCoefficients(2.0, 0.0, 0.0, lam1, lam2, lam3)

    raise TypeError(f"unsupported potential model {model!r}")


# --- raw radial forms for the numerical eigen-solver --- #


def centrifugal_term(model: PotentialModel, r, approx: bool):
    """1/r^2 replaced per-model when approx is set; exact otherwise."""
    import numpy as np
    if not approx:
        return 1.0 / np.asarray(r, dtype=float) ** 2
    if isinstance(model, PoschlTeller):
        return model.alpha ** 2 / np.sinh(model.alpha * np.asarray(r, float)) ** 2
    if isinstance(model, Morse):
        d0, d1, d2 = pekeris_coefficients(model.a)
        rho = (np.asarray(r, float) - model.r0) / model.r0
        e = np.exp(-model.a * rho)
        return (d0 + d1 * e + d2 * e * e) / model.r0 ** 2
    return 1.0 / np.asarray(r, dtype=float) ** 2


def effective_potential(model: PotentialModel, ctx: DiracContext, kappa: int,
                        E: float, r, approx: bool = True):
    """Coefficient multiplying the solved component in the second-order
    radial equation, written as (d^2/dr^2 + W_eff(r)) psi = -bilinear * psi:

        W_eff(r) = -Omega * (1/r^2 or its replacement) - coupling * V(r)

    Everything except the second derivative and the energy bilinear.
    """
    import numpy as np
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    omega = ctx.omega(kappa)
    mu = ctx.coupling(E)
    return -omega * centrifugal_term(model, r, approx) - mu * model.value(r)


def inverse_square_strength(model: PotentialModel, ctx: DiracContext,
                            kappa: int, E: float) -> float:
    """Coefficient c of the c/r^2 singularity of -W_eff at the origin.

    Fixes the regular small-r behaviour r^lam with lam = (1+sqrt(1+4c))/2;
    1 + 4c < 0 signals inverse-square collapse (no bound spectrum).
    """
    omega = ctx.omega(kappa)
    mu = ctx.coupling(E)
    if isinstance(model, PoschlTeller):
        return omega + mu * model.B * (model.B - model.alpha) / model.alpha ** 2
    if isinstance(model, Mie):
        return omega + 0.5 * mu * model.V0 * model.a ** 2
    if isinstance(model, Pseudoharmonic):
        return omega + mu * model.V0 * model.r0 ** 2
    if isinstance(model, KratzerFues):
        return omega + mu * model.De * model.re ** 2
    return float(omega)  # Morse profile is regular at r = 0
