"""Spin-orbit quantum-number algebra for the radial Dirac problem.

A single nonzero integer kappa encodes both the orbital angular momentum l
and the total angular momentum j of the upper spinor component:

    kappa = -(l + 1)   for j = l + 1/2   (aligned spin,   kappa < 0)
    kappa = +l         for j = l - 1/2   (unaligned spin, kappa > 0)

so that kappa*(kappa + 1) = l*(l + 1) identically.  The lower component
carries the pseudo-orbital label l~ fixed by kappa*(kappa - 1) = l~*(l~ + 1),
i.e. l~ = kappa - 1 for kappa > 0 and l~ = -kappa for kappa < 0 (the unique
non-negative root).

A Coulomb-like tensor coupling of strength gamma folds into the radial
equations purely through shifted centrifugal strengths:

    upper component:  kappa*(kappa+1) + 2*kappa*gamma + gamma*(gamma+1)
                      = (kappa+gamma)*(kappa+gamma+1)
    lower component:  kappa*(kappa-1) + 2*kappa*gamma + gamma*(gamma-1)
                      = (kappa+gamma)*(kappa+gamma-1)

gamma is accepted as a real number; integer values give exactly integer
strengths (plain integer arithmetic is preserved).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

#: spectroscopic letters indexed by orbital angular momentum l
SHELL_LETTERS = "spdfghiklmnoq"

_LABEL_RE = re.compile(r"^(\d+)([a-z])(\d+)/2$")


def kappa_from_lj(ell: int, j) -> int:
    """Spin-orbit quantum number for a (l, j) pair.

    Returns -(l+1) when j = l + 1/2 and +l when j = l - 1/2.
    """
    if ell < 0:
        raise ValueError(f"l must be non-negative, got {ell}")
    jf = Fraction(j).limit_denominator(2)
    if jf <= 0 or jf.denominator != 2:
        raise ValueError(f"j must be a positive half-integer, got {j}")
    if jf == Fraction(2 * ell + 1, 2):
        return -(ell + 1)
    if jf == Fraction(2 * ell - 1, 2):
        return ell
    raise ValueError(f"|j - l| must equal 1/2, got l={ell}, j={j}")


def lj_from_kappa(kappa: int) -> tuple[int, Fraction]:
    """Inverse map: (l, j) encoded by kappa."""
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if kappa < 0:
        ell = -kappa - 1
        j = Fraction(2 * ell + 1, 2)
    else:
        ell = kappa
        j = Fraction(2 * ell - 1, 2)
    return ell, j


def ell_tilde_from_kappa(kappa: int) -> int:
    """Pseudo-orbital quantum number: the non-negative root of
    kappa*(kappa - 1) = l~*(l~ + 1)."""
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    return kappa - 1 if kappa > 0 else -kappa


def omega_spin(kappa: int, gamma):
    """Upper-component centrifugal strength with a Coulomb-like tensor
    coupling of strength gamma: kappa*(kappa+1) + 2*kappa*gamma + gamma*(gamma+1).
    """
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    return kappa * (kappa + 1) + 2 * kappa * gamma + gamma * (gamma + 1)


def omega_pseudospin(kappa: int, gamma):
    """Lower-component centrifugal strength:
    kappa*(kappa-1) + 2*kappa*gamma + gamma*(gamma-1)."""
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    return kappa * (kappa - 1) + 2 * kappa * gamma + gamma * (gamma - 1)


@dataclass(frozen=True)
class QuantumState:
    """Radial quantum number n plus the spin-orbit label kappa.

    l, j and the pseudo-orbital l~ are derived; the invariants
    kappa*(kappa+1) = l*(l+1) and kappa*(kappa-1) = l~*(l~+1) hold by
    construction.
    """

    n: int
    kappa: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.kappa == 0:
            raise ValueError("kappa must be nonzero")

    @property
    def ell(self) -> int:
        return lj_from_kappa(self.kappa)[0]

    @property
    def j(self) -> Fraction:
        return lj_from_kappa(self.kappa)[1]

    @property
    def ell_tilde(self) -> int:
        return ell_tilde_from_kappa(self.kappa)

    def label(self) -> str:
        """Spectroscopic label such as '1p1/2'."""
        ell, j = lj_from_kappa(self.kappa)
        return f"{self.n}{SHELL_LETTERS[ell]}{j.numerator}/2"


def parse_shell_label(label: str) -> QuantumState:
    """Parse a spectroscopic label like '2d3/2' into a QuantumState.

    The letter fixes l, the trailing fraction fixes j, and kappa follows
    from the (l, j) map.
    """
    m = _LABEL_RE.match(label.strip().lower())
    if not m:
        raise ValueError(f"malformed shell label {label!r}, expected e.g. '2d3/2'")
    n = int(m.group(1))
    letter = m.group(2)
    if letter not in SHELL_LETTERS:
        raise ValueError(f"unknown shell letter {letter!r} in {label!r}")
    ell = SHELL_LETTERS.index(letter)
    j = Fraction(int(m.group(3)), 2)
    return QuantumState(n=n, kappa=kappa_from_lj(ell, j))
