"""Shared parameter sets for the test suite.

The Poschl-Teller set is the published benchmark (A=2.09, B=1.58, m=10,
alpha=0.3, C=10); the other four models have no published parameter sets,
so the suite fixes its own, chosen to support several bound states in both
symmetry limits.  Pseudospin contexts use C < -2m: the pseudospin coupling
M_S = E - m - C multiplies the potential profile, and binding requires
M_S > 0 together with (E + m) * M_S < 0, which is only possible below
E = -m, i.e. for C < -2m.
"""

import warnings

import pytest

from diracbound.potentials import (DiracContext, KratzerFues, Mie, Morse,
                                   PoschlTeller, Pseudoharmonic)
from diracbound.spectrum import DomainExcludedWarning

PT_MODEL = PoschlTeller(A=2.09, B=1.58, alpha=0.3)
PT_SPIN = DiracContext(m=10.0, C=10.0, gamma=0.0, symmetry="spin")
PT_PSEUDO = DiracContext(m=10.0, C=-30.0, gamma=0.0, symmetry="pseudospin")

MORSE_MODEL = Morse(D=4.0, beta=1.5, r0=1.4)
MIE_MODEL = Mie(V0=2.0, a=1.0)
PH_MODEL = Pseudoharmonic(V0=2.0, r0=1.5)
KRATZER_MODEL = KratzerFues(De=2.0, re=1.3)

SPIN_CTX = DiracContext(m=5.0, C=0.0, gamma=0.0, symmetry="spin")
PSEUDO_CTX = DiracContext(m=5.0, C=-12.5, gamma=0.0, symmetry="pseudospin")

ALL_MODELS = {
    "poschl_teller": PT_MODEL,
    "morse": MORSE_MODEL,
    "mie": MIE_MODEL,
    "pseudoharmonic": PH_MODEL,
    "kratzer_fues": KRATZER_MODEL,
}


def context_for(model, symmetry):
    if model is PT_MODEL:
        return PT_SPIN if symmetry == "spin" else PT_PSEUDO
    return SPIN_CTX if symmetry == "spin" else PSEUDO_CTX


@pytest.fixture(autouse=True)
def _quiet_domain_warnings():
    """Domain-excluded warnings are expected when scanning wide windows."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DomainExcludedWarning)
        warnings.simplefilter("ignore", RuntimeWarning)
        yield
