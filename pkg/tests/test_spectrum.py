"""Level enumeration, degeneracies, closed-form audits, nonrelativistic
limits."""

import math
import warnings
from dataclasses import replace

import pytest

from diracbound.quantum_numbers import QuantumState
from diracbound.spectrum import (DomainExcludedWarning, SearchWindow,
                                 corrected_formula_residual, default_window,
                                 doublet_splitting, energy_residual,
                                 find_levels, find_printed_form_roots,
                                 nonrelativistic_limit,
                                 printed_formula_residual)
from diracbound.potentials import DiracContext, Mie

from conftest import (ALL_MODELS, KRATZER_MODEL, MIE_MODEL, MORSE_MODEL,
                      PH_MODEL, PT_MODEL, PT_PSEUDO, PT_SPIN, SPIN_CTX,
                      context_for)


class TestFindLevels:
    def test_pt_benchmark_singlet(self):
        levels = find_levels(PT_MODEL, PT_SPIN, 0, -1, tol=1e-12)
        assert len(levels) == 1
        lv = levels[0]
        assert lv.bracket[0] < lv.energy < lv.bracket[1]
        assert abs(lv.residual) < 1e-10
        assert lv.energy == pytest.approx(9.4885372224, abs=1e-8)

    def test_deterministic(self):
        a = find_levels(PT_MODEL, PT_SPIN, 1, 1)
        b = find_levels(PT_MODEL, PT_SPIN, 1, 1)
        assert a == b

    def test_root_self_consistency(self):
        """Every returned level, fed back into the residual, is a zero."""
        tol = 1e-10
        for model_name, model in ALL_MODELS.items():
            ctx = context_for(model, "spin")
            for n, kappa in [(0, -1), (1, 1), (2, -2)]:
                for lv in find_levels(model, ctx, n, kappa, tol=tol):
                    res = energy_residual(model, ctx, lv.state, lv.energy)
                    assert res is not None and abs(res) < 10 * tol, model_name

    def test_empty_when_no_root(self):
        """A narrow window away from any eigenvalue yields an empty list."""
        levels = find_levels(PT_MODEL, PT_SPIN, 0, -1,
                             window=SearchWindow(1.0, 2.0, 64))
        assert levels == []

    def test_domain_exclusion_diagnostic(self):
        """The pseudospin benchmark well with |C| = m collapses at the
        inner boundary for every trial energy: empty result plus a
        diagnostic, and no root is conjured across domain gaps."""
        ctx = DiracContext(m=10.0, C=-10.0, gamma=0.0, symmetry="pseudospin")
        with pytest.warns(DomainExcludedWarning):
            levels = find_levels(PT_MODEL, ctx, 0, -1,
                                 window=SearchWindow(-9.99, -0.01, 128))
        assert levels == []

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            find_levels(PT_MODEL, PT_SPIN, 0, -1, tol=0.0)

    def test_window_validation(self):
        with pytest.raises(ValueError):
            SearchWindow(2.0, 1.0)
        with pytest.raises(ValueError):
            SearchWindow(0.0, 1.0, grid_points=8)


class TestSpectrumStructure:
    @pytest.mark.parametrize("model_name", list(ALL_MODELS))
    def test_degeneracy_without_tensor(self, model_name):
        """Spin doublets are exactly degenerate at gamma = 0: the strength
        depends on kappa only through l(l+1)."""
        model = ALL_MODELS[model_name]
        ctx = context_for(model, "spin")
        for ell in (1, 2):
            split = doublet_splitting(model, ctx, 0, ell, 0.0)
            assert abs(split) < 1e-10

    def test_tensor_breaks_degeneracy(self):
        split = doublet_splitting(PT_MODEL, PT_SPIN, 1, 1, 2.0)
        assert abs(split) > 1e-3

    def test_partner_not_found(self):
        with pytest.raises(LookupError, match="partner not found"):
            doublet_splitting(PT_MODEL, PT_SPIN, 0, 1, 0.0,
                              window=SearchWindow(1.0, 2.0, 64))

    def test_monotone_level_ordering(self):
        """E(0s) < E(1s) < E(1p) in the benchmark spectrum."""
        e_0s = find_levels(PT_MODEL, PT_SPIN, 0, -1)[0].energy
        e_1s = find_levels(PT_MODEL, PT_SPIN, 1, -1)[0].energy
        e_1p = find_levels(PT_MODEL, PT_SPIN, 1, 1)[0].energy
        assert e_0s < e_1s < e_1p

    @pytest.mark.parametrize("gamma,kappa", [(1.0, 1), (2.0, 1), (3.0, -2)])
    def test_gamma_shift_equivalence(self, gamma, kappa):
        """Integer gamma maps a (kappa, gamma) cell onto the (kappa+gamma, 0)
        cell with identical energies (spin limit)."""
        shifted = kappa + int(gamma)
        if shifted == 0:
            return
        a = find_levels(PT_MODEL, replace(PT_SPIN, gamma=gamma), 1, kappa)
        b = find_levels(PT_MODEL, PT_SPIN, 1, shifted)
        assert len(a) == len(b) > 0
        for la, lb in zip(a, b):
            assert la.energy == pytest.approx(lb.energy, abs=1e-10)

    def test_spin_spectrum_positive(self):
        for n in (0, 1, 2):
            for kappa in (-2, -1, 1, 2):
                for lv in find_levels(PT_MODEL, PT_SPIN, n, kappa):
                    assert lv.energy > 0

    def test_pseudospin_spectrum_negative(self):
        for n in (0, 1, 2):
            for kappa in (-2, -1, 1, 2):
                levels = find_levels(PT_MODEL, PT_PSEUDO, n, kappa)
                assert levels, "pseudospin well should bind"
                for lv in levels:
                    assert lv.energy < 0

    def test_pseudospin_benchmark_c_has_no_levels(self):
        """With |C| = m = 10 the pseudospin coupling M_S makes the
        inverse-square core attractive beyond collapse for any E that
        allows a decaying tail: the spectrum is empty, in either sign
        convention for C."""
        for c in (10.0, -10.0):
            ctx = DiracContext(m=10.0, C=c, gamma=0.0, symmetry="pseudospin")
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                for n in (0, 1):
                    assert find_levels(PT_MODEL, ctx, n, -1) == []


class TestClosedFormAudit:
    def test_reliable_forms_vanish_at_levels(self):
        """The hyperbolic-well and inverse-square assembled forms are
        consistent with the branch conditions: residual ~ 0 at every found
        level."""
        for model, ctx in [(PT_MODEL, PT_SPIN), (MIE_MODEL, SPIN_CTX)]:
            lv = find_levels(model, ctx, 1, 1, tol=1e-12)[0]
            audit = printed_formula_residual(model, ctx, lv.state, lv.energy)
            assert audit.reliable
            assert abs(audit.value) < 1e-9

    @pytest.mark.parametrize("model,kappa,gamma", [
        (MORSE_MODEL, 1, 2.0), (PH_MODEL, -1, 0.0), (KRATZER_MODEL, -1, 0.0)])
    def test_flawed_forms_fail_while_rederived_hold(self, model, kappa, gamma):
        ctx = replace(SPIN_CTX, gamma=gamma)
        lv = find_levels(model, ctx, 1, kappa, tol=1e-12)[0]
        audit = printed_formula_residual(model, ctx, lv.state, lv.energy)
        corrected = corrected_formula_residual(model, ctx, lv.state, lv.energy)
        assert not audit.reliable
        assert abs(audit.value) > 1e-2
        assert abs(corrected) < 1e-9

    def test_printed_root_set_contains_growing_branch(self):
        """The assembled quadratic form has roots below the physical
        spectrum (terminating but outer-growing solutions); the benchmark
        0s cell shows both."""
        st = QuantumState(n=0, kappa=-1)
        roots = find_printed_form_roots(PT_MODEL, PT_SPIN, st,
                                        window=SearchWindow(1e-6, 9.99, 4096))
        physical = find_levels(PT_MODEL, PT_SPIN, 0, -1)[0].energy
        assert len(roots) == 2
        assert roots[0] == pytest.approx(0.00648, abs=2e-4)
        assert roots[1] == pytest.approx(physical, abs=1e-8)

    def test_no_printed_pseudospin_form_for_coulomb_like(self):
        ctx = replace(SPIN_CTX, symmetry="pseudospin")
        with pytest.raises(ValueError):
            printed_formula_residual(MIE_MODEL, ctx, QuantumState(0, -1), -5.3)


class TestNonrelativisticLimit:
    def test_pseudoharmonic_matches_shifted_oscillator(self):
        """l = 0: the exact spectrum of the oscillator-plus-inverse-square
        problem, eps = -2 V0 + w (2n + l' + 3/2) with
        w = sqrt(2 V0 / m) / r0 and l'(l'+1) = l(l+1) + 2 m V0 r0^2."""
        mass, v0, r0 = 5.0, 2.0, 1.5
        w = math.sqrt(2.0 * v0 / mass) / r0
        lp = 0.5 * (-1.0 + math.sqrt(1.0 + 8.0 * mass * v0 * r0 ** 2))
        for n in (0, 1, 2, 3):
            expected = -2.0 * v0 + w * (2 * n + lp + 1.5)
            got = nonrelativistic_limit(PH_MODEL, n, 0, mass)
            assert got == pytest.approx(expected, rel=1e-12)

    def test_mie_matches_hydrogen_like(self):
        """The inverse-square-plus-Coulomb well has the hydrogen-like
        spectrum eps = -m Z^2 / (2 nu^2) with Z = a V0 and nu shifted by
        the combined inverse-square strength."""
        mass, v0, a = 5.0, 2.0, 1.0
        for n in (0, 1, 2):
            for ell in (0, 1, 2):
                lp = 0.5 * (-1.0 + math.sqrt(
                    1.0 + 4.0 * (ell * (ell + 1) + mass * v0 * a * a)))
                nu = n + lp + 1.0
                expected = -mass * (a * v0) ** 2 / (2.0 * nu * nu)
                got = nonrelativistic_limit(MIE_MODEL, n, ell, mass)
                assert got == pytest.approx(expected, rel=1e-12)

    def test_kratzer_saturates_from_below(self):
        """Levels approach the dissociation plateau from below as n grows."""
        eps = [nonrelativistic_limit(KRATZER_MODEL, n, 0, 5.0)
               for n in range(12)]
        assert all(e < KRATZER_MODEL.De for e in eps)
        assert eps == sorted(eps)
        assert KRATZER_MODEL.De - eps[-1] < KRATZER_MODEL.De - eps[0]

    def test_relativistic_levels_approach_limit_in_shallow_well(self):
        """Weak well, heavy fermion: E - m approaches the nonrelativistic
        eigenvalue."""
        model = Mie(V0=0.02, a=1.0)
        mass = 50.0
        ctx = DiracContext(m=mass, C=0.0, gamma=0.0, symmetry="spin")
        eps = nonrelativistic_limit(model, 0, 0, mass)
        lv = find_levels(model, ctx, 0, -1,
                         window=SearchWindow(mass + 2 * eps, mass - 1e-9,
                                             4096), tol=1e-12)
        assert lv, "shallow well still binds"
        assert lv[0].energy - mass == pytest.approx(eps, rel=5e-4)
