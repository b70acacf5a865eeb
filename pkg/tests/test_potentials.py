"""Model definitions, Pekeris coefficients, and the parametric reduction."""

import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from diracbound.potentials import (DiracContext, KratzerFues, Mie, Morse,
                                   PoschlTeller, Pseudoharmonic,
                                   effective_potential, inverse_square_strength,
                                   parametric_form, pekeris_coefficients)
from diracbound.quantum_numbers import omega_pseudospin, omega_spin

from conftest import (KRATZER_MODEL, MIE_MODEL, MORSE_MODEL, PH_MODEL,
                      PT_MODEL, PT_SPIN, SPIN_CTX)


class TestModelValidation:
    def test_positive_scales(self):
        with pytest.raises(ValueError):
            Morse(D=-1, beta=1, r0=1)
        with pytest.raises(ValueError):
            Mie(V0=1, a=0)
        with pytest.raises(ValueError):
            Pseudoharmonic(V0=0, r0=1)
        with pytest.raises(ValueError):
            KratzerFues(De=1, re=-2)

    def test_pt_well_shape(self):
        with pytest.raises(ValueError):
            PoschlTeller(A=0.0, B=1.58, alpha=0.3)
        with pytest.raises(ValueError):
            PoschlTeller(A=2.09, B=0.1, alpha=0.3)  # B(B - alpha) < 0

    def test_context_validation(self):
        with pytest.raises(ValueError):
            DiracContext(m=1.0, symmetry="nope")


class TestPekeris:
    def test_alpha_one(self):
        assert pekeris_coefficients(1.0) == pytest.approx((1.0, -2.0, 2.0))

    def test_alpha_three(self):
        d0, d1, d2 = pekeris_coefficients(3.0)
        assert d0 == pytest.approx(1.0 / 3.0)
        assert d1 == pytest.approx(2.0 / 3.0)
        assert d2 == pytest.approx(0.0, abs=1e-15)

    @given(st.floats(min_value=0.05, max_value=50.0))
    def test_exact_at_equilibrium(self, alpha):
        assert sum(pekeris_coefficients(alpha)) == pytest.approx(1.0, rel=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            pekeris_coefficients(0.0)


class TestParametricForm:
    def test_pt_inner_strength_no_centrifugal(self):
        """kappa=-1, gamma=0: the inner strength is the pure well-core term
        mu * B(B - alpha)/(4 alpha^2)."""
        E = 0.0075
        coeffs = parametric_form(PT_MODEL, PT_SPIN, -1, E)
        mu = E + PT_SPIN.m - PT_SPIN.C
        expected = mu * PT_MODEL.B * (PT_MODEL.B - PT_MODEL.alpha) \
            / (4 * PT_MODEL.alpha ** 2)
        assert coeffs.lambda3 == pytest.approx(expected, rel=1e-14)
        assert (coeffs.c1, coeffs.c2, coeffs.c3) == (0.5, 1.0, 1.0)

    @pytest.mark.parametrize("model", [PT_MODEL, MORSE_MODEL, MIE_MODEL,
                                       PH_MODEL, KRATZER_MODEL])
    def test_centrifugal_vanishes_at_kappa_m1(self, model):
        """gamma=0, kappa=-1 (l=0): the centrifugal contribution to the
        inner strength is absent, so lambda3 must equal its l-independent
        part (computed by zeroing the strength by hand)."""
        ctx = SPIN_CTX if model is not PT_MODEL else PT_SPIN
        E = 0.1 if model is PT_MODEL else 1.0
        coeffs = parametric_form(model, ctx, -1, E)
        assert omega_spin(-1, 0.0) == 0

        # kappa=-1 and kappa'=1 share l(l+1)=0 vs 2: their lambda3 differ
        coeffs_p = parametric_form(model, ctx, 1, E)
        scale = {PT_MODEL: 0.25 / 1.0, MORSE_MODEL: None}.get(model)
        assert coeffs_p.lambda3 != coeffs.lambda3
        if model is PT_MODEL:
            assert coeffs_p.lambda3 - coeffs.lambda3 == pytest.approx(
                2 * 0.25, rel=1e-12)

    def test_morse_unit_range_lambda1(self):
        """With r0*beta = 1 the Pekeris D2 = 2, so
        lambda1 = 2*Omega + D*r0^2*mu."""
        model = Morse(D=3.0, beta=2.0, r0=0.5)
        assert model.a == pytest.approx(1.0)
        ctx = DiracContext(m=5.0, C=0.0, gamma=0.0, symmetry="spin")
        E, kappa = 1.0, 1
        coeffs = parametric_form(model, ctx, kappa, E)
        mu = E + ctx.m
        omega = omega_spin(kappa, 0.0)
        assert coeffs.lambda1 == pytest.approx(
            omega * 2.0 + model.D * model.r0 ** 2 * mu, rel=1e-13)

    @pytest.mark.parametrize("model", [PT_MODEL, MORSE_MODEL, MIE_MODEL,
                                       PH_MODEL, KRATZER_MODEL])
    @pytest.mark.parametrize("gamma", [-3, -1, 1, 2, 5, 20])
    def test_tensor_enters_only_through_strength(self, model, gamma):
        """Integer gamma: coefficients at (kappa, gamma) equal those at
        (kappa', 0) whenever (kappa+gamma)(kappa+gamma+1) = kappa'(kappa'+1),
        i.e. kappa' = kappa + gamma (spin limit)."""
        ctx = PT_SPIN if model is PT_MODEL else SPIN_CTX
        E = 0.2 if model is PT_MODEL else 1.3
        kappa = 1
        kappa_shifted = kappa + gamma
        if kappa_shifted == 0:
            return
        a = parametric_form(model, replace(ctx, gamma=float(gamma)), kappa, E)
        b = parametric_form(model, ctx, kappa_shifted, E)
        for f in ("lambda1", "lambda2", "lambda3"):
            assert getattr(a, f) == pytest.approx(getattr(b, f), rel=1e-14,
                                                  abs=1e-14)

    @pytest.mark.parametrize("model,ctx_e", [
        (PT_MODEL, 0.3), (MORSE_MODEL, 1.0)])
    def test_spin_pseudospin_duality(self, model, ctx_e):
        """Pseudospin coefficients are the spin ones under m -> -m with the
        centrifugal strength swapped kappa(kappa+1) -> kappa(kappa-1),
        gamma(gamma+1) -> gamma(gamma-1)."""
        kappa, gamma, E, m, C = 2, 1.5, ctx_e, 5.0, 1.0
        pseudo = parametric_form(
            model, DiracContext(m=m, C=C, gamma=gamma, symmetry="pseudospin"),
            kappa, E)
        mirrored = parametric_form(
            model, DiracContext(m=-m, C=C, gamma=gamma, symmetry="spin"),
            kappa, E)
        # after the m flip only the strength differs; shift it by hand
        d_omega = omega_pseudospin(kappa, gamma) - omega_spin(kappa, gamma)
        if model is PT_MODEL:
            scale = 0.25
        else:
            d0, d1, d2 = pekeris_coefficients(model.a)
            scale = None  # handled per-field below
        if model is PT_MODEL:
            assert pseudo.lambda1 == pytest.approx(mirrored.lambda1, rel=1e-14)
            assert pseudo.lambda3 - mirrored.lambda3 == pytest.approx(
                scale * d_omega, rel=1e-12)
            assert (pseudo.lambda2 - mirrored.lambda2) == pytest.approx(
                -scale * d_omega, rel=1e-12)
        else:
            a2 = model.a ** 2
            assert pseudo.lambda1 - mirrored.lambda1 == pytest.approx(
                d_omega * d2 / a2, rel=1e-12)
            assert pseudo.lambda2 - mirrored.lambda2 == pytest.approx(
                -d_omega * d1 / a2, rel=1e-12)
            assert pseudo.lambda3 - mirrored.lambda3 == pytest.approx(
                d_omega * d0 / a2, rel=1e-12)

    def test_pt_scale_covariance(self):
        """Dimensional sanity, in the form that actually holds: the energy
        bilinear coefficient is a ratio of squared energy scales (invariant
        under doubling E, m, C, alpha), and the well couplings enter the
        coefficients only through the strengths A(A+alpha) and B(B-alpha)
        divided by 4 alpha^2.  (A naive doubling of every input is not a
        symmetry: the strengths carry two powers of the energy scale while
        the coupling carries one.)"""
        E = 0.17
        base = parametric_form(PT_MODEL, PT_SPIN, 2, E)
        doubled_model = PoschlTeller(A=2 * PT_MODEL.A, B=2 * PT_MODEL.B,
                                     alpha=2 * PT_MODEL.alpha)
        doubled_ctx = DiracContext(m=2 * PT_SPIN.m, C=2 * PT_SPIN.C,
                                   gamma=PT_SPIN.gamma, symmetry="spin")
        doubled = parametric_form(doubled_model, doubled_ctx, 2, 2 * E)
        # lambda1 = -(E - m)(E + m - C)/(4 alpha^2): pure ratio, invariant
        assert doubled.lambda1 == pytest.approx(base.lambda1, rel=1e-12)

        # strengths-only dependence: the conjugate roots A' = -A - alpha,
        # B' = alpha - B give the same strengths A(A+alpha), B(B-alpha)
        # from different parameter values, hence identical coefficients
        al = PT_MODEL.alpha
        alt_model = PoschlTeller(A=-PT_MODEL.A - al, B=al - PT_MODEL.B,
                                 alpha=al)
        assert alt_model.A != PT_MODEL.A and alt_model.B != PT_MODEL.B
        alt = parametric_form(alt_model, PT_SPIN, 2, E)
        for f in ("lambda1", "lambda2", "lambda3"):
            assert getattr(base, f) == pytest.approx(getattr(alt, f),
                                                     rel=1e-12)


class TestEffectivePotential:
    def test_pt_reduces_to_weighted_well(self):
        """kappa=-1, gamma=0: no centrifugal term in either mode, so the
        coefficient is -(E + m - C) * V(r)."""
        E = 0.0075
        r = np.array([0.5, 1.0, 2.0, 5.0])
        mu = E + PT_SPIN.m - PT_SPIN.C
        for approx in (True, False):
            got = effective_potential(PT_MODEL, PT_SPIN, -1, E, r, approx)
            assert got == pytest.approx(-mu * PT_MODEL.value(r), rel=1e-13)

    def test_exponential_substitution_accuracy(self):
        """At alpha*r = 0.1 the 1/r^2 replacement is better than 1 percent."""
        alpha = PT_MODEL.alpha
        r = 0.1 / alpha
        exact = 1.0 / r ** 2
        approx = 4 * alpha ** 2 * math.exp(-2 * alpha * r) \
            / (1 - math.exp(-2 * alpha * r)) ** 2
        assert abs(exact - approx) / exact < 0.01

    def test_morse_modes_agree_at_equilibrium(self):
        """Pekeris is exact at r = r0 (the coefficients sum to 1)."""
        E, kappa = 1.0, 2
        r0 = MORSE_MODEL.r0
        a = effective_potential(MORSE_MODEL, SPIN_CTX, kappa, E, r0, True)
        b = effective_potential(MORSE_MODEL, SPIN_CTX, kappa, E, r0, False)
        assert a == pytest.approx(b, rel=1e-12)

    @pytest.mark.parametrize("model", [MIE_MODEL, PH_MODEL, KRATZER_MODEL])
    def test_coulomb_like_modes_coincide(self, model):
        r = np.linspace(0.3, 6.0, 40)
        a = effective_potential(model, SPIN_CTX, 2, 1.0, r, True)
        b = effective_potential(model, SPIN_CTX, 2, 1.0, r, False)
        assert a == pytest.approx(b)

    def test_rejects_nonpositive_radius(self):
        with pytest.raises(ValueError):
            effective_potential(PT_MODEL, PT_SPIN, -1, 0.1, 0.0, True)

    def test_inverse_square_strength_matches_limit(self):
        """The analytic origin strength must equal r^2 W(r) extrapolated."""
        for model, ctx in [(PT_MODEL, PT_SPIN), (MIE_MODEL, SPIN_CTX),
                           (PH_MODEL, SPIN_CTX), (KRATZER_MODEL, SPIN_CTX)]:
            E = 0.1 if model is PT_MODEL else 1.0
            c = inverse_square_strength(model, ctx, 2, E)
            r = 1e-7 * model.length_scale()
            w = -effective_potential(model, ctx, 2, E, r, True)
            assert c == pytest.approx(float(r ** 2 * w), rel=1e-4)
