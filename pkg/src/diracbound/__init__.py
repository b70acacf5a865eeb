"""Bound states of the radial Dirac equation with spin or pseudospin
symmetry for diatomic molecular potentials plus a Coulomb-like tensor
coupling, solved algebraically and cross-checked by an independent
shooting-method eigen-solver."""

from .parametric import (BranchSolution, NoRealExponentError,
                         ParametricCoefficients, jacobi_bound_residual,
                         jacobi_exponents, jacobi_quantization_residual,
                         laguerre_exponents, laguerre_quantization_residual)
from .potentials import (DiracContext, KratzerFues, Mie, Morse,
                         PoschlTeller, Pseudoharmonic, effective_potential,
                         parametric_form, pekeris_coefficients)
from .quantum_numbers import (QuantumState, ell_tilde_from_kappa,
                              kappa_from_lj, lj_from_kappa, omega_pseudospin,
                              omega_spin, parse_shell_label)
from .spectrum import (EnergyLevel, SearchWindow, corrected_formula_residual,
                       default_window, doublet_splitting, energy_residual,
                       find_levels, find_printed_form_roots,
                       nonrelativistic_limit, printed_formula_residual)
from .special_functions import (RadialSolution, assemble_wavefunction,
                                jacobi_poly, laguerre_poly,
                                ode_relative_residual, partner_component)
from .oracle import (ShootingConfig, auto_config, oracle_level_near,
                     oracle_levels, schrodinger_levels, shoot_mismatch)
from .config_io import (LevelRow, Scenario, ScenarioError, Tolerances,
                        format_levels_csv, levels_to_json, parse_scenario,
                        serialize_scenario, write_levels_csv)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
