"""Numerical laboratory for the defocusing double-power NLS with a delta point interaction."""

from .model import (
    FrequencyParams,
    ModelParams,
    RegimeTag,
    RegimeVerdict,
    admissible_omega_interval,
    classify_regime,
)
from .profiles import (
    Profile,
    ProfileKind,
    alpha_beta,
    equilibrium_profile,
    kaminaga_ohta_profile,
    l0,
    l_omega,
    R1_eval,
    R1_inverse,
    R2_eval,
    R2_inverse,
    standing_wave_profile,
)
from .functionals import (
    ComplexField,
    Diagnostics,
    Grid,
    action_G,
    delta_eigenfunction,
    delta_form,
    energy,
    functional_I,
    functional_R,
    functional_Rtilde,
    h1_deriv,
    h1_norm,
    lp_norm,
    orbital_distance,
    sample,
    x_space_norm,
)
from .stationary import (
    ResidualReport,
    find_c0,
    first_integral_residual,
    interior_residual,
    jump_residual,
    peak_polynomial,
    shoot_ivp,
)
from .phaseplane import PhasePoint, hamiltonian, jump_map, standing_wave_phase_path, trace_orbit
from .evolution import (
    EvolutionConfig,
    Trajectory,
    evolve,
    linear_half_generator,
    smallest_eigenvalue,
    step_strang,
)
from .minimize import FlowResult, action_gradient, estimate_m, gradient_flow
from .stability import StabilityReport, perturbation_experiment, stability_curve, standing_wave_check

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
