"""Equilibrium points of the tail integral of Riemann's Xi-function."""
from .equilibrium import (
    EquilibriumPoint,
    IntervalReport,
    find_omegas,
    interval_report,
    interval_reports,
    z_sign_changes,
)
from .errors import ConvergenceError, DomainError, ScanExhaustedError, ToleranceError, WindowError
from .gram import GramPoint, gram_point, gram_points_in
from .gram_sums import asymptotic_check, coefficients, gram_sum_psi, w_sums
from .scaled_integral import (
    QuadResult,
    phi1_scaled_explicit,
    phi1_scaled_quad,
    psi_at_gram,
    psi_explicit,
    psi_quad,
)
from .specfun import ScaledValue, ThetaJet, ThetaMode, log_gamma, theta_jet, xi_scaled, z, z_em, z_rs

__all__ = [name for name in dir() if not name.startswith("_")]
