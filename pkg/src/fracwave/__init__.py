"""Fundamental solution of the space-time fractional wave equation, 1 <= alpha < 2.

Closed form, series and Mittag-Leffler cosine-transform evaluations of the
kernel G_alpha(x, t), its moments and centers, the damped-wave velocities,
the maximum and the time-invariant product p_alpha.
"""
__version__ = "0.1.0"

from fracwave.errors import (DomainError, FracwaveError, MomentOutOfRange, OutOfRange,  # noqa: E402
                             QuadratureError)
from fracwave.quadrature import (QuadConfig, QuadResult, cauchy_case_integral,  # noqa: E402
                                 integrate_lalpha_power, integrate_semi_infinite)
from fracwave.special_fn import mittag_leffler_neg, ml_asymptotic, ml_series  # noqa: E402
from fracwave.green import green_array, green_closed, green_fourier, green_series, l_aux  # noqa: E402
from fracwave.extrema import (ExtremumReport, amplitude_minimum, argmax_numeric,  # noqa: E402
                              c_alpha, max_point, product_p, recover_alpha)
from fracwave.moments import (VelocityReport, gravity_center, mass_center,  # noqa: E402
                              moment_one_sided, velocity_centro, velocity_gravity,
                              velocity_phase, velocity_pulse, velocity_report)
from fracwave._accel import backend_name  # noqa: E402

__all__ = [
    "DomainError", "ExtremumReport", "FracwaveError", "MomentOutOfRange", "OutOfRange",
    "QuadConfig", "QuadResult", "QuadratureError", "VelocityReport", "amplitude_minimum",
    "argmax_numeric", "backend_name", "c_alpha", "cauchy_case_integral", "gravity_center",
    "green_array", "green_closed", "green_fourier", "green_series", "integrate_lalpha_power",
    "integrate_semi_infinite", "l_aux", "mass_center", "max_point", "mittag_leffler_neg",
    "ml_asymptotic", "ml_series", "moment_one_sided", "product_p", "recover_alpha",
    "velocity_centro", "velocity_gravity", "velocity_phase", "velocity_pulse", "velocity_report",
]
