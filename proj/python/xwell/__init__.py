"""Exact and semiclassical solver for the 1-D exponential open well and
bottomless barrier."""

from ._core import (
    BarrierParams,
    CurveTable,
    Eigenstate,
    ScatterPoint,
    WellParams,
    XwellError,
    action_f,
    barrier_action_F,
    bessel_j,
    count_nodes,
    eigenfunction,
    find_crossover,
    gamma_complex,
    hankel_pair,
    k_imag_order,
    k_imag_order_deriv,
    normalize,
    pole_locate,
    potential_value,
    rt_probabilities,
    selfcheck,
    solve_spectrum,
    substituted_rt,
    sweep,
    t_wkb,
    turning_points,
    wkb_pole_condition,
    wkb_spectrum,
    x_cap,
)

__all__ = [
    "BarrierParams",
    "CurveTable",
    "Eigenstate",
    "ScatterPoint",
    "WellParams",
    "XwellError",
    "action_f",
    "barrier_action_F",
    "bessel_j",
    "count_nodes",
    "eigenfunction",
    "find_crossover",
    "gamma_complex",
    "hankel_pair",
    "k_imag_order",
    "k_imag_order_deriv",
    "normalize",
    "pole_locate",
    "potential_value",
    "rt_probabilities",
    "selfcheck",
    "solve_spectrum",
    "substituted_rt",
    "sweep",
    "t_wkb",
    "turning_points",
    "wkb_pole_condition",
    "wkb_spectrum",
    "x_cap",
]
