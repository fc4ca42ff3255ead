"""Unstable integer-valued AR(2) toolkit: simulation, CLS estimation, limit laws."""

from ._core import (
    Innovation,
    Params,
    classify,
    estimate,
    expected_value_exact,
    ks_distance,
    limit_rho_sample,
    putzer_power,
    run_campaign,
    simulate,
)

__all__ = [
    "Innovation",
    "Params",
    "classify",
    "estimate",
    "expected_value_exact",
    "ks_distance",
    "limit_rho_sample",
    "putzer_power",
    "run_campaign",
    "simulate",
]
