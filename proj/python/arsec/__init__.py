"""Secrecy metrics (ASC, SOP, PNZ) over alternate Rician shadowed fading links."""

from ._arsec import (
    ArsParams,
    ConvergenceError,
    ContourError,
    DispatchError,
    DomainError,
    Error,
    McEstimate,
    MetricResult,
    PoleError,
    QuadratureError,
    Scenario,
    TruncationError,
    asc,
    cdf,
    db_to_linear,
    figure_names,
    figure_scenario,
    linear_to_db,
    metric,
    pdf,
    pnz,
    sample,
    simulate,
    sop,
    sop_truncation_error,
    table1_scenario,
)

__all__ = [
    "ArsParams",
    "ConvergenceError",
    "ContourError",
    "DispatchError",
    "DomainError",
    "Error",
    "McEstimate",
    "MetricResult",
    "PoleError",
    "QuadratureError",
    "Scenario",
    "TruncationError",
    "asc",
    "cdf",
    "db_to_linear",
    "figure_names",
    "figure_scenario",
    "linear_to_db",
    "metric",
    "pdf",
    "pnz",
    "sample",
    "simulate",
    "sop",
    "sop_truncation_error",
    "table1_scenario",
]
