"""Decentralized asynchronous coded caching simulator.

Thin python surface over the C++ core: run delivery phases, inspect
encoding-set machinery, and drive parameter sweeps. Exact loads are returned
as fractions.Fraction.
"""

from accsim._core import (
    FeasibilityError,
    ValidationError,
    active_window,
    chi_range,
    collapse,
    exhaustive_worst_case,
    partition_encoding_set,
    run_example1,
    run_instance,
    sample_arrivals,
    subfile_sizes,
    sweep,
    sync_closed_form,
    uncoded_load,
    validate_config,
    verify_example1,
    worst_case_demands,
)

__all__ = [
    "FeasibilityError",
    "ValidationError",
    "active_window",
    "chi_range",
    "collapse",
    "exhaustive_worst_case",
    "partition_encoding_set",
    "run_example1",
    "run_instance",
    "sample_arrivals",
    "subfile_sizes",
    "sweep",
    "sync_closed_form",
    "uncoded_load",
    "validate_config",
    "verify_example1",
    "worst_case_demands",
]
