"""Elastic optical network routing simulator."""

from ._core import (
    CostSpec,
    Merge,
    Metric,
    ParseError,
    RESULTS_HEADER,
    OUTCOME_HEADER,
    SlotRange,
    SpectrumGrid,
    ValidationError,
    first_fit,
    generate_trace,
    link_cost,
    load_topology,
    parse_topology,
    required_slots,
    run,
    run_sweep,
    select_modulation,
    shortest_path,
    trace_from_csv,
    trace_to_csv,
    validate_config,
)

__all__ = [
    "CostSpec",
    "Merge",
    "Metric",
    "ParseError",
    "RESULTS_HEADER",
    "OUTCOME_HEADER",
    "SlotRange",
    "SpectrumGrid",
    "ValidationError",
    "first_fit",
    "generate_trace",
    "link_cost",
    "load_topology",
    "parse_topology",
    "required_slots",
    "run",
    "run_sweep",
    "select_modulation",
    "shortest_path",
    "trace_from_csv",
    "trace_to_csv",
    "validate_config",
]
