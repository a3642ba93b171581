"""Series generators, panel ingestion and the TAIEX replication harness."""

from .generators import GeneratorSpec, conway, generate
from .panel import (
    PanelTable,
    RowResult,
    SkippedRowWarning,
    aggregate_panel,
    parse_panel,
    read_panel,
    results_csv,
    results_json,
    weights_csv,
)
from .profiles import PeriodicProfile, periodic_weight_profile, spike_influence_profile
from .replication import ReplicationReport, load_table2, replicate

__all__ = [
    "GeneratorSpec",
    "conway",
    "generate",
    "PanelTable",
    "RowResult",
    "SkippedRowWarning",
    "aggregate_panel",
    "parse_panel",
    "read_panel",
    "results_csv",
    "results_json",
    "weights_csv",
    "PeriodicProfile",
    "periodic_weight_profile",
    "spike_influence_profile",
    "ReplicationReport",
    "load_table2",
    "replicate",
]
