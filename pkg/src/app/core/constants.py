"""Constants for the linked-graph data model."""

PATH_INDICES = (1, 2)

# Default caps for the exhaustive routines; overridable from configuration.
DEFAULT_ORACLE_VERTEX_CAP = 16
DEFAULT_XX_VERTEX_CAP = 64
DEFAULT_PATHWIDTH_VERTEX_CAP = 16
DEFAULT_PARTITION_RUNG_CAP = 64
DEFAULT_MINOR_EDGE_CAP = 24
