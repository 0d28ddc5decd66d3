"""Desk-scale resource guards.

Limits are per feature, not global: a log table (multiplicative characters)
binds much earlier than plain enumeration, and the exhaustive membership
oracle earlier still.  All thresholds are configuration with safe defaults.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Guards:
    field_max: int = 1 << 32           # largest q^r a FieldDesc will accept
    log_table_max: int = 1 << 24       # largest q^r for discrete-log tables
    oracle_field_max: int = 1 << 12    # largest q^r for the exhaustive oracle
    enumeration_max: int = 1 << 26     # largest point count a single sum may visit


DEFAULT = Guards()
