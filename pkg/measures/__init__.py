"""
Conflict Lattice - Measures Package
Core conflict measure, subset lattice, sliding windows, scenarios and file formats.
"""

from .conflict import conflict, conflict_raw, grid_oracle, induced_partition, validate_evidence
from .lattice import check_monotone, check_normal, full_lattice, leave_one_out, rank_increments
from .scenarios import gen_drift, paper_example
from .stream import conflict_series, summarize, windows

__all__ = [
    'check_monotone', 'check_normal', 'conflict', 'conflict_raw', 'conflict_series',
    'full_lattice', 'gen_drift', 'grid_oracle', 'induced_partition', 'leave_one_out',
    'paper_example', 'rank_increments', 'summarize', 'validate_evidence', 'windows',
]
