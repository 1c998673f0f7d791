from analysis.aber_analysis import (
    AberEstimate,
    aber_curve,
    aber_union_bound,
    conditional_pep,
    q_function,
)
from analysis.capacity_analysis import (
    CapacityRecord,
    capacity_curve,
    ergodic_capacity,
    ris_baseline_capacity,
    ris_baseline_curve,
)
from analysis.complexity import (
    ComplexityReport,
    ComplexitySystem,
    TABLE_ROWS,
    complexity_report,
    complexity_rm,
    complexity_table,
)
from analysis.curve_analysis import monotone_within_ci, snr_at_ber, snr_gap_db

__all__ = [
    'AberEstimate',
    'CapacityRecord',
    'ComplexityReport',
    'ComplexitySystem',
    'TABLE_ROWS',
    'q_function',
    'conditional_pep',
    'aber_union_bound',
    'aber_curve',
    'ergodic_capacity',
    'capacity_curve',
    'ris_baseline_capacity',
    'ris_baseline_curve',
    'complexity_rm',
    'complexity_report',
    'complexity_table',
    'snr_at_ber',
    'snr_gap_db',
    'monotone_within_ci',
]
