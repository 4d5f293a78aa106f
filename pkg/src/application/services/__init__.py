"""Application services - the quantitative studies behind each subcommand."""
from .checks import CHECK_HEADER, InvariantCheck, flag_check, log_checks, map_members, safe_ratio, upper_check
from .operator_checks import semigroup_bench, validate_operator
from .decay import fit_decay_exponent, gaffney_check, target_exponent
from .caccioppoli import (
    CaccioppoliConfig,
    caccioppoli_check,
    max_constants,
    random_configs,
    refinement_drift,
    run_configs,
)
from .equivalence import (
    BAND_HEADER,
    RATIO_HEADER,
    NormTable,
    band_rows,
    both_directions,
    equivalence_report,
    equivalence_study,
    evaluate_norms,
    hardy_interpolation_check,
    ratio_rows,
)
from .domination import (
    domination_bounds,
    interpolation_check,
    pointwise_geometric_mean,
    sobolev_checks,
    tent_lemma_check,
)
from .pq_probe import PROBE_HEADER, l2_contraction_check, pq_interval_probe
from .riesz_study import riesz_study
from .hardy_studies import (
    MOLECULE_HEADER,
    REPRODUCTION_HEADER,
    generate_molecules,
    molecule_suite,
    molecule_sum_study,
    reproduction_study,
)
from .report_merge import merge_reports

__all__ = [
    'CHECK_HEADER',
    'InvariantCheck',
    'flag_check',
    'log_checks',
    'map_members',
    'safe_ratio',
    'upper_check',
    'semigroup_bench',
    'validate_operator',
    'fit_decay_exponent',
    'gaffney_check',
    'target_exponent',
    'CaccioppoliConfig',
    'caccioppoli_check',
    'max_constants',
    'random_configs',
    'refinement_drift',
    'run_configs',
    'BAND_HEADER',
    'RATIO_HEADER',
    'NormTable',
    'band_rows',
    'both_directions',
    'equivalence_report',
    'equivalence_study',
    'evaluate_norms',
    'hardy_interpolation_check',
    'ratio_rows',
    'domination_bounds',
    'interpolation_check',
    'pointwise_geometric_mean',
    'sobolev_checks',
    'tent_lemma_check',
    'PROBE_HEADER',
    'l2_contraction_check',
    'pq_interval_probe',
    'riesz_study',
    'MOLECULE_HEADER',
    'REPRODUCTION_HEADER',
    'generate_molecules',
    'molecule_suite',
    'molecule_sum_study',
    'reproduction_study',
    'merge_reports',
]
