"""Right cells of the symmetric group and their Schubert-smoothness census."""

from .cells import (
    ALL_NONSMOOTH,
    ALL_SMOOTH,
    MIXED,
    CellReport,
    SurveyResult,
    all_smooth_cell_predicate,
    cell_elements,
    check_invariant_subsequence,
    classify_cell,
    prop6_has_smooth,
    section5_families,
    sufficient_nonsmooth_predicate,
    survey,
    theorem_main_predicate,
)
from .checks import (
    VerificationOutcome,
    check_hohlweg,
    check_inverse_smooth,
    check_knuth_vs_rsk,
    check_lemma_relative_order,
    check_oracle_equivalence,
    check_section5,
    check_section6,
    check_theorem_main,
)
from .knuth import knuth_class, knuth_equivalent, knuth_neighbors
from .perms import (
    compositions,
    inverse,
    is_involution,
    iter_rank_range,
    lds,
    lehmer_rank,
    lehmer_unrank,
    lis,
    perm_from_text,
    perm_to_text,
    sigma_c,
    validate_permutation,
)
from .smoothness import (
    PatternOccurrence,
    contains_pattern,
    is_smooth,
    is_smooth_oracle,
    smooth_involutions,
    smoothness_witness,
)
from .tableaux import (
    column_word,
    enumerate_syt,
    partitions,
    row_word,
    rs_insert,
    shape_of,
    syt_count,
    tableau_from_text,
    tableau_to_text,
    transpose,
    validate_tableau,
)

__version__ = "0.1.0"
