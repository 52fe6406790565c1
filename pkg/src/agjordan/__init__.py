"""Jordan types and Lefschetz properties of graded Artinian Gorenstein algebras.

The algebra is presented by its dual generator: a homogeneous polynomial f
with rational coefficients.  From f alone the package computes the Hilbert
vector, mixed Hessian ranks, the generic Jordan type of multiplication by a
linear form, weak/strong Lefschetz verdicts, and the string diagram of the
generic multiplication, all in exact arithmetic.
"""

from agjordan.apolarity import (
    GradedAlgebraBasis,
    ann_membership,
    catalecticant_matrix,
    graded_basis,
    reduce_essential,
)
from agjordan.constructions import (
    BigradedForm,
    as_bigraded,
    concat,
    coproduct,
    perazzo,
    perazzo_example,
    rank_drop_family,
)
from agjordan.diagram import StringDiagram, build_diagram, render_ascii
from agjordan.errors import (
    ComputationError,
    DegenerateLinearForm,
    DegenerateVariables,
    GenericityFailure,
    InternalInconsistency,
    InvalidRankProfile,
    MismatchReport,
    NonGenericRankTable,
    ParseError,
    TilingMismatch,
    VariableMismatch,
)
from agjordan.hessian import (
    DEFAULT_SEED,
    GenericRankConfig,
    MixedHessian,
    RankTable,
    generic_rank,
    mixed_hessian,
    rank_at,
    rank_table,
    rank_table_at,
)
from agjordan.jordan import (
    EijTable,
    JordanTypeReport,
    Partition,
    closed_form_d3,
    closed_form_d4,
    closed_form_d5,
    dual_partition,
    eij_table,
    ej_closed_form,
    jordan_type,
    jordan_type_at,
    partition_leq,
)
from agjordan.lefschetz import LefschetzReport, cubic_gap, lefschetz_report, sperner
from agjordan.linalg import (
    KERNEL_BACKEND,
    QMatrix,
    kernel_basis,
    matrix_power_ranks,
    pivot_columns,
    pivot_rows,
    rank,
)
from agjordan.oracle import (
    CrossCheckReport,
    MultiplicationMatrix,
    cross_check,
    multiplication_matrix,
    oracle_jordan_type,
)
from agjordan.poly import (
    LinearForm,
    Poly,
    contract,
    evaluate,
    format_poly,
    monomials_of_degree,
    parse_poly,
)

__version__ = "0.1.0"

__all__ = [
    "BigradedForm",
    "ComputationError",
    "CrossCheckReport",
    "DEFAULT_SEED",
    "DegenerateLinearForm",
    "DegenerateVariables",
    "EijTable",
    "GenericRankConfig",
    "GenericityFailure",
    "GradedAlgebraBasis",
    "InternalInconsistency",
    "InvalidRankProfile",
    "JordanTypeReport",
    "KERNEL_BACKEND",
    "LefschetzReport",
    "LinearForm",
    "MismatchReport",
    "MixedHessian",
    "MultiplicationMatrix",
    "NonGenericRankTable",
    "ParseError",
    "Partition",
    "Poly",
    "QMatrix",
    "RankTable",
    "StringDiagram",
    "TilingMismatch",
    "VariableMismatch",
    "ann_membership",
    "as_bigraded",
    "build_diagram",
    "catalecticant_matrix",
    "closed_form_d3",
    "closed_form_d4",
    "closed_form_d5",
    "concat",
    "contract",
    "coproduct",
    "cross_check",
    "cubic_gap",
    "dual_partition",
    "eij_table",
    "ej_closed_form",
    "evaluate",
    "format_poly",
    "generic_rank",
    "graded_basis",
    "jordan_type",
    "jordan_type_at",
    "kernel_basis",
    "lefschetz_report",
    "matrix_power_ranks",
    "mixed_hessian",
    "monomials_of_degree",
    "multiplication_matrix",
    "oracle_jordan_type",
    "parse_poly",
    "partition_leq",
    "perazzo",
    "perazzo_example",
    "pivot_columns",
    "pivot_rows",
    "rank",
    "rank_at",
    "rank_drop_family",
    "rank_table",
    "rank_table_at",
    "reduce_essential",
    "render_ascii",
    "sperner",
    "__version__",
]
