"""gossez-lab: exact verification of Gossez's skew operator and its duals.

Exact rational computation of the operator, its adjoint model, couplings,
Fitzpatrick functions and truncated conjugates in two dual systems, plus
property checkers that certify or refute monotone-operator properties at
desk scale.
"""

from .adjoint import apply_Gstar, graph_Gstar_point, graph_negGstar_point, in_kernel_model
from .checks import ARTIFACT_VERSION, CATALOG, CheckConfig, ReportDoc, emit, run_checks
from .fitz import (
    ExtendedRational,
    MINUS_INF,
    OP_G_FIRST,
    OP_G_SECOND,
    OP_NEGG_SECOND,
    PLUS_INF,
    RepresentedFunction,
    SampledGraph,
    TruncatedAnnihilator,
    annihilator_truncated,
    annihilator_violation,
    divergence_certificate,
    eval_cA,
    fitz_closed_first,
    fitz_closed_second_G,
    fitz_closed_second_negG,
    fitz_sampled,
    neg_transform,
    orthogonality_report,
)
from .gossez import (
    RangeCertificate,
    alpha,
    apply_G,
    apply_negG,
    range_ratio_family,
    solve_G,
    weakstar_approximate,
)
from .props import (
    ProbeSet,
    PropertyVerdict,
    dichotomy_crosscheck,
    extension_probe,
    is_monotone,
    ni_witness_search,
    representability_check,
)
from .spaces import (
    DualSystem,
    ModelMeasure,
    OutsideModelDomain,
    PairPoint,
    SparseSeq,
    SystemMismatchError,
    TailSeq,
    couple,
    coupling_value,
    format_rational,
    l1_norm,
    linf_norm,
    natural_couple,
    pair_measure,
    parse_rational,
)

__version__ = ARTIFACT_VERSION
