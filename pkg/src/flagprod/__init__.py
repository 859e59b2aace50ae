"""Grid-block 2-designs with product-action symmetry.

Construction and exact verification of block families on an omega x omega
point grid carried by the doubled wreath group, plus the Diophantine
parameter solver and the case-elimination audit that together show which
parameters can occur.
"""

from .diophantine import (
    ExpBoundChecks,
    Solution,
    SolutionFamily,
    check_solution,
    enumerate_solutions,
    exp_bound_checks,
    is_solvable,
    solution_family,
)
from .params import (
    FullParams,
    Hypothesis,
    ReducedParams,
    check_bibd_relations,
    hypothesis_test,
    lambda_from_orbit,
    reduced_params,
)
from .permaction import (
    DEFAULT_CAP,
    GroupElement,
    Permutation,
    Point,
    apply,
    compose,
    flag_orbit_size,
    full_wreath_generators,
    inverse,
    orbit_of_block,
    point_at,
    point_index,
    wreath_group_order,
)
from .construct import (
    Design,
    Labeling,
    base_block,
    build_design,
    design_grid_profile_ok,
    distinguished_generators,
)
from .verify import (
    PairClass,
    VerificationReport,
    check_flag_transitive,
    classify_pair,
    full_report,
    lambda_check_against_orbit,
    pairwise_lambda,
    suborbit_sizes,
)
from .audit import Verdict, audit_all, audit_case, m_candidates, quadratic_in_c
from .designio import parse_design, read_design, render_design, write_design
from .errors import (
    AuditError,
    DesignFileError,
    FlagprodError,
    InvalidC,
    LabelsExceedOmega,
    NonIntegralLambda,
    NotASolution,
    OrbitCapExceeded,
    UnknownFamily,
    UnsolvableC,
)

__version__ = "0.1.0"
