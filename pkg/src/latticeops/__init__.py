"""Exact calculus of classical orthogonal polynomials on lattices.

Divided-difference and averaging operators, Pearson-pair iteration,
regularity diagnostics, closed-form recurrence coefficients, and
functional Rodrigues verification, all in exact rational arithmetic.
"""

from .classical import (
    DnEn,
    IteratedPair,
    MonicOPS,
    PearsonPair,
    RegularityReport,
    RodriguesVerdict,
    dn_en,
    iterate_pair,
    kn_constant,
    monic_ops,
    r_n_sequence,
    regularity,
    rodrigues_check,
    ttrr_coeffs,
    u_k_moments,
)
from .errors import (
    AdmissibilityError,
    LatticeOpsError,
    MomentLengthError,
    RegularityBreakError,
    RegularityError,
)
from .families import AWParams, FamilyBundle, RacahParams, aw_bundle, racah_bundle
from .lattice import (
    LatticeConstants,
    LatticeSpec,
    QLattice,
    Quadratic,
    constants,
    lattice_from_config,
    lattice_to_config,
    sequences,
)
from .momentfun import (
    MomentSeq,
    TTRRCoeffs,
    apply,
    dual_dx,
    dual_sx,
    hankel,
    mul,
    pearson_moments,
    ttrr_oracle,
)
from .polyops import Poly, dx, sx, t_nk
from .rationals import format_rational, parse_rational

__version__ = "0.1.0"
