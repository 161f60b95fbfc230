"""Exact monodromy computations for punctured curves and semistable realizability obstructions."""
from .errors import ParseError, PreconditionError, RHError
from .families import family1, family2, family3, family4, family5, mainthm_witness, remark52_build
from .matrix import Matrix, char_poly, rank, rational_eigenvalues
from .obstruction import (
    ResidueProfile,
    SlopeConstraint,
    Verdict,
    deligne_residue,
    fuchs_degree,
    realizability_report,
    thm_ss_constraint,
    thm_sums_verdict,
)
from .lattice import LatticeLine, LatticePair, balance, deligne_line, flag_residue_check, gabber_move
from .reducibility import algebra_dimension, invariant_subspace_witness, is_irreducible
from .scalars import CyclotomicNumber, TwistedScalar, UnityRoot, cyclo_inverse
from .spectral import (
    MonodromyAnalysis,
    analyze,
    is_single_jordan_block,
    jordan_type,
    nilpotent_exp,
    spectrum,
    unipotent_log,
)
from .surface import (
    DirectSumRepresentation,
    SurfaceRepresentation,
    conjugate,
    direct_sum,
    is_valid,
    relation_defect,
)
from .twisted import TwistedMatrix, twisted_mul

__version__ = "0.1.0"
