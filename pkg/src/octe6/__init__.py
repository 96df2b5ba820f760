"""Octonions, the exceptional Jordan algebra H3(O), and the group SL(3,O).

Verified desk-scale computational library: octonion arithmetic with the
full multiplication table, Jordan/Freudenthal products and the Jordan
eigenvalue problem, the explicit 78-family generator catalog of the
determinant-preserving group with a numerical dimension engine, and the
block-decomposition Dirac states with three lepton generations.
"""

__version__ = "0.1.0"

from . import dirac, groups, jordan, lierank, octonion, serialize, verify  # noqa: F401
from .dirac import (  # noqa: F401
    BlockMatrix,
    DiracStateBundle,
    HermitianMatrix2,
    boost_or_rotate_state,
    dirac_residual,
    lepton_spectrum,
    solve_from_theta,
    trace_reversal,
)
from .groups import (  # noqa: F401
    GeneratorFamily,
    MatrixTransform,
    apply_family,
    apply_transform,
    build_transform,
    catalog,
    family_by_id,
    g2_apply,
    inner_automorphism,
    is_valid_conjugator,
    nested_apply,
)
from .jordan import (  # noqa: F401
    SpectralDecomposition,
    determinant,
    eigenvalues,
    freudenthal_product,
    invariants,
    jordan_product,
    op2_membership,
    spectral_decompose,
    spinor_square,
    trace_form,
)
from .lierank import span_rank, subgroup_dimensions, tangent, triality_check  # noqa: F401
from .octonion import associator, commutator, conj, exp_unit, mul, norm_inverse  # noqa: F401
