"""Exact orbifold Riemann-Roch invariants for K3 quotients [K3/G].

Everything is computed in exact arithmetic: arbitrary-precision rationals
(fractions.Fraction) and cyclotomic fields Q(zeta_L) represented as
Q[x]/Phi_L(x).  No floating point is used anywhere.
"""

from .cyclotomic import (
    AmbientFieldError,
    Cyclotomic,
    ExactnessError,
    cyclotomic_polynomial,
    format_cyclotomic,
    parse_cyclotomic,
    root_of_unity,
    sum_inverse_one_minus_cos,
)
from .groups import (
    Character,
    FiniteGroup,
    abelian_character_table,
    char_inner_product,
    char_inner_product_elementwise,
    conjugacy_classes,
    cyclic_group,
    invariant_dimension,
    regular_character,
    symmetric_group_s3,
    trivial_character,
)
from .hilbert import (
    ADEForm,
    HilbClassMu2,
    ade_form,
    dim_ade,
    dim_mu2,
    enumerate_mu2,
    length_mu2,
    omv_of_class_mu2,
)
from .hrr import (
    EquivariantClass,
    OrbifoldMukaiVector,
    euler_pairing,
    generic_point_class,
    moduli_dimension,
    orbifold_mukai_pairing,
    orbifold_mukai_vector,
    structure_sheaf_class,
    tangent_bundle_class,
)
from .inertia import (
    FIXED_POINT_TABLE,
    K3GModel,
    SectorEntry,
    fixed_points_closed_form,
    load_model,
    preset_cyclic,
    solve_fixed_points_cyclic,
    trivial_model,
    validate_identity,
)
from .lattice import (
    MukaiVector,
    PicardLattice,
    check_hypotheses,
    degree_and_slope,
    elliptic_k3_lattice,
    fermat_quotient_lattice,
    hilbert_polynomial,
    mukai_pairing,
    poly_leq_eventually,
    reduced_hilbert_polynomial,
)
from .polyring import QuotientRing, QuotientRingElement
from .toystacks import (
    GroupRingElement,
    bg_euler_pairing,
    bg_moduli_count,
    dft_inverse,
    orbch_p23,
    parseval_check,
    weighted_inner_product,
    wps_euler_class_tangent,
    wps_relation_element,
)

__version__ = "0.1.0"
