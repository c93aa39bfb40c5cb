"""Subspace lattices of finite vector spaces over GF(q).

Build GF(p^n) exactly, span and intersect subspaces, construct the full
lattice with its orthogonality involution, decide the classical lattice
laws with witnesses, and compute the isotropy threshold m(q).
"""

from .constructions import (
    BoundCheck,
    Dim2Report,
    MqResult,
    OrthoLattice,
    SubPoset,
    ThresholdBounds,
    boolean_algebra,
    boolean_subalgebra,
    compute_mq,
    compute_mq_bruteforce,
    dim2_orthomodularity_report,
    horizontal_sum,
    horizontal_sum_subposet,
    is_orthogonal_basis,
    order_isomorphic,
    threshold_bounds,
)
from .errors import (
    AmbientMismatch,
    CapExceeded,
    DimensionMismatch,
    DomainError,
    FieldMismatch,
    FinlatError,
    HypothesisViolated,
    NonPrime,
    NonPrimeCharacteristic,
    NotOrthogonalBasis,
    NotPrimeField,
    OverlapViolation,
    ReduciblePolynomial,
    ZeroInverse,
)
from .fields import FieldElement, FieldSpec, is_prime, make_field, poly_str
from .lattices import (
    CountProfile,
    DEFAULT_LATTICE_CAP,
    SubspaceLattice,
    atom_count,
    build_lattice,
    chain_condition_check,
    count_profile,
    enumerate_rref_bases,
    export_dot,
    gaussian_count,
    lower_covers_count,
    upper_covers_count,
)
from .laws import (
    check_all,
    check_antitone_involution,
    check_atomistic,
    check_complementation,
    check_modular,
    check_orthomodular,
    check_paraorthomodular,
    recognize_Mn,
    recognize_MOn,
)
from .report import LAW_ORDER, PropertyReport, Verdict
from .spaces import (
    FVector,
    Subspace,
    VECTOR_ENUM_CAP,
    dot,
    find_isotropic,
    intersect,
    is_isotropic,
    members,
    orthocomplement,
    rref,
    sum,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BoundCheck",
    "CapExceeded",
    "CountProfile",
    "DEFAULT_LATTICE_CAP",
    "Dim2Report",
    "DimensionMismatch",
    "DomainError",
    "FieldElement",
    "FieldMismatch",
    "FieldSpec",
    "FinlatError",
    "FVector",
    "HypothesisViolated",
    "LAW_ORDER",
    "MqResult",
    "NonPrime",
    "NonPrimeCharacteristic",
    "NotOrthogonalBasis",
    "NotPrimeField",
    "OrthoLattice",
    "OverlapViolation",
    "PropertyReport",
    "ReduciblePolynomial",
    "SubPoset",
    "Subspace",
    "SubspaceLattice",
    "ThresholdBounds",
    "VECTOR_ENUM_CAP",
    "Verdict",
    "ZeroInverse",
    "atom_count",
    "boolean_algebra",
    "boolean_subalgebra",
    "build_lattice",
    "chain_condition_check",
    "check_all",
    "check_antitone_involution",
    "check_atomistic",
    "check_complementation",
    "check_modular",
    "check_orthomodular",
    "check_paraorthomodular",
    "compute_mq",
    "compute_mq_bruteforce",
    "count_profile",
    "dim2_orthomodularity_report",
    "dot",
    "enumerate_rref_bases",
    "export_dot",
    "find_isotropic",
    "gaussian_count",
    "horizontal_sum",
    "horizontal_sum_subposet",
    "intersect",
    "is_isotropic",
    "is_orthogonal_basis",
    "is_prime",
    "lower_covers_count",
    "make_field",
    "members",
    "order_isomorphic",
    "orthocomplement",
    "poly_str",
    "recognize_Mn",
    "recognize_MOn",
    "rref",
    "sum",
    "threshold_bounds",
    "upper_covers_count",
]
