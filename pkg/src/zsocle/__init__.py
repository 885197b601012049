"""Center, socle filtration and the subspaces ``ZS^n = Z ∩ Soc^n`` of
modular group algebras ``F_p G`` of finite p-groups."""

from .algebra import (
    Algebra,
    AlgebraElement,
    AlgebraError,
    GroupAlgebra,
    MatrixAlgebra,
    RadicalUnknownError,
    StructureConstantAlgebra,
    center,
    group_algebra,
    loewy_length,
    matrix_algebra,
    morita_invariance_check,
    otokita_bound_check,
    radical_power,
    socle_n,
    zs,
)
from .fplinalg import DimensionMismatchError, Subspace, kernel, rank, rref
from .groups import Group, GroupError, OrderCapExceeded, SubgroupSet, make_family
from .groupspec import SpecError, parse_group_spec
from .jennings import (
    JenningsStructure,
    TheoremViolation,
    VerificationReport,
    dimension_subgroups_group_theoretic,
    dimension_subgroups_ring_theoretic,
    is_powerful,
    jennings_basis,
    jennings_spanning_scan,
    verify_jennings_theorem,
    verify_main_theorem,
    verify_powerful_theorem,
    verify_rigidity,
    verify_zs12_explicit,
)

__version__ = "0.1.0"
