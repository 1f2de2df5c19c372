"""Exact block decompositions of partial-representation algebras."""

from .algebra import FinAlgebra, dual_numbers, scalar_algebra, truncated_polynomials
from .fields import CyclotomicField, RationalField, field_for
from .groups import (FiniteGroup, cyclic_group, dihedral_group_4, group_from_spec,
                     klein_four_group, orbit_decomposition, p1_subsets,
                     quaternion_group_8, stabilizer_multiplicities,
                     symmetric_group_3)
from .groupoid import build_groupoid, decompose_matrix_form, groupoid_algebra
from .hopf import (GroupDatum, HopfAlgebraData, coradical_filtration,
                   group_algebra, grouplike_group, grouplikes, rank_one,
                   rank_one_nilpotent8, rank_one_nonnilpotent8, wedge)
from .hpar import (build_apar, build_hpar, check_partial_rep,
                   diff_against_reference, generate_epsilon_relations,
                   kpar_group, localize, oracle_equivalence)
from .partial_action import (PartialAction, check_partial_action, compute_PX,
                             decompose, induce_on_ideal, trivial_action,
                             unit_map, verify_gamma_laws)
from .smash import SmashProduct, build_smash

__version__ = "0.1.0"

__all__ = [
    "CyclotomicField", "FinAlgebra", "FiniteGroup", "GroupDatum",
    "HopfAlgebraData", "PartialAction", "RationalField", "SmashProduct",
    "build_apar", "build_groupoid", "build_hpar", "build_smash",
    "check_partial_action", "check_partial_rep", "compute_PX",
    "coradical_filtration", "cyclic_group", "decompose",
    "decompose_matrix_form", "diff_against_reference", "dihedral_group_4",
    "dual_numbers", "field_for", "generate_epsilon_relations", "group_algebra",
    "group_from_spec", "groupoid_algebra", "grouplike_group", "grouplikes",
    "induce_on_ideal", "klein_four_group", "kpar_group", "localize",
    "oracle_equivalence", "orbit_decomposition", "p1_subsets",
    "quaternion_group_8", "rank_one", "rank_one_nilpotent8",
    "rank_one_nonnilpotent8", "scalar_algebra", "stabilizer_multiplicities",
    "symmetric_group_3", "trivial_action", "truncated_polynomials",
    "unit_map", "verify_gamma_laws", "wedge",
]
