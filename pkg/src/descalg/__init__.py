"""Descent algebras of the symmetric and hyperoctahedral groups.

Combinatorial indices, group elements, truncated power series, the
quasisymmetric function bases, P-partition generating functions, and the
structure constants of the descent algebras, with brute-force checks tying
them together.
"""

from .combinatorics import (
    Composition,
    DescentData,
    Flavor,
    PseudoComposition,
    SignedComposition,
    comp_to_descents,
    descents_to_comp,
    descents_to_pseudo,
    enumerate_compositions,
    enumerate_indices,
    enumerate_pseudo,
    enumerate_signed,
    parse_index,
    pseudo_to_descents,
    refines,
    signed_comp_data,
    signed_refines,
)
from .descent_algebra import (
    DEFAULT_CAPS,
    DegreeCapExceeded,
    GroupAlgebraElement,
    StructureConstantTable,
    class_sum,
    compute_structure_constants,
    export_table,
    import_table,
    verify_closure,
)
from .groups import (
    Permutation,
    SignedPermutation,
    compose,
    descent_composition,
    descent_index,
    descent_pseudo,
    enumerate_group,
    inverse,
    parse_element,
    signed_descent_composition,
)
from .ppartition import (
    LabeledPoset,
    TypeBPoset,
    bipartite_gamma,
    enumerate_B_ppartitions,
    enumerate_ppartitions,
    factorization_sum,
    gamma,
    gamma_B,
    gamma_signed,
)
from .qsym import (
    Basis,
    QSymVector,
    change_basis,
    expand_fundamental,
    expand_monomial,
    gamma_equals_fundamental_check,
    inner_coproduct,
    inner_product,
    specialize_fundamental,
    specialize_monomial,
)
from .series import Alphabet, Series, TruncationMismatch, Variable

__version__ = "0.1.0"
