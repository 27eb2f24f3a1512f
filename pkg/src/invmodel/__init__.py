"""Exact computations with the involution model of the symmetric group.

The space spanned by the involutions of S_n, with S_n acting by signed
conjugation, contains every irreducible representation exactly once. This
package builds that action and checks the statement and its supporting
lemmas by direct computation.
"""

from .characters import (
    class_size,
    count_partitions_with_odd_parts,
    irreducible_character,
    model_multiplicities,
    partitions_of,
    verify_main_theorem,
)
from .intertwiners import (
    end_dimension,
    enumerate_signed_orbits,
    hom_basis,
    verify_equivariance,
)
from .pairs import characteristic_partition, classify_block, dichotomy, simultaneous_conjugator
from .perm import (
    Involution,
    Permutation,
    centralizer_pair,
    compose,
    conjugate,
    enumerate_involutions,
)
from .signs import ModelVector, SignedBasisMap, act, character_of_Vj, cocycle_check, model_product, sign

__version__ = "0.1.0"

__all__ = [
    "Involution",
    "ModelVector",
    "Permutation",
    "SignedBasisMap",
    "act",
    "centralizer_pair",
    "character_of_Vj",
    "characteristic_partition",
    "class_size",
    "classify_block",
    "cocycle_check",
    "compose",
    "conjugate",
    "count_partitions_with_odd_parts",
    "dichotomy",
    "end_dimension",
    "enumerate_involutions",
    "enumerate_signed_orbits",
    "hom_basis",
    "irreducible_character",
    "model_multiplicities",
    "model_product",
    "partitions_of",
    "sign",
    "simultaneous_conjugator",
    "verify_equivariance",
    "verify_main_theorem",
]
