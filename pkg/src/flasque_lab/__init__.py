"""Birational invariants of algebraic tori via exact lattice cohomology.

The package computes group cohomology of finite groups acting on integer
lattices, flasque and coflasque resolutions, the restriction kernels
sha_omega^i, and the unramified Brauer quotients they determine.  All
arithmetic is exact integer arithmetic.
"""

from .intlinalg import (
    AbelianGroupStructure,
    IntMatrix,
    SmithDecomposition,
    cokernel_structure,
    kernel_basis,
    saturate,
    snf,
    solve_integer,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    cyclic_subgroups,
    group_from_permutations,
    subgroup_conjugacy_classes,
)
from .lattices import (
    GLattice,
    LatticeMap,
    direct_sum,
    dual,
    fixed_sublattice,
    hom_lattice,
    norm_one_lattice,
    permutation_lattice,
    quotient_by_pure_sublattice,
    restrict,
    trivial_lattice,
)
from .cohomology import (
    CohomMap,
    FinitelyPresentedAbelianGroup,
    h0,
    h1,
    h2_bar,
    h2_shifted,
    restriction_h1,
    sha_omega,
    tate_cyclic,
)
from .resolutions import (
    FlasqueResolution,
    LatticeExtension,
    SimilarityFingerprint,
    coflasque_resolution,
    ext1,
    extension_class,
    extension_from_cocycle,
    flasque_resolution,
    is_coflasque,
    is_flasque,
    is_split,
    pullback_resolution,
    similarity_fingerprint,
)
from .invariants import (
    InvariantReport,
    RouteDisagreement,
    brauer_homogeneous_space,
    brauer_torus_compactification,
    picard_flasque_class,
    verify_brauer_chain,
)

__all__ = [
    "AbelianGroupStructure",
    "CohomMap",
    "FiniteGroup",
    "FinitelyPresentedAbelianGroup",
    "FlasqueResolution",
    "GLattice",
    "IntMatrix",
    "InvariantReport",
    "LatticeExtension",
    "LatticeMap",
    "RouteDisagreement",
    "SimilarityFingerprint",
    "SmithDecomposition",
    "Subgroup",
    "all_subgroups",
    "brauer_homogeneous_space",
    "brauer_torus_compactification",
    "coflasque_resolution",
    "cokernel_structure",
    "cyclic_subgroups",
    "direct_sum",
    "dual",
    "ext1",
    "extension_class",
    "extension_from_cocycle",
    "fixed_sublattice",
    "flasque_resolution",
    "group_from_permutations",
    "h0",
    "h1",
    "h2_bar",
    "h2_shifted",
    "hom_lattice",
    "is_coflasque",
    "is_flasque",
    "is_split",
    "kernel_basis",
    "norm_one_lattice",
    "permutation_lattice",
    "picard_flasque_class",
    "pullback_resolution",
    "quotient_by_pure_sublattice",
    "restrict",
    "restriction_h1",
    "saturate",
    "sha_omega",
    "similarity_fingerprint",
    "snf",
    "solve_integer",
    "subgroup_conjugacy_classes",
    "tate_cyclic",
    "trivial_lattice",
    "verify_brauer_chain",
]
