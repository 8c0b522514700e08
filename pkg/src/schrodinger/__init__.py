"""Exact computations in the enveloping algebra of the Schrödinger algebra.

Submodules: ``pbw`` (normal forms), ``central`` (Casimir, center),
``verma`` (Verma modules, forms, characters), ``modules`` (truncated
modules and intertwiners), ``blocks`` (classification, projectives, Ext),
``weyl`` (Weyl-algebra realization), ``annihilators`` and ``cli``.
"""

from .annihilators import annihilator_slice, central_ideal_slice, compare_slices, intersection_check
from .blocks import (
    BlockType, bgg_check, block_type, classify, ext1, findim_projective, quiver,
    tensor_findim, truncated_projective,
)
from .central import casimir, center_basis, central_character, hc_homomorphism, kappa, verify_central
from .modules import TruncatedModule, Weight, dual_module, module_hom
from .pbw import AlgebraElement, bracket, commutator_table, generator, multiply, parse_element, sigma
from .verma import (
    composition_multiplicities, contravariant_form, simple_character, singular_vectors,
    verma, verma_hom,
)
from .weyl import WeylElement, phi, tensor_with_M, weyl_multiply

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "BlockType", "TruncatedModule", "Weight", "WeylElement",
    "annihilator_slice", "bgg_check", "block_type", "bracket", "casimir", "center_basis",
    "central_character", "central_ideal_slice", "classify", "commutator_table",
    "compare_slices", "composition_multiplicities", "contravariant_form", "dual_module",
    "ext1", "findim_projective", "generator", "hc_homomorphism", "intersection_check",
    "kappa", "module_hom", "multiply", "parse_element", "phi", "quiver", "sigma",
    "simple_character", "singular_vectors", "tensor_findim", "tensor_with_M",
    "truncated_projective", "verify_central", "verma", "verma_hom", "weyl_multiply",
]
