"""Differentially 4-uniform permutations from the switched inverse function."""

from .gf2n import FieldElement, FieldError, FieldSpec, get_field
from .vfunc import ANF, VFunc, algebraic_degree, anf, inverse_function, is_permutation
from .construct import (NAMED, SubsetSpec, ValidationError, build_G, build_named,
                        compute_VM, compute_W, random_V, split_V0_V1, validate_V,
                        validate_V_exponents)
from .spectra import (DifferentialSpectrum, InvariantSignature, WalshProfile,
                      differential_spectrum, differential_uniformity,
                      invariant_signature, signature_partition, walsh_profile)

__version__ = "0.1.0"
