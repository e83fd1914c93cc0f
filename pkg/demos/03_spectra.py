"""
Differential and Walsh spectra
==============================

The differential spectrum is gathered from DDT rows by bincount. The
Walsh values come from a fast Walsh-Hadamard transform of every component.
"""

from inv4perm import algebraic_degree, anf, get_field
from inv4perm.construct import build_named
from inv4perm.spectra import (analysis_record, component_walsh, differential_spectrum,
                              walsh_naive, walsh_profile)
from inv4perm.vfunc import inverse_function

F = get_field(8)
G1 = build_named(F, "G1")

# [#0, #2, #4] over all (a, b) with a != 0
ds = differential_spectrum(G1)
print("spectrum:", ds.triple(), " uniformity:", ds.uniformity, " mass ok:", ds.mass_ok())

# one component transform; index linear_mask(a) holds the Walsh value at a
w = component_walsh(G1, 5)
print(w[F.linear_mask(9)], "==", walsh_naive(G1, 9, 5))

# nonlinearity and the extended Walsh spectrum
p = walsh_profile(G1)
print("NL:", p.nonlinearity, " max |W|:", p.max_abs, " Parseval:", p.parseval_ok)
print("NL of the inverse:", walsh_profile(inverse_function(F)).nonlinearity)

# degree from the algebraic normal form
print("degree:", algebraic_degree(G1), " per coordinate:", anf(G1).coordinate_degrees())

# the record the CLI prints
print(analysis_record(G1, with_ews=False))
