"""
Screening for CCZ-inequivalence
===============================

Functions whose (NL, differential spectrum, extended Walsh spectrum)
signatures differ are certainly inequivalent. Equal signatures settle
nothing.
"""

from inv4perm import get_field
from inv4perm.construct import NAMED, build_G, build_named, random_V
from inv4perm.spectra import invariant_signature, signature_partition

F = get_field(6)

named = [build_named(F, name) for name in NAMED]
print("named functions:", signature_partition(named))

# random V sets: how many signature classes do they reach?
sample = [build_G(random_V(F, k % 8, seed=k)) for k in range(40)]
groups = signature_partition(sample)
print(len(groups), "classes among", len(sample), "random G")
for g in groups:
    s = invariant_signature(sample[g[0]])
    print(len(g), "members  NL", s.nonlinearity, dict(s.diff_spectrum))
