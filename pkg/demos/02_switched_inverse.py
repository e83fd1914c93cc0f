"""
Building switched-inverse permutations
======================================

G(x) = 1/x + [x in U] where U = V | W. The set W is fixed by two trace
conditions; V is any union of pairs {x, x/(x+1)} taken from VM.
"""

from inv4perm import get_field
from inv4perm.construct import (build_G, build_named, compute_VM, compute_W, format_v_file,
                                parse_v_file, random_V, split_V0_V1, validate_V_exponents,
                                ValidationError)
from inv4perm.vfunc import is_permutation

F = get_field(6)

# W always holds 0 and 1; at n=6 it has 14 elements
print("W:", compute_W(F))

# VM splits into pairs; the number of pairs is log2 of the number of choices of V
pairs = compute_VM(F)
print(len(pairs), "pairs:", [tuple(F.discrete_log(e) for e in p) for p in pairs])

# the pairs split again by Tr(1/x)
v0, v1 = split_V0_V1(F)
print("|V0| =", len(v0), " |V1| =", len(v1))

# a V set written as exponents of the primitive element
spec = validate_V_exponents(F, [21, 42])
G = build_G(spec)
print("G(0) =", G(0), " permutation:", is_permutation(G))

# half a pair is rejected, and the error names the element
try:
    validate_V_exponents(F, [3])
except ValidationError as exc:
    print("rejected:", exc)

# seeded random V sets are reproducible
print(random_V(F, 3, seed=7))

# V files: a field header plus one line per pair
text = format_v_file(spec)
print(text, end="")
print(parse_v_file(text) == spec)

# the seven named functions come from closed trace formulas
for name in ("G1", "G2", "G3", "GM", "F1", "F2", "F3"):
    print(name, build_named(F, name).table[:6])
