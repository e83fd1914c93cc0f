"""
Arithmetic in GF(2^n)
=====================

Field elements are plain integers whose bits are polynomial-basis
coordinates. The default modulus is the Conway polynomial of degree n and
the primitive element is the class of X.
"""

from inv4perm import get_field

# the field with 64 elements
F = get_field(6)
print(F.to_config())

# addition is XOR, multiplication goes through log/exp tables
a, b = 0b101, 0b11
print("a + b =", F.add(a, b), " a * b =", F.mul(a, b), " 1/a =", F.inv(a))

# by convention the inverse of 0 is 0
print("inv(0) =", F.inv(0))

# powers of the primitive element and discrete logs
x = F.primitive_power(21)
print("xi^21 =", hex(x), " log =", F.discrete_log(x))

# the absolute trace is linear: Tr(y) is the parity of (y & trace_mask)
print("trace mask:", bin(F.trace_mask))
print("Tr(a) =", F.trace(a), " Tr(a + b) == Tr(a) + Tr(b):",
      F.trace(a ^ b) == F.trace(a) ^ F.trace(b))

# an element of multiplicative order 3 exists because n is even
w = F.element_of_order_3()
print("w =", hex(w), " w^3 =", F.pow(w, 3))

# numpy vector forms act on whole tables at once
print(F.mul_vec(a, F.elements)[:8])
