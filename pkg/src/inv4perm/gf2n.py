"""Arithmetic in GF(2^n) over a polynomial basis.

Elements are plain integers whose bit i is the coefficient of X^i, so an
element's value doubles as its index into lookup tables. A :class:`FieldSpec`
precomputes exp/log/inverse/trace tables once; all element operations are
table lookups afterwards. ``inv(0)`` is defined to be 0 everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Conway polynomials over F_2 (the default field representation of Magma
# and GAP), keyed by degree; bit i is the coefficient of X^i.
CONWAY = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10001101111,
    11: 0b100000000101,
    12: 0b1000011101011,
    13: 0b10000000011011,
    14: 0b100000010101001,
    15: 0b1000000000110101,
    16: 0b10000000000101101,
    17: 0b100000000000001001,
    18: 0b1000001010000000011,
    19: 0b10000000000000100111,
    20: 0b100000000011011110011,
}

MAX_DEGREE = 20


class FieldError(ValueError):
    pass


def _factor(m):
    primes = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return primes


def _polymulmod(a, b, poly, n):
    r = 0
    top = 1 << n
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def _polypowmod(a, e, poly, n):
    r = 1
    while e:
        if e & 1:
            r = _polymulmod(r, a, poly, n)
        a = _polymulmod(a, a, poly, n)
        e >>= 1
    return r


def _polygcd(a, b):
    while b:
        while a and a.bit_length() >= b.bit_length():
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def is_irreducible(poly: int) -> bool:
    """Rabin's test for a binary polynomial given as an int."""
    n = poly.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # X^(2^n) == X (mod poly)
    x = 0b10
    t = x
    for _ in range(n):
        t = _polymulmod(t, t, poly, n)
    if t != x:
        return False
    for q in _factor(n):
        t = x
        for _ in range(n // q):
            t = _polymulmod(t, t, poly, n)
        if _polygcd(poly, t ^ x) != 1:
            return False
    return True


def _vec_mul(a, b, poly, n):
    """Elementwise carry-less product of two uint32 arrays, reduced."""
    a = a.astype(np.uint32).copy()
    b = b.astype(np.uint32)
    r = np.zeros_like(a)
    top = np.uint32(1 << n)
    red = np.uint32(poly)
    for i in range(n):
        r ^= np.where((b >> np.uint32(i)) & np.uint32(1), a, np.uint32(0))
        a <<= np.uint32(1)
        a ^= np.where(a & top, red, np.uint32(0))
    return r


class FieldSpec:
    """GF(2^n) with reduction polynomial ``poly`` and primitive element ``xi``.

    Construction validates irreducibility and the order of ``xi`` and builds
    the lookup tables. Instances are immutable; share them freely.
    """

    def __init__(self, n: int, poly: int | None = None, xi: int = 0b10):
        if not 1 <= n <= MAX_DEGREE:
            raise FieldError(f"field degree must be in [1, {MAX_DEGREE}], got {n}")
        if poly is None:
            if n not in CONWAY:
                raise FieldError(f"no built-in polynomial for n={n}")
            poly = CONWAY[n]
        if poly.bit_length() != n + 1:
            raise FieldError(f"reduction polynomial {poly:#x} does not have degree {n}")
        if not is_irreducible(poly):
            raise FieldError(f"reduction polynomial {poly:#x} is reducible")
        if not 0 < xi < (1 << n):
            raise FieldError(f"primitive element {xi:#x} out of range")
        order = (1 << n) - 1
        for q in _factor(order):
            if _polypowmod(xi, order // q, poly, n) == 1:
                raise FieldError(f"element {xi:#x} is not primitive modulo {poly:#x}")

        self.n = n
        self.poly = poly
        self.xi = xi
        self.size = 1 << n
        self.order = order
        self._build_tables()

    def _build_tables(self):
        n, q = self.n, self.size
        exp = np.zeros(2 * self.order, dtype=np.int64)
        exp[0] = 1
        filled = 1
        step = self.xi  # xi ** filled
        while filled < self.order:
            take = min(filled, self.order - filled)
            exp[filled:filled + take] = _vec_mul(
                exp[:take], np.full(take, step, dtype=np.uint32), self.poly, n)
            filled += take
            step = _polypowmod(self.xi, filled, self.poly, n)
        exp[self.order:] = exp[:self.order]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[:self.order]] = np.arange(self.order)
        if np.any(log[1:] < 0):
            raise FieldError("powers of xi do not cover the multiplicative group")

        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(self.order - log[1:]) % self.order]

        # Tr is F_2-linear: Tr(y) = parity(y & mask) with mask bit i = Tr(X^i).
        self.trace_mask = 0
        for i in range(n):
            t = 0
            s = 1 << i
            for _ in range(n):
                t ^= s
                s = _polymulmod(s, s, self.poly, n)
            if t not in (0, 1):
                raise FieldError("trace computation left the prime field")
            self.trace_mask |= t << i
        elems = np.arange(q, dtype=np.int64)
        tr = (np.bitwise_count(elems & self.trace_mask) & 1).astype(np.uint8)

        for arr in (exp, log, inv, tr):
            arr.flags.writeable = False
        self.exp_table = exp
        self.log_table = log
        self.inv_table = inv
        self.trace_table = tr
        self.elements = elems
        elems.flags.writeable = False

    def __repr__(self):
        return f"FieldSpec(n={self.n}, poly={self.poly:#x}, xi={self.xi:#x})"

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.n, self.poly, self.xi) == (other.n, other.poly, other.xi)

    def __hash__(self):
        return hash((self.n, self.poly, self.xi))

    # -- scalar operations on int-encoded elements ------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise FieldError(f"{x:#x} is not an element of GF(2^{self.n})")
        return x

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp_table[self.log_table[x] + self.log_table[y]])

    def inv(self, x: int) -> int:
        return int(self.inv_table[x])

    def inv_euclid(self, x: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if x == 0:
            return 0
        r0, r1 = self.poly, x
        s0, s1 = 0, 1
        while r1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 ^ _clmul(q, s1)
        return _reduce(s0, self.poly)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise FieldError("negative exponent")
        if e == 0:
            return 1
        if x == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[x]) * e) % self.order])

    def pow_naive(self, x: int, e: int) -> int:
        """Square-and-multiply without the log tables."""
        if e < 0:
            raise FieldError("negative exponent")
        return _polypowmod(x, e, self.poly, self.n)

    def trace(self, x: int) -> int:
        return int(self.trace_table[x])

    def trace_power_sum(self, x: int) -> int:
        """Tr(x) as the literal sum x + x^2 + ... + x^(2^(n-1))."""
        t, s = 0, x
        for _ in range(self.n):
            t ^= s
            s = _polymulmod(s, s, self.poly, self.n)
        return t

    def linear_mask(self, b: int) -> int:
        """Mask m with Tr(b*y) = parity(y & m) for every y."""
        m = 0
        for i in range(self.n):
            m |= self.trace(self.mul(b, 1 << i)) << i
        return m

    def primitive_power(self, k: int) -> int:
        return int(self.exp_table[k % self.order])

    def discrete_log(self, x: int) -> int:
        if x == 0:
            raise FieldError("discrete log of 0 is undefined")
        return int(self.log_table[self.check(x)])

    def element_of_order_3(self) -> int:
        if self.n % 2:
            raise FieldError(f"GF(2^{self.n}) has no element of order 3 (n odd)")
        return int(self.exp_table[self.order // 3])

    # -- vectorised operations on integer arrays ---------------------------

    def mul_vec(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        nz = (x != 0) & (y != 0)
        lx = self.log_table[np.where(nz, x, 1)]
        ly = self.log_table[np.where(nz, y, 1)]
        return np.where(nz, self.exp_table[lx + ly], 0)

    def inv_vec(self, x):
        return self.inv_table[np.asarray(x, dtype=np.int64)]

    def trace_vec(self, x):
        return self.trace_table[np.asarray(x, dtype=np.int64)]

    # -- element wrappers and config text ----------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            value = value.value
        return FieldElement(self, self.check(int(value)))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def generator(self):
        return FieldElement(self, self.xi)

    def to_config(self) -> str:
        return f"n={self.n}, poly={self.poly:x}, xi={self.xi:x}"

    @classmethod
    def from_config(cls, text: str) -> "FieldSpec":
        items = dict(re.findall(r"(\w+)\s*=\s*([0-9a-fA-Fx]+)", text))
        if "n" not in items:
            raise FieldError(f"field config lacks n=: {text!r}")
        n = int(items["n"])
        poly = int(items["poly"], 16) if "poly" in items else None
        xi = int(items["xi"], 16) if "xi" in items else 0b10
        return get_field(n, poly, xi)


def _clmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _polydivmod(a, b):
    q = 0
    d = b.bit_length()
    while a.bit_length() >= d:
        s = a.bit_length() - d
        q |= 1 << s
        a ^= b << s
    return q, a


def _reduce(a, poly):
    d = poly.bit_length()
    while a.bit_length() >= d:
        a ^= poly << (a.bit_length() - d)
    return a


@lru_cache(maxsize=None)
def get_field(n: int, poly: int | None = None, xi: int = 0b10) -> FieldSpec:
    """Cached field constructor; Conway polynomial when ``poly`` is None."""
    return FieldSpec(n, poly, xi)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field.n != self.field.n or other.field.poly != self.field.poly:
                raise FieldError(
                    f"mismatched fields: GF(2^{self.field.n}) vs GF(2^{other.field.n})")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.div(self.value, v))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self):
        return self.field.trace(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF(2^{self.field.n})({self.value:#x})"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def pow(x: FieldElement, e: int) -> FieldElement:  # noqa: A001
    return x ** e


def trace(x: FieldElement) -> int:
    return x.trace()


def element_of_order_3(field: FieldSpec) -> FieldElement:
    return FieldElement(field, field.element_of_order_3())


def discrete_log(x: FieldElement) -> int:
    return x.field.discrete_log(x.value)
