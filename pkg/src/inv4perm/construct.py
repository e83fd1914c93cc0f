"""Trace-defined subsets and the switched-inverse permutations built from them.

For even n, with Tr the absolute trace and 0^-1 = 0:

* ``W``  = {x : Tr(x) = Tr(1/(x+1)) = 0}
* ``VM`` = {x : Tr(x) = Tr(1/(x+1)) = 1}, a union of pairs {x, x/(x+1)}
* ``V`` is any union of such pairs, ``U = V | W``, and ``G(x) = 1/x + [x in U]``.

``G`` is always a permutation and differentially 4-uniform.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

import numpy as np

from .gf2n import FieldSpec
from .vfunc import VFunc, is_permutation

NAMED = ("G1", "G2", "G3", "GM", "F1", "F2", "F3")


class ValidationError(ValueError):
    """A proposed V set breaks the trace or pairing condition."""

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


def _require_even(field):
    if field.n % 2:
        raise ValueError(f"construction needs even n, got n={field.n}")


def _traces(field):
    x = field.elements
    tr = field.trace_table
    inv = field.inv_table
    return tr[x], tr[inv[x ^ 1]], tr[inv[x]]


def phi_involution(field: FieldSpec, x: int) -> int:
    """1/(1/x + 1): x/(x+1) away from {0, 1}, and swaps 0 and 1."""
    return field.inv(field.inv(x) ^ 1)


def phi_table(field: FieldSpec) -> np.ndarray:
    return field.inv_table[field.inv_table ^ 1]


def w_mask(field: FieldSpec) -> np.ndarray:
    _require_even(field)
    t_x, t_x1, _ = _traces(field)
    return (t_x == 0) & (t_x1 == 0)


def vm_mask(field: FieldSpec) -> np.ndarray:
    _require_even(field)
    t_x, t_x1, _ = _traces(field)
    return (t_x == 1) & (t_x1 == 1)


def compute_W(field: FieldSpec) -> list[int]:
    return [int(x) for x in np.flatnonzero(w_mask(field))]


def pairs_of(field: FieldSpec, elements) -> list[tuple[int, int]]:
    """Group a pair-closed element collection into (smaller, larger) pairs."""
    phi = phi_table(field)
    out = []
    for x in sorted(set(int(e) for e in elements)):
        partner = int(phi[x])
        if x < partner:
            out.append((x, partner))
    return out


def compute_VM(field: FieldSpec) -> list[tuple[int, int]]:
    """All pairs {x, x/(x+1)} with both traces 1, ordered by representative."""
    return pairs_of(field, np.flatnonzero(vm_mask(field)))


def split_V0_V1(field: FieldSpec) -> tuple[list[int], list[int]]:
    vm = vm_mask(field)
    _, _, t_inv = _traces(field)
    v0 = np.flatnonzero(vm & (t_inv == 0))
    v1 = np.flatnonzero(vm & (t_inv == 1))
    return [int(x) for x in v0], [int(x) for x in v1]


def count_v_sets(field: FieldSpec) -> int:
    """log2 of the number of admissible V sets (= number of VM pairs)."""
    return int(vm_mask(field).sum()) // 2


def count_v_sets_with(field: FieldSpec, pair_count: int) -> int:
    return comb(count_v_sets(field), pair_count)


@dataclass(frozen=True, eq=False)
class SubsetSpec:
    """A validated V together with the indicator of U = V | W."""

    field: FieldSpec
    v_pairs: tuple[tuple[int, int], ...]
    u_indicator: np.ndarray

    @property
    def v_elements(self) -> list[int]:
        return sorted(e for p in self.v_pairs for e in p)

    @property
    def u_elements(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.u_indicator)]

    def v_exponents(self) -> list[int]:
        return sorted(self.field.discrete_log(x) for x in self.v_elements)

    def __eq__(self, other):
        if not isinstance(other, SubsetSpec):
            return NotImplemented
        return self.field == other.field and self.v_pairs == other.v_pairs

    def __hash__(self):
        return hash((self.field, self.v_pairs))

    def __repr__(self):
        return f"SubsetSpec(n={self.field.n}, V exponents={self.v_exponents()})"


def validate_V(field: FieldSpec, elements) -> SubsetSpec:
    """Check a proposed V and assemble U. Nothing is auto-completed."""
    _require_even(field)
    elems = set()
    for e in elements:
        e = int(e)
        field.check(e)
        elems.add(e)
    vm = vm_mask(field)
    t_x, t_x1, _ = _traces(field)
    for x in sorted(elems):
        if not vm[x]:
            raise ValidationError(
                f"element {x:#x} has Tr(x)={t_x[x]}, Tr(1/(x+1))={t_x1[x]}; both must be 1",
                element=x)
    phi = phi_table(field)
    for x in sorted(elems):
        if int(phi[x]) not in elems:
            raise ValidationError(
                f"element {x:#x} is missing its partner {int(phi[x]):#x} = x/(x+1)",
                element=x)
    u = w_mask(field).copy()
    if elems:
        u[sorted(elems)] = True
    u.flags.writeable = False
    return SubsetSpec(field, tuple(pairs_of(field, elems)), u)


def validate_V_exponents(field: FieldSpec, exponents) -> SubsetSpec:
    return validate_V(field, [field.primitive_power(e) for e in exponents])


def random_V(field: FieldSpec, pair_count: int, seed: int) -> SubsetSpec:
    pairs = compute_VM(field)
    if not 0 <= pair_count <= len(pairs):
        raise ValueError(f"pair_count must be in [0, {len(pairs)}], got {pair_count}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(pairs), size=pair_count, replace=False)
    return validate_V(field, [e for i in sorted(chosen) for e in pairs[i]])


def build_G(spec: SubsetSpec) -> VFunc:
    f = VFunc(spec.field, spec.field.inv_table ^ spec.u_indicator.astype(np.int64))
    if not is_permutation(f):
        raise RuntimeError("switched inverse is not a permutation; field tables are inconsistent")
    return f


# -- named members ------------------------------------------------------------

def _closed_form(field: FieldSpec, name: str) -> np.ndarray:
    x = field.elements
    inv = field.inv_table
    t_x, t_x1, t_inv = _traces(field)
    base = inv ^ 1 ^ t_x ^ t_x1  # 1/x + 1 + Tr(x + 1/(x+1))
    if name == "GM":
        return base
    if name == "G1":
        return base ^ (t_x & t_inv & t_x1)
    if name == "G2":
        return base ^ (t_x & (t_inv ^ 1) & t_x1)
    if name == "G3":
        return base ^ (t_x & t_x1)
    if name == "F1":
        return inv[x ^ (t_inv & t_x1)]
    if name == "F2":
        return inv[x ^ ((1 ^ t_x) & t_inv & t_x1)]
    if name == "F3":
        return inv[x ^ (t_x & t_inv & t_x1)]
    raise ValueError(f"unknown function name {name!r}; expected one of {NAMED}")


def closed_form(field: FieldSpec, name: str) -> VFunc:
    """The named function evaluated straight from its trace formula."""
    _require_even(field)
    return VFunc(field, _closed_form(field, name).astype(np.int64), name)


def named_subset(field: FieldSpec, name: str) -> SubsetSpec:
    v0, v1 = split_V0_V1(field)
    if name == "G1":
        return validate_V(field, v0)
    if name == "G2":
        return validate_V(field, v1)
    if name == "G3":
        return validate_V(field, [])
    if name == "GM":
        return validate_V(field, v0 + v1)
    raise ValueError(f"{name!r} is not a member of the switched-inverse family")


def build_named(field: FieldSpec, name: str) -> VFunc:
    if name not in NAMED:
        raise ValueError(f"unknown function name {name!r}; expected one of {NAMED}")
    if field.n % 2 or field.n < 6:
        raise ValueError(f"named functions need even n >= 6, got n={field.n}")
    direct = closed_form(field, name)
    if name.startswith("F"):
        return direct
    via_set = build_G(named_subset(field, name))
    if via_set != direct:
        raise RuntimeError(f"{name}: set-based and closed-form tables disagree")
    return direct


# -- V-set text format --------------------------------------------------------

def parse_v_file(text: str, field: FieldSpec | None = None) -> SubsetSpec:
    """Parse ``field n=<int>`` followed by ``pair e1 e2`` / ``pairhex h1 h2`` lines."""
    elements = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "field":
            header = " ".join(words[1:])
            continue
        if header is None and field is None:
            raise ValidationError(f"line {lineno}: expected 'field n=<int>' header first")
        if field is None:
            field = FieldSpec.from_config(header)
        if words[0] == "pair" and len(words) == 3:
            elements += [field.primitive_power(int(w)) for w in words[1:]]
        elif words[0] == "pairhex" and len(words) == 3:
            elements += [field.check(int(w, 16)) for w in words[1:]]
        else:
            raise ValidationError(f"line {lineno}: cannot parse {raw!r}")
    if field is None:
        if header is None:
            raise ValidationError("missing 'field n=<int>' header")
        field = FieldSpec.from_config(header)
    elif header is not None:
        declared = int(re.search(r"n\s*=\s*(\d+)", header).group(1))
        if declared != field.n:
            raise ValidationError(f"V file is for n={declared}, field has n={field.n}")
    return validate_V(field, elements)


def format_v_file(spec: SubsetSpec, hex_elements: bool = False) -> str:
    f = spec.field
    lines = [f"field n={f.n}"]
    for x, y in spec.v_pairs:
        if hex_elements:
            lines.append(f"pairhex {x:x} {y:x}")
        else:
            a, b = sorted((f.discrete_log(x), f.discrete_log(y)))
            lines.append(f"pair {a} {b}")
    return "\n".join(lines) + "\n"

