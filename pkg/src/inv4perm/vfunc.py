"""(n,n)-functions stored as full lookup tables, and their ANF / degree."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field

import numpy as np

from .gf2n import FieldSpec


class VFuncError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VFunc:
    """Lookup table of an (n,n)-function; ``table[x]`` is F(x)."""

    field: FieldSpec
    table: np.ndarray
    name: str = dc_field(default="")

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        if t.shape != (self.field.size,):
            raise VFuncError(
                f"table must have {self.field.size} entries, got shape {t.shape}")
        if t.size and (t.min() < 0 or t.max() >= self.field.size):
            raise VFuncError("table entry outside the field")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    @property
    def n(self):
        return self.field.n

    def __call__(self, x):
        return int(self.table[x])

    def __eq__(self, other):
        if not isinstance(other, VFunc):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.table, other.table)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<VFunc{label} over GF(2^{self.n})>"

    def renamed(self, name):
        return VFunc(self.field, self.table, name)

    # -- serialisation ----------------------------------------------------

    def to_text(self) -> str:
        width = (self.n + 3) // 4
        lines = [f"# field {self.field.to_config()}"]
        if self.name:
            lines.append(f"# name {self.name}")
        lines += [f"{x:0{width}x}:{int(y):0{width}x}" for x, y in enumerate(self.table)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "VFunc":
        field = None
        name = ""
        entries = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("field"):
                    field = FieldSpec.from_config(body[len("field"):])
                elif body.startswith("name"):
                    name = body[len("name"):].strip()
                continue
            m = re.fullmatch(r"([0-9a-fA-F]+)\s*:\s*([0-9a-fA-F]+)", line)
            if not m:
                raise VFuncError(f"line {lineno}: expected index_hex:value_hex, got {raw!r}")
            entries[int(m.group(1), 16)] = int(m.group(2), 16)
        if field is None:
            raise VFuncError("missing '# field n=...' header")
        if sorted(entries) != list(range(field.size)):
            raise VFuncError(f"table must list every index 0..{field.size - 1} exactly once")
        return cls(field, [entries[i] for i in range(field.size)], name)

    def to_json(self) -> str:
        return json.dumps({
            "field": self.field.to_config(),
            "name": self.name,
            "table": [int(v) for v in self.table],
        })

    @classmethod
    def from_json(cls, text: str) -> "VFunc":
        obj = json.loads(text)
        return cls(FieldSpec.from_config(obj["field"]), obj["table"], obj.get("name", ""))


def identity_function(field: FieldSpec) -> VFunc:
    return VFunc(field, field.elements, "identity")


def inverse_function(field: FieldSpec) -> VFunc:
    return VFunc(field, field.inv_table, "inverse")


def from_callable(field: FieldSpec, fn, name="") -> VFunc:
    return VFunc(field, [fn(x) for x in range(field.size)], name)


def is_permutation(f: VFunc) -> bool:
    seen = np.zeros(f.field.size, dtype=bool)
    seen[f.table] = True
    return bool(seen.all())


def moebius(table) -> np.ndarray:
    """Binary Moebius transform applied to every output bit at once.

    Works on the integer table directly: XOR acts bitwise, so bit j of the
    result is the ANF coefficient vector of coordinate j. The transform is
    its own inverse.
    """
    t = np.array(table, dtype=np.int64)
    size = t.size
    h = 1
    while h < size:
        v = t.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h *= 2
    return t


@dataclass(frozen=True)
class ANF:
    """Per output coordinate, the monomials (input-bit masks) with coefficient 1."""

    n: int
    coeffs: np.ndarray  # packed: bit j of coeffs[m] is the coefficient of monomial m in coordinate j

    def monomials(self, j: int) -> list[int]:
        return [int(m) for m in np.flatnonzero((self.coeffs >> j) & 1)]

    def evaluate(self) -> np.ndarray:
        return moebius(self.coeffs)

    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        if nz.size == 0:
            return 0
        return int(np.bitwise_count(nz).max())

    def coordinate_degrees(self) -> list[int]:
        out = []
        weights = np.bitwise_count(np.arange(self.coeffs.size))
        for j in range(self.n):
            hit = ((self.coeffs >> j) & 1).astype(bool)
            out.append(int(weights[hit].max()) if hit.any() else 0)
        return out


def anf(f: VFunc) -> ANF:
    return ANF(f.n, moebius(f.table))


def algebraic_degree(f: VFunc) -> int:
    return anf(f).degree()
