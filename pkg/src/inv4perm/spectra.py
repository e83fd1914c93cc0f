"""Differential and Walsh spectra, nonlinearity and CCZ-invariant signatures.

Everything is exact integer arithmetic on numpy arrays. Work is split into
row blocks (over the input difference ``a`` or the component mask ``b``);
blocks are merged by summing histograms, so any block order or worker count
gives identical results.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .vfunc import VFunc

# Entries per block: large enough to amortise numpy overhead, small enough
# to stay cache-friendly.
BLOCK_ENTRIES = 1 << 20
WALSH_BLOCK_ENTRIES = 1 << 18


def default_workers():
    return os.cpu_count() or 1


def _blocks(start, stop, per_row, entries=BLOCK_ENTRIES):
    rows = max(1, entries // per_row)
    return [(lo, min(lo + rows, stop)) for lo in range(start, stop, rows)]


def _run_blocks(fn, blocks, workers):
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(blocks) == 1:
        return [fn(b) for b in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, blocks))


def _sum_padded(arrays):
    size = max(a.size for a in arrays)
    total = np.zeros(size, dtype=np.int64)
    for a in arrays:
        total[:a.size] += a
    return total


# -- differential -------------------------------------------------------------

@dataclass(frozen=True)
class DifferentialSpectrum:
    """``histogram[delta]`` = number of (a, b), a != 0, with exactly delta solutions."""

    n: int
    histogram: dict

    @property
    def uniformity(self) -> int:
        return max(d for d, c in self.histogram.items() if c)

    def triple(self) -> list[int]:
        """[#0, #2, #4] for a differentially 4-uniform function."""
        if self.uniformity > 4:
            raise ValueError(f"uniformity {self.uniformity} > 4 has no triple form")
        return [self.histogram.get(d, 0) for d in (0, 2, 4)]

    def display(self):
        if self.uniformity <= 4:
            return self.triple()
        return dict(sorted(self.histogram.items()))

    def mass_ok(self) -> bool:
        q = 1 << self.n
        total = (q - 1) * q
        return (sum(self.histogram.values()) == total
                and sum(d * c for d, c in self.histogram.items()) == total
                and all(d % 2 == 0 for d in self.histogram))

    def canonical(self) -> tuple:
        return tuple(sorted((d, c) for d, c in self.histogram.items() if c))


def ddt_row_counts(f: VFunc, a_lo: int, a_hi: int) -> np.ndarray:
    """delta_F(a, b) for a in [a_lo, a_hi), as an array of shape (rows, 2^n)."""
    q = f.field.size
    x = np.arange(q, dtype=np.int64)
    t = f.table
    a = np.arange(a_lo, a_hi, dtype=np.int64)[:, None]
    d = t[x ^ a] ^ t
    keys = (np.arange(a_hi - a_lo, dtype=np.int64)[:, None] << f.n) | d
    return np.bincount(keys.ravel(), minlength=(a_hi - a_lo) * q).reshape(-1, q)


def differential_spectrum(f: VFunc, workers: int | None = None) -> DifferentialSpectrum:
    q = f.field.size

    def block(bounds):
        return np.bincount(ddt_row_counts(f, *bounds).ravel())

    hist = _sum_padded(_run_blocks(block, _blocks(1, q, q), workers))
    return DifferentialSpectrum(f.n, {int(d): int(c) for d, c in enumerate(hist) if c})


def differential_uniformity(f: VFunc, workers: int | None = None) -> int:
    return differential_spectrum(f, workers).uniformity


# -- Walsh ---------------------------------------------------------------------

def _fwht_rows(a):
    # In-place butterflies over the last axis of a C-contiguous 2-D array.
    rows, size = a.shape
    h = 1
    while h < size:
        v = a.reshape(rows, -1, 2, h)
        lo = v[:, :, 0, :].copy()
        v[:, :, 0, :] += v[:, :, 1, :]
        np.subtract(lo, v[:, :, 1, :], out=v[:, :, 1, :])
        h *= 2
    return a


def fwht(values, axis=-1) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform along ``axis`` (integer-exact).

    The input dtype is kept; it must hold values up to the transform length.
    """
    a = np.moveaxis(np.array(values), axis, -1)
    shape = a.shape
    size = shape[-1]
    if size & (size - 1):
        raise ValueError("transform length must be a power of two")
    a = _fwht_rows(np.ascontiguousarray(a.reshape(-1, size)))
    return np.moveaxis(a.reshape(shape), -1, axis)


def _sign_dtype(n):
    # |partial sums| <= 2^n during the transform
    return np.int16 if n <= 14 else np.int32


def _component_signs(f: VFunc, masks) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.int64)[:, None]
    dt = _sign_dtype(f.n)
    parity = np.bitwise_count(f.table[None, :] & masks).astype(dt) & 1
    return 1 - 2 * parity


def component_walsh(f: VFunc, b: int) -> np.ndarray:
    """Walsh values of the component x -> Tr(b F(x)).

    Entry ``u`` is sum_x (-1)^(Tr(b F(x)) + <u, x>). Since Tr(a x) = <m_a, x>
    for the mask m_a = field.linear_mask(a), entry m_a is F^W(a, b).
    """
    if b == 0:
        raise ValueError("component Walsh transform needs b != 0")
    mask = f.field.linear_mask(f.field.check(int(b)))
    return fwht(_component_signs(f, [mask]))[0].astype(np.int64)


def walsh_naive(f: VFunc, a: int, b: int) -> int:
    """F^W(a, b) straight from the defining sum over x."""
    fld = f.field
    x = fld.elements
    e = fld.mul_vec(a, x) ^ fld.mul_vec(b, f.table)
    return int(np.sum(1 - 2 * fld.trace_vec(e).astype(np.int64)))


def walsh_matrix(f: VFunc, b_lo: int = 1, b_hi: int | None = None) -> np.ndarray:
    """Rows of Walsh values for component masks b in [b_lo, b_hi).

    Component masks range over all nonzero linear functionals, i.e. over
    Tr(b .) for all b != 0 up to relabelling.
    """
    if b_hi is None:
        b_hi = f.field.size
    return _fwht_rows(_component_signs(f, np.arange(b_lo, b_hi)))


@dataclass(frozen=True)
class WalshProfile:
    n: int
    extended_spectrum: dict  # |W| -> multiplicity
    max_abs: int
    nonlinearity: int
    # Per-component checks gathered while transforming.
    parseval_ok: bool
    balanced_components: bool

    def canonical(self) -> tuple:
        return tuple(sorted(self.extended_spectrum.items()))


def walsh_profile(f: VFunc, workers: int | None = None) -> WalshProfile:
    q = f.field.size

    def block(bounds):
        w = walsh_matrix(f, *bounds)
        parseval = bool(np.all(np.sum(w.astype(np.int64) ** 2, axis=1) == q * q))
        balanced = bool(np.all(w[:, 0] == 0))
        return np.bincount(np.abs(w).ravel(), minlength=q + 1), parseval, balanced

    parts = _run_blocks(block, _blocks(1, q, q, WALSH_BLOCK_ENTRIES), workers)
    hist = _sum_padded([p[0] for p in parts])
    spectrum = {int(v): int(c) for v, c in enumerate(hist) if c}
    max_abs = max(spectrum)
    return WalshProfile(
        n=f.n,
        extended_spectrum=spectrum,
        max_abs=max_abs,
        nonlinearity=(q >> 1) - max_abs // 2,
        parseval_ok=all(p[1] for p in parts),
        balanced_components=all(p[2] for p in parts),
    )


def nonlinearity(f: VFunc, workers: int | None = None) -> int:
    return walsh_profile(f, workers).nonlinearity


# -- signatures ------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantSignature:
    nonlinearity: int
    diff_spectrum: tuple
    extended_walsh: tuple

    def as_dict(self):
        return {
            "nl": self.nonlinearity,
            "diff_spectrum": {str(d): c for d, c in self.diff_spectrum},
            "ews": [list(p) for p in self.extended_walsh],
        }


def invariant_signature(f: VFunc, workers: int | None = None) -> InvariantSignature:
    ds = differential_spectrum(f, workers)
    wp = walsh_profile(f, workers)
    return InvariantSignature(wp.nonlinearity, ds.canonical(), wp.canonical())


def signature_partition(fs, workers: int | None = None) -> list[list[int]]:
    """Group function indices by equal signature, in order of first appearance.

    Different groups are certainly CCZ-inequivalent; members of one group are
    merely not told apart by these invariants.
    """
    fs = list(fs)
    if fs and any(f.field != fs[0].field for f in fs):
        raise ValueError("all functions must be defined over the same field")
    groups = {}
    for i, f in enumerate(fs):
        groups.setdefault(invariant_signature(f, workers), []).append(i)
    return list(groups.values())


# -- reporting -----------------------------------------------------------------

def analysis_record(f: VFunc, name: str | None = None, with_ews: bool = True,
                    workers: int | None = None, degree: int | None = None) -> dict:
    ds = differential_spectrum(f, workers)
    wp = walsh_profile(f, workers)
    rec = {
        "n": f.n,
        "name": name if name is not None else f.name,
        "nl": wp.nonlinearity,
        "diff_spectrum": {str(d): c for d, c in sorted(ds.histogram.items())},
        "uniformity": ds.uniformity,
    }
    if degree is not None:
        rec["degree"] = degree
    if with_ews:
        rec["ews"] = [[v, c] for v, c in wp.canonical()]
    return rec


def records_to_json(records) -> str:
    return json.dumps(records, indent=None, separators=(",", ":"))


def records_to_csv(records, columns=("name", "n", "nl", "diff_spectrum", "uniformity", "degree")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in records:
        row = []
        for c in columns:
            v = r.get(c, "")
            if c == "diff_spectrum" and isinstance(v, dict):
                v = "[" + ",".join(str(v[k]) for k in sorted(v, key=int)) + "]"
            row.append(v)
        w.writerow(row)
    return buf.getvalue()
