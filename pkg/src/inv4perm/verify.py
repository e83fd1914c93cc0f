"""Finite, executable checks of the lemmas behind the construction.

Each ``check_*`` sweep returns a :class:`Report`; the smaller helpers return
plain values. Sweeps that would cost more than about 2^30 field operations
fall back to seeded random sampling; the sample size is recorded in the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .construct import (SubsetSpec, build_G, compute_VM, compute_W, phi_table,
                        random_V, vm_mask, w_mask)
from .gf2n import FieldSpec


@dataclass
class Report:
    name: str
    n: int
    passed: bool = True
    checked: int = 0
    details: dict = dc_field(default_factory=dict)
    counterexamples: list = dc_field(default_factory=list)

    def fail(self, **example):
        self.passed = False
        if len(self.counterexamples) < 10:
            self.counterexamples.append(
                {k: (f"{v:#x}" if isinstance(v, (int, np.integer)) and not isinstance(v, bool) else v)
                 for k, v in example.items()})

    def as_dict(self):
        return {"check": self.name, "n": self.n, "passed": self.passed,
                "checked": self.checked, "details": self.details,
                "counterexamples": self.counterexamples}

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)


# -- quadratics ------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticInstance:
    """a x^2 + b x + c = 0 with a b != 0."""

    a: int
    b: int
    c: int


def quadratic_solvable(field: FieldSpec, q: QuadraticInstance) -> bool:
    if q.a == 0 or q.b == 0:
        raise ValueError("degenerate quadratic: need a*b != 0")
    b2 = field.mul(q.b, q.b)
    return field.trace(field.div(field.mul(q.a, q.c), b2)) == 0


def quadratic_roots(field: FieldSpec, a: int, b: int, c: int) -> list[int]:
    """All roots by trying every field element."""
    x = field.elements
    val = field.mul_vec(a, field.mul_vec(x, x)) ^ field.mul_vec(b, x) ^ c
    return [int(r) for r in np.flatnonzero(val == 0)]


def _alpha_table(field):
    # For each b, the smaller alpha != 0 with alpha + 1/alpha = b, else -1.
    cached = getattr(field, "_alpha_cache", None)
    if cached is None:
        x = field.elements[1:]
        keys = x ^ field.inv_table[1:]
        cached = np.full(field.size, field.size, dtype=np.int64)
        np.minimum.at(cached, keys, x)
        cached[cached == field.size] = -1
        cached.flags.writeable = False
        field._alpha_cache = cached
    return cached


def solve_alpha(field: FieldSpec, b: int) -> int | None:
    """An alpha with alpha + 1/alpha = b, or None when Tr(1/b) = 1."""
    if b in (0, 1):
        raise ValueError("b must lie outside F_2")
    alpha = int(_alpha_table(field)[field.check(b)])
    return None if alpha < 0 else alpha


def lemma25_roots(field: FieldSpec, b: int) -> tuple[int, int]:
    """Roots of x^2 + x/b + 1/(b(b+1)) via b = 1 + alpha + 1/alpha.

    x1 = 1/(1 + a w + 1/(a w)), x2 = the same with w^2, w of order 3.
    """
    if b in (0, 1):
        raise ValueError("b must lie outside F_2")
    alpha = solve_alpha(field, b ^ 1)
    if alpha is None:
        raise ValueError(f"{b:#x} is not of the form 1 + alpha + 1/alpha (Tr(1/(b+1)) = 1)")
    w = field.element_of_order_3()
    out = []
    for root_of_unity in (w, field.mul(w, w)):
        aw = field.mul(alpha, root_of_unity)
        out.append(field.inv(1 ^ aw ^ field.inv(aw)))
    return out[0], out[1]


def lemma25_quadratic(field: FieldSpec, b: int, x: int) -> int:
    """Value of x^2 + x/b + 1/(b(b+1))."""
    ib = field.inv(b)
    return field.mul(x, x) ^ field.mul(ib, x) ^ field.inv(field.mul(b, b ^ 1))


def _lemma25_bs(field):
    tr, inv, x = field.trace_table, field.inv_table, field.elements
    ok = (tr[inv[x ^ 1]] == 0) & (x > 1)
    return [int(b) for b in np.flatnonzero(ok)]


# -- sweeps ------------------------------------------------------------------------

def check_lemma23(field: FieldSpec, samples: int = 256, seed: int = 0) -> Report:
    """Trace criterion vs brute-force root counting, all c for each (a, b).

    Every (a, b) with a b != 0 for n <= 8; ``samples`` random pairs above.
    """
    rep = Report("lemma23", field.n)
    q = field.size
    x = field.elements
    x2 = field.mul_vec(x, x)
    if field.n <= 8:
        ab = [(a, b) for a in range(1, q) for b in range(1, q)]
    else:
        rng = np.random.default_rng(seed)
        ab = [tuple(int(v) for v in p) for p in rng.integers(1, q, size=(samples, 2))]
        rep.details["samples"] = samples
    for a, b in ab:
        lin = field.mul_vec(a, x2) ^ field.mul_vec(b, x)  # a x^2 + b x
        counts = np.bincount(lin, minlength=q)  # roots of a x^2 + b x + c, per c
        scale = field.div(a, field.mul(b, b))
        pred = field.trace_table[field.mul_vec(scale, x)] == 0
        rep.checked += q
        for c in np.flatnonzero(counts != np.where(pred, 2, 0))[:3]:
            rep.fail(a=a, b=b, c=int(c), roots=int(counts[c]))
    return rep


def check_lemma24(field: FieldSpec) -> Report:
    rep = Report("lemma24", field.n)
    for b in range(2, field.size):
        alpha = solve_alpha(field, b)
        predicted = field.trace(field.inv(b)) == 0
        rep.checked += 1
        if (alpha is not None) != predicted:
            rep.fail(b=b, found_alpha=alpha is not None)
        elif alpha is not None:
            if alpha ^ field.inv(alpha) != b:
                rep.fail(b=b, alpha=alpha)
            ia = field.inv(alpha)
            if ia ^ field.inv(ia) != b:
                rep.fail(b=b, alpha_inverse=ia)
    return rep


def check_lemma25(field: FieldSpec) -> Report:
    rep = Report("lemma25", field.n)
    for b in _lemma25_bs(field):
        x1, x2 = lemma25_roots(field, b)
        rep.checked += 1
        if lemma25_quadratic(field, b, x1) or lemma25_quadratic(field, b, x2) or x1 == x2:
            rep.fail(b=b, x1=x1, x2=x2)
        if x1 ^ x2 != field.inv(b) or field.mul(x1, x2) != field.inv(field.mul(b, b ^ 1)):
            rep.fail(b=b, vieta=False)
    return rep


def partial_fraction_holds(field: FieldSpec, alpha: int) -> bool:
    """1/(1+aw+1/(aw)) + 1/(1+aw^2+1/(aw^2)) == 1/(1+a+1/a), alpha outside F_4."""
    w = field.element_of_order_3()
    w2 = field.mul(w, w)

    def term(y):
        return field.inv(1 ^ y ^ field.inv(y))

    return term(field.mul(alpha, w)) ^ term(field.mul(alpha, w2)) == term(alpha)


def check_prop35(field: FieldSpec, b: int) -> dict:
    x1, x2 = lemma25_roots(field, b)
    tr, inv = field.trace, field.inv
    one = tr(inv(x1 ^ 1)) == 0 and tr(inv(x2 ^ 1)) == 0
    two = (tr(x1) ^ tr(x2)) == tr(inv(b))
    return {"b": b, "x1": x1, "x2": x2, "identity1": one, "identity2": two}


def check_prop35_all(field: FieldSpec, alpha_samples: int = 100, seed: int = 0) -> Report:
    rep = Report("prop35", field.n)
    for b in _lemma25_bs(field):
        r = check_prop35(field, b)
        rep.checked += 1
        if not (r["identity1"] and r["identity2"]):
            rep.fail(**r)
    rng = np.random.default_rng(seed)
    w = field.element_of_order_3()
    f4 = {0, 1, w, field.mul(w, w)}
    pool = [a for a in range(field.size) if a not in f4]
    for alpha in rng.choice(pool, size=min(alpha_samples, len(pool)), replace=False):
        if not partial_fraction_holds(field, int(alpha)):
            rep.fail(alpha=int(alpha))
    rep.details["alpha_samples"] = min(alpha_samples, len(pool))
    return rep


def check_lemma34(field: FieldSpec) -> Report:
    """{1/(1+a+1/a) : a in F} == {x : Tr(1/(x+1)) = 0}, with 0^-1 = 0 throughout."""
    rep = Report("lemma34", field.n)
    x = field.elements
    inv, tr = field.inv_table, field.trace_table
    s = x ^ inv  # a + 1/a
    lhs = set(int(v) for v in inv[1 ^ s])
    rhs = set(int(v) for v in np.flatnonzero(tr[inv[x ^ 1]] == 0))
    half = field.size // 2
    image_counts = np.bincount(s, minlength=field.size)
    two_to_one = bool(np.all((image_counts == 0) | (image_counts == 2)))
    rep.checked = field.size
    rep.details.update(lhs_size=len(lhs), rhs_size=len(rhs), two_to_one=two_to_one)
    if lhs != rhs:
        for v in sorted(lhs ^ rhs)[:5]:
            rep.fail(element=v, in_lhs=v in lhs)
    if len(lhs) != half or len(rhs) != half or not two_to_one:
        rep.fail(sizes=[len(lhs), len(rhs)], two_to_one=two_to_one)
    return rep


@dataclass
class CaseReport:
    a: int
    b: int
    solutions: list
    case1: list
    case2: list
    equations_hold: bool
    eq4_roots: list
    eq5_roots: list

    @property
    def count(self):
        return len(self.solutions)


def check_theorem36_cases(spec: SubsetSpec, a: int, b: int) -> CaseReport:
    """Solve G(x+a) + G(x) = b by brute force and classify every solution.

    Case 1: x and x+a both in U or both outside; then 1/x + 1/(x+a) = b.
    Case 2: exactly one of them in U;            then 1/x + 1/(x+a) = b + 1.
    Also returns the roots of b x^2 + a b x + a and (b+1) x^2 + a(b+1) x + a.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    fld = spec.field
    g = build_G(spec).table
    x = fld.elements
    sols = np.flatnonzero((g[x ^ a] ^ g) == b)
    u = spec.u_indicator
    inv = fld.inv_table
    c1, c2, ok = [], [], True
    for s in sols:
        lhs = int(inv[s] ^ inv[s ^ a])
        if u[s] == u[s ^ a]:
            c1.append(int(s))
            ok &= lhs == b
        else:
            c2.append(int(s))
            ok &= lhs == b ^ 1
    eq4 = quadratic_roots(fld, b, fld.mul(a, b), a) if b else []
    eq5 = quadratic_roots(fld, b ^ 1, fld.mul(a, b ^ 1), a) if b != 1 else []
    return CaseReport(a, b, [int(s) for s in sols], c1, c2, ok, eq4, eq5)


def check_theorem36(spec: SubsetSpec, a_values=None) -> Report:
    """Count solutions of G(x+a) + G(x) = b for every b and each listed a.

    Checks the case split for every x, the bound of 4 solutions, and the two
    special sub-cases (a b = 1 with a in V; a (b+1) = 1 with a outside U and
    Tr(1/(a+1)) = 0) via :func:`check_theorem36_cases`.
    """
    fld = spec.field
    rep = Report("thm36", fld.n)
    g = build_G(spec).table
    u = spec.u_indicator.astype(np.int64)
    vm = vm_mask(fld)
    tr, inv, x = fld.trace_table, fld.inv_table, fld.elements
    if a_values is None:
        a_values = range(1, fld.size)
    worst = 0
    for a in a_values:
        a = int(a)
        d = g[x ^ a] ^ g
        expected = inv ^ inv[x ^ a] ^ (u ^ u[x ^ a])
        if not np.array_equal(d, expected):
            rep.fail(a=a, case_split=False)
        counts = np.bincount(d, minlength=fld.size)
        rep.checked += fld.size
        worst = max(worst, int(counts.max()))
        for b in np.flatnonzero(counts > 4)[:3]:
            rep.fail(a=a, b=int(b), solutions=int(counts[b]))
        if vm[a] and u[a]:
            b = fld.inv(a)
            r = check_theorem36_cases(spec, a, b)
            if r.eq5_roots:
                rep.fail(a=a, b=b, eq5_roots=len(r.eq5_roots))
        if not u[a] and tr[inv[a ^ 1]] == 0:
            b = fld.inv(a) ^ 1
            r = check_theorem36_cases(spec, a, b)
            roots = r.eq4_roots
            if len(roots) != 2 or tr[roots[0]] == tr[roots[1]]:
                rep.fail(a=a, b=b, eq4_roots=roots)
    rep.details["max_solutions"] = worst
    return rep


def check_prop41(field: FieldSpec) -> Report:
    rep = Report("prop41", field.n)
    n = field.n
    vm = int(vm_mask(field).sum())
    w = int(w_mask(field).sum())
    lo, hi = 2 ** (n - 2) - 2 ** (n // 2 - 1), 2 ** (n - 2) + 2 ** (n // 2 - 1)
    lo2, hi2 = 2 ** (n - 1) - 2 ** (n // 2), 2 ** (n - 1) + 2 ** (n // 2)
    rep.checked = field.size
    rep.details.update(vm_size=vm, w_size=w, pairs=vm // 2, bounds=[lo, hi])
    if vm != w:
        rep.fail(vm_size=vm, w_size=w)
    if not (lo <= vm <= hi and lo2 <= vm + w <= hi2):
        rep.fail(bounds=[lo, hi], vm_size=vm)
    return rep


def check_u_closure(spec: SubsetSpec) -> bool:
    u = spec.u_indicator
    return bool(np.all(u[phi_table(spec.field)[u]]))


def check_w_vm_partition(field: FieldSpec) -> bool:
    tr, inv, x = field.trace_table, field.inv_table, field.elements
    same = tr[x] == tr[inv[x ^ 1]]
    w, vm = w_mask(field), vm_mask(field)
    return bool(np.array_equal(w | vm, same) and not np.any(w & vm))


def lemma48_sum(field: FieldSpec, a: int, b: int, c: int) -> int:
    """Sum over Tr(x)=c of (-1)^(Tr(ax + b/x + 1/(x+1)) + Tr(1/x) Tr(1/(x+1)))."""
    x = field.elements
    tr, inv = field.trace_table, field.inv_table
    inner = field.mul_vec(a, x) ^ field.mul_vec(b, inv) ^ inv[x ^ 1]
    e = tr[inner] ^ (tr[inv] & tr[inv[x ^ 1]])
    sel = tr[x] == c
    return int(np.sum(1 - 2 * e[sel].astype(np.int64)))


def lemma48_bound(n: int) -> int:
    return 6 * 2 ** (n // 2) + 4


def check_lemma48(field: FieldSpec, samples: int = 50, seed: int = 0) -> Report:
    rep = Report("lemma48", field.n)
    rng = np.random.default_rng(seed)
    bound = lemma48_bound(field.n)
    worst = 0
    for a, b in rng.integers(1, field.size, size=(samples, 2)):
        for c in (0, 1):
            s = lemma48_sum(field, int(a), int(b), c)
            worst = max(worst, abs(s))
            rep.checked += 1
            if abs(s) > bound:
                rep.fail(a=int(a), b=int(b), c=c, value=s)
    rep.details.update(bound=bound, max_abs=worst, samples=samples)
    return rep


def check_theorem36_random(field: FieldSpec, specs: int = 20, seed: int = 0,
                           a_samples: int = 64) -> Report:
    """Theorem sweep over seeded random V sets.

    Every a is used while the (a, x) grid stays under 2^20 entries, otherwise
    ``a_samples`` random differences per V set.
    """
    rep = Report("thm36", field.n)
    rng = np.random.default_rng(seed)
    npairs = len(compute_VM(field))
    exhaustive = field.size * field.size <= 1 << 20
    for i in range(specs):
        spec = random_V(field, int(rng.integers(0, npairs + 1)), seed * 1000 + i)
        a_values = None if exhaustive else rng.integers(1, field.size, size=a_samples)
        sub = check_theorem36(spec, a_values)
        rep.checked += sub.checked
        rep.details["max_solutions"] = max(rep.details.get("max_solutions", 0),
                                           sub.details["max_solutions"])
        if not sub.passed:
            rep.passed = False
            rep.counterexamples += sub.counterexamples[:2]
    rep.details.update(specs=specs, exhaustive=exhaustive)
    return rep


def check_w_contains_0_1(field: FieldSpec) -> bool:
    w = set(compute_W(field))
    return 0 in w and 1 in w
