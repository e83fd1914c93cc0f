"""Recompute the four reference tables and diff them against golden fixtures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources

from .construct import build_G, build_named, count_v_sets, validate_V_exponents
from .gf2n import FieldSpec, get_field
from .spectra import differential_spectrum, nonlinearity
from .vfunc import inverse_function

TABLE_FUNCTIONS = ("G1", "G2", "G3", "GM", "F1", "F2", "F3")


def load_fixture(which: int) -> dict:
    text = resources.files("inv4perm").joinpath(f"data/table{which}.json").read_text()
    return json.loads(text)


def nl_bound(n: int, c: int, d: int) -> int:
    """2^(n-1) - c * 2^(n/2) - d."""
    return 2 ** (n - 1) - c * 2 ** (n // 2) - d


@dataclass
class Cell:
    row: str
    column: str
    expected: object
    computed: object

    @property
    def match(self):
        return self.expected == self.computed


@dataclass
class TableResult:
    which: int
    cells: list = dc_field(default_factory=list)
    extra: dict = dc_field(default_factory=dict)

    @property
    def ok(self):
        return all(c.match for c in self.cells)

    @property
    def mismatches(self):
        return [c for c in self.cells if not c.match]

    def as_dict(self):
        return {
            "table": self.which,
            "ok": self.ok,
            "cells": [{"row": c.row, "column": c.column, "expected": c.expected,
                       "computed": c.computed, "match": c.match} for c in self.cells],
            **self.extra,
        }

    def to_text(self):
        lines = [f"Table {self.which}"]
        width = max((len(c.row) for c in self.cells), default=4)
        for c in self.cells:
            flag = "ok" if c.match else "MISMATCH"
            lines.append(f"  {c.row:<{width}}  {c.column:<10} computed={c.computed}"
                         f"  expected={c.expected}  {flag}")
        lines.append(f"{len(self.cells) - len(self.mismatches)}/{len(self.cells)} cells match")
        return "\n".join(lines) + "\n"

    def to_csv(self):
        out = ["row,column,computed,expected,match"]
        for c in self.cells:
            out.append(f"{c.row},{c.column},\"{c.computed}\",\"{c.expected}\",{int(c.match)}")
        return "\n".join(out) + "\n"


def _fieldfor(n, field):
    if field is not None and field.n == n:
        return field
    return get_field(n)


def reproduce_table1(max_n: int = 20, field: FieldSpec | None = None) -> TableResult:
    fx = load_fixture(1)
    res = TableResult(1)
    for key, expected in fx["exponents"].items():
        n = int(key)
        if n > max_n:
            continue
        res.cells.append(Cell("log2 N", f"n={n}", expected, count_v_sets(_fieldfor(n, field))))
    return res


def reproduce_table2(field: FieldSpec | None = None, workers=None) -> TableResult:
    fx = load_fixture(2)
    fld = _fieldfor(fx["n"], field)
    res = TableResult(2)
    for row in fx["rows"]:
        label = "{" + ",".join(map(str, row["v"])) + "}"
        g = build_G(validate_V_exponents(fld, row["v"]))
        res.cells.append(Cell(label, "NL", row["nl"], nonlinearity(g, workers)))
        res.cells.append(Cell(label, "spectrum", row["spectrum"],
                              differential_spectrum(g, workers).triple()))
    return res


def reproduce_table3(max_n: int = 10, field: FieldSpec | None = None, workers=None) -> TableResult:
    fx = load_fixture(3)
    res = TableResult(3)
    for name, by_n in fx["spectra"].items():
        for key, expected in by_n.items():
            n = int(key)
            if n > max_n:
                continue
            f = build_named(_fieldfor(n, field), name)
            res.cells.append(Cell(name, f"n={n}", expected,
                                  differential_spectrum(f, workers).triple()))
    return res


def reproduce_table4(max_n: int = 12, field: FieldSpec | None = None, workers=None) -> TableResult:
    fx = load_fixture(4)
    res = TableResult(4)
    bounds = {}
    for name, row in fx["rows"].items():
        c, d = row["bound"]
        for key, expected in row["nl"].items():
            n = int(key)
            if n > max_n:
                continue
            fld = _fieldfor(n, field)
            f = inverse_function(fld) if name == "MAX" else build_named(fld, name)
            computed = nonlinearity(f, workers)
            res.cells.append(Cell(name, f"n={n}", expected, computed))
            bounds.setdefault(name, {})[f"n={n}"] = {
                "bound": nl_bound(n, c, d), "holds": computed >= nl_bound(n, c, d)}
    res.extra["lower_bounds"] = bounds
    return res


def reproduce(which: int, **kw) -> TableResult:
    fn = {1: reproduce_table1, 2: reproduce_table2,
          3: reproduce_table3, 4: reproduce_table4}.get(which)
    if fn is None:
        raise ValueError(f"no table {which}; choose 1-4")
    return fn(**kw)
