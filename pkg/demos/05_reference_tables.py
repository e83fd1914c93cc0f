"""
Reproducing the reference tables
================================

Every cell is recomputed and compared with a stored fixture.
"""

from inv4perm.tables import reproduce

print(reproduce(1, max_n=16).to_text())
print(reproduce(2).to_text())
print(reproduce(3, max_n=8).to_text())

# the n=12 column is the slow one; leave it out here
res = reproduce(4, max_n=10)
print(res.to_text())
for name, by_n in res.extra["lower_bounds"].items():
    print(name, {k: v["bound"] for k, v in by_n.items()})
