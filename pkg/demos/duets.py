"""
Duet counts
===========

Count pairs of row-space vectors for a matroid and its dual and compare
the signed sum with the rank generating polynomial.
"""

from tutteconv import catalog
from tutteconv.identities import duet_compare

for name in ("U_1_1", "C3"):
    for s, t in ((2, 2), (2, 3), (3, 2)):
        rep = duet_compare(catalog.get(name), s, t)
        values = {f"{c['sign_convention']}/{c['reading']}": c["value"] for c in rep["conventions"]}
        print(name, (s, t), "R(t,s) =", rep["R(t,s)"], "R(-t,-s) =", rep["R(-t,-s)"], values)
