"""
Checking convolution identities exactly
=======================================

Each identity is built as two polynomials and compared term by term.
"""

from tutteconv import catalog, render
from tutteconv.identities import IDENTITY_IDS, verify, verify_restriction_argument

m = catalog.get("K4")
for key in IDENTITY_IDS:
    rep = verify(m, key)
    print(f"identity {key:11s} equal={rep.equal}  terms={len(rep.terms)}")

# the flat-indexed sums can be taken over all subsets, flats or cyclic flats
rep = verify_restriction_argument(m, "eq4_cyclic")
for name, value in rep.ranges.items():
    print(f"{name:13s}", render(value))

# the per-subset breakdown for a tiny case
rep = verify(catalog.get("U_2_3"), 9)
for t, term in rep.terms:
    print("T =", t, "->", render(term))
