"""
Polynomial invariants of small matroids
=======================================

Build a few matroids, then print their size-corank, rank generating,
Tutte and characteristic polynomials.
"""

from tutteconv import catalog, make_graphic, render
from tutteconv.invariants import characteristic, rank_generating, size_corank, subset_corank, tutte

# the triangle graph is the uniform matroid U(2,3)
tri = make_graphic(3, [(0, 1), (1, 2), (0, 2)], name="triangle")
print("SC      ", render(size_corank(tri)))
print("R       ", render(rank_generating(tri)))
print("Tutte   ", render(tutte(tri, "standard")), "(x, y convention)")
print("chi     ", render(characteristic(tri)))

# one variable per element keeps track of which edges were chosen
print("subset SC", render(subset_corank(tri)))

# the Fano plane and its dual
for name in ("Fano", "Fano_dual"):
    m = catalog.get(name)
    print(f"{name:10s} r={m.r} chi={render(characteristic(m))}")

# a matroid with a loop has chi = 0
print("GF(2)^2 chi:", render(characteristic(catalog.get("GF2_2"))))
