# # Strong geodetic sets and their cores
#
# A set S is strong geodetic when one fixed geodesic per pair of S covers the
# whole graph. A core X of S is a subset for which the pairs meeting X already
# suffice.

from geodekit import families as F
from geodekit.certificates import verify
from geodekit.graph import simplicial_vertices
from geodekit.solvers import (
    enumerate_min_sg_sets,
    sgc_of_set,
    strong_geodetic_core_number,
    strong_geodetic_number,
)

# Subdivide every edge of K4 and join the six new vertices into a clique.
# The four original vertices are simplicial, so every strong geodetic set
# must contain them.

G = F.hat_subdivision(F.complete(4))
print("simplicial:", sorted(simplicial_vertices(G)))

out = strong_geodetic_number(G)
print("sg =", out.value, "with set", out.certificate.set)
for pair, path in sorted(out.certificate.paths.items()):
    print("  ", pair, "->", path)

# Every proved answer carries a certificate, and an independent checker
# re-verifies it from the graph alone.

print("certificate checks:", verify(G, out.certificate))
print("all minimum sets:", [sorted(s) for s in enumerate_min_sg_sets(G).value])
print("sgc =", strong_geodetic_core_number(G).value)

# In K_{7,11} the 7-side is the unique minimum strong geodetic set. Two of its
# vertices already form a core, while a mixed set of eight needs four.

K = F.complete_bipartite(7, 11)
print("sgc(7-side) =", sgc_of_set(K, range(7)).value)
mixed = [0, 1, 2, 3, 4, 7, 8, 9]
res = sgc_of_set(K, mixed)
print("sgc(mixed) =", res.value, "core", res.certificate.core)
