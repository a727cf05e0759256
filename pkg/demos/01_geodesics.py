# # Shortest paths, intervals and geodesic counts
#
# Everything in geodekit starts from hop distances. A distance oracle is built
# once per graph and answers distances, intervals and geodesic enumerations.

from geodekit import families as F
from geodekit.distance import DistanceOracle

# The 6-cycle: antipodal vertices are at distance 3 and joined by two geodesics.

C6 = F.cycle(6)
O = DistanceOracle(C6)
print("d(0,3) =", O.d(0, 3), " diameter =", O.diameter)
print("geodesics 0..3:", O.geodesics(0, 3))
print("interval I(0,3):", sorted(O.interval(0, 3)))

# Geodesics can be restricted to pass through a given vertex.

print("through 5:", O.geodesics(0, 3, through=5))

# Counting uses dynamic programming over the shortest-path DAG, so it stays
# exact even when listing every path would be hopeless.

grid, vmap = F.cartesian_product(F.path(8), F.path(8))
G = DistanceOracle(grid)
a, b = vmap.index(0, 0), vmap.index(7, 7)
print("corner-to-corner geodesics in P8 x P8:", G.count_geodesics(a, b))

# The full distance matrix is a numpy array.

print(O.dist)
