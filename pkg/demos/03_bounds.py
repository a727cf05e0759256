# # Bounds on the core number
#
# Paths leaving a core of size k can host at most (k(s-k) + C(k,2))(d-1)
# vertices outside S. That capacity gives a lower bound on sgc; the upper bound
# is min(s-1, n-s). Both are evaluated in integer arithmetic.

from geodekit import bounds as B
from geodekit import families as F

for n, s, d in [(6, 4, 2), (32, 5, 4), (10, 4, 2)]:
    print((n, s, d), "->", B.sgc_bounds(n, s, d))

# check_bounds solves g, sg and sgc and tests each bound against them.

print(B.check_bounds(F.h_graph(3, 2, 4), graph_id="H(3,2,4)").to_table())
print(B.check_bounds(F.cocktail_party(6), graph_id="cocktail(6)").to_table())

# Complete graphs have diameter 1 and are exempt.

print(B.check_bounds(F.complete(5), graph_id="K5").to_table())
