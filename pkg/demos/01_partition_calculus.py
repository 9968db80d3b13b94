"""
Partition calculus
==================

Shapes of tilings are integer partitions.  This walk-through shows the
column operations and the wreath used to mark tiles.
"""

from flipclasses.partitions import Partition, fill_up, minus, models_fiber, plus, wreath

mu = Partition([2, 1])
print("mu        ", mu)
print("mu+       ", plus(mu))         # add a first column
print("(mu+)-    ", minus(plus(mu)))  # and take it away again

# pad with 1-parts up to a weight; a no-op once the weight is reached
print("fill(3,2)^8", fill_up(plus(mu), 8))

# replace |mu+| triangles of lam by the larger tiles of mu+
lam = Partition([1] * 6)
print("lam wreath mu", wreath(lam, mu))
print("too few ones ", wreath(Partition([2, 1]), mu))

# ways to split mu+ over two regions
for gamma in models_fiber(mu, 2):
    print("  ", " | ".join(str(g) for g in gamma))
