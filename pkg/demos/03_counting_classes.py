"""
Counting flip classes without searching
=======================================

The alternating sum below predicts the number of flip classes from shape
counts alone.  Each term is printed, then compared to a direct search.
"""

from flipclasses import Partition, flip_classes, theorem_rhs, theorem_terms
from flipclasses.partitions import partitions_of, wreath

n, lam = 8, Partition([2, 1, 1, 1, 1])
for mu, pi, a in theorem_terms(n, lam):
    sign = "-" if mu.weight % 2 else "+"
    print(f" {sign} {pi} * a_{n}({wreath(lam, mu)}) = {sign}{pi * a}   (mu = {mu})")
print("formula", theorem_rhs(n, lam), " search", len(flip_classes(n, lam)))

# every shape of the octagon
for lam in partitions_of(n - 2):
    print(f"{str(lam):>14}  {theorem_rhs(n, lam):>4}")
