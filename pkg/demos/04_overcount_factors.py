"""
Overcount factors
=================

OF_{mu,nu} counts how often marking and fanning tiles lands in the fiber
nu, per flip class.  The table is computed in closed form, checked
against a literal construction and summed by columns.
"""

from flipclasses import Partition, column_sum, of_bruteforce, of_factor, of_table
from flipclasses.export import of_table_to_csv

print(of_table_to_csv(of_table(3, 4)))

# one cell, built tiling by tiling
lam, mu, nu = Partition([2, 1, 1, 1]), Partition([1]), Partition([2])
print("brute force", of_bruteforce(lam, mu, nu, 7), " closed form", of_factor(mu, nu))

for nu in [Partition([2]), Partition([3, 1]), Partition([2, 2, 1])]:
    print(f"signed column sum at {nu}: {column_sum(nu)}")
