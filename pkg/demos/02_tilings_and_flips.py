"""
Tilings and flips
=================

Enumerate the dissections of a hexagon, look at one of them closely and
group all tilings of one shape into flip classes.
"""

from flipclasses import Partition, Tiling, census, enumerate_tilings, ff_of, flip_classes, flip_neighbors, shape_of

tilings = enumerate_tilings(6)
print(len(tilings), "tilings of the hexagon")

t = Tiling(6, ((1, 3), (3, 6)))
print(t, "tiles", t.tiles)
print("shape", shape_of(t), " ff+ / ff", *ff_of(t))

# a flip swaps the diagonal between two triangles
for s in flip_neighbors(t):
    print("  flip ->", s)

lam = Partition([2, 1, 1])
classes = flip_classes(6, lam)
print(f"{len(classes)} flip classes of shape {lam}; sizes", sorted(len(c) for c in classes))

# the census breaks the count down by the fiber of ff
c = census(6, [lam])
for (l, nu), k in sorted(c.ae_fiber.items()):
    print(f"  fiber {nu}: {c.a_fiber[(l, nu)]} tilings in {k} classes")
