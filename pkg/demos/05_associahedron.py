"""
The associahedron K5
====================

Tilings of the hexagon are the cells of a 3-dimensional polytope.  Count
cells by dimension, check Euler's relation and sort its 14 vertices.
"""

from flipclasses.atlas import (
    classification_table,
    euler_char,
    f_vector,
    isometry_orbits,
    profile_classes,
    vertex_profiles,
)

print("f-vector", f_vector(6), " Euler characteristic", euler_char(6))

profiles = vertex_profiles(6)
for cls in profile_classes(profiles):
    p = next(q for q in profiles if q.vertex == cls[0])
    print(f"{len(cls):>2} vertices on faces with {p.facet_gons} corners, e.g. {cls[0]}")

# vertex classes match the orbits of the full symmetry group; rotations
# alone split the zig-zag triangulations into two mirror-image orbits
for group in ("cyclic", "dihedral"):
    print(group, sorted(len(o) for o in isometry_orbits(6, group, dim_filter=0)))

print()
print(classification_table(7).to_markdown())
