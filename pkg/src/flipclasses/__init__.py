"""Counting tilings of convex polygons up to flip equivalence.

Submodules:

- :mod:`~flipclasses.partitions` partition calculus (μ⁺, μ⁻, fill-up, λ≀μ, fibers)
- :mod:`~flipclasses.tilings` enumeration, shapes, flips, flip classes, censuses
- :mod:`~flipclasses.identities` the class-count formula and overcount identities
- :mod:`~flipclasses.atlas` the associahedron as a cell complex, orbits, cell tables
- :mod:`~flipclasses.verify` exhaustive sweeps used by the command line
"""

from .partitions import (
    INVALID,
    NegOnes,
    Partition,
    catalan,
    class_size,
    combine,
    fill_up,
    minus,
    models_fiber,
    parse_partition,
    partitions_of,
    plus,
    wreath,
)
from .tilings import (
    Census,
    Tiling,
    census,
    count_shape_dp,
    enumerate_tilings,
    ff_of,
    flip_classes,
    flip_neighbors,
    parse_tiling,
    shape_of,
)
from .identities import column_sum, euler_F, of_bruteforce, of_factor, of_table, pi_coeff, theorem_rhs, theorem_terms
from .atlas import classification_table, euler_char, f_vector, isometry_orbits, vertex_profiles

__version__ = "0.1.0"
