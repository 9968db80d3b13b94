import json
from collections import Counter
from math import comb

import pytest

from flipclasses.atlas import (
    cell_dim,
    classification_table,
    euler_char,
    f_vector,
    faces,
    facet_type,
    facet_vertices,
    group_maps,
    isometry_orbits,
    profile_classes,
    reflect,
    rotate,
    vertex_profiles,
)
from flipclasses.partitions import Partition, catalan, minus
from flipclasses.tilings import Tiling, enumerate_tilings, ff_of, shape_of

P = Partition


def cayley(n, d):
    """Dissections of the n-gon with d diagonals."""
    return comb(n - 3, d) * comb(n + d - 1, d) // (d + 1)


# -- cells --------------------------------------------------------------------

@pytest.mark.parametrize(
    "n, f",
    [(4, [2, 1]), (5, [5, 5, 1]), (6, [14, 21, 9, 1]), (7, [42, 84, 56, 14, 1])],
)
def test_f_vector_small(n, f):
    assert f_vector(n) == f


@pytest.mark.parametrize("n", range(4, 11))
def test_f_vector_closed_form(n):
    f = f_vector(n)
    assert f == [cayley(n, n - 3 - k) for k in range(n - 2)]
    assert f[0] == catalan(n - 2) and f[-1] == 1


@pytest.mark.parametrize("n", range(4, 11))
def test_euler_characteristic(n):
    assert euler_char(n) == 1


def test_f_vector_needs_square():
    with pytest.raises(ValueError):
        f_vector(3)


@pytest.mark.parametrize("n", range(3, 9))
def test_cell_dim_is_shape_minus(n):
    for t in enumerate_tilings(n):
        sh = shape_of(t)
        assert cell_dim(t) == t.dim == (minus(sh).weight if sh else 0)


def test_faces():
    top = Tiling(6)
    assert len(faces(top)) == 9
    assert faces(Tiling(6, ((1, 3), (1, 4), (1, 5)))) == []
    edge = Tiling(6, ((1, 3), (1, 4)))
    assert faces(edge) == [Tiling(6, ((1, 3), (1, 4), (1, 5))), Tiling(6, ((1, 3), (1, 4), (4, 6)))]


@pytest.mark.parametrize("n", range(4, 8))
def test_faces_lower_dimension_by_one(n):
    for t in enumerate_tilings(n):
        fs = faces(t)
        assert all(cell_dim(s) == cell_dim(t) - 1 for s in fs)
        assert all(set(t.diagonals) < set(s.diagonals) for s in fs)


def test_faces_of_quadrilateral_cells_are_edges():
    # a 1-cell of the associahedron has exactly two endpoints
    for t in enumerate_tilings(7):
        if cell_dim(t) == 1:
            assert len(faces(t)) == 2


# -- symmetries ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(4, 9))
def test_group_action_is_well_defined(n):
    for t in enumerate_tilings(n):
        assert rotate(t, n) == t
        assert reflect(reflect(t)) == t
        for g in group_maps(n, "dihedral"):
            s = g(t)
            assert Tiling(n, s.diagonals) == s
            assert shape_of(s) == shape_of(t)
            assert ff_of(s) == ff_of(t)


def test_rotate_and_reflect_examples():
    t = Tiling(6, ((1, 3),))
    assert rotate(t) == Tiling(6, ((2, 4),))
    assert rotate(t, 4) == Tiling(6, ((1, 5),))
    assert reflect(t) == Tiling(6, ((4, 6),))


def test_unknown_group():
    with pytest.raises(ValueError):
        group_maps(6, "affine")


def test_orbits_hexagon_triangulations():
    sizes = lambda g: sorted((len(o) for o in isometry_orbits(6, g, dim_filter=0)), reverse=True)
    assert sizes("trivial") == [1] * 14
    assert sizes("cyclic") == [6, 3, 3, 2]
    assert sizes("dihedral") == [6, 6, 2]


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("group", ["cyclic", "dihedral"])
def test_orbit_count_matches_burnside(n, group):
    tilings = enumerate_tilings(n)
    maps = group_maps(n, group)
    fixed = sum(1 for g in maps for t in tilings if g(t) == t)
    orbits = isometry_orbits(n, group)
    assert fixed % len(maps) == 0
    assert len(orbits) == fixed // len(maps)
    assert sorted(t for o in orbits for t in o) == tilings


def test_orbits_respect_supplied_pool():
    pool = enumerate_tilings(6, P([2, 1, 1]))
    orbits = isometry_orbits(6, "dihedral", tilings=pool)
    assert sum(len(o) for o in orbits) == 21
    assert len(orbits) == 3


# -- vertex profiles ------------------------------------------------------------

def test_facet_types():
    assert facet_type(6, (1, 3)) == (3, 5)
    assert facet_type(6, (1, 4)) == (4, 4)
    assert facet_vertices(6, (1, 3)) == 5
    assert facet_vertices(6, (2, 5)) == 4


def test_k5_profiles():
    profiles = vertex_profiles(6)
    assert len(profiles) == 14
    gons = Counter(p.facet_gons for p in profiles)
    assert gons == {(5, 5, 5): 2, (5, 5, 4): 12}
    classes = profile_classes(profiles)
    assert sorted(len(c) for c in classes) == [2, 6, 6]


def test_k5_profiles_are_dihedral_orbits():
    classes = {tuple(c) for c in profile_classes(vertex_profiles(6))}
    dihedral = {tuple(o) for o in isometry_orbits(6, "dihedral", dim_filter=0)}
    cyclic = {tuple(o) for o in isometry_orbits(6, "cyclic", dim_filter=0)}
    assert classes == dihedral
    assert classes != cyclic
    # the six zig-zags split into two mirror-image rotation orbits
    zigzags = [c for c in classes if len(c) == 6 and not any(len(set(d[0] for d in t.diagonals)) == 1 for t in c)]
    assert len(zigzags) == 1
    assert sorted(len(o) for o in cyclic if set(o) <= set(zigzags[0])) == [3, 3]


@pytest.mark.parametrize("n", [5, 7])
def test_profiles_are_rotation_invariant(n):
    by_vertex = {p.vertex: p.key for p in vertex_profiles(n)}
    for t, key in by_vertex.items():
        for g in group_maps(n, "dihedral"):
            assert by_vertex[g(t)] == key


def test_profiles_need_pentagon():
    with pytest.raises(ValueError):
        vertex_profiles(4)


# -- classification table -------------------------------------------------------

def test_classification_hexagon():
    s = classification_table(6)
    assert s.f_vector == [14, 21, 9, 1] and s.euler == 1
    cells = s.cells_by_dim_mu()
    c = cells[(1, P([1]))]
    assert c.lam == (2, 1, 1) and c.count == 21 and len(c.representatives) == 3
    assert c.product_label == "K3 x K2^2"
    assert cells[(3, P([3]))].product_label == "K5"
    assert cells[(0, P())].count == 14


def test_classification_heptagon_impossible():
    s = classification_table(7)
    c = s.cells_by_dim_mu()[(3, P([1, 1, 1]))]
    assert not c.possible and c.product_label == "impossible" and c.count == 0
    assert "impossible" in s.to_markdown()


@pytest.mark.parametrize("n", range(4, 10))
def test_classification_counts_sum_to_f_vector(n):
    s = classification_table(n)
    for i, fi in enumerate(s.f_vector):
        assert sum(c.count for c in s.cells if c.dim == i) == fi
    for c in s.cells:
        for t in c.representatives:
            assert shape_of(t) == c.lam and cell_dim(t) == c.dim


def test_classification_export():
    s = classification_table(5)
    d = json.loads(json.dumps(s.to_dict()))
    assert d["f_vector"] == [5, 5, 1]
    assert [(c["dim"], c["mu"], c["lambda"]) for c in d["cells"]] == [
        (2, "2", "3"), (2, "1,1", None), (1, "1", "2,1"), (0, "", "1,1,1")
    ]
    md = s.to_markdown().splitlines()
    assert md[0].startswith("| dim |") and md[1].startswith("|---|")


def test_classification_needs_square():
    with pytest.raises(ValueError):
        classification_table(3)
