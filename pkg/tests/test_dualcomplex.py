import itertools
import random

import pytest

from k3degen.dualcomplex import (
    ComplexAutomorphism,
    DeltaComplex,
    InvalidComplex,
    NonOrientable,
    is_sphere_triangulation,
    orient,
    orientation_action,
)

import oracles


def projective_plane():
    # minimal 2-vertex Delta-structure: two edges v -> w, a loop at v,
    # two triangles; the loop side needs explicit signs
    return DeltaComplex(
        ["v", "w"],
        {"a": ("v", "w"), "b": ("w", "v"), "c": ("v", "v")},
        {
            "U": (("v", "v", "w"), ("c", "a", "b"), (1, None, None)),
            "L": (("v", "w", "v"), ("a", "b", "c"), (None, None, -1)),
        },
    )


def torus():
    # one vertex, three loops, two triangles; the standard square gluing
    return DeltaComplex(
        ["v"],
        {"a": ("v", "v"), "b": ("v", "v"), "c": ("v", "v")},
        {
            "L": (("v", "v", "v"), ("a", "b", "c"), (1, 1, -1)),
            "U": (("v", "v", "v"), ("c", "a", "b"), (1, -1, -1)),
        },
    )


def pillow():
    # two triangles glued along all three edges: a Delta-complex sphere
    return DeltaComplex(
        ["A", "B", "C"],
        {"ab": ("A", "B"), "bc": ("B", "C"), "ca": ("C", "A")},
        {
            "T1": (("A", "B", "C"), ("ab", "bc", "ca")),
            "T2": (("A", "B", "C"), ("ab", "bc", "ca")),
        },
    )


def wedge_of_tetrahedra():
    # two tetrahedron boundaries sharing the single vertex 0
    first = {(a, b, c) for a, b, c in itertools.combinations(range(4), 3)}
    second = {(a, b, c) for a, b, c in itertools.combinations([0, 4, 5, 6], 3)}
    edges = {}
    triangles = {}
    for tris in (first, second):
        for a, b, c in tris:
            for pair in ((a, b), (b, c), (a, c)):
                edges[pair] = pair
            triangles[(a, b, c)] = ((a, b, c), ((a, b), (b, c), (a, c)))
    return DeltaComplex(range(7), edges, triangles)


class TestConstruction:
    def test_rejects_unknown_ids(self):
        with pytest.raises(InvalidComplex):
            DeltaComplex([0], {"e": (0, 1)}, {})
        with pytest.raises(InvalidComplex):
            DeltaComplex([0, 1, 2], {"e": (0, 1)}, {"t": ((0, 1, 2), ("e", "e", "x"))})

    def test_rejects_mismatched_edge(self):
        with pytest.raises(InvalidComplex):
            DeltaComplex(
                [0, 1, 2, 3],
                {"e01": (0, 1), "e12": (1, 2), "e03": (0, 3)},
                {"t": ((0, 1, 2), ("e01", "e12", "e03"))},
            )

    def test_loop_requires_explicit_sign(self):
        with pytest.raises(InvalidComplex):
            DeltaComplex(
                ["v", "w"],
                {"a": ("v", "w"), "b": ("w", "v"), "c": ("v", "v")},
                {"U": (("v", "v", "w"), ("c", "a", "b"))},
            )

    def test_contradictory_sign_rejected(self):
        with pytest.raises(InvalidComplex):
            DeltaComplex(
                [0, 1, 2],
                {"e0": (0, 1), "e1": (1, 2), "e2": (2, 0)},
                {"t": ((0, 1, 2), ("e0", "e1", "e2"), (-1, None, None))},
            )

    def test_json_roundtrip(self):
        t = oracles.tetrahedron()
        again = DeltaComplex.from_json_dict(t.to_json_dict())
        assert again.counts() == t.counts()
        assert again.homology_dims() == t.homology_dims()


class TestHomology:
    def test_single_vertex(self):
        c = DeltaComplex([0], {}, {})
        assert c.homology_dims() == (1, 0, 0)

    def test_path(self):
        c = DeltaComplex([0, 1], {"e": (0, 1)}, {})
        assert c.homology_dims() == (1, 0, 0)

    def test_circle(self):
        c = DeltaComplex([0, 1], {"e": (0, 1), "f": (1, 0)}, {})
        assert c.homology_dims() == (1, 1, 0)

    def test_tetrahedron(self):
        assert oracles.tetrahedron().homology_dims() == (1, 0, 1)

    def test_torus(self):
        assert torus().homology_dims() == (1, 2, 1)

    def test_projective_plane_rational(self):
        assert projective_plane().homology_dims() == (1, 0, 0)

    def test_wedge_of_spheres(self):
        assert wedge_of_tetrahedra().homology_dims() == (1, 0, 2)

    def test_euler_identity_random(self):
        rng = random.Random(101)
        for _ in range(60):
            c = oracles.random_delta_complex(rng)
            h0, h1, h2 = c.homology_dims()
            v, e, f = c.counts()
            assert h0 - h1 + h2 == v - e + f

    def test_boundary_of_boundary_vanishes(self):
        rng = random.Random(103)
        for _ in range(30):
            c = oracles.random_delta_complex(rng)
            d1, d2 = c.boundary_matrices()
            if not d2 or not d2[0]:
                continue
            rows, cols = len(d1), len(d2[0])
            for i in range(rows):
                for j in range(cols):
                    assert sum(d1[i][k] * d2[k][j] for k in range(len(d2))) == 0


class TestSphereRecognition:
    def test_accepts_spheres(self):
        for c in (oracles.tetrahedron(), oracles.octahedron(), pillow()):
            check = is_sphere_triangulation(c)
            assert check and check.reason is None
            assert c.homology_dims() == (1, 0, 1)

    def test_open_triangle_fails_on_edges(self):
        c = DeltaComplex(
            [0, 1, 2],
            {"e0": (0, 1), "e1": (1, 2), "e2": (2, 0)},
            {"t": ((0, 1, 2), ("e0", "e1", "e2"))},
        )
        check = is_sphere_triangulation(c)
        assert not check and "triangle sides" in check.reason

    def test_wedge_fails_on_link(self):
        check = is_sphere_triangulation(wedge_of_tetrahedra())
        assert not check and "link" in check.reason

    def test_projective_plane_fails_on_orientability(self):
        check = is_sphere_triangulation(projective_plane())
        assert not check and check.reason == "not orientable"

    def test_torus_fails_on_euler(self):
        check = is_sphere_triangulation(torus())
        assert not check and "Euler characteristic" in check.reason

    def test_disconnected_fails(self):
        t = oracles.tetrahedron()
        c = DeltaComplex(list(t.vertices) + ["lonely"], t.edges, t.triangles)
        check = is_sphere_triangulation(c)
        assert not check and check.reason == "not connected"

    def test_empty_fails(self):
        assert not is_sphere_triangulation(DeltaComplex([], {}, {}))


class TestOrient:
    def test_tetrahedron_cancellation(self):
        c = oracles.tetrahedron()
        signs = orient(c)
        for flip in (1, -1):
            boundary = {}
            for tid, (_, tri_edges) in c.triangles.items():
                for i, eid in enumerate(tri_edges):
                    boundary[eid] = (
                        boundary.get(eid, 0) + flip * signs[tid] * c.triangle_signs[tid][i]
                    )
            assert all(v == 0 for v in boundary.values())

    def test_projective_plane_not_orientable(self):
        with pytest.raises(NonOrientable):
            orient(projective_plane())

    def test_torus_orientable(self):
        signs = orient(torus())
        assert set(signs.values()) <= {1, -1}

    def test_requires_closed(self):
        c = DeltaComplex(
            [0, 1, 2],
            {"e0": (0, 1), "e1": (1, 2), "e2": (2, 0)},
            {"t": ((0, 1, 2), ("e0", "e1", "e2"))},
        )
        with pytest.raises(InvalidComplex):
            orient(c)


class TestAutomorphisms:
    def test_identity_action(self):
        c = oracles.tetrahedron()
        assert orientation_action(c, ComplexAutomorphism.identity(c)) == 1

    def test_transposition_and_three_cycle(self):
        c = oracles.tetrahedron()
        swap = ComplexAutomorphism.from_vertex_map(c, {0: 1, 1: 0, 2: 2, 3: 3})
        assert orientation_action(c, swap) == -1
        cycle = ComplexAutomorphism.from_vertex_map(c, {0: 1, 1: 2, 2: 0, 3: 3})
        assert orientation_action(c, cycle) == 1

    def test_full_symmetric_group_matches_sign(self):
        c = oracles.tetrahedron()
        for perm in itertools.permutations(range(4)):
            g = ComplexAutomorphism.from_vertex_map(c, dict(zip(range(4), perm)))
            assert orientation_action(c, g) == oracles.perm_sign(perm)

    def test_homomorphism_property(self):
        c = oracles.octahedron()
        autos = oracles.vertex_symmetries(c)
        assert len(autos) == 48
        rng = random.Random(13)
        for _ in range(60):
            g, h = rng.choice(autos), rng.choice(autos)
            assert orientation_action(c, g.compose(h)) == orientation_action(
                c, g
            ) * orientation_action(c, h)

    def test_validation_rejects_non_bijection(self):
        c = oracles.tetrahedron()
        with pytest.raises(InvalidComplex):
            ComplexAutomorphism(
                c,
                {0: 0, 1: 0, 2: 2, 3: 3},
                {e: e for e in c.edges},
                {t: t for t in c.triangles},
            )

    def test_validation_rejects_broken_incidence(self):
        c = oracles.tetrahedron()
        vmap = {0: 1, 1: 0, 2: 2, 3: 3}
        with pytest.raises(InvalidComplex):
            ComplexAutomorphism(c, vmap, {e: e for e in c.edges}, {t: t for t in c.triangles})

    def test_from_vertex_map_rejects_multi_edge(self):
        c = pillow()
        double = DeltaComplex(
            ["A", "B", "C"],
            {"ab": ("A", "B"), "ab2": ("A", "B"), "bc": ("B", "C"), "ca": ("C", "A")},
            {
                "T1": (("A", "B", "C"), ("ab", "bc", "ca")),
                "T2": (("A", "B", "C"), ("ab2", "bc", "ca")),
            },
        )
        with pytest.raises(InvalidComplex):
            ComplexAutomorphism.from_vertex_map(double, {"A": "A", "B": "B", "C": "C"})
        # the pillow's repeated face makes the triangle image ambiguous too
        with pytest.raises(InvalidComplex):
            ComplexAutomorphism.from_vertex_map(c, {"A": "A", "B": "B", "C": "C"})
