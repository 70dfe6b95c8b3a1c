"""Simplicial complexes, Smith forms, and integral homology."""

import random

import pytest

from diskcomplex import (
    DomainError,
    SimplicialComplex,
    boundary_matrix,
    flag_from_graph,
    pseudomanifold_check,
    reduced_homology,
    smith_normal_form,
)
from oracles import rational_rank, reduced_betti_and_torsion, sympy_invariants

HOLLOW_TRIANGLE = [(0, 1), (1, 2), (0, 2)]

OCTAHEDRON = [
    (0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5),
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5),
]

# minimal 6 vertex triangulation of the projective plane, boundary free
PROJECTIVE_PLANE = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


class TestSimplicialComplex:
    def test_from_facets_drops_dominated(self):
        c = SimplicialComplex.from_facets([(0, 1, 2), (0, 1), (3,)])
        assert c.facets == ((0, 1, 2), (3,))
        assert c.dimension == 2
        assert not c.is_pure()

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            SimplicialComplex.from_facets([])

    def test_f_vector_and_euler(self):
        c = SimplicialComplex.from_facets(OCTAHEDRON)
        assert c.f_vector() == (6, 12, 8)
        assert c.euler_characteristic == 2

    def test_flag_complex_cliques(self):
        c = flag_from_graph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert c.facets == ((0, 1, 2), (2, 3))

    def test_flag_complex_keeps_isolated_vertices(self):
        c = flag_from_graph(range(3), [(0, 1)])
        assert (2,) in c.facets


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (
            (1, 1, 1),
            3,
        )

    def test_multiple_of_smaller(self):
        assert smith_normal_form([[2, 4], [4, 8]]) == ((2,), 1)

    def test_torsion_block(self):
        divisors, rank = smith_normal_form([[2, 0], [0, 3]])
        assert divisors == (1, 6) and rank == 2

    def test_zero_matrix(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)

    def test_divisibility_chain(self):
        rng = random.Random(5)
        for _ in range(25):
            m = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)]
            divisors, rank = smith_normal_form(m)
            assert rank == len(divisors) == rational_rank(m)
            for a, b in zip(divisors, divisors[1:]):
                assert b % a == 0
            assert divisors == sympy_invariants(m)

    def test_sparse_dict_input(self):
        divisors, rank = smith_normal_form({(0, 0): 5, (1, 1): 10})
        assert divisors == (5, 10) and rank == 2


class TestReducedHomology:
    def test_single_point_is_trivial(self):
        profile = reduced_homology(SimplicialComplex.from_facets([(7,)]))
        assert profile.betti == (0,)
        assert profile.torsion == ((),)

    def test_hollow_triangle_is_a_circle(self):
        c = SimplicialComplex.from_facets(HOLLOW_TRIANGLE)
        profile = reduced_homology(c)
        assert profile.betti == (0, 1)
        assert profile.is_reduced_sphere(1)

    def test_octahedron_is_a_two_sphere(self):
        profile = reduced_homology(SimplicialComplex.from_facets(OCTAHEDRON))
        assert profile.betti == (0, 0, 1)
        assert profile.is_reduced_sphere(2)

    def test_projective_plane_torsion(self):
        c = SimplicialComplex.from_facets(PROJECTIVE_PLANE)
        assert c.f_vector() == (6, 15, 10)
        profile = reduced_homology(c)
        assert profile.betti == (0, 0, 0)
        assert profile.torsion == ((), (2,), ())
        assert not profile.is_reduced_sphere(2)

    def test_two_points_disconnected(self):
        profile = reduced_homology(SimplicialComplex.from_facets([(0,), (1,)]))
        assert profile.betti == (1,)

    def test_max_degree_truncates(self):
        profile = reduced_homology(
            SimplicialComplex.from_facets(OCTAHEDRON), max_degree=1
        )
        assert profile.betti == (0, 0)

    def test_boundary_squares_to_zero(self):
        c = SimplicialComplex.from_facets(OCTAHEDRON)
        faces = c.faces_by_dim()
        d1 = boundary_matrix(faces[0], faces[1])
        d2 = boundary_matrix(faces[1], faces[2])
        n0, n2 = len(faces[0]), len(faces[2])
        composed = [[0] * n2 for _ in range(n0)]
        for (r, c1), v in d1.items():
            for c2 in range(n2):
                composed[r][c2] += v * d2.get((c1, c2), 0)
        assert all(v == 0 for row in composed for v in row)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_flag_complexes_match_oracle(self, seed):
        rng = random.Random(1000 + seed)
        n = rng.randint(4, 8)
        edges = [
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if rng.random() < 0.55
        ]
        c = flag_from_graph(range(n), edges)
        profile = reduced_homology(c)
        betti, torsion = reduced_betti_and_torsion(c.facets)
        assert profile.betti == betti
        assert profile.torsion == torsion


class TestPseudomanifold:
    def test_octahedron_passes(self):
        report = pseudomanifold_check(SimplicialComplex.from_facets(OCTAHEDRON), 2)
        assert report.ok
        assert report.pure and report.ridges_ok and report.strongly_connected

    def test_open_book_fails_on_ridges(self):
        # three triangles share one edge
        c = SimplicialComplex.from_facets([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
        report = pseudomanifold_check(c, 2)
        assert not report.ok
        assert (0, 1) in report.bad_ridges

    def test_disjoint_spheres_fail_connectivity(self):
        two = HOLLOW_TRIANGLE + [(5, 6), (6, 7), (5, 7)]
        report = pseudomanifold_check(SimplicialComplex.from_facets(two), 1)
        assert report.pure and report.ridges_ok
        assert not report.strongly_connected

    def test_impure_fails(self):
        c = SimplicialComplex.from_facets([(0, 1, 2), (3, 4)])
        assert not pseudomanifold_check(c, 2).ok
