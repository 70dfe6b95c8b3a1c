"""Cutting the chain surface along cores and interval frontiers."""

import pytest

from diskcomplex import (
    CoreCurve,
    DomainError,
    HypothesisError,
    IntervalError,
    NeighborhoodBoundary,
    RibbonGraph,
    SplitReport,
    UnsupportedCut,
    bookkeeping_check,
    chain_surface,
    cut_along,
    cut_cycle,
    dims,
    parse_curve_token,
)


class TestParseCurveToken:
    def test_core_token(self):
        c = parse_curve_token("z3")
        assert c == CoreCurve(3)
        assert str(c) == "z3"

    def test_neighborhood_token(self):
        c = parse_curve_token("x:2-5")
        assert c == NeighborhoodBoundary(2, 5)
        assert str(c) == "x:2-5"

    @pytest.mark.parametrize("bad", ["q7", "z1 ", "x:0-1", "z-2", "x:12", ""])
    def test_garbage_rejected(self, bad):
        with pytest.raises(DomainError, match="token"):
            parse_curve_token(bad)

    def test_range_check_is_deferred_to_the_cut(self):
        # the token grammar does not know the genus; cut_along does
        assert parse_curve_token("x:2-1") == NeighborhoodBoundary(2, 1)
        with pytest.raises(IntervalError):
            cut_along(chain_surface(2), ["x:2-1"])


class TestCutCycle:
    def torus_rose(self):
        return RibbonGraph(rot=((1, 3, 2, 4),), rev=((1, 2), (3, 4)))

    def test_torus_cut_to_pants(self):
        cut = cut_cycle(self.torus_rose(), (1,))
        assert cut.n_vertices == 2
        assert cut.n_edges == 3
        assert cut.n_boundaries == 3
        assert cut.genus == 0

    def test_chain_core_cut_preserves_euler(self):
        S = chain_surface(2)
        cut = cut_cycle(S.graph, S.core_walks[0])
        assert cut.euler_characteristic == S.graph.euler_characteristic
        assert cut.n_boundaries == 3
        assert cut.genus == 1

    def test_empty_walk_rejected(self):
        with pytest.raises(UnsupportedCut, match="empty"):
            cut_cycle(self.torus_rose(), ())

    def test_edge_repeat_rejected(self):
        with pytest.raises(UnsupportedCut, match="repeats"):
            cut_cycle(self.torus_rose(), (1, 2))


# every row checked against Euler additivity and the boundary count below
FROZEN_CUTS = [
    (2, ["z1"], ((1, 3),)),
    (2, ["z3"], ((1, 3),)),
    (2, ["z1", "z3"], ((0, 5),)),
    (2, ["x:1-2"], ((1, 2), (1, 1))),
    (2, ["x:2-3"], ((1, 2), (1, 1))),
    (2, ["x:3-4"], ((1, 2), (1, 1))),
    (2, ["z2", "x:1-2"], ((1, 2), (0, 3))),
    (3, ["z1"], ((2, 3),)),
    (3, ["z1", "z3"], ((1, 5),)),
    (3, ["z1", "z3", "z5"], ((0, 7),)),
    (3, ["x:2-5"], ((2, 1), (1, 2))),
    (3, ["x:1-4"], ((2, 1), (1, 2))),
    (3, ["x:1-2", "x:5-6"], ((1, 3), (1, 1), (1, 1))),
    (3, ["z1", "x:3-4"], ((1, 4), (1, 1))),
]


class TestCutAlong:
    @pytest.mark.parametrize("g, specs, components", FROZEN_CUTS)
    def test_frozen_components(self, g, specs, components):
        report = cut_along(chain_surface(g), specs)
        assert report.components == components
        assert report.ambient_genus == g
        assert report.ambient_boundaries == 1
        assert report.n_curves == len(specs)
        assert bookkeeping_check(report)

    def test_names_follow_input_order(self):
        S = chain_surface(3)
        assert cut_along(S, ["z1", "x:3-4"]).curve_names == ("z1", "x:3-4")
        assert cut_along(S, ["x:3-4", "z1"]).curve_names == ("x:3-4", "z1")

    def test_components_sorted_largest_first(self):
        report = cut_along(chain_surface(3), ["x:2-5"])
        assert report.components == tuple(
            sorted(report.components, reverse=True))

    def test_odd_interval_rejected(self):
        with pytest.raises(UnsupportedCut, match="odd interval"):
            cut_along(chain_surface(2), ["x:1-3"])

    def test_crossing_cores_rejected(self):
        with pytest.raises(UnsupportedCut, match="intersect"):
            cut_along(chain_surface(2), ["z1", "z2"])

    def test_adjacent_intervals_rejected(self):
        with pytest.raises(UnsupportedCut, match="too close"):
            cut_along(chain_surface(2), ["x:1-2", "x:3-4"])

    def test_core_on_the_frontier_rejected(self):
        with pytest.raises(UnsupportedCut, match="touches"):
            cut_along(chain_surface(2), ["z3", "x:1-2"])

    def test_repeated_curve_rejected(self):
        with pytest.raises(UnsupportedCut, match="repeated"):
            cut_along(chain_surface(2), ["z1", "z1"])

    def test_empty_cut_list_rejected(self):
        with pytest.raises(DomainError, match="nothing"):
            cut_along(chain_surface(2), [])

    def test_core_index_out_of_range(self):
        with pytest.raises(DomainError, match="core index"):
            cut_along(chain_surface(2), ["z9"])


class TestBookkeeping:
    def fake(self, g, b, n, comps):
        return SplitReport(
            ambient_genus=g,
            ambient_boundaries=b,
            n_curves=n,
            components=comps,
            curve_names=tuple("c%d" % i for i in range(n)),
        )

    def test_closed_ambient_consistent(self):
        # genus two split along one separating curve into two handles
        assert bookkeeping_check(self.fake(2, 0, 1, ((1, 1), (1, 1))))

    def test_closed_ambient_nonseparating(self):
        assert bookkeeping_check(self.fake(2, 0, 1, ((1, 2),)))

    def test_euler_mismatch_fails(self):
        assert not bookkeeping_check(self.fake(2, 0, 1, ((2, 2),)))

    def test_boundary_count_mismatch_fails(self):
        # Euler additivity holds but one cut cannot make five boundaries
        assert not bookkeeping_check(self.fake(2, 1, 1, ((0, 5),)))

    def test_real_reports_pass(self):
        for g, specs, _ in FROZEN_CUTS:
            assert bookkeeping_check(cut_along(chain_surface(g), specs))


DIMS_TABLE = {
    (2, 0): (2, 2),
    (3, 0): (4, 4),
    (4, 0): (6, 6),
    (2, 1): (2, 2),
    (2, 2): (3, 2),
    (3, 1): (4, 4),
    (0, 4): (0, 0),
    (0, 5): (1, 1),
    (0, 6): (2, 2),
    (1, 2): (1, 0),
    (1, 3): (2, 1),
}


class TestDims:
    @pytest.mark.parametrize("gb, want", sorted(DIMS_TABLE.items()))
    def test_frozen_values(self, gb, want):
        d = dims(*gb)
        assert (d.dimension, d.connectivity) == want
        assert (d.genus, d.boundaries) == gb

    @pytest.mark.parametrize(
        "gb", [(1, 0), (1, 1), (0, 0), (0, 2), (0, 3), (-1, 2), (2, -1)])
    def test_small_surfaces_rejected(self, gb):
        with pytest.raises(HypothesisError):
            dims(*gb)

    def test_connectivity_never_exceeds_dimension(self):
        for g in range(0, 6):
            for b in range(0, 8):
                if 2 * g - 2 + b < 2:
                    continue
                d = dims(g, b)
                assert 0 <= d.connectivity <= d.dimension
