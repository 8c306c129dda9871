"""PD parsing, validation, crossing moves, canonical codes, simplification."""

import random

import pytest

from conftest import FIGURE8_PD, TREFOIL_PD
from helpers import braid_closure, random_braid_diagrams, random_relabeling, shuffled_crossings

from mortonlab.diagram import Diagram, canonical_code, components, parse_pd, simplify
from mortonlab.errors import InvalidPDError, ParseError


class TestParsing:
    def test_trefoil(self):
        d = parse_pd(TREFOIL_PD)
        assert len(d.crossings) == 3
        assert d.num_components() == 1
        assert d.is_connected()
        assert d.writhe() == -3
        assert [x.sign for x in d.crossings] == [-1, -1, -1]

    def test_unknot_forms(self):
        for text in ("O", "free_loops=1"):
            d = parse_pd(text)
            assert len(d.crossings) == 0 and d.free_loops == 1
        assert parse_pd("O O").free_loops == 2
        assert parse_pd("free_loops=3").free_loops == 3

    def test_empty_link_rejected(self):
        with pytest.raises(InvalidPDError):
            parse_pd("")

    def test_wrapped_form(self):
        d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
        assert d.canonical_code() == parse_pd(TREFOIL_PD).canonical_code()

    def test_malformed_tuple(self):
        with pytest.raises(ParseError):
            parse_pd("X[1,2,3]")

    def test_label_count_violation(self):
        # labels 1,2,5,6 appear once
        with pytest.raises(InvalidPDError):
            parse_pd("X[1,4,2,3] X[3,6,4,5]")

    def test_label_range_violation(self):
        with pytest.raises(InvalidPDError):
            parse_pd("X[1,9,2,9] X[2,3,1,3]")

    def test_orientation_conflict(self):
        # edge 1 sits in two incoming-under slots (two heads)
        with pytest.raises(InvalidPDError):
            parse_pd("X[1,4,2,3] X[1,3,2,4]")

    def test_round_trip(self, small_knots):
        for entry in small_knots:
            d = entry.diagram
            again = parse_pd(d.serialize())
            assert again.crossings == d.crossings
            assert again.free_loops == d.free_loops

    def test_round_trip_with_loops(self):
        d = Diagram(parse_pd(TREFOIL_PD).crossings, free_loops=2, _validated=True)
        assert parse_pd(d.serialize()) == d

    def test_kink_signs(self):
        assert parse_pd("X[1,1,2,2]").writhe() == 1
        assert parse_pd("X[1,2,2,1]").writhe() == -1


class TestComponents:
    def test_trefoil_single_cycle(self):
        cycles = components(parse_pd(TREFOIL_PD))
        assert len(cycles) == 1
        assert sorted(cycles[0]) == [1, 2, 3, 4, 5, 6]

    def test_free_loops_appended_as_empty(self):
        d = parse_pd("O O")
        assert components(d) == [(), ()]
        assert d.num_components() == 2

    def test_label_partition(self, small_knots):
        for entry in small_knots:
            d = entry.diagram
            seen = [e for cyc in components(d) for e in cyc]
            assert sorted(seen) == list(range(1, 2 * len(d.crossings) + 1))

    def test_smoothing_changes_count_by_one(self):
        d = parse_pd(TREFOIL_PD)
        assert d.smooth_crossing(0).num_components() == 2


class TestMoves:
    def test_switch_is_involution(self):
        d = parse_pd(TREFOIL_PD)
        assert d.switch_crossing(1).switch_crossing(1) == d

    def test_switch_changes_one_sign(self):
        d = parse_pd(TREFOIL_PD)
        s = d.switch_crossing(0)
        assert s.writhe() == -1
        assert sorted(sorted(x.edges()) for x in s.crossings) == sorted(
            sorted(x.edges()) for x in d.crossings
        )

    def test_switch_index_error(self):
        with pytest.raises(IndexError):
            parse_pd(TREFOIL_PD).switch_crossing(3)

    def test_smooth_drops_one_crossing(self, small_knots):
        for entry in small_knots:
            d = entry.diagram
            for i in range(len(d.crossings)):
                s = d.smooth_crossing(i)
                assert len(s.crossings) == len(d.crossings) - 1
                assert abs(s.num_components() - d.num_components()) == 1

    def test_smooth_trefoil_gives_hopf(self):
        h = parse_pd(TREFOIL_PD).smooth_crossing(0)
        assert len(h.crossings) == 2
        assert h.num_components() == 2

    def test_smooth_kink_splits_loops(self):
        s = parse_pd("X[1,1,2,2]").smooth_crossing(0)
        assert len(s.crossings) == 0 and s.free_loops == 2

    def test_smoothing_all_crossings_counts_seifert_circles(self):
        d = parse_pd(TREFOIL_PD)
        while d.crossings:
            d = d.smooth_crossing(0)
        assert d.free_loops == 2


class TestCanonicalCode:
    def test_relabel_invariance(self, small_knots):
        rng = random.Random(11)
        for entry in small_knots:
            base = canonical_code(entry.diagram)
            for _ in range(20):
                moved = random_relabeling(shuffled_crossings(entry.diagram, rng), rng)
                assert canonical_code(moved) == base

    def test_relabel_invariance_links(self):
        rng = random.Random(13)
        for d in random_braid_diagrams(25, seed=5):
            base = canonical_code(d)
            for _ in range(10):
                assert canonical_code(random_relabeling(shuffled_crossings(d, rng), rng)) == base

    def test_shifted_labels_equal(self):
        shifted = "X[3,6,4,1] X[5,2,6,3] X[1,4,2,5]"
        assert canonical_code(parse_pd(shifted)) == canonical_code(parse_pd(TREFOIL_PD))

    def test_switch_changes_code(self):
        d = parse_pd(TREFOIL_PD)
        assert canonical_code(d.switch_crossing(0)) != canonical_code(d)

    def test_unknot_constant(self):
        assert canonical_code(parse_pd("O")) == canonical_code(parse_pd("free_loops=1"))

    def test_distinguishes_knots(self, small_knots):
        codes = {canonical_code(e.diagram) for e in small_knots}
        assert len(codes) == len(small_knots)

    def test_split_diagram_code(self):
        d1 = braid_closure([1, 1, 1], 2)
        xs = list(d1.crossings) + [
            x._replace(a=x.a + 6, b=x.b + 6, c=x.c + 6, d=x.d + 6) for x in d1.crossings
        ]
        two = Diagram(xs, 0)
        assert not two.is_connected()
        rng = random.Random(3)
        assert canonical_code(random_relabeling(two, rng)) == canonical_code(two)


class TestSimplify:
    def test_kink_unknot(self):
        d = parse_pd("X[1,1,2,2]").simplify()
        assert len(d.crossings) == 0 and d.free_loops == 1

    def test_trefoil_is_fixpoint(self):
        d = parse_pd(TREFOIL_PD)
        assert simplify(d) == d

    def test_r2_pair_removed(self):
        # unknot drawn with a reducible two-crossing curl
        d = parse_pd("X[1,4,2,3] X[2,4,3,1]")
        assert d.num_components() == 1
        s = d.simplify()
        assert len(s.crossings) == 0 and s.free_loops == 1

    def test_figure8_fixpoint(self):
        d = parse_pd(FIGURE8_PD)
        assert simplify(d) == d

    def test_stacked_kinks(self):
        # braid closure of sigma1 sigma1^-1: R2 pair on two strands
        d = braid_closure([1, -1], 2)
        s = d.simplify()
        assert len(s.crossings) == 0 and s.free_loops == 2

    def test_simplify_reduces_double_kink(self):
        d = braid_closure([1, 1, -1], 2)
        s = d.simplify()
        assert len(s.crossings) == 0
        assert s.free_loops == 1

    def test_crossing_count_never_increases(self):
        for d in random_braid_diagrams(30, seed=17):
            assert len(d.simplify().crossings) <= len(d.crossings)


class TestRelabel:
    def test_bad_mapping_rejected(self):
        d = parse_pd(TREFOIL_PD)
        with pytest.raises(InvalidPDError):
            d.relabel({i: 1 for i in range(1, 7)})

    def test_identity_mapping(self):
        d = parse_pd(TREFOIL_PD)
        assert d.relabel({i: i for i in range(1, 7)}) == d
