import json

import pytest

from hyperext.cliques import count_cliques
from hyperext.extremal import binom, closed_form_clique_count
from hyperext.matchings import matching_number
from hyperext.shifting import is_stable
from hyperext.verifier import (
    BOUND_NOT_YET_ACTIVE,
    CONFIRMED,
    VerificationReport,
    run_extremal_sweep,
    stable_with_matching_at_most,
    verify_extremal_cell,
    verify_proposition_3_2,
    verify_rainbow_cell,
)


class TestStableWithMatching:
    def test_members_are_stable_with_small_nu(self):
        fams = list(stable_with_matching_at_most(6, 2, 1))
        assert fams
        for h in fams:
            assert is_stable(h)
            assert matching_number(h)[0] <= 1

    def test_no_qualifying_family_missed(self):
        from hyperext.shifting import enumerate_stable

        direct = {
            h.edges
            for h in enumerate_stable(6, 2)
            if matching_number(h)[0] <= 1
        }
        pruned = {h.edges for h in stable_with_matching_at_most(6, 2, 1)}
        assert pruned == direct


class TestExtremalCell:
    def test_confirmed_graph_cells(self):
        # max edges with nu <= 1 on 5 vertices: the star, C(5,2)-C(4,2) = 4
        rep = verify_extremal_cell(5, 1, 2, 2)
        assert rep.status == CONFIRMED
        assert rep.observed_max == 4
        assert rep.claimed_bound == 4
        assert matching_number(rep.witness)[0] <= 1

    def test_star_regime_cell(self):
        rep = verify_extremal_cell(6, 1, 2, 2)
        assert rep.regime == "I"
        assert rep.status == CONFIRMED
        assert rep.observed_max == 5  # the star on 6 vertices

    def test_witness_attains_observed_max(self):
        rep = verify_extremal_cell(7, 2, 2, 3)
        assert count_cliques(rep.witness, 3).total == rep.observed_max
        assert matching_number(rep.witness)[0] <= 2

    def test_full_enumeration_agrees_with_stable_reduction(self):
        for n, k, r, s in [(5, 1, 2, 2), (5, 1, 2, 3), (6, 2, 2, 2), (5, 1, 3, 3)]:
            fast = verify_extremal_cell(n, k, r, s)
            slow = verify_extremal_cell(n, k, r, s, full_enumeration=True)
            assert fast.observed_max == slow.observed_max
            assert fast.status == slow.status

    def test_full_enumeration_refuses_large_universe(self):
        with pytest.raises(ValueError, match="2\\^20"):
            verify_extremal_cell(8, 1, 2, 2, full_enumeration=True)

    def test_small_n_regime_iii_not_yet_active(self):
        # n below rk+r-1 cannot host the complete-head family
        rep = verify_extremal_cell(4, 2, 2, 5)
        assert rep.regime == "III"
        assert rep.status in (CONFIRMED, BOUND_NOT_YET_ACTIVE)

    def test_json_line_shape_and_determinism(self):
        rep = verify_extremal_cell(6, 1, 2, 2)
        line = rep.to_json_line(omit_timing=True)
        again = verify_extremal_cell(6, 1, 2, 2).to_json_line(omit_timing=True)
        assert line == again
        obj = json.loads(line)
        assert obj["schema"] == "hyperext/1"
        assert obj["cell"] == {"n": 6, "k": 1, "r": 2, "s": 2}
        assert obj["status"] == CONFIRMED
        assert obj["claimed_bound"] == "5"
        assert obj["millis"] == 0


class TestRegimeIIIGap:
    def test_second_best_stays_below_gap(self):
        # r=2, k=1, s=3: bound C(3,3)=1, gap C(3,3)-C(1,1)=0, i.e.
        # nothing with nu <= 1 other than the triangle has any 3-clique
        rep = verify_extremal_cell(6, 1, 2, 3)
        assert rep.regime == "III"
        assert rep.status == CONFIRMED


class TestRainbowCell:
    def test_confirmed_cell(self):
        rep = verify_rainbow_cell(8, 2, 2, 2, trials=20, seed=5)
        assert rep.status == CONFIRMED
        assert rep.claimed_bound == 21
        assert rep.observed_max == 21

    def test_seed_reproducibility(self):
        a = verify_rainbow_cell(8, 3, 2, 3, trials=10, seed=1)
        b = verify_rainbow_cell(8, 3, 2, 3, trials=10, seed=1)
        assert a.to_json_line(omit_timing=True) == b.to_json_line(omit_timing=True)


class TestProposition:
    def test_confirmed_small_cells(self):
        for n, k, r, s in [(6, 1, 2, 3), (7, 1, 3, 4)]:
            rep = verify_proposition_3_2(n, k, r, s)
            assert rep.status == CONFIRMED
            assert rep.observed_max == 0

    def test_domain_check(self):
        with pytest.raises(ValueError):
            verify_proposition_3_2(6, 1, 2, 2)  # s below k+r


class TestSweep:
    CELLS = [(6, 1, 2, 2), (5, 1, 2, 2), (6, 1, 2, 3), (6, 1, 2, 2)]

    def test_sorted_deduplicated_order(self):
        reports = run_extremal_sweep(self.CELLS)
        keys = [tuple(r.cell[x] for x in ("n", "k", "r", "s")) for r in reports]
        assert keys == sorted(set(self.CELLS))

    def test_parallel_matches_serial(self):
        serial = run_extremal_sweep(self.CELLS, jobs=1)
        parallel = run_extremal_sweep(self.CELLS, jobs=2)
        assert [r.to_json_line(omit_timing=True) for r in serial] == [
            r.to_json_line(omit_timing=True) for r in parallel
        ]

    def test_sweep_agrees_with_closed_form(self):
        reports = run_extremal_sweep([(n, 1, 2, 2) for n in range(5, 9)])
        for rep in reports:
            n = rep.cell["n"]
            assert rep.observed_max == max(
                binom(3, 2), closed_form_clique_count(n, 1, 2, 1, 2)
            )
