import csv
import json
import os
import tempfile
import unittest

import numpy as np

from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Graphs.lattices import diagonal_edges, gen_shastry_sutherland
from qmc_relax.Models.relaxsolution import SOC, SOC_P1, solve_relaxation
from qmc_relax.Rounding.hypergeometric import F, t_prime
from qmc_relax.Analysis.sweepresult import SweepResult, AnalysisError
from qmc_relax.Analysis.ratiolp import (
    solve_ratio_lp, approx_ratio_lp, ratio_lp_vertices, scan_F
)
from qmc_relax.Analysis.erstudy import run_er_study, draw_instances
from qmc_relax.Analysis.sssweep import (
    run_ss_sweep, find_kink, run_disorder_study
)
from qmc_relax.Analysis.heatmap import emit_heatmap, HEATMAP_FIELDS
from qmc_relax.Analysis.acceptance import run_suite, SUITES
from test_instances import SLOW, unit_edge, triangle

OPTS = SolverOptions(tol=1e-7)

def sample_sweep():
    points = [{"value": 0.3, "soc": -20.0, "soc_p1": -19.5, "ed": -19.0},
              {"value": 0.4, "soc": -24.0, "soc_p1": -24.0, "ed": -24.0},
              {"value": 0.5, "soc": -26.0, "soc_p1": -27.0, "ed": -25.0}]
    return SweepResult("J/J_D", points, [0], None, {"family": "test"})

class ratioLPTest(unittest.TestCase):
    """The linear program bounding the rounding ratio."""
    def test_conic_matches_breakpoints(self):
        for t in (0.75, 0.771, 0.8, 0.9, 1.0):
            lp = solve_ratio_lp(t)
            value, point = ratio_lp_vertices(t)
            assert(abs(lp.value - value) < 1e-6)
            assert(abs(sum(point) - 1.0) < 1e-12)

    def test_bounds(self):
        lp = solve_ratio_lp(0.771)
        assert(0.498 <= lp.value <= lp.F_t + 1e-9)
        assert(abs(lp.F_t - F(0.771)) < 1e-15)
        assert(abs(lp.F_tprime - F(t_prime(0.771))) < 1e-15)
        assert(abs(lp.alpha + lp.beta + lp.gamma - 1.0) < 1e-6)
        assert(abs(max(lp.terms()) - lp.value) < 1e-6)
        assert(abs(approx_ratio_lp(0.771) - lp.value) < 1e-9)

    def test_fixed_point(self):
        lp = solve_ratio_lp(0.75)
        assert(lp.F_t == lp.F_tprime)

    def test_to_dict(self):
        d = solve_ratio_lp(0.771).to_dict()
        assert(set(d) == {"t", "t_prime", "F_t", "F_tprime", "alpha", "beta",
                          "gamma", "r"})

    def test_range(self):
        with self.assertRaises(AnalysisError):
            solve_ratio_lp(0.7)
        with self.assertRaises(AnalysisError):
            ratio_lp_vertices(1.1)

    def test_scan_F(self):
        scan = scan_F()
        assert(scan["min"] >= 0.498)
        assert(scan["min"] < 0.5)
        assert(scan["argmin"] > 0.8)
        assert(scan["monotone"])


class sweepResultTest(unittest.TestCase):
    def test_objectives(self):
        s = sample_sweep()
        assert(np.allclose(s.grid, [0.3, 0.4, 0.5]))
        assert(np.allclose(s.objectives("soc"), [-20.0, -24.0, -26.0]))
        assert(np.all(np.isnan(s.objectives("soc_4"))))

    def test_sandwich(self):
        assert(sample_sweep().sandwich_violations() == [0.5])

    def test_rows(self):
        rows = sample_sweep().rows()
        assert(rows[1]["J/J_D"] == 0.4)
        assert(rows[1]["ed_over_soc"] == 1.0)
        assert("soc_4" not in rows[0])

    def test_files(self):
        s = sample_sweep()
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "sweep.json")
            s.write_json(path)
            back = SweepResult.from_json(path)
            assert(back.points == s.points)
            assert(back.parameter == "J/J_D")
            with open(path) as fh:
                meta = json.load(fh)
            assert(meta["provenance"].startswith("qmc_relax"))
            cpath = os.path.join(d, "sweep.csv")
            s.write_csv(cpath)
            with open(cpath, newline="") as fh:
                rows = list(csv.DictReader(fh))
            assert(len(rows) == 3)
            assert(float(rows[2]["soc_p1"]) == -27.0)

    def test_bad_version(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "sweep.json")
            with open(path, "w") as fh:
                json.dump({"format_version": 99}, fh)
            with self.assertRaises(AnalysisError):
                SweepResult.from_json(path)


class kinkTest(unittest.TestCase):
    def test_piecewise_line(self):
        grid = np.linspace(0.0, 1.0, 11)
        values = np.where(grid <= 0.5, grid, 0.5 + 3.0 * (grid - 0.5))
        at, jump = find_kink(grid, values)
        assert(abs(at - 0.5) < 1e-12)
        assert(abs(jump - 2.0) < 1e-9)

    def test_too_short(self):
        with self.assertRaises(AnalysisError):
            find_kink([0.0, 1.0], [0.0, 1.0])


class heatmapTest(unittest.TestCase):
    def test_single_edge(self):
        g = unit_edge()
        sol = solve_relaxation(g, SOC, opts=OPTS)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "edge.csv")
            rows = emit_heatmap(sol, g, path)
            assert(os.path.exists(os.path.join(d, "edge.json")))
            with open(path, newline="") as fh:
                back = list(csv.DictReader(fh))
        assert(len(rows) == 1)
        assert(abs(rows[0]["x"] + 1.0) < 1e-5)
        assert(tuple(back[0].keys()) == HEATMAP_FIELDS)

    def test_missing_coords(self):
        with tempfile.TemporaryDirectory() as d:
            with self.assertRaises(AnalysisError):
                emit_heatmap([(0, 1, 1.0, -1.0)], triangle(),
                             os.path.join(d, "t.csv"))

    def test_point_without_edges(self):
        with tempfile.TemporaryDirectory() as d:
            with self.assertRaises(AnalysisError):
                emit_heatmap({"value": 0.4}, unit_edge(), os.path.join(d, "e.csv"))


class shastrySutherlandTest(unittest.TestCase):
    def test_dimer_phase(self):
        sweep = run_ss_sweep(4, [0.4], levels=(SOC,), with_ed=False, opts=OPTS)
        point = sweep.points[0]
        assert(abs(point["soc"] + 24.0) < 1e-4)
        assert(point["ed"] is None)
        diagonals = set(diagonal_edges(gen_shastry_sutherland(4, 0.4, 1.0)))
        for i, j, w, x in point["edges"]:
            if (i, j) in diagonals:
                assert(abs(x + 1.0) < 1e-4)
            else:
                assert(abs(x - 0.5) < 1e-3)

    def test_heatmap_from_point(self):
        sweep = run_ss_sweep(4, [0.4], levels=(SOC,), with_ed=False, opts=OPTS)
        g = gen_shastry_sutherland(4, 0.4, 1.0)
        with tempfile.TemporaryDirectory() as d:
            rows = emit_heatmap(sweep.points[0], g, os.path.join(d, "ss.csv"))
        assert(len(rows) == 40)
        assert(all(-1.0 - 1e-6 <= r["x"] <= 1.0 + 1e-6 for r in rows))

    def test_ed_cap(self):
        with self.assertRaises(AnalysisError):
            run_ss_sweep(6, [0.4], with_ed=True)
        with self.assertRaises(AnalysisError):
            run_disorder_study(6, 0.4, 0.05, [0])

    def test_exact_agreement(self):
        if not SLOW:
            return
        point = run_ss_sweep(4, [0.4], opts=OPTS).points[0]
        for key in ("soc", "soc_p1", "ed"):
            assert(abs(point[key] + 24.0) < 1e-3)
        study = run_disorder_study(4, 0.4, 0.05, range(5), levels=(SOC,), opts=OPTS)
        assert(abs(study["soc"]["mean"] - 1.0) < 5e-3)


class erStudyTest(unittest.TestCase):
    def test_complete(self):
        study = run_er_study(6, 1.0, 1, SOC, opts=OPTS)
        assert(abs(study.mean - 15.0 / 9.0) < 1e-5)
        assert(study.stderr == 0.0)
        study = run_er_study(6, 1.0, 1, SOC_P1, opts=OPTS)
        assert(abs(study.mean - 1.0) < 1e-5)

    def test_lower_bounds(self):
        study = run_er_study(8, 0.4, 4, SOC, seed=3, opts=OPTS)
        assert(len(study.ratios) == 4)
        assert(np.all(np.asarray(study.ratios) >= 1.0 - 1e-5))
        assert(study.to_dict()["n"] == 8)

    def test_draws(self):
        graphs = draw_instances(6, 0.3, 5, 1)
        assert(len(graphs) == 5)
        assert(all(g.num_edges() > 0 for g in graphs))
        again = draw_instances(6, 0.3, 5, 1)
        assert([g.edges for g in graphs] == [g.edges for g in again])

    def test_parameters(self):
        with self.assertRaises(AnalysisError):
            run_er_study(30, 0.5, 1)
        with self.assertRaises(AnalysisError):
            run_er_study(6, 0.0, 1)
        with self.assertRaises(AnalysisError):
            run_er_study(6, 0.5, 1, "SOC_4")


class acceptanceTest(unittest.TestCase):
    def test_quick_suites(self):
        for name in ("symmetry", "soc-param", "closed-form", "threshold",
                     "rounding"):
            report = run_suite(name, quick=True, opts=OPTS)
            assert(report.passed), [c.to_dict() for c in report.failures()]

    def test_unknown_suite(self):
        with self.assertRaises(AnalysisError):
            run_suite("nope")

    def test_all_registered(self):
        assert(set(SUITES) == {"symmetry", "soc-param", "closed-form", "table1",
                               "rounding", "threshold", "guarantee", "er", "ss"})


if __name__ == "__main__":
    unittest.main()
