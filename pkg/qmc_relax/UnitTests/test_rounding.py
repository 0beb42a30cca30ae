import unittest

import numpy as np
import mpmath

from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Graphs.erdosrenyi import gen_erdos_renyi
from qmc_relax.Models.relaxsolution import (
    RelaxSolution, SOC, SOC_P1, solve_relaxation
)
from qmc_relax.Models.scaling import VARBENCH, all_scalings
from qmc_relax.Models.varmap import VariableMap
from qmc_relax.Rounding.hypergeometric import (
    RoundingError, hyp2f1_half, F, expected_edge_value, t_prime,
    monte_carlo_edge_value, GAUSS_H1
)
from qmc_relax.Rounding.assignment import BlochAssignment
from qmc_relax.Rounding.matching import extract_matching, S_EDGE, T_EDGE, U_EDGE
from qmc_relax.Rounding.gram import gram_vectors
from qmc_relax.Rounding.rounding import round as round_solution, expected_energies
from test_instances import SLOW, unit_edge, path, complete

OPTS = SolverOptions(tol=1e-7)

def fake_solution(n, y, level=SOC):
    """RelaxSolution with the given y per pair (dict) and y = 1/2 elsewhere."""
    vmap = VariableMap(n)
    x = np.zeros(vmap.num_pairs)
    for (i, j), v in vmap.pair_index.items():
        x[v] = 1.0 - 2.0 * y.get((i, j), 0.5)
    return RelaxSolution(level, n, x, all_scalings(0.0, VARBENCH, 0.0))

class hypergeometricTest(unittest.TestCase):
    def test_endpoints(self):
        assert(hyp2f1_half(0.0) == 1.0)
        assert(abs(hyp2f1_half(1.0) - GAUSS_H1) < 1e-15)
        assert(abs(GAUSS_H1 - 3.0 * np.pi / 8.0) < 1e-15)

    def test_against_mpmath(self):
        mpmath.mp.dps = 30
        for z in (0.1, 0.25, 0.5, 0.6, 0.9, 0.999):
            ref = float(mpmath.hyp2f1(0.5, 0.5, 2.5, z))
            assert(abs(hyp2f1_half(z) - ref) < 1e-13)

    def test_domain(self):
        with self.assertRaises(RoundingError):
            hyp2f1_half(-0.1)
        with self.assertRaises(RoundingError):
            hyp2f1_half(1.1)

    def test_F(self):
        assert(abs(F(0.25) - 1.0) < 1e-15)
        assert(abs(F(1.0) - 0.5) < 1e-14)
        assert(abs(F(1.0, corrected=False) - 1.0 / 6.0) < 1e-14)
        assert(abs(F(0.771) - 0.5266) < 1e-3)
        grid = np.arange(1, 1001) * 1e-3
        assert(min(F(x) for x in grid) >= 0.498)
        with self.assertRaises(RoundingError):
            F(0.0)

    def test_expected_edge_value(self):
        assert(abs(expected_edge_value(0.0) - 0.25) < 1e-15)
        assert(abs(expected_edge_value(-3.0) - 0.5) < 1e-14)
        assert(abs(expected_edge_value(3.0)) < 1e-14)
        with self.assertRaises(RoundingError):
            expected_edge_value(3.5)

    def test_t_prime(self):
        assert(abs(t_prime(0.771) - 0.7284) < 1e-3)
        assert(abs(t_prime(0.75) - 0.75) < 1e-12)
        assert(abs(t_prime(1.0) - 0.25) < 1e-12)
        assert(t_prime(0.8) < 0.8)
        with self.assertRaises(RoundingError):
            t_prime(0.5)

    def test_monte_carlo(self):
        for m in (-2.0, 0.0, 1.5):
            mean, se = monte_carlo_edge_value(m, 40000, seed=3)
            assert(abs(mean - expected_edge_value(m)) < 4.0 * se + 1e-12)


class matchingTest(unittest.TestCase):
    def test_path(self):
        g = path([1.0, 1.0])
        sol = fake_solution(3, {(0, 1): 0.8, (1, 2): 0.1})
        matching, classes = extract_matching(sol, g)
        assert(matching == [(0, 1)])
        assert(classes == [S_EDGE, T_EDGE])

    def test_uniform(self):
        g = complete(4)
        sol = fake_solution(4, {})
        matching, classes = extract_matching(sol, g)
        assert(matching == [])
        assert(set(classes) == {U_EDGE})

    def test_adjacent_heavy_edges(self):
        g = path([1.0, 1.0])
        sol = fake_solution(3, {(0, 1): 0.8, (1, 2): 0.8})
        with self.assertRaises(RoundingError):
            extract_matching(sol, g)

    def test_threshold_range(self):
        g = path([1.0])
        sol = fake_solution(2, {})
        with self.assertRaises(RoundingError):
            extract_matching(sol, g, t=0.7)
        with self.assertRaises(RoundingError):
            extract_matching(sol, g, t=1.2)


class gramTest(unittest.TestCase):
    def test_rank_one(self):
        V = gram_vectors([[3.0, -3.0], [-3.0, 3.0]])
        assert(np.allclose(V[1], -V[0]))
        assert(abs(V[0] @ V[0] - 3.0) < 1e-12)

    def test_identity(self):
        V = gram_vectors(3.0 * np.eye(4))
        assert(np.allclose(V @ V.T, 3.0 * np.eye(4)))

    def test_random(self):
        rng = np.random.default_rng(8)
        G = rng.standard_normal((7, 4))
        G *= np.sqrt(3.0) / np.linalg.norm(G, axis=1)[:, None]
        M = G @ G.T
        V = gram_vectors(M)
        assert(np.max(np.abs(V @ V.T - M)) <= 1e-6)

    def test_errors(self):
        with self.assertRaises(RoundingError):
            gram_vectors([[3.0, 3.5], [3.5, 3.0]])
        with self.assertRaises(RoundingError):
            gram_vectors([[2.0, 0.0], [0.0, 3.0]])
        with self.assertRaises(RoundingError):
            gram_vectors([[3.0, 1.0], [0.0, 3.0]])


class assignmentTest(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(RoundingError):
            BlochAssignment(3, [(0, 1), (1, 2)], np.zeros((3, 3)))
        with self.assertRaises(RoundingError):
            BlochAssignment(2, [], [[1.0, 0.0, 0.0], [0.5, 0.0, 0.0]])
        with self.assertRaises(RoundingError):
            BlochAssignment(2, [], np.ones((3, 3)))

    def test_dict_round_trip(self):
        a = BlochAssignment(3, [(1, 0)], [[0, 0, 0], [0, 0, 0], [0, 1.0, 0]])
        b = BlochAssignment.from_dict(a.to_dict())
        assert(b.matching == [(0, 1)])
        assert(b.is_matched(1) and not b.is_matched(2))
        assert(np.allclose(b.theta[2], [0.0, 1.0, 0.0]))


class roundTest(unittest.TestCase):
    """Rounding of Pauli level-1 optima."""
    def test_single_edge(self):
        g = unit_edge()
        sol = solve_relaxation(g, SOC_P1, opts=OPTS)
        res = round_solution(sol, g, samples=20, seed=1)
        assert(res.matching == [(0, 1)])
        assert(abs(res.expected_energy_S - 1.0) < 1e-12)
        assert(abs(res.guarantee_ratio - 1.0) < 1e-5)
        assert(abs(res.best_sampled_energy - 1.0) < 1e-12)
        assert(res.best_assignment.matching == [(0, 1)])

    def test_complete_10(self):
        g = complete(10)
        sol = solve_relaxation(g, SOC_P1, opts=OPTS)
        res = round_solution(sol, g, samples=200, seed=0)
        assert(res.matching == [])
        expected = 45.0 * expected_edge_value(-1.0 / 3.0)
        assert(abs(res.expected_energy_prod - expected) < 1e-2)
        assert(res.guarantee_ratio >= 0.526)
        assert(res.best_sampled_energy <= 15.0 + 1e-6)

    def test_sampling_agrees(self):
        g = gen_erdos_renyi(8, 0.5, 6)
        sol = solve_relaxation(g, SOC_P1, opts=OPTS)
        res = round_solution(sol, g, samples=4000, seed=2)
        st = res.sample_stats
        assert(abs(st["mean_prod"] - res.expected_energy_prod) < 4.0 * st["stderr_prod"] + 1e-9)
        assert(abs(st["mean_S"] - res.expected_energy_S) < 4.0 * st["stderr_S"] + 1e-9)
        assert(res.best_sampled_energy >= max(st["mean_S"], st["mean_prod"]) - 1e-9)

    def test_deterministic(self):
        g = gen_erdos_renyi(6, 0.6, 3)
        sol = solve_relaxation(g, SOC_P1, opts=OPTS)
        a = round_solution(sol, g, samples=50, seed=4)
        b = round_solution(sol, g, samples=50, seed=4)
        assert(a.best_sampled_energy == b.best_sampled_energy)
        assert(a.to_dict() == b.to_dict())

    def test_expected_energies(self):
        g = path([1.0, 2.0])
        sol = fake_solution(3, {(0, 1): 0.9, (1, 2): 0.1, (0, 2): 0.5},
                            level=SOC_P1)
        sol.M = sol.moment_matrix()
        e_S, e_prod = expected_energies(sol, g, [(0, 1)], [S_EDGE, T_EDGE])
        assert(abs(e_S - (1.0 + 0.5)) < 1e-12)
        ref = expected_edge_value(2.0 * (1.0 - 1.8) - 1.0) + \
            2.0 * expected_edge_value(2.0 * 0.8 - 1.0)
        assert(abs(e_prod - ref) < 1e-12)

    def test_guarantee(self):
        count = 50 if SLOW else 5
        for seed in range(count):
            g = gen_erdos_renyi(12 if SLOW else 8, 0.4, seed)
            sol = solve_relaxation(g, SOC_P1, opts=OPTS)
            res = round_solution(sol, g, samples=0)
            assert(res.guarantee_ratio >= 0.526)

    def test_needs_moments(self):
        g = unit_edge()
        sol = solve_relaxation(g, SOC, opts=OPTS)
        with self.assertRaises(RoundingError):
            round_solution(sol, g)


if __name__ == "__main__":
    unittest.main()
