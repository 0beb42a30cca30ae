import os
import tempfile
import unittest

import numpy as np

from qmc_relax.Conic.cones import (
    Cone, ConicError, ZERO, NONNEG, SOC, PSD, svec, smat, svec_index,
    project_soc, project_psd, cone_distance
)
from qmc_relax.Conic.program import ConicProgram, ProgramBuilder
from qmc_relax.Conic.checkpoint import check_point, psd_violation
from qmc_relax.Conic.solution import (
    SolverOptions, OPTIMAL, PRIMAL_INFEASIBLE, DUAL_INFEASIBLE
)
from qmc_relax.Conic.solve import solve

def lp_program():
    # min x s.t. x >= 1
    b = ProgramBuilder(1)
    b.set_objective({0: 1.0})
    b.add_geq({0: 1.0}, 1.0)
    return b.build()

def soc_program():
    # min t s.t. ||(3, 4)|| <= t
    b = ProgramBuilder(1)
    b.set_objective({0: 1.0})
    b.add_affine_soc([({0: 1.0}, 0.0), ({}, 3.0), ({}, 4.0)])
    return b.build()

def psd_program():
    # min t s.t. t I - diag(1, 2) >= 0
    b = ProgramBuilder(1)
    b.set_objective({0: 1.0})
    b.add_affine_psd({(0, 0): ({0: 1.0}, -1.0),
                      (1, 1): ({0: 1.0}, -2.0)}, 2)
    return b.build()

def mixed_program():
    # min -x - y s.t. x + y + z == 1, z >= 0.25, ||(x, y)|| <= 1
    b = ProgramBuilder(3)
    b.set_objective({0: -1.0, 1: -1.0})
    b.add_equality({0: 1.0, 1: 1.0, 2: 1.0}, 1.0)
    b.add_geq({2: 1.0}, 0.25)
    b.add_affine_soc([({}, 1.0), ({0: 1.0}, 0.0), ({1: 1.0}, 0.0)])
    return b.build()

class conesTest(unittest.TestCase):
    """Scaled vectorisation and cone projections."""
    def test_svec_inverse(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(4, 4))
        X = X + X.T
        assert(np.allclose(smat(svec(X)), X))
        assert(len(svec(X)) == Cone(PSD, 4).dim)

    def test_svec_inner_product(self):
        rng = np.random.default_rng(5)
        X = rng.normal(size=(3, 3))
        Y = rng.normal(size=(3, 3))
        X, Y = X + X.T, Y + Y.T
        assert(abs(svec(X) @ svec(Y) - np.trace(X @ Y)) < 1e-12)

    def test_svec_index(self):
        X = np.arange(9.0).reshape(3, 3)
        X = X + X.T
        v = svec(X)
        assert(v[svec_index(0, 0, 3)] == X[0, 0])
        assert(v[svec_index(2, 2, 3)] == X[2, 2])
        assert(abs(v[svec_index(2, 1, 3)] - np.sqrt(2) * X[2, 1]) < 1e-12)
        assert(svec_index(1, 2, 3) == svec_index(2, 1, 3))

    def test_smat_bad_length(self):
        with self.assertRaises(ConicError):
            smat(np.zeros(4))

    def test_project_soc(self):
        inside = np.array([5.0, 3.0, 4.0])
        assert(np.allclose(project_soc(inside), inside))
        polar = np.array([-5.0, 3.0, 4.0])
        assert(np.allclose(project_soc(polar), 0.0))
        p = project_soc(np.array([0.0, 3.0, 4.0]))
        assert(np.allclose(p, [2.5, 1.5, 2.0]))

    def test_project_psd(self):
        v = svec(np.diag([1.0, -2.0]))
        assert(np.allclose(smat(project_psd(v)), np.diag([1.0, 0.0])))

    def test_cone_distance(self):
        cones = [Cone(ZERO, 1), Cone(NONNEG, 2)]
        assert(abs(cone_distance(np.array([0.0, 1.0, -2.0]), cones) - 2.0) < 1e-12)
        # the dual of the zero cone is the whole line
        assert(cone_distance(np.array([7.0, 1.0, 0.0]), cones, dual=True) == 0.0)

    def test_bad_cone(self):
        with self.assertRaises(ConicError):
            Cone("EXP", 3)
        with self.assertRaises(ConicError):
            Cone(SOC, 0)


class programTest(unittest.TestCase):
    def test_builder_order(self):
        b = ProgramBuilder(2)
        b.add_affine_soc([({0: 1.0}, 0.0), ({1: 1.0}, 0.0)])
        b.add_leq({0: 1.0}, 2.0)
        b.add_equality({1: 1.0}, 1.0)
        p = b.build()
        assert([c.kind for c in p.cones] == [ZERO, NONNEG, SOC])
        assert(p.b[0] == 1.0 and p.b[1] == 2.0)

    def test_add_variables(self):
        b = ProgramBuilder(2)
        assert(b.add_variables(3) == 2)
        assert(b.num_vars == 5)

    def test_dict_round_trip(self):
        p = mixed_program()
        q = ConicProgram.from_dict(p.to_dict())
        assert(np.allclose(p.A.toarray(), q.A.toarray()))
        assert(np.allclose(p.b, q.b) and np.allclose(p.c, q.c))
        assert(p.cones == q.cones)

    def test_dump_load(self):
        p = psd_program()
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "prog.json")
            p.dump(path)
            q = ConicProgram.load(path)
        assert(q.cones == p.cones)

    def test_bad_version(self):
        d = lp_program().to_dict()
        d["version"] = 99
        with self.assertRaises(ConicError):
            ConicProgram.from_dict(d)

    def test_dimension_mismatch(self):
        with self.assertRaises(ConicError):
            ConicProgram([1.0], np.ones((2, 1)), [1.0], [Cone(NONNEG, 2)])


class checkpointTest(unittest.TestCase):
    def test_feasible(self):
        rep = check_point(mixed_program(), [0.3, 0.3, 0.4])
        assert(rep.feasible)
        assert(rep.max_violation <= 1e-12)

    def test_nonneg_violation(self):
        rep = check_point(lp_program(), [0.0])
        assert(abs(rep.max_violation - 1.0) < 1e-12)
        assert(not rep.feasible)

    def test_soc_violation(self):
        rep = check_point(soc_program(), [4.0])
        assert(abs(rep.violations(SOC)[0] - 1.0) < 1e-12)

    def test_psd_violation(self):
        S = np.array([[3.0, 3.5], [3.5, 3.0]])
        assert(abs(psd_violation(S, 1e-9) - 0.5) < 1e-9)
        assert(psd_violation(np.eye(2), 1e-9) == 0.0)

    def test_wrong_length(self):
        with self.assertRaises(ConicError):
            check_point(lp_program(), [1.0, 2.0])


class solveTest(unittest.TestCase):
    """The interior point and splitting solvers on small programs."""
    def _check(self, p, value, method, tol):
        sol = solve(p, SolverOptions(tol=tol, method=method))
        assert(sol.status == OPTIMAL)
        assert(abs(sol.objective - value) < 100 * tol)
        assert(check_point(p, sol.x, 10 * tol + 1e-9).feasible)
        # weak duality
        assert(sol.objective >= sol.dual_objective - 100 * tol)
        return sol

    def test_ipm(self):
        self._check(lp_program(), 1.0, "IPM", 1e-7)
        self._check(soc_program(), 5.0, "IPM", 1e-7)
        self._check(psd_program(), 2.0, "IPM", 1e-7)
        self._check(mixed_program(), -0.75, "IPM", 1e-7)

    def test_admm(self):
        self._check(lp_program(), 1.0, "ADMM", 1e-5)
        self._check(soc_program(), 5.0, "ADMM", 1e-5)
        self._check(psd_program(), 2.0, "ADMM", 1e-5)

    def test_deterministic(self):
        a = solve(mixed_program(), SolverOptions(tol=1e-7))
        b = solve(mixed_program(), SolverOptions(tol=1e-7))
        assert(np.array_equal(a.x, b.x))

    def test_scale_invariance(self):
        p = soc_program()
        a = solve(p, SolverOptions(tol=1e-7))
        b = solve(p.scaled(3.0), SolverOptions(tol=1e-7))
        assert(abs(b.objective - 3.0 * a.objective) < 1e-5)
        assert(np.allclose(a.x, b.x, atol=1e-5))

    def test_primal_infeasible(self):
        # x >= 1 and x <= 0
        b = ProgramBuilder(1)
        b.set_objective({0: 1.0})
        b.add_geq({0: 1.0}, 1.0)
        b.add_leq({0: 1.0}, 0.0)
        sol = solve(b.build(), SolverOptions(tol=1e-7))
        assert(sol.status == PRIMAL_INFEASIBLE)
        assert(sol.certificate is not None)

    def test_dual_infeasible(self):
        # min -x s.t. x >= 0 is unbounded
        b = ProgramBuilder(1)
        b.set_objective({0: -1.0})
        b.add_geq({0: 1.0}, 0.0)
        sol = solve(b.build(), SolverOptions(tol=1e-7))
        assert(sol.status == DUAL_INFEASIBLE)

    def test_bad_options(self):
        with self.assertRaises(ConicError):
            SolverOptions(method="SIMPLEX")
        with self.assertRaises(ConicError):
            SolverOptions(tol=0.0)


if __name__ == "__main__":
    unittest.main()
