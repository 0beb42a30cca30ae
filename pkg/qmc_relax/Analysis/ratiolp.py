"""Approximation ratio of the singlet/product rounding at threshold t.

With edge-mass fractions alpha (edges above t), beta (edges next to them)
and gamma (the rest), the ratio is

    r = min over the simplex of max{0.498 alpha + F(t') beta + F(t) gamma,
                                    alpha + beta/4 + F(t) gamma}

solved as the linear program min s subject to both terms <= s.
"""

import numpy as np

from qmc_relax.Conic.program import ProgramBuilder
from qmc_relax.Conic.solution import SolverOptions, OPTIMAL
from qmc_relax.Conic.solve import solve
from qmc_relax.Rounding.hypergeometric import F, t_prime, F_MIN_BOUND
from qmc_relax.Analysis.sweepresult import AnalysisError

ALPHA, BETA, GAMMA, S = range(4)

class RatioLP:
    def __init__(self, t, F_t, F_tprime, alpha, beta, gamma, value):
        self.t = t
        self.F_t = F_t
        self.F_tprime = F_tprime
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.value = value

    def terms(self):
        return _terms(self.alpha, self.beta, self.gamma, self.F_t, self.F_tprime)

    def to_dict(self):
        return {"t": self.t, "t_prime": t_prime(self.t), "F_t": self.F_t,
                "F_tprime": self.F_tprime, "alpha": self.alpha,
                "beta": self.beta, "gamma": self.gamma, "r": self.value}

def _terms(a, b, c, F_t, F_tp):
    return (F_MIN_BOUND * a + F_tp * b + F_t * c,
            a + 0.25 * b + F_t * c)

def _check_t(t):
    if not (0.75 <= t <= 1.0):
        raise AnalysisError(f"invalid-parameter: threshold t={t} not in [3/4, 1]")

def ratio_lp_program(F_t, F_tprime):
    pb = ProgramBuilder(4)
    pb.set_objective({S: 1.0})
    pb.add_equality({ALPHA: 1.0, BETA: 1.0, GAMMA: 1.0}, 1.0)
    pb.add_leq({ALPHA: F_MIN_BOUND, BETA: F_tprime, GAMMA: F_t, S: -1.0}, 0.0)
    pb.add_leq({ALPHA: 1.0, BETA: 0.25, GAMMA: F_t, S: -1.0}, 0.0)
    for v in (ALPHA, BETA, GAMMA):
        pb.add_geq({v: 1.0}, 0.0)
    return pb.build()

def solve_ratio_lp(t, opts=None, corrected=True):
    """Solve the ratio LP at threshold t with the conic solver.

    Returns:
        RatioLP
    """
    _check_t(t)
    if opts is None:
        opts = SolverOptions(tol=1e-9)
    F_t = F(t, corrected)
    F_tp = F(t_prime(t), corrected)
    sol = solve(ratio_lp_program(F_t, F_tp), opts)
    if sol.status != OPTIMAL:
        raise AnalysisError(f"ratio LP at t={t} ended with status {sol.status}")
    a, b, c = (float(max(v, 0.0)) for v in sol.x[:3])
    return RatioLP(t, F_t, F_tp, a, b, c, float(sol.objective))

def approx_ratio_lp(t, opts=None):
    return solve_ratio_lp(t, opts).value

def ratio_lp_vertices(t, corrected=True):
    """The same LP by enumerating the breakpoints of the simplex.

    The objective is the maximum of two linear forms, so its minimum lies at
    a corner of the simplex or where the forms cross on one of its sides.
    """
    _check_t(t)
    F_t = F(t, corrected)
    F_tp = F(t_prime(t), corrected)
    corners = np.eye(3)
    best = (np.inf, None)
    candidates = list(corners)
    for p in range(3):
        for q in range(p + 1, 3):
            dp = np.subtract(*_terms(*corners[p], F_t, F_tp))
            dq = np.subtract(*_terms(*corners[q], F_t, F_tp))
            if dp * dq < 0.0:
                lam = dp / (dp - dq)
                candidates.append((1.0 - lam) * corners[p] + lam * corners[q])
    for point in candidates:
        value = max(_terms(*point, F_t, F_tp))
        if value < best[0]:
            best = (value, point)
    return float(best[0]), tuple(float(v) for v in best[1])

def scan_F(grid=None, corrected=True, monotone_upto=0.8):
    """Minimum of F on a grid and whether F decreases on (0, monotone_upto].

    Returns:
        dict: min, argmin and monotone
    """
    if grid is None:
        grid = np.arange(1, 1001) * 1e-3
    grid = np.asarray(grid, dtype=np.float64)
    values = np.array([F(x, corrected) for x in grid])
    k = int(np.argmin(values))
    head = values[grid <= monotone_upto + 1e-12]
    return {"min": float(values[k]),
            "argmin": float(grid[k]),
            "monotone": bool(np.all(np.diff(head) <= 1e-12))}
