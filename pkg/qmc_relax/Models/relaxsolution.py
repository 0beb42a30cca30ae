import json

import numpy as np

from qmc_relax.Conic.solution import SolverOptions, OPTIMAL
from qmc_relax.Conic.solve import solve
from qmc_relax.Models.scaling import ModelError, VARBENCH, all_scalings
from qmc_relax.Models.varmap import VariableMap
from qmc_relax.Models.socmodel import build_soc_model, select_triples, ALL, TWO_EDGE
from qmc_relax.Models.pauli1 import build_pauli1_model
from qmc_relax.Models.fourbody import build_fourbody_model
from qmc_relax.Symmetry.threequbit import check_lm_pt

SOC = "SOC"
SOC_P1 = "SOC_P1"
SOC_4 = "SOC_4"
LEVELS = (SOC, SOC_P1, SOC_4)

class RelaxationSolveError(Exception):
    """The conic solver did not reach an optimal, certified point."""
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status

def level_tag(name):
    key = str(name).strip().upper().replace("-", "_")
    aliases = {"SOCP1": SOC_P1, "SOC4": SOC_4, "P1": SOC_P1}
    key = aliases.get(key, key)
    if key not in LEVELS:
        raise ModelError(f"Unknown relaxation level: {name}")
    return key

class RelaxSolution:
    """Optimal point of a relaxation.

    x[v] is the swap expectation of the pair with id v (see VariableMap),
    y = (1 - x)/2.  M (Pauli level-1 only) has M_ii = 3, M_ij = 2 x_ij - 1.
    x4 maps each quadruple to its three product expectations.  objective
    holds the optimum in every scaling, keyed varbench / qmc_min / qmc_max.
    """
    def __init__(self, level, n, x, objective, x4=None, solver_stats=None,
                 with_moments=False):
        self.level = level
        self.n = int(n)
        self.vmap = VariableMap(self.n)
        self.x = np.asarray(x, dtype=np.float64).ravel()
        if self.x.shape[0] != self.vmap.num_pairs:
            raise ModelError(
                f"expected {self.vmap.num_pairs} pair values, got {self.x.shape[0]}"
            )
        self.objective = dict(objective)
        self.x4 = x4
        self.solver_stats = solver_stats if solver_stats is not None else {}
        self.M = self.moment_matrix() if with_moments else None

    @property
    def y(self):
        return 0.5 * (1.0 - self.x)

    def x_pair(self, i, j):
        return float(self.x[self.vmap.pair(i, j)])

    def y_pair(self, i, j):
        return 0.5 * (1.0 - self.x_pair(i, j))

    def moment_matrix(self):
        M = np.full((self.n, self.n), 3.0)
        for (i, j), v in self.vmap.pair_index.items():
            M[i, j] = M[j, i] = 2.0 * self.x[v] - 1.0
        return M

    def edge_values(self, g):
        return [(i, j, w, self.x_pair(i, j)) for i, j, w in g.edges]

    def to_dict(self):
        d = {"relaxation": self.level,
             "n": self.n,
             "objective": self.objective,
             "x": self.x.tolist(),
             "pairs": [list(p) for p in self.vmap.pairs()],
             "solver": self.solver_stats}
        if self.M is not None:
            d["M"] = self.M.tolist()
        if self.x4 is not None:
            d["x4"] = [[list(q), list(v)] for q, v in self.x4.items()]
        return d

    @staticmethod
    def from_dict(d):
        try:
            x4 = None
            if d.get("x4") is not None:
                x4 = {tuple(q): list(v) for q, v in d["x4"]}
            return RelaxSolution(level_tag(d["relaxation"]), d["n"], d["x"],
                                 d["objective"], x4, d.get("solver", {}),
                                 with_moments=d.get("M") is not None)
        except KeyError as e:
            raise ModelError(f"Result is missing key: {e}")


def build_model(g, level, triple_policy=ALL, quad_policy=TWO_EDGE):
    level = level_tag(level)
    if level == SOC:
        return build_soc_model(g, triple_policy)
    if level == SOC_P1:
        return build_pauli1_model(g, triple_policy)
    return build_fourbody_model(g, quad_policy, triple_policy)

def solve_relaxation(g, level=SOC, triple_policy=ALL, quad_policy=TWO_EDGE,
                     opts=None):
    """Build and solve a relaxation of g.

    Args:
        g (Graph): the instance
        level (str): SOC, SOC_P1 or SOC_4
        triple_policy (str): ALL or TWO_EDGE
        quad_policy (str): ALL or TWO_EDGE (SOC_4 only)
        opts (SolverOptions): solver options

    Returns:
        RelaxSolution

    Raises:
        RelaxationSolveError: when the solver status is not OPTIMAL
    """
    level = level_tag(level)
    if opts is None:
        opts = SolverOptions()
    program, vmap = build_model(g, level, triple_policy, quad_policy)
    if opts.verbose:
        print(f"Solving {level} relaxation of {g.name}: {program.num_vars} "
              f"variables, {program.num_rows} rows, {len(program.cones)} cones")
    sol = solve(program, opts)
    if sol.status != OPTIMAL:
        raise RelaxationSolveError(
            sol.status, f"{level} relaxation of {g.name} ended with status {sol.status}"
        )
    x = np.clip(sol.x[:vmap.num_pairs], -1.0, 1.0)
    x4 = None
    if level == SOC_4:
        x4 = {q: [float(sol.x[v]) for v in vmap.quad_product_vars(q)]
              for q in vmap.quads}
    varbench = sol.objective
    stats = sol.stats()
    stats["tol"] = opts.tol
    stats["triple_policy"] = triple_policy
    stats["quad_policy"] = quad_policy if level == SOC_4 else None
    stats["num_vars"] = program.num_vars
    stats["num_rows"] = program.num_rows
    return RelaxSolution(level, g.n, x,
                         all_scalings(varbench, VARBENCH, g.total_weight()),
                         x4, stats, with_moments=(level == SOC_P1))

def check_solution_triples(sol, g, triple_policy=ALL, tol=1e-7):
    """Triples of the solution that fail LM or PT beyond tol."""
    bad = []
    for i, j, k in select_triples(g, triple_policy):
        if not check_lm_pt(sol.x_pair(i, j), sol.x_pair(i, k),
                           sol.x_pair(j, k), tol):
            bad.append((i, j, k))
    return bad

def load_result(path):
    with open(path) as fh:
        d = json.load(fh)
    return RelaxSolution.from_dict(d.get("result", d))
