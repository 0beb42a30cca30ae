"""Second order cone relaxation over consistent three-qubit marginals.

One variable x_ij = <swap_ij> per vertex pair.  Each selected triple
(i < j < k) with x = (x_ij, x_ik, x_jk) contributes

    0 <= x_ij + x_ik + x_jk <= 3                        (Lieb-Mattis)
    || A x || <= c.x + d                                (Parekh-Thompson)

and every pair gets -1 <= x_ij <= 1.  The objective is the VarBench energy
sum 2 w x - W, minimised.
"""

from itertools import combinations

import numpy as np

from qmc_relax.Conic.program import ProgramBuilder
from qmc_relax.Models.scaling import ModelError
from qmc_relax.Models.varmap import VariableMap

ALL = "ALL"
TWO_EDGE = "TWO_EDGE"
POLICIES = (ALL, TWO_EDGE)

def policy_tag(name):
    key = str(name).strip().upper().replace("-", "_")
    if key not in POLICIES:
        raise ModelError(f"Unknown selection policy: {name}")
    return key

PAIR_ORDER = ("ij", "ik", "jk")

def pt_soc_params(order=PAIR_ORDER):
    """(A, b, c, d) of the Parekh-Thompson cone ||A x + b|| <= c.x + d.

    Args:
        order (sequence): the pairs of the triple i < j < k in the order x
              lists them, a permutation of ("ij", "ik", "jk")

    d = 1 makes the cone equivalent to r1^2 + r2^2 <= r0^2 with
    r0 = 1 - (x_ij + x_ik + x_jk)/3.
    """
    order = tuple(order)
    if sorted(order) != sorted(PAIR_ORDER):
        raise ModelError(f"invalid-parameter: pair order {order} is not a "
                         f"permutation of {PAIR_ORDER}")
    cols = [PAIR_ORDER.index(p) for p in order]
    A = np.array([[-1.0, -1.0, 2.0],
                  [np.sqrt(3.0), -np.sqrt(3.0), 0.0]])[:, cols] / 3.0
    b = np.zeros(2)
    c = -np.ones(3) / 3.0
    d = 1.0
    return A, b, c, d

def pt_soc_feasible(x, y, z, tol=1e-12):
    A, b, c, d = pt_soc_params()
    v = np.array([x, y, z])
    return np.linalg.norm(A @ v + b) <= c @ v + d + tol

def select_triples(g, policy=ALL):
    """Triples (i < j < k) to constrain, lexicographically ordered.

    ALL is every triple of vertices; TWO_EDGE keeps triples in which at least
    two of the three pairs are edges of g.
    """
    policy = policy_tag(policy)
    if policy == ALL:
        return list(combinations(range(g.n), 3))
    edges = g.edge_set()
    out = []
    for t in combinations(range(g.n), 3):
        i, j, k = t
        count = ((i, j) in edges) + ((i, k) in edges) + ((j, k) in edges)
        if count >= 2:
            out.append(t)
    return out

def varbench_objective(g, vmap):
    """Coefficients and offset of sum_e 2 w_e x_e - W."""
    coeffs = {}
    for i, j, w in g.edges:
        coeffs[vmap.pair(i, j)] = coeffs.get(vmap.pair(i, j), 0.0) + 2.0 * w
    return coeffs, -g.total_weight()

def soc_builder(g, triple_policy=ALL):
    """ProgramBuilder and VariableMap holding the SOC relaxation of g."""
    if g.n < 2:
        raise ModelError(f"invalid-instance: need n >= 2 vertices, not {g.n}")
    vmap = VariableMap(g.n)
    builder = ProgramBuilder(vmap.num_pairs)
    coeffs, offset = varbench_objective(g, vmap)
    builder.set_objective(coeffs, offset)
    for pair in vmap.pairs():
        v = vmap.pair(*pair)
        builder.add_leq({v: 1.0}, 1.0)
        builder.add_geq({v: 1.0}, -1.0)
    A, b, c, d = pt_soc_params(PAIR_ORDER)
    for i, j, k in select_triples(g, triple_policy):
        ids = [vmap.pair(i, j), vmap.pair(i, k), vmap.pair(j, k)]
        lm = {v: 1.0 for v in ids}
        builder.add_geq(lm, 0.0)
        builder.add_leq(lm, 3.0)
        rows = [({v: c[n] for n, v in enumerate(ids)}, d)]
        for r in range(2):
            rows.append(({v: A[r, n] for n, v in enumerate(ids) if A[r, n] != 0.0},
                         b[r]))
        builder.add_affine_soc(rows)
    return builder, vmap

def build_soc_model(g, triple_policy=ALL):
    """Build the SOC relaxation of g.

    Args:
        g (Graph): the instance, n >= 2
        triple_policy (str): ALL or TWO_EDGE

    Returns:
        (ConicProgram, VariableMap)
    """
    builder, vmap = soc_builder(g, triple_policy)
    return builder.build(), vmap
