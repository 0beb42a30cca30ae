"""Interior point back end.

Hands the program to cvxopt's cone LP solver, a homogeneous self-dual
primal-dual method with Nesterov-Todd scaling.  ZERO rows become the
equality block, NONNEG rows the 'l' block, SOC blocks the 'q' blocks and
each scaled-vector PSD block is expanded to the full s x s column major
matrix cvxopt expects.
"""

import time

import numpy as np
import scipy.sparse as sp
from cvxopt import matrix, spmatrix, solvers

from qmc_relax.Conic.cones import ConicError, ZERO, NONNEG, SOC, PSD, cone_slices
from qmc_relax.Conic.solution import (
    ConicSolution, compute_residuals, OPTIMAL, PRIMAL_INFEASIBLE,
    DUAL_INFEASIBLE, NUMERICAL_LIMIT
)

SQRT2 = np.sqrt(2.0)

def _psd_layout(s):
    """For every entry of the full s x s block: (full index, svec index, scale)."""
    layout = []
    for j in range(s):
        for i in range(s):
            a, b = max(i, j), min(i, j)
            k = b * s - b * (b - 1) // 2 + (a - b)
            layout.append((j * s + i, k, 1.0 if i == j else 1.0 / SQRT2))
    return layout

def to_cvxopt(p):
    """Split the program into cvxopt's (c, G, h, dims, A, b)."""
    A = sp.csr_matrix(p.A)
    eq_rows = []
    g_rows, g_scale, h = [], [], []
    dims = {"l": 0, "q": [], "s": []}
    for cone, sl in cone_slices(p.cones):
        rows = list(range(sl.start, sl.stop))
        if cone.kind == ZERO:
            eq_rows += rows
        elif cone.kind == NONNEG:
            g_rows += rows
            g_scale += [1.0] * len(rows)
            dims["l"] += len(rows)
        elif cone.kind == SOC:
            g_rows += rows
            g_scale += [1.0] * len(rows)
            dims["q"].append(cone.size)
        else:
            for _, k, scale in _psd_layout(cone.size):
                g_rows.append(sl.start + k)
                g_scale.append(scale)
            dims["s"].append(cone.size)
    if len(g_rows) == 0:
        raise ConicError("invalid-program: interior point back end needs at least one cone row")
    G = sp.diags(g_scale) @ A[g_rows, :]
    h = np.asarray(g_scale) * p.b[g_rows]
    Aeq = A[eq_rows, :]
    beq = p.b[eq_rows]
    return G.tocoo(), h, dims, Aeq.tocoo(), beq, eq_rows

def _sp(M):
    return spmatrix(M.data.tolist(), M.row.tolist(), M.col.tolist(),
                    size=(int(M.shape[0]), int(M.shape[1])))

def _dense(v):
    v = np.asarray(v, dtype=np.float64).ravel()
    if v.size == 0:
        return matrix(0.0, (0, 1))
    return matrix(v.reshape(-1, 1))

def _z_from_cvxopt(p, z_ineq, y_eq):
    """Map cvxopt duals back to the stacked scaled-vector layout."""
    z = np.zeros(p.num_rows)
    pos = 0
    for cone, sl in cone_slices(p.cones):
        if cone.kind == ZERO:
            z[sl] = y_eq[:cone.dim]
            y_eq = y_eq[cone.dim:]
        elif cone.kind in (NONNEG, SOC):
            z[sl] = z_ineq[pos:pos + cone.dim]
            pos += cone.dim
        else:
            s = cone.size
            block = np.asarray(z_ineq[pos:pos + s * s]).reshape(s, s).T
            v = np.empty(cone.dim)
            k = 0
            for j in range(s):
                v[k] = block[j, j]
                v[k + 1:k + s - j] = SQRT2 * block[j + 1:, j]
                k += s - j
            z[sl] = v
            pos += s * s
    return z

def solve_ipm(p, opts):
    c = _dense(p.c)
    G, h, dims, Aeq, beq, eq_rows = to_cvxopt(p)
    # solve a little tighter than requested, then judge by our own residuals
    inner_tol = opts.tol / 10.0
    options = {"show_progress": opts.verbose,
               "maxiters": opts.max_iter,
               "abstol": inner_tol,
               "reltol": inner_tol,
               "feastol": inner_tol}
    st = time.time()
    try:
        sol = solvers.conelp(c, _sp(G), _dense(h), dims, _sp(Aeq), _dense(beq),
                             options=options)
    except (ArithmeticError, ValueError) as e:
        if opts.verbose:
            print(f"    interior point method failed: {e}")
        return ConicSolution(NUMERICAL_LIMIT, None, None, None, None, {},
                             0, "IPM", solve_time=time.time() - st)
    ed = time.time()
    status = sol["status"]
    iterations = sol.get("iterations", 0)
    z_ineq = None if sol["z"] is None else np.array(sol["z"]).ravel()
    y_eq = None if sol["y"] is None else np.array(sol["y"]).ravel()
    if status == "primal infeasible":
        cert = _z_from_cvxopt(p, z_ineq, y_eq)
        return ConicSolution(PRIMAL_INFEASIBLE, None, None, None, None, {},
                             iterations, "IPM", certificate=cert,
                             solve_time=ed - st)
    if status == "dual infeasible":
        cert = np.array(sol["x"]).ravel()
        return ConicSolution(DUAL_INFEASIBLE, None, None, None, None, {},
                             iterations, "IPM", certificate=cert,
                             solve_time=ed - st)
    if sol["x"] is None or z_ineq is None:
        return ConicSolution(NUMERICAL_LIMIT, None, None, None, None, {},
                             iterations, "IPM", solve_time=ed - st)
    x = np.array(sol["x"]).ravel()
    z = _z_from_cvxopt(p, z_ineq, y_eq)
    residuals = compute_residuals(p, x, z)
    if max(residuals.values()) <= opts.tol:
        result = OPTIMAL
    else:
        result = NUMERICAL_LIMIT
    if opts.verbose:
        print(f"    cvxopt status: {status}, residuals: {residuals}")
        print("    Time taken: ", ed - st)
    return ConicSolution(result, x, z, p.objective(x),
                         -float(p.b @ z) + p.offset, residuals, iterations,
                         "IPM", solve_time=ed - st)
