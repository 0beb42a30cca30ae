"""Operator splitting on the homogeneous self-dual embedding.

With u = (x, z, tau), v = (r, s, kappa) and

        [  0   A^T   c ]
    Q = [ -A    0    b ]
        [ -c^T -b^T  0 ]

the embedding asks for Q u = v, u in R^n x K* x R+, v in {0}^n x K x R+.
Each iteration solves one linear system with (I + Q), projects onto the
cone C = R^n x K* x R+ and updates v.  The system matrix is reduced to
I + A^T A, factorised once.
"""

import time

import numpy as np
import scipy.linalg

from qmc_relax.Conic.cones import project
from qmc_relax.Conic.solution import (
    ConicSolution, compute_residuals, OPTIMAL, PRIMAL_INFEASIBLE,
    DUAL_INFEASIBLE, NUMERICAL_LIMIT
)

class HSDEmbedding:
    def __init__(self, p):
        self.p = p
        self.n = p.num_vars
        self.m = p.num_rows
        self.A = p.A.tocsr()
        self.AT = self.A.T.tocsr()
        K = np.eye(self.n) + (self.AT @ self.A).toarray()
        self.factor = scipy.linalg.cho_factor(K)
        self.h = np.concatenate([p.c, p.b])
        self.g = self._solve_M(self.h)
        self.hg = 1.0 + self.h @ self.g

    def _solve_M(self, w):
        """Solve [[I, A^T], [-A, I]] (a, b) = w."""
        w1, w2 = w[:self.n], w[self.n:]
        a = scipy.linalg.cho_solve(self.factor, w1 - self.AT @ w2)
        b = w2 + self.A @ a
        return np.concatenate([a, b])

    def solve(self, w):
        """Solve (I + Q) u = w."""
        p = self._solve_M(w[:-1])
        tau = (w[-1] + self.h @ p) / self.hg
        return np.concatenate([p - tau * self.g, [tau]])

    def project(self, u):
        out = u.copy()
        out[self.n:-1] = project(u[self.n:-1], self.p.cones, dual=True)
        out[-1] = max(u[-1], 0.0)
        return out


def solve_admm(p, opts):
    st = time.time()
    emb = HSDEmbedding(p)
    n, m = emb.n, emb.m
    alpha = opts.admm_alpha
    tol = opts.tol
    u = np.zeros(n + m + 1)
    v = np.zeros(n + m + 1)
    u[-1] = 1.0
    v[-1] = 1.0
    status = NUMERICAL_LIMIT
    x = z = cert = None
    residuals = {}
    it = 0
    for it in range(1, opts.admm_max_iter + 1):
        ut = emb.solve(u + v)
        ur = alpha * ut + (1.0 - alpha) * u
        u = emb.project(ur - v)
        v = v - ur + u
        if it % 10 != 0 and it != opts.admm_max_iter:
            continue
        tau, kappa = u[-1], v[-1]
        if tau > 1e-12:
            x = u[:n] / tau
            z = u[n:-1] / tau
            residuals = compute_residuals(p, x, z)
            if opts.verbose and it % 100 == 0:
                print(f"    admm {it:6d}: primal {residuals['primal']:.2e} "
                      f"dual {residuals['dual']:.2e} gap {residuals['gap']:.2e}")
            if max(residuals.values()) <= tol:
                status = OPTIMAL
                break
        # infeasibility certificates (tau -> 0)
        uz = u[n:-1]
        by = p.b @ uz
        if by < 0 and np.linalg.norm(p.A.T @ uz) <= tol * -by and tau < kappa:
            status = PRIMAL_INFEASIBLE
            cert = uz / -by
            x = z = None
            break
        ux = u[:n]
        cx = p.c @ ux
        sx = v[n:-1]
        if cx < 0 and np.linalg.norm(p.A @ ux + sx) <= tol * -cx and tau < kappa:
            status = DUAL_INFEASIBLE
            cert = ux / -cx
            x = z = None
            break
    ed = time.time()
    if opts.verbose:
        print(f"    admm finished: {status} after {it} iterations")
        print("    Time taken: ", ed - st)
    if status != OPTIMAL:
        return ConicSolution(status, x, z, None if x is None else p.objective(x),
                             None if z is None else -float(p.b @ z) + p.offset,
                             residuals, it, "ADMM", certificate=cert,
                             solve_time=ed - st)
    return ConicSolution(OPTIMAL, x, z, p.objective(x),
                         -float(p.b @ z) + p.offset, residuals, it, "ADMM",
                         solve_time=ed - st)
