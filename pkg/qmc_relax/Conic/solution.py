import json

import numpy as np

from qmc_relax.Conic.cones import ConicError, cone_distance

OPTIMAL = "OPTIMAL"
PRIMAL_INFEASIBLE = "PRIMAL_INFEASIBLE"
DUAL_INFEASIBLE = "DUAL_INFEASIBLE"
NUMERICAL_LIMIT = "NUMERICAL_LIMIT"

class SolverOptions:
    """Options shared by the conic solvers.

    Args:
        tol (float): requested tolerance on every residual
        max_iter (int): interior point iteration limit
        method (str): "IPM" or "ADMM"
        admm_max_iter (int): iteration limit of the splitting method
        admm_alpha (float): over-relaxation parameter of the splitting method
        verbose (bool): print one line per iteration
    """
    def __init__(self, tol=1e-8, max_iter=200, method="IPM",
                 admm_max_iter=50000, admm_alpha=1.5, verbose=False):
        if method not in ("IPM", "ADMM"):
            raise ConicError(f"Unknown solver method {method}")
        if tol <= 0:
            raise ConicError(f"Tolerance must be positive, not {tol}")
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.method = method
        self.admm_max_iter = int(admm_max_iter)
        self.admm_alpha = float(admm_alpha)
        self.verbose = bool(verbose)

    def to_dict(self):
        return {"tol": self.tol, "max_iter": self.max_iter,
                "method": self.method, "admm_max_iter": self.admm_max_iter,
                "admm_alpha": self.admm_alpha, "verbose": self.verbose}

    @staticmethod
    def from_dict(d):
        return SolverOptions(**d)


def compute_residuals(p, x, z):
    """Relative primal, dual and gap residuals of a primal/dual pair.

    primal: distance of b - A x to K, over 1 + ||b||
    dual:   ||c + A^T z|| and distance of z to K*, over 1 + ||c||
    gap:    |c.x + b.z| over 1 + |c.x| + |b.z|
    """
    s = p.slack(x)
    primal = cone_distance(s, p.cones) / (1.0 + np.linalg.norm(p.b))
    r = p.c + p.A.T @ z
    dual = np.sqrt(np.linalg.norm(r) ** 2 +
                   cone_distance(z, p.cones, dual=True) ** 2)
    dual /= (1.0 + np.linalg.norm(p.c))
    pobj = float(p.c @ x)
    dobj = -float(p.b @ z)
    gap = abs(pobj - dobj) / (1.0 + abs(pobj) + abs(dobj))
    return {"primal": float(primal), "dual": float(dual), "gap": float(gap)}


class ConicSolution:
    def __init__(self, status, x, z, objective, dual_objective, residuals,
                 iterations, method, certificate=None, solve_time=0.0):
        self.status = status
        self.x = None if x is None else np.asarray(x, dtype=np.float64)
        self.z = None if z is None else np.asarray(z, dtype=np.float64)
        self.objective = objective
        self.dual_objective = dual_objective
        self.residuals = residuals
        self.iterations = int(iterations)
        self.method = method
        self.certificate = (None if certificate is None
                            else np.asarray(certificate, dtype=np.float64))
        self.solve_time = float(solve_time)

    @property
    def optimal(self):
        return self.status == OPTIMAL

    def max_residual(self):
        if not self.residuals:
            return np.inf
        return max(self.residuals.values())

    def stats(self):
        return {"status": self.status,
                "method": self.method,
                "iterations": self.iterations,
                "residuals": self.residuals,
                "solve_time": self.solve_time}

    def to_dict(self):
        tolist = lambda a: None if a is None else a.tolist()
        d = self.stats()
        d.update({"x": tolist(self.x), "z": tolist(self.z),
                  "objective": self.objective,
                  "dual_objective": self.dual_objective,
                  "certificate": tolist(self.certificate)})
        return d

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh)
