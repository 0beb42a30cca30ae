import numpy as np
import scipy.linalg

from qmc_relax.Conic.cones import (
    ConicError, ZERO, NONNEG, SOC, PSD, cone_slices, smat
)

class CheckReport:
    """Per cone violations of a candidate point.

    entries: list of dicts {"cone", "kind", "violation", "row"} where row is
    the offending row (ZERO, NONNEG) or the first row of the block.
    """
    def __init__(self, entries, tol):
        self.entries = entries
        self.tol = tol

    @property
    def max_violation(self):
        return max([e["violation"] for e in self.entries], default=0.0)

    @property
    def feasible(self):
        return self.max_violation <= self.tol

    def violations(self, kind):
        return [e["violation"] for e in self.entries if e["kind"] == kind]

    def __repr__(self):
        return f"CheckReport(max_violation={self.max_violation:.3e}, tol={self.tol})"

def psd_violation(S, tol):
    """Zero when S + tol*I admits a Cholesky factor, else -lambda_min(S)."""
    try:
        scipy.linalg.cholesky(S + tol * np.eye(S.shape[0]), lower=True)
        return 0.0
    except np.linalg.LinAlgError:
        return float(max(0.0, -np.linalg.eigvalsh(S)[0]))

def check_point(p, x, tol=1e-8):
    """Report the worst violation of each cone block at the point x."""
    x = np.asarray(x, dtype=np.float64).ravel()
    if x.shape[0] != p.num_vars:
        raise ConicError(
            f"invalid-program: point has {x.shape[0]} entries, program has {p.num_vars}"
        )
    s = p.slack(x)
    entries = []
    for k, (cone, sl) in enumerate(cone_slices(p.cones)):
        block = s[sl]
        if block.size == 0:
            continue
        if cone.kind == ZERO:
            r = int(np.argmax(np.abs(block)))
            v = float(abs(block[r]))
        elif cone.kind == NONNEG:
            r = int(np.argmin(block))
            v = float(max(0.0, -block[r]))
        elif cone.kind == SOC:
            r = 0
            v = float(max(0.0, np.linalg.norm(block[1:]) - block[0]))
        else:
            r = 0
            v = psd_violation(smat(block), tol)
        entries.append({"cone": k, "kind": cone.kind, "violation": v,
                        "row": sl.start + r})
    return CheckReport(entries, tol)
