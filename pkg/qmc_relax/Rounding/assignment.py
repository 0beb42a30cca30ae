import numpy as np

from qmc_relax.Rounding.hypergeometric import RoundingError

UNIT_TOL = 1e-9

class BlochAssignment:
    """A product of singlets and single-qubit pure states.

    Vertices in a matched pair carry no vector; every other vertex carries a
    unit Bloch vector theta[v].
    """
    def __init__(self, n, matching, theta):
        self.n = int(n)
        self.matching = [tuple(sorted((int(i), int(j)))) for i, j in matching]
        self.partner = {}
        for i, j in self.matching:
            if i == j or i in self.partner or j in self.partner:
                raise RoundingError(
                    f"inconsistent-solution: pair ({i}, {j}) is not disjoint "
                    "from the rest of the matching"
                )
            self.partner[i] = j
            self.partner[j] = i
        theta = np.asarray(theta, dtype=np.float64)
        if theta.shape != (self.n, 3):
            raise RoundingError(f"expected {self.n} x 3 Bloch vectors, got {theta.shape}")
        self.theta = theta
        norms = np.linalg.norm(theta, axis=1)
        for v in range(self.n):
            if v not in self.partner and abs(norms[v] - 1.0) > UNIT_TOL:
                raise RoundingError(f"Bloch vector of vertex {v} has norm {norms[v]}")

    def is_matched(self, v):
        return v in self.partner

    def to_dict(self):
        return {"n": self.n,
                "matching": [list(p) for p in self.matching],
                "theta": [None if v in self.partner else self.theta[v].tolist()
                          for v in range(self.n)]}

    @staticmethod
    def from_dict(d):
        theta = np.zeros((d["n"], 3))
        for v, t in enumerate(d["theta"]):
            if t is not None:
                theta[v] = t
        return BlochAssignment(d["n"], d["matching"], theta)
