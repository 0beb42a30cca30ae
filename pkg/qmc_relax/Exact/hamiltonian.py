"""Quantum Max Cut / Heisenberg Hamiltonian on the bitstring basis.

Built in the VarBench scaling H = sum w (XX + YY + ZZ) = sum w (2 swap - 1):
per edge, a basis state with equal bits gets +w on the diagonal, one with
different bits gets -w on the diagonal and +2w on the state with the two
bits exchanged.  Other scalings are affine shifts of the spectrum.
"""

import numpy as np
import scipy.sparse as sp
from scipy.special import comb
from scipy.sparse.linalg import LinearOperator

from qmc_relax.Models.scaling import VARBENCH, convert_energy, scaling_tag

class ExactError(Exception):
    pass

MAX_QUBITS = 24

def sector_states(n, m):
    """Sorted basis states of n bits with exactly m set bits."""
    if m < 0 or m > n:
        return np.zeros(0, dtype=np.int64)
    states = np.arange(2 ** n, dtype=np.uint32)
    counts = np.zeros(2 ** n, dtype=np.uint8)
    for b in range(n):
        counts += ((states >> b) & 1).astype(np.uint8)
    return states[counts == m].astype(np.int64)

class SparseHamiltonian:
    """Matrix-free H restricted to the basis `states` (the full space or
    one magnetisation sector).

    Args:
        g (Graph): the instance
        scaling (str): energy scaling of reported values
        m (int): number of up spins, None for the full 2^n space
    """
    def __init__(self, g, scaling=VARBENCH, m=None):
        if g.n > MAX_QUBITS:
            raise ExactError(f"dimension cap exceeded: n={g.n} > {MAX_QUBITS}")
        self.g = g
        self.n = g.n
        self.scaling = scaling_tag(scaling)
        self.m = m
        if m is None:
            self.states = np.arange(2 ** self.n, dtype=np.int64)
        else:
            self.states = sector_states(self.n, m)
        self.dim = self.states.shape[0]
        self.W = g.total_weight()
        self._diag = np.zeros(self.dim)
        self._hops = []
        for i, j, w in g.edges:
            if w == 0.0:
                continue
            bi = (self.states >> i) & 1
            bj = (self.states >> j) & 1
            differ = bi != bj
            self._diag += np.where(differ, -w, w)
            src = np.nonzero(differ)[0]
            flipped = self.states[src] ^ ((1 << i) | (1 << j))
            dst = np.searchsorted(self.states, flipped)
            self._hops.append((src, dst, 2.0 * w))

    def apply(self, v):
        """H v in the VarBench scaling."""
        out = self._diag * v
        for src, dst, amp in self._hops:
            # dst is a permutation of src within one edge
            out[dst] += amp * v[src]
        return out

    def linear_operator(self):
        return LinearOperator((self.dim, self.dim), matvec=self.apply,
                              dtype=np.float64)

    def sparse_matrix(self):
        rows = [np.arange(self.dim)]
        cols = [np.arange(self.dim)]
        data = [self._diag]
        for src, dst, amp in self._hops:
            rows.append(dst)
            cols.append(src)
            data.append(np.full(src.shape[0], amp))
        return sp.csr_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(self.dim, self.dim)
        )

    def dense_matrix(self):
        return self.sparse_matrix().toarray()

    def to_scaling(self, value):
        """Convert a VarBench eigenvalue to this Hamiltonian's scaling."""
        return convert_energy(value, VARBENCH, self.scaling, self.W)

def sector_dimension(n, m):
    return int(comb(n, m, exact=True))
