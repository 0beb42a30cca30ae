"""Young's orthogonal form of the irreducible representations of S_k.

Basis vectors are the standard tableaux of shape lambda in the order of
partitions.standard_tableaux.  The adjacent transposition s_i = (i, i+1)
(letters i+1, i+2 in 1-based tableau entries) acts by

    R(s_i) e_T = (1/r) e_T + sqrt(1 - 1/r^2) e_T'

with r = c(i+2) - c(i+1) the difference of contents (column - row) of the
two letters in T, and T' the tableau with the two letters exchanged (the
second term is absent when T' is not standard, then r = +-1).
"""

from functools import lru_cache

import numpy as np

from qmc_relax.Symmetry.permutations import (
    SymmetryError, adjacent_word
)
from qmc_relax.Symmetry.partitions import as_partition, standard_tableaux

MAX_K = 8

def _positions(t):
    pos = {}
    for r, row in enumerate(t):
        for c, v in enumerate(row):
            pos[v] = (r, c)
    return pos

@lru_cache(maxsize=None)
def _generator(parts, i):
    tabs = standard_tableaux(parts)
    index = {tuple(tuple(row) for row in t): n for n, t in enumerate(tabs)}
    dim = len(tabs)
    R = np.zeros((dim, dim))
    a, b = i + 1, i + 2
    for n, t in enumerate(tabs):
        pos = _positions(t)
        (ra, ca), (rb, cb) = pos[a], pos[b]
        r = (cb - rb) - (ca - ra)
        R[n, n] = 1.0 / r
        if abs(r) > 1:
            swapped = tuple(
                tuple(b if v == a else a if v == b else v for v in row)
                for row in t
            )
            R[index[swapped], n] = np.sqrt(1.0 - 1.0 / r ** 2)
    R.setflags(write=False)
    return R

@lru_cache(maxsize=None)
def _irrep(parts, s):
    dim = len(standard_tableaux(parts))
    R = np.eye(dim)
    for i in adjacent_word(s):
        R = R @ _generator(parts, i)
    R.setflags(write=False)
    return R

def young_orthogonal_irrep(lam, s):
    """Orthogonal matrix R_lambda(s) of the permutation s.

    Args:
        lam (Partition or tuple): partition of k = len(s)
        s (tuple): permutation of k letters

    Returns:
        numpy array: dim x dim orthogonal matrix, dim = number of standard
                     tableaux of shape lam
    """
    lam = as_partition(lam)
    s = tuple(s)
    if lam.k != len(s):
        raise SymmetryError(f"partition {lam} does not match permutation of {len(s)} letters")
    if lam.k > MAX_K:
        raise SymmetryError(f"k={lam.k} exceeds the supported maximum {MAX_K}")
    return np.array(_irrep(lam.parts, s))

def irrep_dimension(lam):
    lam = as_partition(lam)
    return len(standard_tableaux(lam))
