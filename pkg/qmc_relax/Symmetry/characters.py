"""Characters, Schur dimensions and the Weingarten function.

Characters and Schur dimensions are exact integers; the Weingarten
function is accumulated with Fractions and returned as a float.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from qmc_relax.Symmetry.permutations import (
    SymmetryError, all_permutations, cycle_type, class_representative
)
from qmc_relax.Symmetry.partitions import as_partition, partitions
from qmc_relax.Symmetry.young import young_orthogonal_irrep

@lru_cache(maxsize=None)
def _character(parts, ctype):
    R = young_orthogonal_irrep(parts, class_representative(ctype))
    return int(round(np.trace(R)))

def character(lam, s):
    """chi_lambda(s), an integer."""
    lam = as_partition(lam)
    return _character(lam.parts, cycle_type(s))

def character_table(k):
    """Dict {(lambda parts, cycle type): chi}."""
    table = {}
    for lam in partitions(k):
        for mu in partitions(k):
            table[(lam.parts, mu.parts)] = _character(lam.parts, mu.parts)
    return table

def schur_dimension(lam, d):
    """Dimension of the GL(d) irrep lambda: prod over boxes (d + c) / hook.

    Zero when height(lambda) > d.
    """
    lam = as_partition(lam)
    if lam.height > d:
        return 0
    value = Fraction(1)
    for r, c in lam.boxes():
        value *= Fraction(d + c - r, lam.hook(r, c))
    return int(value)

@lru_cache(maxsize=None)
def _weingarten(ctype, d):
    k = sum(ctype)
    total = Fraction(0)
    for lam in partitions(k):
        if lam.height > d:
            continue
        chi1 = _character(lam.parts, tuple([1] * k))
        total += Fraction(chi1 * chi1 * _character(lam.parts, ctype),
                          schur_dimension(lam, d))
    return total / (factorial(k) ** 2)

def weingarten(ctype, d):
    """Weingarten function Wg(pi, d) for a permutation of cycle type ctype.

    Wg = (1/k!^2) sum over lambda of height <= d of
         chi_lambda(id)^2 chi_lambda(pi) / s_lambda(d).

    Args:
        ctype (Partition, tuple or permutation tuple): cycle type of pi; a
              permutation may be passed by setting ctype to its cycle_type
        d (int): local dimension

    Returns:
        float
    """
    if d < 1:
        raise SymmetryError(f"dimension must be >= 1, not {d}")
    parts = as_partition(ctype).parts
    return float(_weingarten(parts, int(d)))

def weingarten_of(s, d):
    """Wg evaluated at the permutation s."""
    if len(s) == 0:
        return 1.0
    return weingarten(cycle_type(s), d)

def young_projector(lam):
    """Coefficients {s: c_s} of the central idempotent of lambda in C[S_k].

    P_lambda = chi_lambda(id)/k! sum_s chi_lambda(s) s; on (C^d)^k it
    projects onto the isotypic component of lambda.
    """
    lam = as_partition(lam)
    k = lam.k
    dim = _character(lam.parts, tuple([1] * k))
    return {s: dim * character(lam, s) / factorial(k) for s in all_permutations(k)}
