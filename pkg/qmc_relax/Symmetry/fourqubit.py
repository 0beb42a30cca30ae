"""Four-qubit invariant marginals.

Variables, in this order:
    pairs    x12, x13, x14, x23, x24, x34       (<(ij)>)
    products x12|34, x13|24, x14|23             (<(ij)(kl)>)
Every other expectation on qubits follows from the three-qubit identity,
the four-cycle identity and realness <s> = <s^-1>.
"""

import numpy as np

from qmc_relax.Symmetry.permutations import (
    SymmetryError, all_permutations, cycle_type, cycles
)
from qmc_relax.Symmetry.invariant import InvariantOperator

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
PRODUCTS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
NUM_VARS = 9

_PAIR = {p: n for n, p in enumerate(PAIRS)}

def product_index(a, b):
    """Index (0, 1, 2) of the product of the disjoint pairs a and b."""
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    key = (min(a, b), max(a, b))
    for n, prod in enumerate(PRODUCTS):
        if prod == key:
            return n
    raise SymmetryError(f"pairs {a} and {b} are not a disjoint cover of 4 letters")

def _pair(values, i, j):
    return values[_PAIR[(min(i, j), max(i, j))]]

def _as_vector(x_pairs, x_products):
    x_pairs = np.asarray(x_pairs, dtype=np.float64).ravel()
    x_products = np.asarray(x_products, dtype=np.float64).ravel()
    if x_pairs.shape[0] != 6 or x_products.shape[0] != 3:
        raise SymmetryError("need 6 pair and 3 product expectations")
    return np.concatenate([x_pairs, x_products])

def derive_full_s4(x_pairs, x_products):
    """InvariantOperator (k=4, d=2) with all 24 expectations populated.

    3-cycles:  <(ijk)> = (x_ij + x_ik + x_jk - 1) / 2
    4-cycles:  <(abcd)> = (-1 + x_ac + x_bd + x_ab|cd + x_ad|bc - x_ac|bd) / 2
    """
    v = _as_vector(x_pairs, x_products)
    pairs, prods = v[:6], v[6:]
    expect = {}
    for s in all_permutations(4):
        ct = cycle_type(s)
        cyc = cycles(s)
        if ct == (1, 1, 1, 1):
            expect[s] = 1.0
        elif ct == (2, 1, 1):
            expect[s] = _pair(pairs, *cyc[0])
        elif ct == (2, 2):
            expect[s] = prods[product_index(cyc[0], cyc[1])]
        elif ct == (3, 1):
            i, j, k = cyc[0]
            expect[s] = 0.5 * (_pair(pairs, i, j) + _pair(pairs, i, k) +
                               _pair(pairs, j, k) - 1.0)
        else:
            a, b, c, d = cyc[0]
            expect[s] = 0.5 * (-1.0 + _pair(pairs, a, c) + _pair(pairs, b, d)
                               + prods[product_index((a, b), (c, d))]
                               + prods[product_index((a, d), (b, c))]
                               - prods[product_index((a, c), (b, d))])
    return InvariantOperator(4, 2, expect)

R2 = np.sqrt(2.0)
R3 = np.sqrt(3.0)
R6 = np.sqrt(6.0)

# affine forms (constant, coefficients over the nine variables)
#                 x12  x13  x14  x23  x24  x34  p0   p1   p2
_S4 = (-3.0, (2, 2, 2, 2, 2, 2, 1, 1, 1))

_A = {
    (0, 0): (2.0, (2 / 3) * np.array([2, 2, -2, 2, -2, -2, -1, -1, -1])),
    (1, 0): (0.0, (R2 / 3) * np.array([-2, 1, -1, 1, -1, 2, 4, -2, -2])),
    (2, 0): (0.0, (R6 / 3) * np.array([0, -1, -1, 1, 1, 0, 0, 2, -2])),
    (1, 1): (2.0, (2 / 3) * np.array([1, -2, 2, -2, 2, -1, 1, -2, -2])),
    (2, 1): (0.0, (2 / R3) * np.array([0, -1, -1, 1, 1, 0, 0, -1, 1])),
    (2, 2): (2.0, 2.0 * np.array([-1, 0, 0, 0, 0, 1, -1, 0, 0])),
}

_B = {
    (0, 0): (3.0, np.array([1, -2, -2, -2, -2, 1, -1, 2, 2])),
    (1, 0): (0.0, R3 * np.array([0, -1, 1, 1, -1, 0, 0, 1, -1])),
    (1, 1): (3.0, 3.0 * np.array([-1, 0, 0, 0, 0, -1, 1, 0, 0])),
}

_b = (
    (3.0, np.array([-1, -1, -1, -1, -1, -1, 1, 1, 1])),
    (0.0, np.array([2, -1, -1, -1, -1, 2, -2, 1, 1])),
    (0.0, R3 * np.array([0, -1, 1, 1, -1, 0, 0, 1, -1])),
)

def s4_form():
    """[4] condition: const + coeffs.v >= 0."""
    return _S4[0], np.array(_S4[1], dtype=np.float64)

def a31_forms():
    """[3,1] block: {(i, j), i >= j: (const, coeffs)}."""
    return {k: (c, np.asarray(v, dtype=np.float64)) for k, (c, v) in _A.items()}

def b22_forms():
    """[2,2] block entries B00, B01, B11."""
    return {k: (c, np.asarray(v, dtype=np.float64)) for k, (c, v) in _B.items()}

def bloch_forms():
    """(b0, b1, b2) with b0 = (B00 + B11)/2, b1 = (B00 - B11)/2, b2 = B01."""
    return [(c, np.asarray(v, dtype=np.float64)) for c, v in _b]

def fourqubit_blocks(x_pairs, x_products):
    """Evaluate the [4], [3,1] and [2,2] conditions at a point.

    Returns:
        (float, numpy array, tuple): the [4] value, the 3x3 [3,1] matrix and
                                     (b0, b1, b2) of the [2,2] block
    """
    v = _as_vector(x_pairs, x_products)
    c, a = s4_form()
    s4 = c + a @ v
    A = np.zeros((3, 3))
    for (i, j), (c, a) in a31_forms().items():
        A[i, j] = A[j, i] = c + a @ v
    b = tuple(float(c + a @ v) for c, a in bloch_forms())
    return float(s4), A, b

def b22_matrix(b):
    b0, b1, b2 = b
    return np.array([[b0 + b1, b2], [b2, b0 - b1]])

def fourqubit_feasible(x_pairs, x_products, tol=1e-9):
    s4, A, b = fourqubit_blocks(x_pairs, x_products)
    b0, b1, b2 = b
    return (s4 >= -tol and np.linalg.eigvalsh(A)[0] >= -tol and
            b0 + b1 >= -tol and b0 - b1 >= -tol and
            b1 * b1 + b2 * b2 <= b0 * b0 + tol)
