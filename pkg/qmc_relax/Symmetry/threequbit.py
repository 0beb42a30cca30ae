"""Three-party invariant states: Eggeling-Werner parameters and LM/PT.

Convention: x = <(12)>, y = <(13)>, z = <(23)>, trace one.
"""

import numpy as np

from qmc_relax.Symmetry.permutations import (
    SymmetryError, all_permutations, cycle_type
)
from qmc_relax.Symmetry.invariant import InvariantOperator

LM_PT_TOL = 1e-12

class EWParams:
    """r_k = tr(rho R_k) for k in (+, -, 0, 1, 2, 3)."""
    def __init__(self, r_plus, r_minus, r0, r1, r2, r3):
        self.r_plus = float(r_plus)
        self.r_minus = float(r_minus)
        self.r0 = float(r0)
        self.r1 = float(r1)
        self.r2 = float(r2)
        self.r3 = float(r3)

    def as_tuple(self):
        return (self.r_plus, self.r_minus, self.r0, self.r1, self.r2, self.r3)

    def reduced(self):
        return (self.r_plus, self.r0, self.r1, self.r2)

    def is_state(self, tol=1e-12):
        """Eggeling-Werner state conditions."""
        return (min(self.r_plus, self.r_minus, self.r0) >= -tol and
                abs(self.r_plus + self.r_minus + self.r0 - 1.0) <= tol and
                self.r1 ** 2 + self.r2 ** 2 + self.r3 ** 2 <= self.r0 ** 2 + tol)

    def __repr__(self):
        return ("EWParams(r+={:.6g}, r-={:.6g}, r0={:.6g}, r1={:.6g}, "
                "r2={:.6g}, r3={:.6g})".format(*self.as_tuple()))

def ew_params(x12, x13, x23):
    """Reduced qubit parameters (r_- = r_3 = 0) from the swap expectations."""
    r_plus = (x12 + x13 + x23) / 3.0
    return EWParams(r_plus, 0.0, 1.0 - r_plus,
                    (2.0 * x23 - x12 - x13) / 3.0,
                    (x12 - x13) / np.sqrt(3.0), 0.0)

def ew_params_full(op):
    """All six parameters from the expectations of a k=3 operator (any d)."""
    if op.k != 3:
        raise SymmetryError(f"Eggeling-Werner parameters need k=3, not k={op.k}")
    e = lambda s: op[s]
    t = e("(12)") + e("(13)") + e("(23)")
    c = e("(123)") + e("(132)")
    r_plus = (e("id") + t + c) / 6.0
    r_minus = (e("id") - t + c) / 6.0
    r0 = (2.0 * e("id") - c) / 3.0
    r1 = (2.0 * e("(23)") - e("(13)") - e("(12)")) / 3.0
    r2 = (e("(12)") - e("(13)")) / np.sqrt(3.0)
    # i/sqrt3 (<123> - <132>) is real for Hermitian operators
    r3 = float(np.real(1j / np.sqrt(3.0) * (e("(123)") - e("(132)"))))
    return EWParams(r_plus, r_minus, r0, r1, r2, r3)

def lm_value(x, y, z):
    return x + y + z

def pt_value(x, y, z):
    return (x * x + y * y + z * z) - 2.0 * (x * y + x * z + y * z) + 2.0 * (x + y + z)

def lm_holds(x, y, z, tol=LM_PT_TOL):
    s = lm_value(x, y, z)
    return -tol <= s <= 3.0 + tol

def pt_holds(x, y, z, tol=LM_PT_TOL):
    return pt_value(x, y, z) <= 3.0 + tol

def check_lm_pt(x, y, z, tol=LM_PT_TOL):
    """Lieb-Mattis and Parekh-Thompson: exactly three-qubit statehood."""
    return lm_holds(x, y, z, tol) and pt_holds(x, y, z, tol)

def qubit_triple_operator(x, y, z):
    """InvariantOperator (k=3, d=2) with trace one and the given swaps.

    The 3-cycles follow from id - (12) - (13) - (23) + (123) + (132) = 0
    together with <(123)> = <(132)>.
    """
    cyc = 0.5 * (x + y + z - 1.0)
    expect = {}
    pair = {(0, 1): x, (0, 2): y, (1, 2): z}
    for s in all_permutations(3):
        ct = cycle_type(s)
        if ct == (1, 1, 1):
            expect[s] = 1.0
        elif ct == (3,):
            expect[s] = cyc
        else:
            moved = tuple(i for i in range(3) if s[i] != i)
            expect[s] = pair[moved]
    return InvariantOperator(3, 2, expect)
