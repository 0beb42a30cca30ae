"""Unitary-invariant k-body operators described by permutation expectations.

An operator A on (C^d)^k that commutes with every U^{(x)k} is a combination
of the permutation operators T(pi).  It is fixed by the k! expectations
<s> = tr(T(s) A); <id> is the trace.
"""

import json
from functools import lru_cache

import numpy as np

from qmc_relax.Symmetry.permutations import (
    SymmetryError, all_permutations, compose, inverse, identity, to_text, parse,
    sign
)
from qmc_relax.Symmetry.partitions import partitions
from qmc_relax.Symmetry.young import young_orthogonal_irrep
from qmc_relax.Symmetry.characters import weingarten_of

MAX_MATRIX_DIM = 4096

class InvariantOperator:
    """Expectations <s> of a unitary-invariant operator.

    Args:
        k (int): number of parties
        d (int): local dimension
        expect (dict): permutation tuple -> real expectation, all k! keys
    """
    def __init__(self, k, d, expect):
        self.k = int(k)
        self.d = int(d)
        if self.k < 1 or self.d < 1:
            raise SymmetryError(f"invalid (k, d) = ({k}, {d})")
        perms = all_permutations(self.k)
        missing = [p for p in perms if tuple(p) not in expect]
        if missing:
            raise SymmetryError(
                f"missing expectations for {len(missing)} permutations, "
                f"e.g. {to_text(missing[0])}"
            )
        self.expect = {p: float(expect[p]) for p in perms}

    @property
    def trace(self):
        return self.expect[identity(self.k)]

    def __getitem__(self, s):
        if isinstance(s, str):
            s = parse(s, self.k)
        return self.expect[tuple(s)]

    def is_real(self, tol=1e-12):
        """<s> == <s^-1> for every s."""
        return all(abs(v - self.expect[inverse(s)]) <= tol
                   for s, v in self.expect.items())

    def to_dict(self):
        return {"k": self.k, "d": self.d,
                "expect": {to_text(s): v for s, v in self.expect.items()}}

    @staticmethod
    def from_dict(dd):
        k = dd["k"]
        return InvariantOperator(
            k, dd["d"], {parse(s, k): v for s, v in dd["expect"].items()}
        )

    @staticmethod
    def from_matrix(A, k, d):
        return InvariantOperator(k, d, expectations_of(A, k, d))


def _check_size(k, d):
    if d ** k > MAX_MATRIX_DIM:
        raise SymmetryError(
            f"dimension overflow: d^k = {d ** k} exceeds {MAX_MATRIX_DIM}"
        )

@lru_cache(maxsize=None)
def _permutation_operator(s, d):
    k = len(s)
    D = d ** k
    digits = np.indices((d,) * k).reshape(k, D)
    sinv = inverse(s)
    # tensor factor j moves to position s(j)
    out = np.zeros(D, dtype=np.int64)
    for m in range(k):
        out = out * d + digits[sinv[m]]
    P = np.zeros((D, D))
    P[out, np.arange(D)] = 1.0
    P.setflags(write=False)
    return P

def permutation_operator(s, d):
    """The d^k x d^k matrix T(s) permuting tensor factors; T(st) = T(s)T(t)."""
    s = tuple(s)
    _check_size(len(s), d)
    return np.array(_permutation_operator(s, d))

def expectations_of(A, k, d):
    """{s: tr(T(s) A)} for a materialised operator A."""
    _check_size(k, d)
    A = np.asarray(A)
    out = {}
    for s in all_permutations(k):
        v = np.sum(_permutation_operator(s, d).T * A)
        out[s] = float(np.real(v))
    return out

def reconstruct_operator(op):
    """Materialise the invariant operator with the given expectations.

    A = sum_pi a_pi T(pi) with a_pi = sum_s <s^-1> Wg(pi^-1 s, d).

    Returns:
        numpy array: d^k x d^k real symmetric matrix (symmetric when op is
                     real)
    """
    _check_size(op.k, op.d)
    perms = all_permutations(op.k)
    D = op.d ** op.k
    A = np.zeros((D, D))
    for pi in perms:
        pinv = inverse(pi)
        a = 0.0
        for s in perms:
            a += op.expect[inverse(s)] * weingarten_of(compose(pinv, s), op.d)
        if a != 0.0:
            A += a * _permutation_operator(pi, op.d)
    return A

def positivity_blocks(op):
    """[(lambda, sum_s <s> R_lambda(s))] over partitions of height <= d.

    The operator is positive semidefinite iff every block is.
    """
    blocks = []
    for lam in partitions(op.k):
        if lam.height > op.d:
            continue
        B = None
        for s, v in op.expect.items():
            term = v * young_orthogonal_irrep(lam, s)
            B = term if B is None else B + term
        blocks.append((lam, B))
    return blocks

def min_block_eigenvalue(op):
    return min(float(np.linalg.eigvalsh(0.5 * (B + B.T))[0])
               for _, B in positivity_blocks(op))

def alternating_sum(op):
    """sum_s sgn(s) <s>, k! times the weight on the antisymmetric subspace.

    Zero for every invariant operator with k > d.
    """
    return float(sum(sign(s) * v for s, v in op.expect.items()))

def is_state(op, tol=1e-9):
    """True iff all positivity blocks are PSD within tol and the trace is 1."""
    if abs(op.trace - 1.0) > tol:
        return False
    return min_block_eigenvalue(op) >= -tol

def dump_blocks(op, path):
    with open(path, "w") as fh:
        json.dump({"operator": op.to_dict(),
                   "blocks": [[repr(lam), B.tolist()]
                              for lam, B in positivity_blocks(op)]}, fh)

def random_invariant_operator(k, d, rng, scale=1.0):
    """Expectations of a random real invariant operator of trace one.

    Coefficients a_pi = a_{pi^-1} are drawn normal, plus a multiple of the
    identity, so that both positive and indefinite operators occur.
    """
    perms = all_permutations(k)
    coeff = {}
    for s in perms:
        if s in coeff:
            continue
        v = scale * rng.standard_normal()
        coeff[s] = v
        coeff[inverse(s)] = v
    A = np.zeros((d ** k, d ** k))
    for s, v in coeff.items():
        A += v * _permutation_operator(s, d)
    A = 0.5 * (A + A.T)
    lam = np.linalg.eigvalsh(A)
    spread = max(abs(lam[0]), abs(lam[-1]), 1e-12)
    # shift so that the smallest eigenvalue lands either side of zero
    A += (-lam[0] + rng.uniform(-0.3, 0.3) * spread) * np.eye(d ** k)
    t = np.trace(A)
    if t <= 0.0:
        A += spread * np.eye(d ** k)
    A /= np.trace(A)
    return InvariantOperator(k, d, expectations_of(A, k, d)), A
