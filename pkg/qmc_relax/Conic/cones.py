"""Cone descriptors and Euclidean projections.

Cones are kept in the order ZERO, NONNEG, SOC..., PSD... within a program.
PSD blocks are stored as scaled vectors: the lower triangle, column by
column, with off-diagonal entries multiplied by sqrt(2), so that
svec(X).svec(Y) = trace(XY).
"""

import numpy as np

class ConicError(Exception):
    pass

ZERO = "ZERO"
NONNEG = "NONNEG"
SOC = "SOC"
PSD = "PSD"
CONE_KINDS = (ZERO, NONNEG, SOC, PSD)

SQRT2 = np.sqrt(2.0)

class Cone:
    """A single cone block: kind plus size.

    For PSD the size is the matrix order s and the block occupies
    s*(s+1)/2 rows; for every other kind size is the number of rows.
    """
    def __init__(self, kind, size):
        if kind not in CONE_KINDS:
            raise ConicError(f"invalid-program: unknown cone kind {kind}")
        if int(size) < 0 or (kind in (SOC, PSD) and int(size) < 1):
            raise ConicError(f"invalid-program: bad size {size} for {kind} cone")
        self.kind = kind
        self.size = int(size)

    @property
    def dim(self):
        if self.kind == PSD:
            return self.size * (self.size + 1) // 2
        return self.size

    def __eq__(self, other):
        return (isinstance(other, Cone) and self.kind == other.kind and
                self.size == other.size)

    def __repr__(self):
        return f"{self.kind}({self.size})"

    def to_list(self):
        return [self.kind, self.size]

def svec_index(i, j, s):
    """Position of matrix entry (i, j), i >= j, inside svec of an s x s block."""
    if i < j:
        i, j = j, i
    # columns 0..j-1 hold s, s-1, ..., s-j+1 entries
    return j * s - j * (j - 1) // 2 + (i - j)

def svec(X):
    X = np.asarray(X, dtype=np.float64)
    s = X.shape[0]
    out = np.empty(s * (s + 1) // 2)
    k = 0
    for j in range(s):
        out[k] = X[j, j]
        out[k + 1:k + s - j] = SQRT2 * X[j + 1:, j]
        k += s - j
    return out

def smat(v):
    v = np.asarray(v, dtype=np.float64)
    s = int(round((np.sqrt(8 * len(v) + 1) - 1) / 2))
    if s * (s + 1) // 2 != len(v):
        raise ConicError(f"invalid-program: {len(v)} is not a triangular number")
    X = np.empty((s, s))
    k = 0
    for j in range(s):
        X[j, j] = v[k]
        X[j + 1:, j] = v[k + 1:k + s - j] / SQRT2
        X[j, j + 1:] = X[j + 1:, j]
        k += s - j
    return X

def project_soc(v):
    t, u = v[0], v[1:]
    nu = np.linalg.norm(u)
    if nu <= t:
        return v.copy()
    if nu <= -t:
        return np.zeros_like(v)
    a = 0.5 * (t + nu)
    out = np.empty_like(v)
    out[0] = a
    out[1:] = a * u / nu
    return out

def project_psd(v):
    X = smat(v)
    lam, Q = np.linalg.eigh(X)
    lam = np.maximum(lam, 0.0)
    return svec((Q * lam) @ Q.T)

def project_cone(v, cone, dual=False):
    """Project v onto the cone (or, with dual=True, onto its dual cone)."""
    if cone.kind == ZERO:
        return v.copy() if dual else np.zeros_like(v)
    if cone.kind == NONNEG:
        return np.maximum(v, 0.0)
    if cone.kind == SOC:
        return project_soc(v)
    return project_psd(v)

def cone_slices(cones):
    """Yield (cone, slice) pairs over the stacked cone vector."""
    start = 0
    for cone in cones:
        yield cone, slice(start, start + cone.dim)
        start += cone.dim

def project(v, cones, dual=False):
    out = np.empty_like(v)
    for cone, sl in cone_slices(cones):
        out[sl] = project_cone(v[sl], cone, dual)
    return out

def cone_distance(v, cones, dual=False):
    return float(np.linalg.norm(v - project(v, cones, dual)))
