import numpy as np
from scipy.linalg import eigh

from qmc_relax.Rounding.hypergeometric import RoundingError

PSD_TOL = 1e-7
DIAG_TOL = 1e-6

def gram_vectors(M):
    """Rows v_i with <v_i, v_j> = M_ij, by eigendecomposition.

    Eigenvalues in [-1e-7, 0) are clamped to zero.

    Returns:
        np.ndarray: n x r matrix of Gram vectors, r the number of kept
        eigenvalues
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise RoundingError(f"moment matrix must be square, got {M.shape}")
    if not np.allclose(M, M.T, atol=1e-9):
        raise RoundingError("moment matrix is not symmetric")
    if np.max(np.abs(np.diag(M) - 3.0), initial=0.0) > DIAG_TOL:
        raise RoundingError("moment matrix diagonal must be 3")
    lam, Q = eigh(0.5 * (M + M.T))
    if lam.size and lam[0] < -PSD_TOL:
        raise RoundingError(f"not-PSD: moment matrix eigenvalue {lam[0]:.3e}")
    keep = lam > 0.0
    if not np.any(keep):
        return np.zeros((M.shape[0], 1))
    return Q[:, keep] * np.sqrt(lam[keep])
