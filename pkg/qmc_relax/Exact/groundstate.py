import time

import numpy as np
from scipy.linalg import eigh, eigh_tridiagonal

from qmc_relax.Models.scaling import VARBENCH, convert_energy
from qmc_relax.Exact.hamiltonian import SparseHamiltonian, ExactError

DENSE = "DENSE"
LANCZOS = "LANCZOS"
MAX_DENSE_QUBITS = 12
MAX_LANCZOS_QUBITS = 24
# below this dimension a sector is diagonalised directly
SMALL_DIM = 64
# bytes allowed for the reorthogonalisation basis
KRYLOV_MEMORY = 2 ** 28
MIN_KRYLOV_STEPS = 8

def krylov_steps(dim, krylov_dim=80, memory_bytes=KRYLOV_MEMORY):
    """Basis size per Lanczos cycle: krylov_dim, capped by dim and by the
    number of float64 vectors of length dim that fit in memory_bytes."""
    fit = int(memory_bytes // (8 * max(dim, 1)))
    return max(1, min(krylov_dim, dim, max(MIN_KRYLOV_STEPS, fit)))

def lanczos(apply, dim, tol=1e-9, krylov_dim=80, max_restarts=50, seed=0,
            verbose=False, memory_bytes=KRYLOV_MEMORY):
    """Smallest eigenvalue of a symmetric operator.

    Lanczos with full reorthogonalisation of every new vector against the
    whole Krylov basis, restarted from the current Ritz vector every
    krylov_dim steps.  Converged when ||H u - theta u|| <= 10 tol max(1, |theta|).

    Args:
        apply (callable): v -> H v
        dim (int): dimension of the space
        tol (float): eigenvalue tolerance
        krylov_dim (int): basis size per cycle
        max_restarts (int): maximum number of cycles
        seed (int): seed of the random start vector
        memory_bytes (int): cap on the size of the Krylov basis; a smaller
              basis gets proportionally more cycles

    Returns:
        (float, numpy array, int): eigenvalue, Ritz vector, matvec count

    Raises:
        ExactError: no convergence within max_restarts cycles
    """
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    steps = krylov_steps(dim, krylov_dim, memory_bytes)
    cycles = max_restarts * max(1, min(krylov_dim, dim) // steps)
    matvecs = 0
    theta = None
    for restart in range(cycles):
        V = np.zeros((steps, dim))
        alpha = np.zeros(steps)
        beta = np.zeros(steps)
        V[0] = v
        k = steps
        for j in range(steps):
            w = apply(V[j])
            matvecs += 1
            alpha[j] = V[j] @ w
            # full reorthogonalisation, twice for stability
            for _ in range(2):
                w -= V[:j + 1].T @ (V[:j + 1] @ w)
            b = np.linalg.norm(w)
            beta[j] = b
            if j + 1 == steps:
                break
            if b < 1e-14:
                # invariant subspace found
                k = j + 1
                break
            V[j + 1] = w / b
        lam, S = eigh_tridiagonal(alpha[:k], beta[:k - 1])
        theta = lam[0]
        u = V[:k].T @ S[:, 0]
        u /= np.linalg.norm(u)
        res = abs(beta[k - 1] * S[k - 1, 0])
        if verbose:
            print(f"    lanczos cycle {restart}: theta={theta:.12f} residual={res:.3e}")
        if res <= 10.0 * tol * max(1.0, abs(theta)):
            return float(theta), u, matvecs
        v = u
    raise ExactError(
        f"non-convergence: Lanczos residual above tolerance after {cycles} cycles"
    )

def _sector_minimum(H, method, tol, seed, verbose):
    if H.dim == 0:
        return np.inf
    if method == DENSE or H.dim <= SMALL_DIM:
        return float(eigh(H.dense_matrix(), eigvals_only=True)[0])
    theta, _, _ = lanczos(H.apply, H.dim, tol=tol, seed=seed, verbose=verbose)
    return theta

def ground_energy(g, scaling=VARBENCH, method=LANCZOS, sectors=True, tol=1e-9,
                  seed=0, verbose=False):
    """Ground state energy of the instance g.

    Args:
        g (Graph): the instance
        scaling (str): energy scaling of the result
        method (str): DENSE (n <= 12) or LANCZOS (n <= 24)
        sectors (bool): diagonalise each magnetisation sector separately;
                        only m <= n/2 is needed by spin-flip symmetry
        tol (float): eigenvalue tolerance for LANCZOS
        seed (int): seed of the Lanczos start vectors

    Returns:
        float: the minimum eigenvalue in the requested scaling
    """
    if method not in (DENSE, LANCZOS):
        raise ExactError(f"Unknown diagonalisation method {method}")
    cap = MAX_DENSE_QUBITS if method == DENSE else MAX_LANCZOS_QUBITS
    if g.n > cap:
        raise ExactError(f"dimension cap exceeded: n={g.n} > {cap} for {method}")
    st = time.time()
    if sectors:
        best = np.inf
        for m in range(g.n // 2 + 1):
            H = SparseHamiltonian(g, VARBENCH, m)
            e = _sector_minimum(H, method, tol, seed, verbose)
            if verbose:
                print(f"    sector m={m}: dim={H.dim} energy={e:.10f}")
            best = min(best, e)
    else:
        H = SparseHamiltonian(g, VARBENCH)
        best = _sector_minimum(H, method, tol, seed, verbose)
    ed = time.time()
    if verbose:
        print("Time taken: ", ed - st)
    return _convert(best, g, scaling)

def _convert(value, g, scaling):
    return convert_energy(value, VARBENCH, scaling, g.total_weight())

def ground_state(g, scaling=VARBENCH):
    """(energy, vector) over the full 2^n space, for n <= 12 only."""
    if g.n > MAX_DENSE_QUBITS:
        raise ExactError(f"ground state vectors are limited to n <= {MAX_DENSE_QUBITS}")
    H = SparseHamiltonian(g, VARBENCH)
    lam, U = eigh(H.dense_matrix())
    return _convert(lam[0], g, scaling), U[:, 0]
