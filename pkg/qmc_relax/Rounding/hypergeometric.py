"""The rounding function of the Gaussian projection to Bloch vectors.

H(z) = 2F1(1/2, 1/2; 5/2; z) on [0, 1].  For z <= 1/2 the defining power
series is summed directly; above, the 1 - z connection formula

    H(z) = (3 pi / 8) 2F1(1/2, 1/2; -1/2; 1-z) + (1-z)^(3/2) 2F1(2, 2; 5/2; 1-z)

keeps every series argument below 1/2.
"""

import numpy as np

class RoundingError(Exception):
    pass

SERIES_TOL = 1e-16
GAUSS_H1 = 3.0 * np.pi / 8.0
F_MIN_BOUND = 0.498

def _series(a, b, c, z, max_terms=10000):
    term = 1.0
    total = 1.0
    for m in range(max_terms):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z
        total += term
        if abs(term) <= SERIES_TOL * abs(total):
            return total
    raise RoundingError(f"hypergeometric series did not converge at z={z}")

def hyp2f1_half(z):
    """2F1(1/2, 1/2; 5/2; z) for 0 <= z <= 1."""
    z = float(z)
    if z < 0.0 or z > 1.0:
        raise RoundingError(f"hyp2f1_half needs 0 <= z <= 1, not {z}")
    if z <= 0.5:
        return _series(0.5, 0.5, 2.5, z)
    w = 1.0 - z
    return (GAUSS_H1 * _series(0.5, 0.5, -0.5, w) +
            w ** 1.5 * _series(2.0, 2.0, 2.5, w))

def F(x, corrected=True):
    """Expected edge value over relaxed edge value, for y = x.

    F(x) = (1/(4x)) (1 - (8/(9 pi)) (1-4x) H((1-4x)^2 / 9))

    With corrected=False the factor (1 - 4x) is dropped, which gives
    F(1) = 1/6 instead of the antipodal limit 1/2.
    """
    x = float(x)
    if not (0.0 < x <= 1.0):
        raise RoundingError(f"F needs 0 < x <= 1, not {x}")
    u = 1.0 - 4.0 * x
    h = hyp2f1_half(u * u / 9.0)
    factor = u if corrected else 1.0
    return (1.0 - 8.0 / (9.0 * np.pi) * factor * h) / (4.0 * x)

def expected_edge_value(m_ij):
    """E[(1 - theta_i.theta_j)/4] for Gram entry M_ij = <v_i, v_j>, |M_ij| <= 3."""
    m = float(m_ij)
    if abs(m) > 3.0 + 1e-9:
        raise RoundingError(f"Gram entry {m} outside [-3, 3]")
    m = min(3.0, max(-3.0, m))
    return 0.25 * (1.0 - 8.0 / (9.0 * np.pi) * m * hyp2f1_half(m * m / 9.0))

def t_prime(t):
    """Largest y on an edge adjacent to an edge with y = t >= 3/4."""
    t = float(t)
    if t < 0.75 or t > 1.0:
        raise RoundingError(f"t_prime needs 3/4 <= t <= 1, not {t}")
    return 0.25 * (3.0 - 2.0 * t + 2.0 * np.sqrt(3.0) * np.sqrt(max(t - t * t, 0.0)))

def monte_carlo_edge_value(m_ij, samples, seed, chunk=100000):
    """Gaussian projection estimate of expected_edge_value.

    Two vectors of squared norm 3 with inner product m_ij are projected by a
    3 x 2 standard normal matrix and normalised.

    Returns:
        (float, float): sample mean and its standard error
    """
    m = float(m_ij)
    if abs(m) > 3.0 + 1e-9:
        raise RoundingError(f"Gram entry {m} outside [-3, 3]")
    m = min(3.0, max(-3.0, m))
    vi = np.array([np.sqrt(3.0), 0.0])
    vj = np.array([m / np.sqrt(3.0), np.sqrt(max(3.0 - m * m / 3.0, 0.0))])
    rng = np.random.default_rng(seed)
    total = 0.0
    total2 = 0.0
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        R = rng.standard_normal((size, 3, 2))
        ti = R @ vi
        tj = R @ vj
        ti /= np.linalg.norm(ti, axis=1)[:, None]
        tj /= np.linalg.norm(tj, axis=1)[:, None]
        val = 0.25 * (1.0 - np.sum(ti * tj, axis=1))
        total += val.sum()
        total2 += (val * val).sum()
        done += size
    mean = total / samples
    var = max(total2 / samples - mean * mean, 0.0)
    return mean, np.sqrt(var / samples)
