"""Energy scalings of the Quantum Max Cut Hamiltonian.

    QMC_MIN   minimise -1/2 sum w (1 - x)          (relaxation objective)
    QMC_MAX   maximise  1/2 sum w (1 - x) = -QMC_MIN
    VARBENCH  traceless H = sum w (XX + YY + ZZ), E = 2 sum w x - W

with W = sum w the total weight, so E_VARBENCH = W + 4 E_QMC_MIN.
"""

class ModelError(Exception):
    pass

QMC_MIN = "QMC_MIN"
QMC_MAX = "QMC_MAX"
VARBENCH = "VARBENCH"
SCALINGS = (QMC_MIN, QMC_MAX, VARBENCH)

def scaling_tag(name):
    """Accept command line spellings such as 'varbench' or 'qmc'."""
    key = str(name).strip().upper().replace("-", "_")
    aliases = {"QMC": QMC_MIN, "QMCMIN": QMC_MIN, "QMCMAX": QMC_MAX}
    key = aliases.get(key, key)
    if key not in SCALINGS:
        raise ModelError(f"Unknown energy scaling: {name}")
    return key

def _to_qmc_min(value, tag, W):
    if tag == QMC_MIN:
        return value
    if tag == QMC_MAX:
        return -value
    return (value - W) / 4.0

def _from_qmc_min(value, tag, W):
    if tag == QMC_MIN:
        return value
    if tag == QMC_MAX:
        return -value
    return W + 4.0 * value

def convert_energy(value, src, dst, W):
    """Convert an energy between scalings.

    Args:
        value (float): energy in scaling src
        src, dst (str): scaling tags
        W (float): total edge weight of the instance

    Returns:
        float: energy in scaling dst
    """
    src = scaling_tag(src)
    dst = scaling_tag(dst)
    return _from_qmc_min(_to_qmc_min(float(value), src, W), dst, W)

def all_scalings(value, src, W):
    return {tag.lower(): convert_energy(value, src, tag, W) for tag in SCALINGS}
