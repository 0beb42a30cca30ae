import numpy as np

from qmc_relax.Exact.hamiltonian import ExactError
from qmc_relax.Models.scaling import QMC_MAX, convert_energy

UNIT_TOL = 1e-9

def edge_energies(g, assignment):
    """QMC-max value of every edge of g in a singlet/product state."""
    partner = assignment.partner
    theta = assignment.theta
    for v in range(g.n):
        if v not in partner:
            norm = np.linalg.norm(theta[v])
            if abs(norm - 1.0) > UNIT_TOL:
                raise ExactError(f"Bloch vector of vertex {v} has norm {norm}")
    values = np.empty(len(g.edges))
    for e, (i, j, w) in enumerate(g.edges):
        if partner.get(i) == j:
            values[e] = w
        elif i in partner or j in partner:
            # a singlet qubit is maximally mixed on its own
            values[e] = 0.25 * w
        else:
            values[e] = 0.25 * w * (1.0 - float(theta[i] @ theta[j]))
    return values

def state_energy(g, assignment, scaling=QMC_MAX):
    """Exact energy of a product of singlets and pure qubit states.

    Args:
        g (Graph): the instance
        assignment (BlochAssignment): singlet pairs and Bloch vectors
        scaling (str): scaling of the returned energy

    Returns:
        float
    """
    if assignment.n != g.n:
        raise ExactError(f"assignment has {assignment.n} vertices, graph has {g.n}")
    value = float(np.sum(edge_energies(g, assignment)))
    return convert_energy(value, QMC_MAX, scaling, g.total_weight())
