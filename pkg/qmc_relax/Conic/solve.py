
from qmc_relax.Conic.cones import ConicError
from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Conic.ipm import solve_ipm
from qmc_relax.Conic.admm import solve_admm

def solve(p, opts=None):
    """Solve the conic program p.

    Args:
        p (ConicProgram): the program, minimise c.x s.t. A x + s = b, s in K
        opts (SolverOptions): tolerance, iteration limits and method

    Returns:
        ConicSolution: the status is OPTIMAL only when every residual is
                       within opts.tol
    """
    if opts is None:
        opts = SolverOptions()
    p.validate()
    if p.num_vars == 0:
        raise ConicError("invalid-program: no variables")
    if opts.method == "IPM":
        return solve_ipm(p, opts)
    return solve_admm(p, opts)
