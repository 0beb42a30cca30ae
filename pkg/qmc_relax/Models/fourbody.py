"""Four-qubit strengthening of the SOC relaxation.

Every selected quadruple {i < j < k < l} adds the products
x_ij|kl, x_ik|jl, x_il|jk and the invariant positivity conditions of its
four-qubit marginal: a linear row ([4]), a 3x3 PSD block ([3,1]) and a
3-dimensional second order cone with b0 +- b1 >= 0 ([2,2]).  Quadruples
interact only through the shared pair variables.
"""

from itertools import combinations

from qmc_relax.Models.scaling import ModelError
from qmc_relax.Models.socmodel import soc_builder, policy_tag, ALL, TWO_EDGE
from qmc_relax.Symmetry.fourqubit import (
    s4_form, a31_forms, bloch_forms
)

def select_quads(g, policy=TWO_EDGE):
    """Quadruples to constrain: all, or those holding >= 2 graph edges."""
    policy = policy_tag(policy)
    quads = combinations(range(g.n), 4)
    if policy == ALL:
        return list(quads)
    edges = g.edge_set()
    out = []
    for q in quads:
        count = sum(1 for a, b in combinations(q, 2) if (a, b) in edges)
        if count >= 2:
            out.append(q)
    return out

def _affine(const, coeffs, ids):
    return ({v: float(a) for v, a in zip(ids, coeffs) if a != 0.0}, float(const))

def build_fourbody_model(g, quad_policy=TWO_EDGE, triple_policy=ALL):
    """SOC relaxation plus the four-qubit conditions on selected quadruples.

    Args:
        g (Graph): the instance, n >= 4
        quad_policy (str): ALL or TWO_EDGE
        triple_policy (str): triples of the underlying SOC model

    Returns:
        (ConicProgram, VariableMap)
    """
    if g.n < 4:
        raise ModelError(f"invalid-instance: four-body model needs n >= 4, not {g.n}")
    builder, vmap = soc_builder(g, triple_policy)
    const4, coeff4 = s4_form()
    a31 = a31_forms()
    bloch = bloch_forms()
    for q in select_quads(g, quad_policy):
        builder.add_variables(3)
        vmap.add_quad(q)
        ids = vmap.quad_pair_vars(q) + vmap.quad_product_vars(q)
        for v in vmap.quad_product_vars(q):
            builder.add_leq({v: 1.0}, 1.0)
            builder.add_geq({v: 1.0}, -1.0)
        coeffs, const = _affine(const4, coeff4, ids)
        builder.add_geq(coeffs, -const)
        b0, b1, b2 = [_affine(c, a, ids) for c, a in bloch]
        plus = {v: b0[0].get(v, 0.0) + b1[0].get(v, 0.0)
                for v in set(b0[0]) | set(b1[0])}
        minus = {v: b0[0].get(v, 0.0) - b1[0].get(v, 0.0)
                 for v in set(b0[0]) | set(b1[0])}
        builder.add_geq(plus, -(b0[1] + b1[1]))
        builder.add_geq(minus, -(b0[1] - b1[1]))
        builder.add_affine_soc([b0, b1, b2])
        builder.add_affine_psd(
            {key: _affine(c, a, ids) for key, (c, a) in a31.items()}, 3
        )
    return builder.build(), vmap
