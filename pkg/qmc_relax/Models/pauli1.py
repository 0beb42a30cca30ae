from qmc_relax.Models.socmodel import soc_builder, ALL

def moment_entries(vmap):
    """Affine entries of M: M_ii = 3, M_ij = 2 x_ij - 1."""
    entries = {}
    for i in range(vmap.n):
        entries[(i, i)] = ({}, 3.0)
    for i, j in vmap.pairs():
        entries[(j, i)] = ({vmap.pair(i, j): 2.0}, -1.0)
    return entries

def pauli1_builder(g, triple_policy=ALL):
    builder, vmap = soc_builder(g, triple_policy)
    builder.add_affine_psd(moment_entries(vmap), vmap.n)
    return builder, vmap

def build_pauli1_model(g, triple_policy=ALL):
    """SOC relaxation strengthened by the level-1 Pauli moment matrix.

    M is the n x n PSD block whose entries are tied to the pair variables by
    M_ii = 3 and M_ij = 2 x_ij - 1.  The tie is carried by the affine map
    into the PSD cone, so the program keeps exactly C(n, 2) variables and
    M is read back from the cone slack.
    """
    builder, vmap = pauli1_builder(g, triple_policy)
    return builder.build(), vmap
