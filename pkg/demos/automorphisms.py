"""Automorphism descriptors next to a brute-force search over small matrices."""

from lca2 import LAM, D, Rcdq, Rnil, Rsol, automorphism_group, bounded_aut_search, is_automorphism

V = 2 * LAM + D
for F in (Rnil(V), Rsol(LAM), Rcdq(0, 0), Rcdq(2, 1)):
    G = automorphism_group(F)
    print(F.tag, "->", G.group, G.constraints)
    print("  generators are automorphisms:", all(is_automorphism(F.algebra(), g) for g in G.generators))

    found = bounded_aut_search(F.algebra(), deg_bound=1, coeff_set=range(-1, 2))
    print(f"  bounded search found {len(found)} maps, all in the group: {all(G.satisfies(M) for M in found)}")
