"""Decide whether two solvable algebras are isomorphic and check the witness."""

from lca2 import LAM, Rsol, are_isomorphic

A = Rsol(LAM**2 + 1)
B = Rsol(3 * LAM**2 + 3)
C = Rsol(LAM**2 - 1)

iso, w = are_isomorphic(A, B)
print("A ~ B:", iso, "witness", w.to_json()["matrix"], "verified", w.verify(A, B))
print("A ~ C:", are_isomorphic(A, C)[0])
