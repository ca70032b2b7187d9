"""Independent reference implementations written directly in sympy."""

import sympy as sp

from helpers import to_sympy

lam, mu, dd = sp.symbols("l m d")


def structure_sympy(R):
    return [[[to_sympy(R.q[i][j][k]) for k in range(2)] for j in range(2)] for i in range(2)]


def lambda_axiom_residuals(R) -> list:
    """Skew-symmetry and λ-Jacobi residuals of the structure polynomials, all indices."""
    Q = structure_sympy(R)

    def sub(e, a, b):
        return e.subs({lam: a, dd: b}, simultaneous=True)

    out = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out.append(sp.expand(Q[i][j][k] + sub(Q[j][i][k], -lam - dd, dd)))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for t in range(2):
                    r = 0
                    for s in range(2):
                        r += sub(Q[j][k][s], mu, lam + dd) * Q[i][s][t]
                        r -= sub(Q[i][k][s], lam, mu + dd) * sub(Q[j][s][t], mu, dd)
                        r -= sub(Q[i][j][s], lam, -lam - mu) * sub(Q[s][k][t], lam + mu, dd)
                    out.append(sp.expand(r))
    return [r for r in out if r != 0]


def is_valid(R) -> bool:
    return not lambda_axiom_residuals(R)


def transform_sympy(R, T):
    """Structure polynomials in the basis Y_j = Σ_k T_kj(∂) X^k, computed in sympy."""
    Q = structure_sympy(R)
    Ts = sp.Matrix(2, 2, lambda k, j: to_sympy(T[k, j]))
    Tinv = sp.simplify(Ts.inv())
    out = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    for i in range(2):
        for j in range(2):
            vec = [0, 0]
            for k in range(2):
                for l in range(2):
                    for n in range(2):
                        vec[n] += Ts[k, i].subs(dd, -lam) * Ts[l, j].subs(dd, lam + dd) * Q[k][l][n]
            for m in range(2):
                out[i][j][m] = sp.expand(sum(vec[n] * Tinv[m, n] for n in range(2)))
    return out
