"""Assemble every row of the Q_c table and run both axiom checkers on it."""

from lca2 import TABLE_ROWS, check_axioms_lambda, check_axioms_nth, r_cdq, solve_coboundary

for c, rows in TABLE_ROWS.items():
    for Q in rows:
        R = r_cdq(c, 0, Q)
        lam_ok = check_axioms_lambda(R).valid
        nth_ok = check_axioms_nth(R).valid
        cob = solve_coboundary(c, 0, Q)
        print(f"c={c:>3}  Q={Q}")
        print(f"        lambda check {lam_ok}, n-th product check {nth_ok}, coboundary {cob is not None}")
