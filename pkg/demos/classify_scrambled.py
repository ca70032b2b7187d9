"""Scramble a known algebra, then recover its canonical form and the basis change."""

from lca2 import TABLE_ROWS, r_cdq, classify, scramble, transform

# start from the c = -4 row of the table
R = r_cdq(-4, 0, TABLE_ROWS[-4][0])
print("source:")
print(R)

# rewrite it in a random unimodular basis
S, T = scramble(R, seed=7, max_deg=3)
print("\nscrambled: total degree", S.total_degree(), "in the new basis")
print("basis change used:")
print(T.m)

form, change, cert = classify(S)
print("\ncanonical form:", form.to_json()["type"], "c =", form.c, "d =", form.d)
print("case:", cert.case.value)
for step in cert.steps:
    print("  ", step.rule, "residual degree", step.residual_degree)

# the emitted basis change reproduces the canonical brackets exactly
print("\nreproduced:", transform(S, change.m) == form.algebra())
