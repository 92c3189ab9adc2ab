# The family psi_t = (q^-t, q^t).  Each twisted bimodule has nonzero
# cohomology exactly in degrees 2t, 2t+1, 2t+2 (dimensions 1, 2, 1), so the
# last nonvanishing degree grows without bound with t.

from qexterior.suite import auslander_table

for row in auslander_table(T=5, tail=6):
    dims = " ".join(str(h) for h in row["hh"][1:])
    print(f"t={row['t']}  last nonzero n={row['last_nonzero']:>2}  hh[1:] = {dims}")
