# Sweep twists psi = (eps_a q^s, eps_b q^t) and compare the matrix
# computation with the closed forms, label by label.

from collections import Counter

from qexterior.algebra import DiagonalAutomorphism
from qexterior.closed_forms import classify, predicted_series
from qexterior.cochains import cohomology_dims
from qexterior.fields import make_field

N = 10

for p in (0, 2, 3):
    K = make_field(p)
    params = [f"{e}q^{s}" for e in ("", "-") for s in range(-3, 4)] + ["generic"]
    seen = Counter()
    mismatches = 0
    for a in params:
        for b in params:
            psi = DiagonalAutomorphism.parse(a, b, K)
            seen[classify(psi, K).label.value] += 1
            if cohomology_dims(psi, N, K).hh != predicted_series(psi, N, K).hh:
                mismatches += 1
    print(f"{K}: {sum(seen.values())} twists, {mismatches} mismatches")
    for label, count in sorted(seen.items()):
        print(f"    {label:<22} {count}")

# one series per label in characteristic 0
K = make_field(0)
print()
for a, b in [("generic", "generic"), ("q^2", "generic"), ("q^1", "generic"), ("-q^1", "generic"),
             ("generic", "q^-1"), ("q^1", "q^-1"), ("q^1", "q^3"), ("q^2", "-q^-1"),
             ("q^-1", "q^2"), ("q^2", "q^0")]:
    psi = DiagonalAutomorphism.parse(a, b, K)
    print(f"({a:>7}, {b:>7})  {classify(psi, K).label.value:<20}", cohomology_dims(psi, 8, K).hh)
