# Cohomology with coefficients twisted by psi equals homology twisted by
# theta = (nu psi)^-1, nu the Nakayama automorphism of the Frobenius form.
# Here the left side comes from the small complex, the right side from the
# normalized bar chains, an entirely separate computation.

from fractions import Fraction

from qexterior.algebra import DiagonalAutomorphism, nakayama
from qexterior.bar import bar_homology_dims
from qexterior.cochains import cohomology_dims, homology_transfer
from qexterior.fields import FieldDescriptor, make_field

print("nu =", nakayama())

for K in (make_field(0), make_field(2), make_field(FieldDescriptor(0, Fraction(3)))):
    print(f"\n{K}")
    for a, b in [("q^0", "q^0"), ("-q^1", "-q^-1"), ("q^-1", "q^1"), ("generic", "q^2")]:
        psi = DiagonalAutomorphism.parse(a, b, K)
        theta = homology_transfer(psi)
        coh = cohomology_dims(psi, 4, K).hh
        hom = bar_homology_dims(theta, 4, K).hh_homology
        print(f"  psi=({a}, {b})  theta={theta}  HH^n={coh}  HH_n={hom}")

# ordinary Hochschild homology: theta = id
ident = DiagonalAutomorphism.identity()
for p in (0, 2):
    print(f"\nHH_n(A), char {p}:", bar_homology_dims(ident, 5, make_field(p)).hh_homology)
