# The untwisted case: HH^*(A, A) for the quantum exterior algebra.
#
# For q not a root of unity the algebra has infinite global dimension, yet
# its Hochschild cohomology vanishes from degree 3 on: the total dimension
# is 2 + 2 + 1 = 5.

from qexterior.algebra import DiagonalAutomorphism
from qexterior.cochains import cohomology_dims, d_matrix
from qexterior.fields import make_field

K = make_field(0)          # Q(q), q an indeterminate
ident = DiagonalAutomorphism.identity()

# the first differential, columns are images of e, xe, ye, yxe
d1 = d_matrix(ident, 1, K)
for row in d1.to_rows():
    print(" ".join(f"{str(c):>6}" for c in row))

report = cohomology_dims(ident, 10, K)
print()
print(" n  ker  im  hh")
for rec in report.series:
    print(f"{rec.n:>2} {rec.dim_ker:>4} {rec.dim_im:>3} {rec.hh:>3}")

print("\ntotal dimension:", sum(report.hh))
