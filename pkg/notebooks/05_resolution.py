# The minimal bimodule resolution: generators f^n_i in the tensor powers
# (a word [x y] stands for x (x) y), then an exactness check by ranks.

from qexterior.fields import make_field
from qexterior.resolution import build_generator, verify_resolution

K = make_field(0)
for n in range(4):
    for i in range(n + 1):
        f = build_generator(n, i, K)
        terms = " + ".join(f"({c})[{' '.join(w)}]" for w, c in sorted(f.items()))
        print(f"f^{n}_{i} = {terms}")

report = verify_resolution(8, 6, K)
print()
for n, r in sorted(report.ranks.items()):
    print(f"n={n}  rank={r:>3}  complex={report.complex_ok.get(n, '-')}  exact={report.exact_ok.get(n, '-')}")
print("resolution ok:", report.ok)
