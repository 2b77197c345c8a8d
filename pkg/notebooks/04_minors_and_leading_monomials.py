# The term order on matrix variables and leading monomials of minors.
import numpy as np

from bcross.monomials import minor, mono_str, n_set, phi, psi, sr_generators, verify_nab
from bcross.polygon import all_classes

# Rank of each variable x_ij for n = 5; rank 25 is the largest variable.
n = 5
print(np.array([[phi(i, j, n) for j in range(1, n + 1)] for i in range(1, n + 1)]))

# The leading monomial of a minor is read off from the index set N(A,B).
A, B = (1, 3, 6, 8), (3, 4, 7, 9)
sel = n_set(A, B, 10)
print("ell =", sel.ell, "N =", sel.nset)
print(mono_str(minor(A, B, 10).lm, 10))

# Exhaustive check for small matrices.
for n in range(2, 6):
    for k in range(1, n):
        if k + 1 <= 4:
            rep = verify_nab(n, k)
            print((n, k), rep.checked, "pairs", "ok" if rep.passed else rep.counterexamples[:2])

# Classes of the 2n-gon sit on matrix positions; short classes fill a band.
print(sorted(psi(c, 4) for c in all_classes(4)))

# Stanley-Reisner generators: products over (k+1)-crossings.
for g in sr_generators(3, 1):
    print(mono_str(g, 3))
