# Closed formulas against enumeration.
import numpy as np

from bcross.complexes import enumerate_facets
from bcross.counting import bounds_report, hankel_catalan, typeA_product, typeB_lower_forms
from bcross.polygon import Mode, ground_set

# Type A: a Hankel determinant of Catalan numbers and a product formula.
# They are evaluated independently and have to agree.
for n, k in [(8, 2), (10, 3), (12, 4)]:
    print((n, k), hankel_catalan(n, k), typeA_product(n, k))

# Type B lower bound: two determinants and a triple product.
table = np.array([[typeB_lower_forms(n, k)[0] if k < n else 0 for k in range(1, 7)]
                  for n in range(2, 8)], dtype=object)
print(table)

# Enumerated facet counts sit between the bounds.  The literal even-case upper
# formula overshoots at (4,2); the operative bound counts facets of the cyclic
# polytope directly.
for n, k in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)]:
    print(bounds_report(n, k, with_enumeration=True).to_dict())

# The lower bound looks tight wherever we can enumerate.
print(len(enumerate_facets(ground_set(Mode.B, 6, 2))), typeB_lower_forms(6, 2)[0])
