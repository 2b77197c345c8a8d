# Cyclic polytopes by Gale evenness, and the case k = n - 2.
import numpy as np

from bcross.counting import cyclic_facet_count
from bcross.gale import CyclicSpec, cyclic_facets, cyclic_numbering, gale_is_face, verify_cyclic_iso

spec = CyclicSpec(4, 8)
print(gale_is_face([1, 2, 5, 6], spec), gale_is_face([1, 3, 5], spec))
print(len(cyclic_facets(spec)), cyclic_facet_count(4, 8))

# Facet counts for a few dimensions.
print(np.array([[cyclic_facet_count(d, N) for N in range(d + 1, d + 7)] for d in range(2, 7)]))

# For k = n - 2 the matrix positions off the band form one long cycle; walking
# it numbers the vertices 1..2n.
n = 6
grid = np.zeros((n, n), dtype=int)
for (i, j), v in cyclic_numbering(n).items():
    grid[i - 1, j - 1] = v
print(grid)

# With that numbering the type-B complex is the boundary of C_{2n-4}(2n).
for n in (3, 4, 5):
    rep = verify_cyclic_iso(n)
    print(n, rep.facets_typeb, rep.facets_cyclic, rep.passed)
