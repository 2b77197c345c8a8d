# Mod-2 homology of the type-B complexes and of their links.
from bcross.complexes import all_faces, enumerate_facets, link
from bcross.homology import betti_gf2, is_homology_sphere
from bcross.polygon import Mode, ground_set

# Reduced Betti numbers b_0..b_dim over GF(2).
for n, k in [(3, 1), (4, 1), (4, 2), (5, 1)]:
    cx = enumerate_facets(ground_set(Mode.B, n, k))
    print((n, k), "dim", cx.dim, betti_gf2(all_faces(cx)))

# A homology sphere also needs every face link to look like a sphere.
rep = is_homology_sphere(enumerate_facets(ground_set(Mode.B, 4, 2)), "all")
print("links checked:", rep.faces_checked, "failures:", rep.failures)

# The link of a vertex of D*_{4,2} is a 2-sphere.
cx = enumerate_facets(ground_set(Mode.B, 4, 2))
lk = link(cx, 1)
print(len(lk), "facets;", betti_gf2(all_faces(lk)))

# Larger cases: sample links with a recorded seed.
big = enumerate_facets(ground_set(Mode.B, 5, 2))
rep = is_homology_sphere(big, ("sample", 30), seed=1)
print(rep.policy, rep.seed, rep.passed, rep.betti)
