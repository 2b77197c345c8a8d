# Diagonals, crossings and the two kinds of complexes.
# Run from the repository root: python notebooks/01_polygons_and_complexes.py
from bcross.complexes import enumerate_facets, fh_vector
from bcross.polygon import Diagonal, DiagonalClass, Mode, crosses, ground_set, rotate

# Vertices of an N-gon are 0..N-1, clockwise.  Two chords cross when their
# endpoints interleave.
d, e = Diagonal.of(0, 2, 4), Diagonal.of(1, 3, 4)
print(d, e, crosses(d, e))

# In the 2n-gon the 180 degree rotation pairs chords up; a diameter is fixed.
print(rotate(Diagonal.of(0, 2, 6)), rotate(Diagonal.of(0, 3, 6)))
c = DiagonalClass.of(Diagonal.of(1, 4, 8))
print(c.label, [str(m) for m in c.members])

# Type A: chords of the n-gon longer than k, no k+1 of them pairwise crossing.
# For k = 1 these are the triangulations, counted by Catalan numbers.
for n in range(5, 9):
    print("type A", n, 1, len(enumerate_facets(ground_set(Mode.A, n, 1))))

# Type B: rotation classes of the 2n-gon.  The hexagon case is a 6-cycle.
hexagon = enumerate_facets(ground_set(Mode.B, 3, 1))
for labels in hexagon.facet_labels():
    print(labels)

# Every facet has the same size, so the complexes are pure.
for n, k in [(4, 1), (4, 2), (5, 2)]:
    cx = enumerate_facets(ground_set(Mode.B, n, k))
    print((n, k), len(cx), "facets of size", k * (n - k), cx.pure)

# f and h vectors; the h vector of a sphere is a palindrome.
fh = fh_vector(enumerate_facets(ground_set(Mode.B, 4, 2)))
print("f =", fh.f)
print("h =", fh.h, "symmetric:", fh.symmetric, "unimodal:", fh.unimodal)
