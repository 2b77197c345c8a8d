# Two ways to read "no k+1 crossing" for rotation classes.
#
# Symmetrized: expand each class into both of its chords and ask for k+1
# pairwise crossing chords.  Pairwise: call two classes crossing when some
# representatives cross, and ask for k+1 pairwise crossing classes.
from bcross.complexes import compare_readings
from bcross.counting import typeB_lower

for n in range(2, 7):
    for k in range(1, n):
        rep = compare_readings(n, k)
        if not rep["coincide"]:
            print((n, k), rep, "lower bound", typeB_lower(n, k))

# The readings split at (5,2), (6,2) and (6,3); only the symmetrized one
# reproduces the lower bound, and the pairwise complex at (6,2) is not pure.
