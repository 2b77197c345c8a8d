# Are the (k+1)-minors a Groebner basis?
from bcross.groebner import buchberger, check_dreitenoere, initial_ideal, minors_ideal
from bcross.monomials import mono_str

# Three statements that should stand or fall together: the minors form a
# Groebner basis, the initial ideal is the Stanley-Reisner ideal, and the
# facet count equals the determinantal lower bound.
for n, k in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (4, 2)]:
    rep = check_dreitenoere(n, k, max_seconds=300)
    print((n, k), rep.minors_are_gb, rep.sr_equals_initial, rep.count_matches_lower,
          f"{rep.elapsed:.2f}s")

# The reduced basis for n = 3, k = 1 is the nine 2x2 minors themselves.
G = buchberger(minors_ideal(3, 1).gens)
print(len(G.gens), G.input_was_gb)
for m in initial_ideal(G).mingens:
    print(mono_str(m, 3))
