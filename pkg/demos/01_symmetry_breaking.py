"""
Breaking the symmetry of a rook's graph
=======================================

K_n x K_m is the n x m grid where two cells are adjacent when they share a
row or a column.  For n < m its symmetries are exactly the row permutations
combined with the column permutations.  A coloring is distinguishing when
only the identity keeps it unchanged.
"""

from rookdist.grid import Automorphism, Coloring, GridSpec, apply_automorphism
from rookdist.oracle import is_distinguishing, min_distinguishing_number, naive_is_distinguishing

# three different column vectors on a 2 x 3 grid: nothing can move
c = Coloring.from_columns([(1, 1), (1, 2), (2, 2)])
print(c.cells, is_distinguishing(c))

# all four 2-color vectors on a 2 x 4 grid: swapping the rows only reorders
# the columns, so the row swap survives
d = Coloring.from_columns([(1, 1), (1, 2), (2, 1), (2, 2)])
cert = is_distinguishing(d)
print(d.cells, cert)
print("witness fixes d:", apply_automorphism(cert.witness, d) == d)

# the brute-force verifier walks all of S_n x S_m and must agree
print("naive agrees:", naive_is_distinguishing(d).verdict == cert.verdict)

# acting twice is the same as acting by the composite
g = Automorphism((2, 1), (3, 1, 2, 4))
h = Automorphism((1, 2), (2, 1, 4, 3))
print(apply_automorphism(g @ h, d) == apply_automorphism(g, apply_automorphism(h, d)))

# the least number of colors needed, by exhaustive search
for n, m in [(1, 2), (2, 3), (2, 4), (3, 4), (3, 6)]:
    k, witness = min_distinguishing_number(GridSpec(n, m))
    print(f"D(K_{n} x K_{m}) = {k}  witness {witness.cells}")
