"""
A polynomial that certifies distinguishing colorings
====================================================

For K_n x K_{n+1} put a variable x(i, j) on each cell.  C multiplies the
differences of column sums and R the differences x(l, h) - x(h, h).  Any
assignment where F = C * R is nonzero is a distinguishing coloring, and the
coefficient of the product of off-diagonal variables is 1! 2! ... n!, so
every assignment of 2-element lists admits one.
"""

import random

from rookdist.corpus import random_list_assignment
from rookdist.oracle import is_distinguishing
from rookdist.poly import (CnInstance, build_F, closed_form_coefficient, cn_list_coloring,
                           evaluate_F, target_coefficient)

# small F, fully expanded
F = build_F(2)
print("F for n = 2 has", len(F), "terms of degree", F.degree)

for n in range(1, 5):
    print(n, target_coefficient(n), closed_form_coefficient(n), CnInstance(n).degree)

# F evaluated from its factors
rows = [[0, 1, 1], [1, 1, 2]]
print("F =", evaluate_F(2, rows))

# lists of size two: the search always finds a nonzero point
rng = random.Random(1)
for n in (2, 3, 4):
    L = random_list_assignment(rng, n, n + 1, 2, n + 3)
    c = cn_list_coloring(L)
    print(n, L.lists[0], "->", c.cells[0], "F != 0:", evaluate_F(n, c) != 0,
          "distinguishing:", is_distinguishing(c).verdict)
