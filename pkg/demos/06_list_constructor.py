"""
Coloring from lists, in two phases
==================================

Every cell brings its own list of allowed colors.  The constructor picks a
block A of columns (the list-uniform ones, topped up to n + 1), colors A so
that no row permutation survives, then colors every other column with a
color multiset not used in A and a vector not used elsewhere.  Each result
is checked by the verifier; when the plan fails, exhaustive search decides.
"""

import random

from rookdist.constructor import check_construction, choose_A, classify_columns, solve
from rookdist.corpus import random_list_assignment
from rookdist.grid import GridSpec, ListAssignment
from rookdist.oracle import list_distinguishing_exhaustive

rng = random.Random(3)
L = random_list_assignment(rng, 3, 6, 2, 5, "mixed")
print("lists:", L.lists)
print("plan:", choose_A(classify_columns(L), 3).to_json())

res = solve(L)
print(res.to_json(emit_certificate=True))
print(check_construction(L, res.plan, res.coloring))

# with only two colors on a 2 x 4 grid nothing works, and the answer says so
print(solve(ListAssignment.uniform(GridSpec(2, 4), [1, 2])).to_json())

# the constructor and exhaustive search agree
agree = 0
for seed in range(100):
    r = random.Random(seed)
    L = random_list_assignment(r, 2, 5, 2, 3)
    agree += (solve(L).status.value == "found") == (list_distinguishing_exhaustive(L) is not None)
print("agreement:", agree, "/ 100")
