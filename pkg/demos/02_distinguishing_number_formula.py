"""
The distinguishing number without search
========================================

With k the integer where (k-1)^n < m <= k^n, the answer is k below
m = k^n - ceil(log_k n) and k + 1 above it.  Exactly on that value the
formula leaves two candidates and a search settles it.
"""

from rookdist.exact import band, borderline_m, distinguishing_number
from rookdist.errors import Indeterminate
from rookdist.grid import GridSpec
from rookdist.oracle import min_distinguishing_number

for n, m in [(2, 3), (2, 4), (4, 5), (3, 9), (10, 10**6)]:
    print((n, m), distinguishing_number(n, m).to_json())

# every value on a small range matches brute force
rows = []
for m in range(2, 7):
    for n in range(1, m):
        formula = distinguishing_number(n, m).value
        brute = min_distinguishing_number(GridSpec(n, m))[0]
        rows.append((n, m, formula, brute))
print("all agree:", all(f == b for _, _, f, b in rows))

# integer arithmetic throughout, so huge m is fine
print(band(40, 3**40), band(40, 3**40 + 1), borderline_m(5, 3))

# a borderline case with too little budget is reported, not guessed
try:
    distinguishing_number(3, 6, search_budget=5)
except Indeterminate as exc:
    print("undecided between", exc.candidates)
