"""
How large can a coefficient get?
================================

Take n factors (x1 + ... + xk) and substitute formal variables so that the
variables inside one factor stay distinct.  For k = 2 no coefficient of the
expansion exceeds binom(n, ceil(n/2)); for k >= 3 none exceeds
C k^(n+1) / n^(1/4) with C = (3/(2e))^(3/2).  Both are checked over every
assignment up to renaming the variables.
"""

from rookdist.bounds import (FormAssignment, check_two_term_bound, check_many_term_bound,
                             check_multinomial_conjecture, max_monomial_coefficient,
                             merge_variables)

print(max_monomial_coefficient(FormAssignment.of([(0, 1), (0, 1)])))
print(max_monomial_coefficient(FormAssignment.of([(0, 1), (0, 2)])))

# merging two variables that never meet can only raise coefficients
fa = FormAssignment.of([(0, 1, 2), (3, 4, 5), (0, 3, 6)])
merged = merge_variables(fa)
print(fa.slots, "->", merged.slots, max_monomial_coefficient(fa), max_monomial_coefficient(merged))

for n in range(1, 7):
    rep = check_two_term_bound(n)
    print(f"k=2 n={n}: {rep.checked} classes, max {rep.max_observed} <= {rep.bound}, "
          f"attained {rep.attained}")

for n in range(1, 5):
    rep = check_many_term_bound(n, 3)
    print(f"k=3 n={n}: max {rep.max_observed}, bound {rep.to_json()['bound'][0]}, "
          f"merged r <= {rep.extra['max_merged_r']}")

# the sharper guess: the balanced multinomial coefficient
for n in range(2, 5):
    rep = check_multinomial_conjecture(n, 3)
    print(n, rep.max_observed, rep.bound, rep.extra["verdict"])
