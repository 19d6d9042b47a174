"""
A uniform bound on binomial probabilities, rigorously
=====================================================

f(n, a, p) = sqrt(n) binom(n, a) p^(a+1/2) (1-p)^(n-a+1/2) peaks at
p = (a + 1/2)/(n + 1) and stays below C = (3/(2e))^(3/2) = 0.40991...
Values are interval enclosures, and each comparison is made on the
endpoint that works against the claim.
"""

from fractions import Fraction

from rookdist import bounds
from rookdist.bounds import BinomialPoint, binomial_constant, f_na, f_npa

with bounds.precision(128):
    print("C in", binomial_constant())
    print("f(2,1) in", f_na(2, 1))
    print("f(3,1) in", f_na(3, 1), " f(3,2) in", f_na(3, 2))
    print("f(10,3,1/5) in", f_npa(BinomialPoint(10, 3, Fraction(1, 5))))

# f(n, 1) creeps up toward C
for n in (10, 100, 500, 5000):
    print(n, bounds.to_jsonable(f_na(n, 1))[1])

rep = bounds.check_binomial_inequality(200)
print(rep.checked, "points, largest at", rep.extra["argmax"], "pass", rep.passed)

rep = bounds.check_log_monotonicity(2000)
print("x decreasing, y increasing:", rep.passed, " x(10^6)+1 =", bounds.to_jsonable(rep.extra["x_far_plus_1"])[1])
