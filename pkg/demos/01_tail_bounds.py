"""
Tail bounds for weighted Rademacher sums
========================================

For ``S = a_1 e_1 + ... + a_n e_n`` with independent random signs and
``|a_i| <= 1``, the optimal bound on ``P{S >= x}`` is a tail of the simple
walk, taken at length ``n`` or ``n - 1`` depending on parity.  This script
prints the bound next to the best value a weight search can find, and
compares it with Hoeffding's and Kwapien's inequalities.
"""

from fractions import Fraction

from symwalk import find_max_tail, hoeffding_bound, kwapien_rhs, tail_bound, tail_prob

# %%
# The bound and the case of the formula that produced it.  ``x`` is read as
# an exact rational, so 1.2 behaves like 2 (only the ceiling matters).

for n, x in [(4, "1.2"), (3, "2"), (7, "0.5")]:
    rep = tail_bound(n, x)
    print(f"n={n} x={x}: bound {rep.bound.to_fraction()} ({rep.describe()})")

# %%
# The bound is attained.  With ceil(x) + n odd, dropping one weight to zero
# and keeping the rest at 1 realises P{W_{n-1} >= x}.

print("P{S >= 2} for (1, 1, 0):", tail_prob([1, 1, 0], 2).to_fraction(), "=", tail_bound(3, 2).bound.to_fraction())

# %%
# A weight grid search never beats the bound, and meets it.

n = 5
print(f"\n{'x':>5} {'found':>8} {'bound':>8} {'Hoeffding':>10} {'Kwapien':>8}")
for i in range(1, 2 * n + 1):
    x = Fraction(i, 2)
    _, found = find_max_tail(n, x, Fraction(1, 4))
    b = tail_bound(n, x).bound
    print(f"{str(x):>5} {float(found):8.4f} {float(b):8.4f} {hoeffding_bound(n, x):10.4f} "
          f"{float(kwapien_rhs(n, x)):8.4f}")
