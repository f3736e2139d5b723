"""
Point probabilities and the Littlewood-Offord problem
=====================================================

The chance that ``S`` hits a single value ``x`` is at most ``P{W_m = k}``
with ``k = ceil(x)`` and ``m = min(n or n - 1, k^2)``.  The length ``m``
comes from the walk's point probability in ``j``: it rises up to ``j = k^2``
and falls afterwards.
"""

from fractions import Fraction

from symwalk import best_interval_prob, lo_bound, point_bound_lem1, point_bound_thm2, point_prob, walk_point

# %%
# The peak of j -> P{W_j = k} sits at j = k^2 (with a tie two steps earlier).

for k in (2, 3, 4):
    row = [(j, walk_point(j, k).to_fraction()) for j in range(k, k * k + 5, 2)]
    print(f"k={k}:", ", ".join(f"j={j}: {float(p):.4f}" for j, p in row))

# %%
# Equality: put m copies of x/k and pad with zeros.

n, x = 9, Fraction(3, 2)
rep = point_bound_thm2(n, x)
k = 2
w = [x / k] * rep.effective_walk_length + [0] * (n - rep.effective_walk_length)
print(f"\nbound {rep.bound.to_fraction()} at m={rep.effective_walk_length}; "
      f"P{{S = {x}}} for ({', '.join(map(str, w))}) is {point_prob(w, x).to_fraction()}")

# %%
# Strictly positive weights allow a sharper statement.

print("positive-weight bound at n=5, x=3/2:", point_bound_lem1(5, "3/2").to_fraction())

# %%
# Littlewood-Offord: weights at least 1 in size, half-open windows of width 2k.

for k in (1, 2):
    r = best_interval_prob([1, Fraction(5, 4), Fraction(3, 2), 2], k)
    print(f"k={k}: best window mass {r.prob.to_fraction()} at x*={r.x_star}, bound {lo_bound(4, k).to_fraction()}")
