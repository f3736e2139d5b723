"""
Odd Lipschitz functions on the cube
===================================

The tail bound extends from linear forms to any odd function on
``{-1, 1}^n`` that is 1-Lipschitz for the l1 distance.  Tables are exact,
and the generator produces random members of this class.
"""

from symwalk import check_lipschitz_bound, coordinate_sum, random_odd_lipschitz, validate

t = random_odd_lipschitz(6, seed=42)
print("valid:", validate(t)[0], "| first values:", [str(v) for v in t.values[:4]])

# %%
# No generated table beats the bound; the coordinate sum meets it when
# x and n have the same parity.

worst = {}
for seed in range(500):
    t = random_odd_lipschitz(6, seed)
    for x in (1, 2, 3):
        c = check_lipschitz_bound(t, x)
        assert c.passed
        worst[x] = max(worst.get(x, 0), c.lhs.to_fraction())
for x in (1, 2, 3):
    c = check_lipschitz_bound(coordinate_sum(6), x)
    print(f"x={x}: best random {worst[x]}, coordinate sum {c.lhs.to_fraction()}, bound {c.rhs.to_fraction()}"
          f"{' (tight)' if c.tight else ''}")
