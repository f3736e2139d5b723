"""
Set families behind the bounds
==============================

Reading a sign pattern as the set ``A`` of coordinates with sign ``+1``,
the event ``{S >= x}`` becomes a family of subsets.  For non-negative
weights that family is ``ceil(x)``-intersecting, so Katona's theorem bounds
its size; the level set ``{S = x}`` is an antichain, bounded by Milner.
"""

from fractions import Fraction

import numpy as np

from symwalk import WeightVector, audit_family, build_family_geq, katona_bound

w = WeightVector([1, 1, Fraction(1, 2)])
fam = build_family_geq(w, Fraction(3, 2))
print("F_{>=3/2} =", fam.to_bitstrings(), "| Katona bound:", katona_bound(3, 2))

# %%
# A full audit: structure, sizes against the three bounds, and the identity
# |F| = 2^n * probability.

report = audit_family(WeightVector([Fraction(3, 4)] * 4), Fraction(3, 2))
for key in ("eq_size", "milner_bound", "eq_antichain", "milner_tight", "point_bridge_ok", "passed"):
    print(f"{key:>16}: {report.as_dict()[key]}")

# %%
# Random weights rarely reach the bound; all-equal weights do.

rng = np.random.default_rng(0)
for _ in range(3):
    ws = WeightVector([Fraction(int(p), 16) for p in rng.integers(1, 17, size=8)])
    r = audit_family(ws, 2)
    print(f"{ws}: |F| = {r.geq_size} <= {r.katona}")
print("all ones:", audit_family(WeightVector([1] * 8), 2).geq_size, "=", katona_bound(8, 2))
