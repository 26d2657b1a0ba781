"""The three polynomial identities hold exactly on daisy cubes anchored at 0^n."""

from collections import Counter

from partialcube import verify_theorems
from partialcube.families import enumerate_all_downsets, random_partial_cube_by_deletion

tally = Counter()
for g in enumerate_all_downsets(4):
    r = verify_theorems(g)
    tally["downsets", r.prop_a and r.prop_b and r.prop_c] += 1

for seed in range(150):
    g = random_partial_cube_by_deletion(4, seed, 1 + seed % 8)
    r = verify_theorems(g)
    tally["deletions", r.flags.is_daisy_at_base, r.prop_a, r.prop_b, r.prop_c] += 1

for key, n in sorted(tally.items(), key=str):
    print(n, key)
