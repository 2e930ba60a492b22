# Coverage of the f side by unfoldings through a seed, and what the tail of the differences has to do with it.
# Run with: python3 notebooks/02_coverage.py

# %%
from wadgelab.product import admissible_seeds, coverage_report
from wadgelab.sequences import delta, e_tail_check, from_delta
from wadgelab.unfoldings import enumerate_unfoldings, enumerated_coverage

# %%
# a handful of unfoldings through (0, 0) for two small sequences
m, n = (0, 1, 3), (0, 2, 5)
for x in list(enumerate_unfoldings(m, n, 0, 4))[:8]:
    print(x.walk.label(), "ran f", sorted(x.ran_f), "ran g", sorted(x.ran_g))

# %%
# identical sequences reach the whole truncation from the seed 0
tri = from_delta([1, 2, 3, 4, 5, 6])
print(coverage_report(tri, tri, 0))

# %%
# differences 1..6 against the odd numbers: no common tail, and coverage stops early
odd = from_delta([1, 3, 5, 7, 9, 11])
print(e_tail_check(delta(tri), delta(odd), 6, 2))
for l in admissible_seeds(tri, odd, upto=2 * odd[2]):
    print(coverage_report(tri, odd, l))

# %%
# seeds close to the top of the n window are different: walks there only see a
# short stretch of n, so the truncation hides the mismatch and coverage looks full
for l in [l for l in admissible_seeds(tri, odd) if 59 <= l <= 69]:
    print(coverage_report(tri, odd, l))

# %%
# the product-graph search agrees with brute enumeration of walks
for K in (4, 8, 16):
    print(K, sorted(enumerated_coverage(tri, odd, 0, K)))
