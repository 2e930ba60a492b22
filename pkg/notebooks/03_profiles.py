# Radius profiles along an arc and the unfolding they trace.
# Run with: python3 notebooks/03_profiles.py

# %%
from fractions import Fraction as F

from wadgelab.annuli import Profile, RadiusLadder, check_extraction, extract_walk
from wadgelab.errors import ConsistencyViolation
from wadgelab.formats import dump_unfolding

seq = (0, 1, 2, 3, 4, 5)
lad = RadiusLadder.integers(9, 10)

# %%
# the image radius rises with the arc, falls back two rungs, then rises again
zig = Profile([(0, 0, 0), (F(7, 18), F(7, 2), F(7, 2)), (F(11, 18), F(11, 2), F(3, 2)),
               (F(17, 18), F(17, 2), F(9, 2)), (1, 9, 5)])
ex = extract_walk(zig, seq, seq, lad)
for p, ea, eb in ex.transitions:
    print(f"at {p}: annulus {ea} ~ {eb}")
print("walk", ex.walk.vertices)
print("problems", check_extraction(ex))

# %%
print(dump_unfolding(ex.unfolding))

# %%
# a profile that sends a D point to an E point is rejected at the first such parameter
bad = Profile([(0, 0, 0), (1, F(5, 2), F(3, 2))])
try:
    extract_walk(bad, seq, seq, lad)
except ConsistencyViolation as exc:
    print(exc)
