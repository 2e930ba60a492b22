# Colored graphs of index sequences, and the D/E blocks they induce on annuli.
# Run with: python3 notebooks/01_graphs_and_blocks.py

# %%
from fractions import Fraction as F

from wadgelab.annuli import RadiusLadder, classify_radius
from wadgelab.formats import dump_graph
from wadgelab.graphs import build_Gn
from wadgelab.render import render_annuli
from wadgelab.sequences import IndexSequence, block_parity

# %%
# n = 0 1 2 3: every arrow [2n_t, 2n_{t+1}-1] has two vertices
n = IndexSequence((0, 1, 2, 3))
g = build_Gn(n, 6)
print(dump_graph(g))
print("arrows", [n.arrow(t) for t in range(len(n) - 1)])

# %%
# a sequence with growing gaps gives longer arrows, colors alternate inside each
m = IndexSequence((0, 1, 3, 6))
gm = build_Gn(m)
print("colors", "".join(str(gm.vertex_color(v)) for v in gm.vertices))
print("parities", [block_parity(m, k).name for k in range(7)])

# %%
# blocks on a ladder of integer rungs: radius r goes to the unique D or E block holding it
lad = RadiusLadder.integers(5, 6)
for r in [0, F(1, 2), 1, 2, F(5, 2), 3, 4, 5]:
    print(f"r={str(r):>4}  {classify_radius(lad, (0, 1, 2), r)}")

# %%
print(render_annuli(lad, (0, 1, 2), 5))
