"""Build a lotus petal by petal and look at its anatomy.

A lotus is a triangulated complex that records a sequence of point blowups:
every petal (triangle) is one blowup, its apex the exceptional curve created.
The running example is the minimal embedded resolution of the plain cusp
y^2 = x^3.
"""

from lotus import new_lotus
from lotus.invariants import dual_graph
from lotus.render import dot_proximity_graph

# Start with the coordinate cross at the origin: a single oriented segment.
lotus = new_lotus("L", "L1")
print(lotus)

# Blow up the origin: a petal over the initial segment.  Its apex E0 stands
# for the exceptional curve of the first blowup.
e0 = lotus.add_petal("L", "L1")

# The cusp needs two more blowups: at the point where the strict transform
# meets E0 on the L1 side, then at the intersection of the two exceptional
# curves.
e1 = lotus.add_petal("L1", e0)
e2 = lotus.add_petal(e0, e1)

# Finally the strict transform of the curve itself is a smooth arc meeting E2;
# it is recorded as an arrowhead leaf.
lotus.add_base_edge(e2, "A", arrowhead=True)
lotus.validate()
print(lotus)

# Edges split into three kinds: base edges (the crosses that were chosen),
# internal edges (consumed as later petal bases), lateral edges (the rest).
for kind, edges in lotus.classify_edges().items():
    names = [f"[{lotus.label(u)} {lotus.label(v)}]" for u, v in edges]
    print(f"{kind:>8}: {' '.join(names)}")

# The lateral boundary is a tree; it is simultaneously the dual graph of the
# resolution's total transform.
print("dual graph weights:", {lotus.label(v): w for v, w in dual_graph(lotus)["weights"].items()})

# Vertices whose removal disconnects the complex mark where membranes meet.
print("rupture vertices:", [lotus.label(v) for v in lotus.rupture_vertices()])

# Proximity of infinitely near points is literally adjacency of exceptional
# vertices in the complex.
print(dot_proximity_graph(lotus))
