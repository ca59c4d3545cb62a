"""Walk through the subgraph posets of a few small labelled graphs.

For each graph print its rank, label count, the predicted sphere dimension,
the l-separating edges, and the reduced homology of the non-tree poset and the
core poset.
"""

from pbcomplex.complex import reduced_homology, wedge_signature
from pbcomplex.graph_core import LabelledGraph, expected_dimension, l_separating_edges, path_graph, rank, rose, theta
from pbcomplex.poset import build_core_poset, build_nontrees, order_complex

examples = {
    "rose with 2 petals": rose(2),
    "rose with 3 petals": rose(3),
    "theta graph": theta(),
    "loop with a hanging edge": LabelledGraph.from_pairs([(0, 0), (0, 1)]),
    "path of length 2, ends labelled": path_graph(2, labels=[0, 2]),
    "theta with one labelled vertex": theta(labels=[0]),
}

for name, g in examples.items():
    d = expected_dimension(rank(g), g.k)
    X, C = build_nontrees(g), build_core_poset(g)
    hx = reduced_homology(order_complex(X))
    hc = reduced_homology(order_complex(C))
    print(f"{name}: rank {rank(g)}, {g.k} labels, d = {d}")
    print(f"  l-separating edges: {l_separating_edges(g) or 'none'}")
    print(f"  X has {len(X)} elements, homology {hx} -> {wedge_signature(hx, d)}")
    print(f"  Core has {len(C)} elements, homology {hc}")
