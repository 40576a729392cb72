"""Regenerate the graph6 fixture corpora under crates/cli/tests/data.

Uses the networkx graph atlas (all graphs up to 7 vertices) plus
nonisomorphic tree generation for the 8- and 9-vertex cases.
"""
import os
import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "data")


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(name, graphs):
    with open(os.path.join(OUT, name), "w") as f:
        for g in graphs:
            f.write(g6(g) + "\n")
    print(name, len(graphs))


atlas = nx.graph_atlas_g()

# every graph on at most 4 vertices, including the edgeless and disconnected ones
write("all_n1_4.g6", [g for g in atlas if 1 <= g.number_of_nodes() <= 4])

write("connected_n2_5.g6", [
    g for g in atlas
    if 2 <= g.number_of_nodes() <= 5 and nx.is_connected(g)
])

write("connected_m_le_6.g6", [
    g for g in atlas
    if g.number_of_nodes() >= 2 and nx.is_connected(g) and g.number_of_edges() <= 6
])

small = [
    g for g in atlas
    if g.number_of_nodes() >= 2 and nx.is_connected(g) and g.number_of_edges() <= 8
]
trees8 = list(nx.nonisomorphic_trees(8))
trees9 = list(nx.nonisomorphic_trees(9))
unicyclic8 = []
for t in trees8:
    for u in range(8):
        for v in range(u + 1, 8):
            if not t.has_edge(u, v):
                h = t.copy()
                h.add_edge(u, v)
                if not any(nx.is_isomorphic(h, k) for k in unicyclic8):
                    unicyclic8.append(h)
write("connected_m_le_8.g6", small + trees8 + unicyclic8 + trees9)
