"""Kneser graphs of the classical families and their exact chromatic numbers.

The Kneser graph of a hypergraph has the hyperedges as vertices and joins
disjoint ones.  For the complete r-uniform family on [m] the chromatic
number is m - 2r + 2, and the stable (cyclically independent) subfamily
keeps the same chromatic number with far fewer vertices.
"""

from altermatic import (
    chromatic_number,
    complete_uniform,
    is_proper,
    kneser_graph,
    schrijver_hypergraph,
)

print("complete r-uniform families:")
for m, r in ((4, 2), (5, 2), (6, 2), (7, 2), (6, 3)):
    g = kneser_graph(complete_uniform(m, r))
    number, witness = chromatic_number(g)
    assert is_proper(g, witness)
    print(
        f"  KG({m},{r}): {g.vcount:3d} vertices, {g.edge_count:3d} edges, "
        f"chi = {number} (= {m}-{2 * r}+2)"
    )

print("\nstable subfamilies (same chromatic number, fewer vertices):")
for m, r in ((4, 2), (5, 2), (6, 2), (7, 2), (6, 3)):
    g = kneser_graph(schrijver_hypergraph(m, r))
    number, _ = chromatic_number(g)
    print(f"  SG({m},{r}): {g.vcount:3d} vertices, {g.edge_count:3d} edges, chi = {number}")

g = kneser_graph(complete_uniform(5, 2))
print(f"\nKG(5,2) is the Petersen graph: {g.vcount} vertices, {g.edge_count} edges, 3-regular")
