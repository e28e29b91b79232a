"""Grow the colored conversion graph and decode pairs both ways."""

from infodist import (
    build_graph,
    build_table,
    decode_from_node,
    decode_with_d,
    descriptor_length,
    enumerate_pairs,
    strings_up_to,
)

table = build_table(strings_up_to(3), max_len=14)

# Thresholds k1 <= k2 select the pair relation; the offset string d has
# length k2 - k1 and absorbs the asymmetry between the two directions.
k1, k2 = 5, 9
rel = enumerate_pairs(table, k1, k2)
graph = build_graph(rel)
print(f"relation for ({k1},{k2}): {len(rel.pairs)} pairs, offset width {rel.l}")
print(f"colors used: 0..{graph.max_color} (bound {graph.color_limit})")

print("\nfirst edges (endpoint = base+offset, neighbor, offset, color):")
for edge in graph.edges[:8]:
    print(f"  {{{edge.a or 'empty':>6}, {edge.b or 'empty':>6}}}  d={edge.d!r}  color {edge.color}")

# A color plus either endpoint identifies an edge; a color plus the
# offset plus the base string recovers the partner without knowing which
# side you are on.
edge = graph.edges[-1]
print(f"\ntake the last edge: base={edge.x!r}, partner={edge.y!r}, d={edge.d!r}, color={edge.color}")
print(f"  decode_from_node(color, {edge.a!r}) -> {decode_from_node(graph, edge.color, edge.a)!r}")
print(f"  decode_from_node(color, {edge.b!r}) -> {decode_from_node(graph, edge.color, edge.b)!r}")
print(f"  decode_with_d(color, d, base)       -> {decode_with_d(graph, edge.color, edge.d, edge.x)!r}")

budget = descriptor_length(rel, (edge.x, edge.y))
print(f"\ndescriptor budget: {budget} bits (color field {k1 + 3}, plus threshold codes)")
