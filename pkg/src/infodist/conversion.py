"""Constructive two-way conversion codec over the complexity table.

Given thresholds k1 <= k2, the relation S collects every ordered pair
(x, y) with K(x|y) <= k1 and K(y|x) <= k2, in a canonical deterministic
order.  A dynamic graph is then grown: the i-th pair sharing the first
element x contributes an edge {x+d, y}, where d is the (i >> k1)-th
string of length l = k2 - k1, and the edge is greedily colored with the
least color not present on any edge adjacent to x+d, x, y+d, or y.

That four-node exclusion set is what makes the "first enumerated edge of
this color at x or x+d" decoding rule correct: an earlier same-colored
edge at any of those nodes would have blocked the color.  Colors always
fit below 2^(k1+3) because node degrees are bounded by 2^(k1+1).

A (color, node) query therefore identifies one endpoint's unique
neighbor, and a (color, d, x) query recovers y without knowing whether x
appears base-side or offset-side.  Both decoders rebuild the graph from
(table, k1, k2), so the descriptor really is just the color plus the two
thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import encode_lg, index_to_string
from .complexity import ComplexityTable


class ConversionError(Exception):
    """Graph construction broke an invariant (color overflow, bad offset)."""


@dataclass(frozen=True)
class PairRelation:
    k1: int
    k2: int
    pairs: tuple[tuple[str, str], ...]

    @property
    def l(self) -> int:
        return self.k2 - self.k1


def enumerate_pairs(table: ComplexityTable, k1: int, k2: int) -> PairRelation:
    """Canonical relation S for (k1, k2).

    Order: ascending max of the two witnesses' discovery steps, ties by
    the string pair itself.  Deterministic, no repetitions.
    """
    if k1 > k2:
        raise ValueError(f"need k1 <= k2, got {k1} > {k2}")
    keyed = []
    for x in table.universe:
        for y in table.universe:
            exy = table.entry(x, y)
            eyx = table.entry(y, x)
            if exy is None or eyx is None:
                continue
            if exy.k <= k1 and eyx.k <= k2:
                keyed.append((max(exy.discovery_step, eyx.discovery_step), x, y))
    keyed.sort()
    return PairRelation(k1, k2, tuple((x, y) for _, x, y in keyed))


@dataclass(frozen=True)
class Edge:
    a: str  # x + d endpoint
    b: str  # y endpoint
    x: str
    y: str
    d: str
    color: int
    seq: int


@dataclass
class ConversionGraph:
    k1: int
    k2: int
    edges: list[Edge] = field(default_factory=list)
    colors_at: dict[str, dict[int, Edge]] = field(default_factory=dict)
    max_pair_index: int = 0

    @property
    def l(self) -> int:
        return self.k2 - self.k1

    @property
    def color_limit(self) -> int:
        return 1 << (self.k1 + 3)

    @property
    def max_color(self) -> int:
        return max((e.color for e in self.edges), default=-1)

    def _used_colors(self, node: str) -> set[int]:
        return set(self.colors_at.get(node, ()))

    def _attach(self, node: str, edge: Edge) -> None:
        slot = self.colors_at.setdefault(node, {})
        if edge.color in slot:
            raise ConversionError(
                f"color {edge.color} duplicated at node {node!r}"
            )
        slot[edge.color] = edge


def build_graph(rel: PairRelation) -> ConversionGraph:
    """Grow and color the conversion graph for a canonical relation."""
    graph = ConversionGraph(rel.k1, rel.k2)
    per_x: dict[str, int] = {}
    width = rel.l
    for seq, (x, y) in enumerate(rel.pairs):
        i = per_x.get(x, 0)
        per_x[x] = i + 1
        graph.max_pair_index = max(graph.max_pair_index, i)
        offset = i >> rel.k1
        if offset >= (1 << width):
            raise ConversionError(
                f"offset index {offset} does not fit in {width} bits "
                f"(pair count for {x!r} exceeded 2^k2?)"
            )
        d = format(offset, f"0{width}b") if width else ""
        a = x + d
        b = y
        banned = (
            graph._used_colors(a)
            | graph._used_colors(x)
            | graph._used_colors(y + d)
            | graph._used_colors(b)
        )
        color = 0
        while color in banned:
            color += 1
        if color >= graph.color_limit:
            raise ConversionError(
                f"color {color} >= 2^(k1+3) = {graph.color_limit}; "
                "broken table or enumeration order"
            )
        edge = Edge(a, b, x, y, d, color, seq)
        graph.edges.append(edge)
        graph._attach(a, edge)
        if b != a:
            graph._attach(b, edge)
    return graph


GraphInputs = "ConversionGraph | tuple[ComplexityTable, int, int]"


def _resolve(inputs) -> ConversionGraph:
    if isinstance(inputs, ConversionGraph):
        return inputs
    table, k1, k2 = inputs
    return build_graph(enumerate_pairs(table, k1, k2))


def decode_from_node(inputs, color: int, node: str) -> str | None:
    """Neighbor across the unique color-colored edge at *node*, or None.

    *inputs* is either a prebuilt graph or a (table, k1, k2) triple; the
    triple form rebuilds the graph deterministically, which is the whole
    decoding story: color + node identify the edge.
    """
    graph = _resolve(inputs)
    edge = graph.colors_at.get(node, {}).get(color)
    if edge is None:
        return None
    return edge.b if edge.a == node else edge.a


def decode_with_d(inputs, color: int, d: str, x: str) -> str | None:
    """Recover y for the pair that was stored with offset *d* at base *x*.

    Scans for the first enumerated color-colored edge adjacent to x or
    x+d.  A match at x+d yields the neighbor directly; a match at x
    yields a neighbor carrying the trailing d, which is stripped.
    """
    graph = _resolve(inputs)
    xd = x + d
    candidates = []
    direct = graph.colors_at.get(xd, {}).get(color)
    if direct is not None:
        candidates.append((direct.seq, xd, direct))
    if xd != x:
        base = graph.colors_at.get(x, {}).get(color)
        if base is not None:
            candidates.append((base.seq, x, base))
    if not candidates:
        return None
    _, matched_at, edge = min(candidates)
    neighbor = edge.b if edge.a == matched_at else edge.a
    if matched_at == xd:
        return neighbor
    if d and not neighbor.endswith(d):
        return None
    return neighbor[: len(neighbor) - len(d)] if d else neighbor


def descriptor_length(rel: PairRelation, pair: tuple[str, str]) -> int:
    """Bit budget of the two-way descriptor for a pair of the relation.

    Color field is exactly k1 + 3 bits; the thresholds are carried by
    their level-3 self-delimiting encodings.
    """
    if pair not in rel.pairs:
        raise ValueError(f"pair {pair!r} not in relation")
    color_bits = rel.k1 + 3
    k1_bits = len(encode_lg(3, index_to_string(rel.k1)))
    k2_bits = len(encode_lg(3, index_to_string(rel.k2)))
    return color_bits + k1_bits + k2_bits


def verify_roundtrip(graph: ConversionGraph, rel: PairRelation) -> list[str]:
    """Check both decoders on every pair; returns failure descriptions."""
    failures = []
    for edge in graph.edges:
        via_node = decode_from_node(graph, edge.color, edge.a)
        if via_node != edge.b:
            failures.append(f"node decode {edge.a!r} color {edge.color}: {via_node!r}")
        back = decode_from_node(graph, edge.color, edge.b)
        if back != edge.a:
            failures.append(f"node decode {edge.b!r} color {edge.color}: {back!r}")
        y = decode_with_d(graph, edge.color, edge.d, edge.x)
        if y != edge.y:
            failures.append(
                f"d-decode x={edge.x!r} d={edge.d!r} color {edge.color}: {y!r} != {edge.y!r}"
            )
    return failures
