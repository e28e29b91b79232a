"""Compression-based similarity for real files.

The estimator treats a compressor's output length as an upper bound on
description length: concatenating two objects and subtracting the
cheaper one approximates the harder conditional description, and
normalizing by the costlier one gives a score in roughly [0, 1].

The built-in compressor is a self-contained sliding-window dictionary
coder, so the module needs nothing external; any other compressor can be
plugged in as a subprocess filter that reads the data on stdin and
writes compressed bytes to stdout.  All lengths are in bits of
compressed output.
"""

from __future__ import annotations

import random
import subprocess
from dataclasses import dataclass
from pathlib import Path

_MIN_MATCH = 4
_MAX_CANDIDATES = 16


def _gamma_bits(value: int) -> int:
    # Cost of a simple universal integer code, value >= 1.
    return 2 * value.bit_length() - 1


class BuiltinCompressor:
    """Sliding-window dictionary coder over bytes; counts output bits.

    Greedy longest-match parse against the whole preceding window, with
    an inverted-match mode that also matches against the bitwise
    complement of the window (so a negative of a file costs little given
    the file).  Tokens are costed, not materialized: a literal is 9 bits,
    a match is 2 flag bits plus universal codes for offset and length.
    """

    name = "builtin"

    def compress_len(self, data: bytes) -> int:
        if not data:
            return 1
        inverted = bytes(b ^ 0xFF for b in data)
        anchors: dict[bytes, list[int]] = {}
        n = len(data)
        bits = 0
        i = 0
        while i < n:
            best_len = 0
            best_off = 0
            if i + _MIN_MATCH <= n:
                for source in (data, inverted):
                    key = source[i : i + _MIN_MATCH]
                    for cand in reversed(anchors.get(key, ())[-_MAX_CANDIDATES:]):
                        # Overlapping forward copies (offset < length) are fine.
                        length = _MIN_MATCH
                        limit = n - i
                        while (
                            length < limit
                            and data[cand + length] == source[i + length]
                        ):
                            length += 1
                        if length > best_len:
                            best_len = length
                            best_off = i - cand
            if best_len >= _MIN_MATCH:
                bits += 2 + _gamma_bits(best_off) + _gamma_bits(best_len - _MIN_MATCH + 1)
                stop = i + best_len
                while i < stop:
                    if i + _MIN_MATCH <= n:
                        anchors.setdefault(data[i : i + _MIN_MATCH], []).append(i)
                    i += 1
            else:
                bits += 9
                if i + _MIN_MATCH <= n:
                    anchors.setdefault(data[i : i + _MIN_MATCH], []).append(i)
                i += 1
        return bits


class CommandCompressor:
    """Adapter for an external filter: stdin -> compressed stdout."""

    def __init__(self, command: "list[str] | str"):
        self.command = command.split() if isinstance(command, str) else list(command)
        self.name = "cmd:" + " ".join(self.command)

    def compress_len(self, data: bytes) -> int:
        proc = subprocess.run(
            self.command, input=data, stdout=subprocess.PIPE, check=True
        )
        return 8 * len(proc.stdout)


def get_compressor(spec: str = "builtin"):
    if spec == "builtin":
        return BuiltinCompressor()
    if spec.startswith("cmd:"):
        return CommandCompressor(spec[4:])
    raise ValueError(f"unknown compressor {spec!r}; use 'builtin' or 'cmd:<exe>'")


def e1_estimate(a: bytes, b: bytes, comp) -> int:
    """Compressed-length proxy for the larger conditional description."""
    return comp.compress_len(a + b) - min(comp.compress_len(a), comp.compress_len(b))


def ncd(a: bytes, b: bytes, comp) -> float:
    """Normalized compression distance; rejects empty inputs."""
    if not a or not b:
        raise ValueError("ncd needs nonempty inputs")
    ca = comp.compress_len(a)
    cb = comp.compress_len(b)
    cab = comp.compress_len(a + b)
    return (cab - min(ca, cb)) / max(ca, cb)


@dataclass
class DistanceMatrix:
    labels: list[str]
    values: list[list[float]]

    def symmetry_gap(self) -> float:
        worst = 0.0
        for i in range(len(self.labels)):
            for j in range(i + 1, len(self.labels)):
                worst = max(worst, abs(self.values[i][j] - self.values[j][i]))
        return worst

    def max_diagonal(self) -> float:
        return max(self.values[i][i] for i in range(len(self.labels))) if self.labels else 0.0

    def symmetrized(self) -> list[list[float]]:
        n = len(self.labels)
        return [
            [(self.values[i][j] + self.values[j][i]) / 2.0 for j in range(n)]
            for i in range(n)
        ]

    def to_tsv(self) -> str:
        lines = ["\t".join([""] + self.labels)]
        for label, row in zip(self.labels, self.values):
            lines.append("\t".join([label] + [f"{v:.6f}" for v in row]))
        return "\n".join(lines) + "\n"


def distance_matrix(items: "list[tuple[str, bytes]]", comp) -> DistanceMatrix:
    """Full directional NCD matrix over (label, content) pairs.

    Every cell is computed from its own concatenation order, so the
    symmetry gap is a measured property, not an artifact of mirroring.
    Cells are independent; evaluation order cannot affect the result.
    """
    if len(items) < 2:
        raise ValueError("need at least two inputs")
    for label, data in items:
        if not data:
            raise ValueError(f"empty input: {label}")
    labels = [label for label, _ in items]
    blobs = [data for _, data in items]
    lengths = [comp.compress_len(b) for b in blobs]
    n = len(items)
    values = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cab = comp.compress_len(blobs[i] + blobs[j])
            values[i][j] = (cab - min(lengths[i], lengths[j])) / max(lengths[i], lengths[j])
    return DistanceMatrix(labels, values)


def synthetic_corpus(seed: int = 0) -> list[tuple[str, bytes]]:
    """Two-family fixture corpus: 4 repetitive files and 4 random files.

    The repetitive family repeats one seeded motif with per-file
    mutations; the random family shares a format-style header followed by
    independent random payloads.  Every file is at least 1 KiB.
    """
    rng = random.Random(seed)
    motif = bytes(rng.randrange(256) for _ in range(64))
    items = []
    for i in range(4):
        base = bytearray(motif)
        for _ in range(2 * i):
            base[rng.randrange(len(base))] = rng.randrange(256)
        items.append((f"rep{i}.bin", bytes(base) * (18 + 2 * i)))
    header = bytes(rng.randrange(256) for _ in range(128))
    for i in range(4):
        payload = bytes(rng.randrange(256) for _ in range(1024 + 128 * i))
        items.append((f"rnd{i}.bin", header + payload))
    return items


def matrix_from_paths(paths: "list[str | Path]", comp) -> DistanceMatrix:
    """Read files (sorted by name) and build the matrix; names become labels."""
    resolved = sorted((Path(p) for p in paths), key=lambda p: p.name)
    if len(resolved) < 2:
        raise ValueError("need at least two files")
    items = []
    for path in resolved:
        try:
            items.append((path.name, path.read_bytes()))
        except OSError as err:
            raise ValueError(f"unreadable file {path}: {err}") from err
    return distance_matrix(items, comp)


# ---------------------------------------------------------------------------
# Average-linkage clustering and Newick output
# ---------------------------------------------------------------------------


@dataclass
class Dendrogram:
    label: str | None
    height: float
    children: "tuple[Dendrogram, Dendrogram] | None"

    @property
    def leaves(self) -> list[str]:
        if self.children is None:
            return [self.label] if self.label is not None else []
        left, right = self.children
        return left.leaves + right.leaves


def cluster(matrix: DistanceMatrix) -> Dendrogram:
    """Average-linkage hierarchical clustering of the symmetrized matrix."""
    sym = matrix.symmetrized()
    nodes = [Dendrogram(label, 0.0, None) for label in matrix.labels]
    active: dict[int, list[int]] = {i: [i] for i in range(len(nodes))}
    trees: dict[int, Dendrogram] = {i: nodes[i] for i in range(len(nodes))}
    next_id = len(nodes)

    def linkage(ida: int, idb: int) -> float:
        members_a, members_b = active[ida], active[idb]
        total = sum(sym[i][j] for i in members_a for j in members_b)
        return total / (len(members_a) * len(members_b))

    while len(active) > 1:
        ids = sorted(active)
        best = None
        for ai in range(len(ids)):
            for bi in range(ai + 1, len(ids)):
                d = linkage(ids[ai], ids[bi])
                key = (d, ids[ai], ids[bi])
                if best is None or key < best:
                    best = key
        assert best is not None
        height, ida, idb = best
        merged = Dendrogram(None, height, (trees[ida], trees[idb]))
        active[next_id] = active.pop(ida) + active.pop(idb)
        trees[next_id] = merged
        del trees[ida], trees[idb]
        next_id += 1
    return trees[max(trees)]


def newick(tree: Dendrogram) -> str:
    def render(node: Dendrogram, parent_height: float) -> str:
        branch = max(parent_height - node.height, 0.0)
        if node.children is None:
            return f"{node.label}:{branch:.6f}"
        left, right = node.children
        inner = f"({render(left, node.height)},{render(right, node.height)})"
        return f"{inner}:{branch:.6f}"

    if tree.children is None:
        return f"{tree.label};"
    left, right = tree.children
    return f"({render(left, tree.height)},{render(right, tree.height)});"


def top_split(tree: Dendrogram) -> tuple[frozenset, frozenset]:
    """Leaf sets of the two subtrees under the root."""
    if tree.children is None:
        raise ValueError("tree has a single leaf")
    left, right = tree.children
    return frozenset(left.leaves), frozenset(right.leaves)
