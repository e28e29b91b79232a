"""Randomized B-coloring of set systems and the derived labeling codec.

A B-coloring of a system of M sets, each of size at most N, partitions
the ground elements into color classes so that no set contains more than
B elements of any one color.  ``color_bound`` evaluates the existence
bound ceil((N/B) * e * (M*N)^(1/B)); one color suffices once B >= N.

The coloring itself is found by rejection sampling with a seeded
generator: draw a uniform coloring, verify every (set, color) cell,
retry.  Each draw succeeds with positive probability under the bound, so
blowing through a generous attempt limit indicates a bug, and is raised
as an error with diagnostics.

``sw_label`` applies this to the table: sets S_x = {y : K(x) <= k1 and
K(y|x) <= k2} are B-colored with B = k1 + k2, giving each labeled y a
short fixed-width label f(y) such that any (x, f(y)) pinpoints y inside
a candidate list of at most B elements; ``sw_decode`` resolves the list
index back to y.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .codes import encode_lg, index_to_string
from .complexity import ComplexityTable


class ColoringError(Exception):
    pass


@dataclass(frozen=True)
class SetSystem:
    sets: tuple[frozenset, ...]
    elements: tuple
    m: int
    n: int

    @staticmethod
    def from_sets(sets: "list[frozenset] | list[set]") -> "SetSystem":
        frozen = tuple(frozenset(s) for s in sets)
        ground: set = set()
        for s in frozen:
            ground |= s
        return SetSystem(
            sets=frozen,
            elements=tuple(sorted(ground)),
            m=len(frozen),
            n=max((len(s) for s in frozen), default=0),
        )


def color_bound(m: int, n: int, b: int) -> int:
    """Number of colors guaranteed to admit a B-coloring.

    Returns 1 when b >= n (a single class can never exceed the set size
    bound), otherwise ceil((n/b) * e * (m*n)^(1/b)).
    """
    if b <= 0:
        raise ValueError("B must be positive")
    if n <= 0:
        return 1
    if b >= n:
        return 1
    return math.ceil((n / b) * math.e * (m * n) ** (1.0 / b))


def verify_b_coloring(
    system: SetSystem, color_of: dict, b: int
) -> list[tuple[int, int, int]]:
    """Violating (set index, color, cell size) triples; empty means valid."""
    violations = []
    for i, s in enumerate(system.sets):
        cells: dict[int, int] = {}
        for element in s:
            c = color_of[element]
            cells[c] = cells.get(c, 0) + 1
        for c, size in cells.items():
            if size > b:
                violations.append((i, c, size))
    return violations


def max_cell(system: SetSystem, color_of: dict) -> int:
    worst = 0
    for s in system.sets:
        cells: dict[int, int] = {}
        for element in s:
            c = color_of[element]
            cells[c] = cells.get(c, 0) + 1
        if cells:
            worst = max(worst, max(cells.values()))
    return worst


@dataclass(frozen=True)
class BColoring:
    color_of: dict
    num_colors: int
    b: int
    attempts: int

    @property
    def colors_used(self) -> int:
        return len(set(self.color_of.values())) if self.color_of else 0


def randomized_b_coloring(
    system: SetSystem,
    b: int,
    seed: int = 0,
    max_attempts: int = 50,
    num_colors: int | None = None,
) -> BColoring:
    """Rejection-sample a verified B-coloring with color_bound colors."""
    colors = num_colors if num_colors is not None else color_bound(system.m, system.n, b)
    rng = random.Random(seed)
    last: list[tuple[int, int, int]] = []
    for attempt in range(1, max_attempts + 1):
        color_of = {element: rng.randrange(colors) for element in system.elements}
        last = verify_b_coloring(system, color_of, b)
        if not last:
            return BColoring(color_of, colors, b, attempt)
    raise ColoringError(
        f"no B-coloring in {max_attempts} attempts with {colors} colors "
        f"(B={b}, M={system.m}, N={system.n}); worst cells: {last[:5]}"
    )


def random_system(m: int, n: int, seed: int = 0, ground_size: int | None = None) -> SetSystem:
    """Seeded random system: m sets, each a uniform n-subset of the ground set."""
    rng = random.Random(seed)
    ground = list(range(ground_size if ground_size is not None else 2 * n))
    if n > len(ground):
        raise ValueError("set size exceeds ground set")
    sets = [frozenset(rng.sample(ground, n)) for _ in range(m)]
    return SetSystem.from_sets(sets)


# ---------------------------------------------------------------------------
# Labeling construction over the complexity table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SwLabeling:
    k1: int
    k2: int
    b: int
    f: dict
    rendered: dict
    label_width: int
    colors_used: int
    bound: int
    attempts: int
    sets_by_x: dict

    def candidates(self, x: str, color: int) -> list[str]:
        """The candidate list {y in S_x : f(y) = color}, in canonical order."""
        return [y for y in self.sets_by_x.get(x, ()) if self.f.get(y) == color]


def sw_label(
    table: ComplexityTable,
    k1: int,
    k2: int,
    seed: int = 0,
    max_attempts: int = 50,
) -> SwLabeling:
    """Label every reachable y with a bounded-ambiguity color.

    S_x is built for each condition x with K(x) <= k1; members are the
    targets y with K(y|x) <= k2, ordered by discovery.  The system is
    B-colored with B = k1 + k2.  Labels are rendered at the fixed width
    needed for the color bound, so every label has the same length.
    """
    sets_by_x: dict = {}
    for x in table.universe:
        kx = table.k(x)
        if kx is None or kx > k1:
            continue
        members = [
            (entry.discovery_step, y)
            for y, entry in table.outputs(x).items()
            if entry.k <= k2
        ]
        members.sort()
        if members:
            sets_by_x[x] = tuple(y for _, y in members)

    system = SetSystem.from_sets([frozenset(ys) for ys in sets_by_x.values()])
    b = k1 + k2
    bound = color_bound(system.m, system.n, b)
    coloring = randomized_b_coloring(system, b, seed=seed, max_attempts=max_attempts, num_colors=bound)
    width = max(1, (bound - 1).bit_length())
    rendered = {y: format(c, f"0{width}b") for y, c in coloring.color_of.items()}
    return SwLabeling(
        k1=k1,
        k2=k2,
        b=b,
        f=dict(coloring.color_of),
        rendered=rendered,
        label_width=width,
        colors_used=coloring.colors_used,
        bound=bound,
        attempts=coloring.attempts,
        sets_by_x=sets_by_x,
    )


def sw_decode(
    table: ComplexityTable,
    k1: int,
    k2: int,
    labeling: SwLabeling,
    x: str,
    color: int,
    idx: int,
) -> str:
    """Return the idx-th candidate y with f(y) = color inside S_x."""
    candidates = labeling.candidates(x, color)
    if not candidates:
        raise LookupError(f"no candidates for x={x!r}, color={color}")
    if not 0 <= idx < len(candidates):
        raise IndexError(f"index {idx} out of range for {len(candidates)} candidates")
    return candidates[idx]


def index_code_length(idx: int) -> int:
    """Self-delimiting cost of transmitting a candidate-list index."""
    return len(encode_lg(2, index_to_string(idx)))
