"""Exact budget-bounded conditional complexities over TPM-1.

``build_table`` enumerates, for each condition in a finite universe, every
halting program up to a length bound and records the first (hence
shortest) program producing each output.  ``K(y | x)`` is then the exact
minimum program length within the bound, or missing.  ``K(y)`` is
``K(y | '')``.

Missing entries propagate as ``None`` rather than pretending to be
infinite, so downstream checks cannot silently pass on absent data.
All Kraft/normalization sums use exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

from .codes import index_to_string, pair
from .machine import DEFAULT_BUDGET, ExecBudget, Program, enumerate_halting, enumerate_programs, run


@dataclass(frozen=True)
class Entry:
    """Shortest discovered program for one (condition, target) cell."""

    k: int
    witness: Program
    discovery_step: int


@dataclass(frozen=True)
class ComplexityTable:
    universe: tuple[str, ...]
    max_len: int
    budget: ExecBudget
    conditions: dict[str, dict[str, Entry]] = field(repr=False)

    def entry(self, target: str, condition: str = "") -> Entry | None:
        cond = self.conditions.get(condition)
        if cond is None:
            raise KeyError(f"condition {condition!r} not in table")
        return cond.get(target)

    def k(self, target: str, condition: str = "") -> int | None:
        e = self.entry(target, condition)
        return None if e is None else e.k

    def outputs(self, condition: str = "") -> dict[str, Entry]:
        cond = self.conditions.get(condition)
        if cond is None:
            raise KeyError(f"condition {condition!r} not in table")
        return cond


def _condition_entries(args: tuple[str, int, ExecBudget]) -> tuple[str, dict[str, Entry]]:
    condition, max_len, budget = args
    found: dict[str, Entry] = {}
    step = 0
    for program, output in enumerate_halting(condition, max_len, budget):
        if output not in found:
            found[output] = Entry(len(program), program, step)
        step += 1
    return condition, found


def build_table(
    universe: "list[str] | tuple[str, ...]",
    max_len: int,
    budget: ExecBudget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> ComplexityTable:
    """Exhaustive table over every condition in *universe*.

    All halting outputs are recorded, not only those inside the universe,
    so lookups like K(pair(x, y)) work whenever the paired string is
    reachable within the bound.  The result is independent of *jobs*.
    """
    conds = tuple(dict.fromkeys(universe))
    work = [(x, max_len, budget) for x in conds]
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            results = pool.map(_condition_entries, work)
    else:
        results = [_condition_entries(w) for w in work]
    return ComplexityTable(conds, max_len, budget, dict(results))


def strings_up_to(max_length: int) -> list[str]:
    """All bit strings of length <= max_length, shortest first, lexicographic."""
    out = [""]
    for length in range(1, max_length + 1):
        out.extend(format(v, f"0{length}b") for v in range(1 << length))
    return out


def k_direct(
    target: str, condition: str, max_len: int, budget: ExecBudget = DEFAULT_BUDGET
) -> int | None:
    """One-off K(target | condition) without building a table."""
    for program, output in enumerate_halting(condition, max_len, budget):
        if output == target:
            return len(program)
    return None


# ---------------------------------------------------------------------------
# Distances and costs
# ---------------------------------------------------------------------------


def e1(x: str, y: str, table: ComplexityTable) -> int | None:
    """Max distance: max(K(x|y), K(y|x)); None if either leg is missing."""
    kxy = table.k(x, y)
    kyx = table.k(y, x)
    if kxy is None or kyx is None:
        return None
    return max(kxy, kyx)


def e0_search(
    x: str, y: str, max_len: int, budget: ExecBudget = DEFAULT_BUDGET
) -> tuple[int, Program] | None:
    """Shortest single program p with run(p,x)=y and run(p,y)=x, plus witness."""
    for program in enumerate_programs(max_len):
        forward = run(program, x, budget)
        if not forward.halted or forward.output != y:
            continue
        backward = run(program, y, budget)
        if backward.halted and backward.output == x:
            return len(program), program
    return None


def e0(x: str, y: str, max_len: int, budget: ExecBudget = DEFAULT_BUDGET) -> int | None:
    found = e0_search(x, y, max_len, budget)
    return None if found is None else found[0]


def e0_table(
    universe: "list[str]", max_len: int, budget: ExecBudget = DEFAULT_BUDGET
) -> dict[tuple[str, str], int]:
    """All-pairs E0 over a universe, sharing one program enumeration.

    Pairs with no two-way program within the bound are absent from the
    result.
    """
    programs = enumerate_programs(max_len)
    outputs: dict[str, list[str | None]] = {}
    for x in universe:
        outs = []
        for program in programs:
            outcome = run(program, x, budget)
            outs.append(outcome.output if outcome.halted else None)
        outputs[x] = outs
    found: dict[tuple[str, str], int] = {}
    for i, x in enumerate(universe):
        for y in universe[i:]:
            for program, ox, oy in zip(programs, outputs[x], outputs[y]):
                if ox == y and oy == x:
                    found[(x, y)] = len(program)
                    found[(y, x)] = len(program)
                    break
    return found


def e3_sum(x: str, y: str, table: ComplexityTable) -> int | None:
    """Sum distance characterization: K(x|y) + K(y|x)."""
    kxy = table.k(x, y)
    kyx = table.k(y, x)
    if kxy is None or kyx is None:
        return None
    return kxy + kyx


def w_cost(x: str, y: str, table: ComplexityTable) -> int | None:
    """Cost of transforming x into y as the complexity drop K(x) - K(y)."""
    kx = table.k(x)
    ky = table.k(y)
    if kx is None or ky is None:
        return None
    return kx - ky


def w_prime(x: str, y: str, table: ComplexityTable) -> int | None:
    """Conditional-difference cost K(x|y) - K(y|x)."""
    kxy = table.k(x, y)
    kyx = table.k(y, x)
    if kxy is None or kyx is None:
        return None
    return kxy - kyx


def mutual_info(x: str, y: str, table: ComplexityTable) -> int | None:
    """K(x) + K(y) - K(<x,y>) with the pair encoded via the level-2 code."""
    kx = table.k(x)
    ky = table.k(y)
    kxy = table.k(pair(x, y))
    if kx is None or ky is None or kxy is None:
        return None
    return kx + ky - kxy


def entropy_sum(
    target: str, condition: str = "", max_len: int = 16, budget: ExecBudget = DEFAULT_BUDGET
) -> float:
    """-log2 of the total weight 2^-len(p) of all programs computing target.

    Exhausts programs up to max_len; returns inf when no program is found.
    With a single witness of length k and no other programs the value is
    exactly k, and it never exceeds K(target | condition) at the same
    bound.
    """
    total = Fraction(0)
    for program, output in enumerate_halting(condition, max_len, budget):
        if output == target:
            total += Fraction(1, 1 << len(program))
    if total == 0:
        return math.inf
    return -math.log2(total)


def addition_report(
    x: str, y: str, table: ComplexityTable
) -> dict[str, int | None]:
    """Both sides of the pair-complexity addition identity, plus deviation.

    lhs = K(<x,y>); rhs = K(x) + K(y | <x, K(x)-string>).  The additive
    constant is machine-dependent, so the deviation is reported rather
    than asserted.
    """
    kx = table.k(x)
    lhs = table.k(pair(x, y))
    rhs = None
    if kx is not None:
        cond = pair(x, index_to_string(kx))
        kcond = k_direct(y, cond, table.max_len, table.budget)
        if kcond is not None:
            rhs = kx + kcond
    deviation = None if lhs is None or rhs is None else lhs - rhs
    return {"lhs": lhs, "rhs": rhs, "deviation": deviation}


# ---------------------------------------------------------------------------
# Admissibility and reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityReport:
    universe_size: int
    missing_pairs: int
    symmetry_violations: int
    triangle_c: int
    norm_sums: dict[str, Fraction]
    norm_ok: bool

    @property
    def norm_max(self) -> Fraction:
        return max(self.norm_sums.values()) if self.norm_sums else Fraction(0)


def check_admissible(table: ComplexityTable, universe: "list[str] | None" = None) -> AdmissibilityReport:
    """Verify metric-style axioms of E1 on a finite universe.

    Symmetry is exact by construction; the report measures the smallest
    additive constant c making the triangle inequality hold, and checks
    the per-center normalization sum of 2^-E1(x, y) over y != x, in exact
    rationals.
    """
    xs = list(universe) if universe is not None else list(table.universe)
    vals: dict[tuple[str, str], int] = {}
    missing = 0
    for x in xs:
        for y in xs:
            v = e1(x, y, table)
            if v is None:
                missing += 1
            else:
                vals[(x, y)] = v

    symmetry_violations = sum(
        1
        for (x, y), v in vals.items()
        if (y, x) in vals and vals[(y, x)] != v
    )

    triangle_c = 0
    for x in xs:
        for y in xs:
            if (x, y) not in vals:
                continue
            for z in xs:
                if (x, z) not in vals or (y, z) not in vals:
                    continue
                gap = vals[(x, z)] - vals[(x, y)] - vals[(y, z)]
                if gap > triangle_c:
                    triangle_c = gap

    norm_sums: dict[str, Fraction] = {}
    for x in xs:
        total = Fraction(0)
        for y in xs:
            if y != x and (x, y) in vals:
                total += Fraction(1, 1 << vals[(x, y)])
        norm_sums[x] = total

    return AdmissibilityReport(
        universe_size=len(xs),
        missing_pairs=missing,
        symmetry_violations=symmetry_violations,
        triangle_c=triangle_c,
        norm_sums=norm_sums,
        norm_ok=all(s <= 1 for s in norm_sums.values()),
    )


def kraft_by_condition(table: ComplexityTable) -> dict[str, Fraction]:
    """Per-condition sum of 2^-K(y|x) over all recorded outputs y."""
    return {
        x: sum((Fraction(1, 1 << entry.k) for entry in outs.values()), Fraction(0))
        for x, outs in table.conditions.items()
    }


@dataclass(frozen=True)
class PairLine:
    x: str
    y: str
    e1: int | None
    e0: int | None
    e3sum: int | None
    w: int | None
    wprime: int | None


@dataclass(frozen=True)
class DistanceReport:
    pairs: list[PairLine]
    triangle_c: int
    kraft_max: Fraction
    wprime_nontransitivity: int


def distance_report(
    table: ComplexityTable,
    include_e0: bool = False,
    e0_max_len: int | None = None,
) -> DistanceReport:
    """Full pairwise report over the table's universe.

    E0 requires a fresh program search per pair and is off by default.
    The W' non-transitivity figure is the largest absolute defect of
    w'(x,z) = w'(x,y) + w'(y,z) over all triples with entries present.
    """
    xs = list(table.universe)
    e0_vals: dict[tuple[str, str], int] = {}
    if include_e0:
        e0_vals = e0_table(xs, e0_max_len or table.max_len, table.budget)

    pairs = [
        PairLine(
            x,
            y,
            e1(x, y, table),
            e0_vals.get((x, y)),
            e3_sum(x, y, table),
            w_cost(x, y, table),
            w_prime(x, y, table),
        )
        for x in xs
        for y in xs
    ]

    wp: dict[tuple[str, str], int] = {}
    for line in pairs:
        if line.wprime is not None:
            wp[(line.x, line.y)] = line.wprime
    worst = 0
    for x in xs:
        for y in xs:
            if (x, y) not in wp:
                continue
            for z in xs:
                if (y, z) not in wp or (x, z) not in wp:
                    continue
                defect = abs(wp[(x, z)] - wp[(x, y)] - wp[(y, z)])
                if defect > worst:
                    worst = defect

    report = check_admissible(table, xs)
    kraft_max = max(kraft_by_condition(table).values())
    return DistanceReport(pairs, report.triangle_c, kraft_max, worst)
