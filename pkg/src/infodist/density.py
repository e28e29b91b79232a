"""Ball counting and dispersion over the finite table universe.

Counts are exact over the counting universe (all strings up to the
table's length bound) and are flagged as truncated whenever a ball
touches the boundary length, since longer strings might then belong too.
The reference values have machine-dependent additive constants, so the
checks exposed here are bounded-spread and monotonicity properties, not
equalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .codes import index_to_string
from .complexity import ComplexityTable, e1, e3_sum


@dataclass(frozen=True)
class BallReport:
    center: str
    radius: int
    length_restriction: int | None
    metric: str
    count: int
    log2_count: float | None
    reference: float | None
    deviation: float | None
    truncated: bool
    universe_max_len: int


def _universe_max_len(table: ComplexityTable) -> int:
    return max(len(s) for s in table.universe)


def _report(
    table: ComplexityTable,
    metric: str,
    center: str,
    radius: int,
    n: int | None,
    members: list[str],
    reference: float | None,
) -> BallReport:
    bound = _universe_max_len(table)
    count = len(members)
    log2_count = math.log2(count) if count else None
    deviation = None
    if log2_count is not None and reference is not None:
        deviation = log2_count - reference
    truncated = any(len(y) == bound for y in members) and (n is None or n >= bound)
    return BallReport(
        center=center,
        radius=radius,
        length_restriction=n,
        metric=metric,
        count=count,
        log2_count=log2_count,
        reference=reference,
        deviation=deviation,
        truncated=truncated,
        universe_max_len=bound,
    )


def ball_b1(table: ComplexityTable, x: str, d: int, n: int | None = None) -> BallReport:
    """Count y != x with e1(x, y) <= d; reference is d - K(d-string | x)."""
    members = []
    for y in table.universe:
        if y == x or (n is not None and len(y) != n):
            continue
        v = e1(x, y, table)
        if v is not None and v <= d:
            members.append(y)
    kd = table.k(index_to_string(d), x)
    reference = None if kd is None else float(d - kd)
    return _report(table, "e1", x, d, n, members, reference)


def ball_b3(table: ComplexityTable, x: str, d: int, n: int | None = None) -> BallReport:
    """Count y != x with e3_sum(x, y) <= d.

    Unrestricted reference: d - K(d-string | x).  Length-restricted
    reference: (n + d - K(x)) / 2.
    """
    members = []
    for y in table.universe:
        if y == x or (n is not None and len(y) != n):
            continue
        v = e3_sum(x, y, table)
        if v is not None and v <= d:
            members.append(y)
    if n is None:
        kd = table.k(index_to_string(d), x)
        reference = None if kd is None else float(d - kd)
    else:
        kx = table.k(x)
        reference = None if kx is None else (n + d - kx) / 2.0
    return _report(table, "e3", x, d, n, members, reference)


def dispersion_check(table: ComplexityTable, group: "list[str]", d: int, slack: int = 0) -> float:
    """Fraction of unordered pairs in *group* with e1 >= d - slack."""
    members = list(dict.fromkeys(group))
    if len(members) < 2:
        raise ValueError("need at least two distinct elements")
    far = 0
    total = 0
    for x, y in combinations(members, 2):
        v = e1(x, y, table)
        if v is None:
            continue
        total += 1
        if v >= d - slack:
            far += 1
    if total == 0:
        raise ValueError("no pair had both table entries present")
    return far / total


def deviation_spread(table: ComplexityTable, x: str, radii: "list[int]") -> float | None:
    """Largest |log2 count - reference| for b1 balls over the given radii.

    Radii with empty balls or missing references are skipped; None if all
    were skipped.
    """
    worst = None
    for d in radii:
        report = ball_b1(table, x, d)
        if report.deviation is None:
            continue
        magnitude = abs(report.deviation)
        if worst is None or magnitude > worst:
            worst = magnitude
    return worst


def slope_experiment(
    table: ComplexityTable, x: str, n: int, d_values: "list[int]"
) -> list[tuple[int, float]]:
    """Measured growth slopes of length-restricted b3 counts.

    For consecutive radii d, d+2 with both counts positive, yields
    (d, (log2 count(d+2) - log2 count(d)) / 2).
    """
    counts = {d: ball_b3(table, x, d, n).count for d in d_values}
    slopes = []
    for d in d_values:
        if d + 2 not in counts:
            continue
        a, b = counts[d], counts[d + 2]
        if a > 0 and b > 0:
            slopes.append((d, (math.log2(b) - math.log2(a)) / 2.0))
    return slopes
