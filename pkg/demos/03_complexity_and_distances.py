"""Build the exhaustive complexity table and read distances off it."""

from infodist import (
    build_table,
    check_admissible,
    e0,
    e1,
    e3_sum,
    mutual_info,
    strings_up_to,
    w_cost,
    w_prime,
)

universe = strings_up_to(3)
table = build_table(universe, max_len=14)
print(f"table over {len(universe)} strings, programs up to 14 bits")

# Shortest programs for a few targets (condition empty).
for target in ["", "0", "01", "000", "0000"]:
    entry = table.entry(target)
    if entry:
        print(f"  K({target or 'empty':>5}) = {entry.k:2d}  witness {entry.witness}")

# The max distance is symmetric by construction; the two-way variant e0
# exists on this machine essentially only on the diagonal, because no
# opcode can branch on the condition.
x, y = "01", "110"
print(f"\ne1({x},{y}) = {e1(x, y, table)}")
print(f"e3_sum({x},{y}) = {e3_sum(x, y, table)}  (max <= sum <= 2*max)")
print(f"e0({x},{y}) within 14 bits: {e0(x, y, 14)}")
print(f"e0({x},{x}) = {e0(x, x, 14)}")

# Signed costs: the complexity drop is anti-symmetric and transitive.
print(f"\nw({x} -> {y}) = {w_cost(x, y, table)}, w({y} -> {x}) = {w_cost(y, x, table)}")
print(f"w'({x} -> {y}) = {w_prime(x, y, table)}")
print(f"mutual info I(0:0) = {mutual_info('0', '0', table)}")

# Metric-style axioms on the finite universe, exactly.
report = check_admissible(table)
print(
    f"\nsymmetry violations: {report.symmetry_violations}, "
    f"triangle constant: {report.triangle_c}, "
    f"normalization max: {float(report.norm_max):.4f} (<= 1: {report.norm_ok})"
)
