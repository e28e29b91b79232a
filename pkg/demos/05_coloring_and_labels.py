"""B-color a random set system, then label table strings with it."""

from infodist import build_table, color_bound, randomized_b_coloring, strings_up_to, sw_decode, sw_label
from infodist.coloring import max_cell, random_system

# The bound says how many colors always suffice so that no set holds
# more than B elements of one color.  Sampling a uniform coloring and
# verifying usually succeeds on the first try.
m = n = 64
b = 8
bound = color_bound(m, n, b)
print(f"M={m} sets of size <= {n}, B={b}: {bound} colors suffice")

system = random_system(m, n, seed=42)
coloring = randomized_b_coloring(system, b, seed=42)
print(
    f"sampled a valid coloring in {coloring.attempts} attempt(s); "
    f"worst cell {max_cell(system, coloring.color_of)} (allowed {b})"
)

# Over the complexity table the same machinery labels every reachable
# string with a short color such that (condition, color) pins it down to
# a list of at most k1+k2 candidates.
table = build_table(strings_up_to(3), max_len=14)
labeling = sw_label(table, k1=6, k2=6, seed=0)
print(f"\nlabeling for thresholds (6, 6): B = {labeling.b}, colors used = {labeling.colors_used}")
for x, members in labeling.sets_by_x.items():
    print(f"  condition {x or '(empty)'}: candidates {[m or '(empty)' for m in members]}")

x = next(iter(labeling.sets_by_x))
y = labeling.sets_by_x[x][-1]
color = labeling.f[y]
idx = labeling.candidates(x, color).index(y)
recovered = sw_decode(table, 6, 6, labeling, x, color, idx)
print(f"round trip: y={y!r} -> (color {color}, index {idx}) -> {recovered!r}")
