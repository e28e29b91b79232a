"""Count neighbors within given distances and watch the growth rates."""

from infodist import ball_b1, ball_b3, build_table, dispersion_check, strings_up_to
from infodist.density import slope_experiment

table = build_table(strings_up_to(5), max_len=14)

# Balls nest, and sum-distance balls sit inside max-distance balls.
x = "01101"
print(f"neighborhood counts around {x}:")
print("   d   #B1   #B3")
for d in range(6, 15):
    b1 = ball_b1(table, x, d)
    b3 = ball_b3(table, x, d)
    print(f"  {d:2d}  {b1.count:4d}  {b3.count:4d}")

report = ball_b1(table, x, 12)
print(f"\nlog2 count at d=12: {report.log2_count:.2f}, reference {report.reference}, "
      f"deviation {report.deviation:+.2f}, truncated: {report.truncated}")

# Unrestricted sum-distance balls grow at about half a bit of count per
# bit of radius here: emitting costs two program bits per output bit.
table6 = build_table(strings_up_to(6), max_len=15)
counts = {d: ball_b3(table6, "000001", d).count for d in range(18, 31, 2)}
print("\nunrestricted sum-distance ball around 000001:")
previous = None
for d, count in counts.items():
    note = ""
    if previous and previous[1] and count:
        import math

        slope = (math.log2(count) - math.log2(previous[1])) / (d - previous[0])
        note = f"   slope {slope:+.2f}"
    print(f"  d={d:2d}  count {count:4d}{note}")
    previous = (d, count)

# Restricted to a single length the counts jump instead (the machine's
# conditional complexity is as expensive as the unconditional one).
slopes = slope_experiment(table6, "000001", 6, list(range(26, 33)))
print(f"\nlength-restricted slopes: {[(d, round(s, 2)) for d, s in slopes]}")

# Almost all pairs within a low-complexity set are far apart.
group = [s for s in table.universe if len(s) == 4]
fraction = dispersion_check(table, group, d=4, slack=3)
print(f"\nfraction of length-4 pairs at distance >= 1: {fraction:.2f}")
