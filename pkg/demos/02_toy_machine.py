"""Run the toy prefix machine and enumerate its halting programs."""

from fractions import Fraction

from infodist import enumerate_halting, kraft_sum, run

# Programs are bit strings read as codewords: 00/01 emit, 100 copies an
# input bit, 101 skips one, 110 1^k 0 repeats the output k+1 times, 111
# halts.  A program halts only if HALT lands exactly on its last bit.
examples = [
    ("111", ""),
    ("0011010111", ""),       # emit 0, double once, halt
    ("100100111", "10"),      # copy two input bits
    ("01110111110111", ""),   # emit 1, rep(3), rep(4): 1 -> 1111 -> huge? no: 4*5 = 20 ones
]
for program, condition in examples:
    outcome = run(program, condition)
    print(f"run({program}, {condition or '(empty)'}) -> {outcome.status}, output={outcome.output!r}")

# Exhaustive enumeration is the point of the toy machine: every halting
# program up to a length bound, in a canonical order.
print("\nall halting programs up to 8 bits (no input):")
for program, output in enumerate_halting("", 8):
    print(f"  {program:>8}  ->  {output or '(empty)'}")

# The halting set is prefix-free, so its weight satisfies the classic
# inequality exactly, in rational arithmetic.
programs = [p for p, _ in enumerate_halting("", 16)]
total = kraft_sum(programs)
print(f"\n{len(programs)} halting programs up to 16 bits")
print(f"sum of 2^-len = {total} = {float(total):.6f}  (<= 1: {total <= Fraction(1)})")
