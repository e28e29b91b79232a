"""TPM-1: a tiny self-delimiting machine with exhaustively enumerable semantics.

A program is a bit string read left to right as a sequence of codewords:

    00            EMIT0   append '0' to the output
    01            EMIT1   append '1' to the output
    100           COPY    append the next unread condition bit, advance cursor
    101           SKIP    advance the condition cursor without emitting
    110 1^k 0     REP(k)  k >= 1; output becomes output repeated (k+1) times
    111           HALT    stop

The opcode table is normative and bit-exact.  A run produces a Halted
outcome only if HALT executes with every program bit consumed; that makes
the set of halting programs prefix-free by construction.  All other ways
a run can end are "undefined" values rather than exceptions:

    mid-codeword     the program ended inside a codeword, or a REP carried
                     no repeat count (``110`` followed directly by ``0``)
    trailing-bits    HALT executed with unread program bits remaining
    input-exhausted  COPY or SKIP past the end of the condition
    budget-exceeded  step or output-size budget ran out

Budgets make every reported quantity budget-relative: a larger budget can
only turn undefined outcomes into halts, never change a halt.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

HALTED = "halted"
MID_CODEWORD = "mid-codeword"
TRAILING_BITS = "trailing-bits"
INPUT_EXHAUSTED = "input-exhausted"
BUDGET_EXCEEDED = "budget-exceeded"

UNDEFINED_REASONS = (MID_CODEWORD, TRAILING_BITS, INPUT_EXHAUSTED, BUDGET_EXCEEDED)

# A Program is just a bit string; Outcome carries everything a run reports.
Program = str


@dataclass(frozen=True)
class ExecBudget:
    """Execution limits: instruction count and output size, both in bits."""

    max_steps: int = 4096
    max_output_bits: int = 4096

    def __post_init__(self) -> None:
        if self.max_steps <= 0 or self.max_output_bits <= 0:
            raise ValueError("budget limits must be strictly positive")


DEFAULT_BUDGET = ExecBudget()


@dataclass(frozen=True)
class Outcome:
    """Result of running a program: Halted(output) or an undefined reason."""

    status: str
    output: str | None
    steps_used: int
    input_bits_read: int

    @property
    def halted(self) -> bool:
        return self.status == HALTED


def run(program: Program, condition: str, budget: ExecBudget = DEFAULT_BUDGET) -> Outcome:
    """Execute *program* with *condition* on the read-once input tape.

    Deterministic and pure: the outcome depends only on the arguments.
    """
    out: list[str] = []
    pos = 0
    cursor = 0
    steps = 0
    n = len(program)

    def undefined(reason: str) -> Outcome:
        return Outcome(reason, None, steps, cursor)

    while True:
        if pos >= n:
            # Ran out of program without executing HALT.
            return undefined(MID_CODEWORD)
        if steps + 1 > budget.max_steps:
            return undefined(BUDGET_EXCEEDED)
        steps += 1

        if program[pos] == "0":
            if pos + 1 >= n:
                return undefined(MID_CODEWORD)
            out.append(program[pos + 1])  # 00 -> '0', 01 -> '1'
            pos += 2
        elif pos + 1 < n and program[pos + 1] == "0":
            # 10x: COPY (100) or SKIP (101)
            if pos + 2 >= n:
                return undefined(MID_CODEWORD)
            op = program[pos + 2]
            if cursor >= len(condition):
                return undefined(INPUT_EXHAUSTED)
            if op == "0":
                out.append(condition[cursor])
            cursor += 1
            pos += 3
        elif pos + 2 < n and program[pos + 2] == "0":
            # 110: REP; parse 1^k 0 with k >= 1.
            scan = pos + 3
            k = 0
            while scan < n and program[scan] == "1":
                k += 1
                scan += 1
            if scan >= n or k == 0:
                return undefined(MID_CODEWORD)
            pos = scan + 1
            new_len = len(out) * (k + 1)
            if new_len > budget.max_output_bits:
                return undefined(BUDGET_EXCEEDED)
            out *= k + 1
        elif pos + 2 < n:
            # 111: HALT
            pos += 3
            if pos == n:
                return Outcome(HALTED, "".join(out), steps, cursor)
            return undefined(TRAILING_BITS)
        else:
            return undefined(MID_CODEWORD)

        if len(out) > budget.max_output_bits:
            return undefined(BUDGET_EXCEEDED)


def _bodies(limit: int) -> Iterator[str]:
    """Yield every sequence of non-HALT codewords of total length <= limit."""
    yield ""
    if limit < 2:
        return
    stack = [""]
    while stack:
        prefix = stack.pop()
        room = limit - len(prefix)
        extensions = []
        if room >= 2:
            extensions.append(prefix + "00")
            extensions.append(prefix + "01")
        if room >= 3:
            extensions.append(prefix + "100")
            extensions.append(prefix + "101")
        for k in itertools.count(1):
            if k + 4 > room:
                break
            extensions.append(prefix + "110" + "1" * k + "0")
        for ext in extensions:
            yield ext
            stack.append(ext)


def enumerate_programs(max_len: int) -> list[Program]:
    """All syntactically valid HALT-terminated programs of length <= max_len.

    Canonical order: ascending length, then lexicographic.  Only codeword
    sequences are generated; raw bit strings with invalid opcodes never
    appear.
    """
    if max_len < 3:
        return []
    programs = [body + "111" for body in _bodies(max_len - 3)]
    programs.sort(key=lambda p: (len(p), p))
    return programs


def enumerate_halting(
    condition: str, max_len: int, budget: ExecBudget = DEFAULT_BUDGET
) -> Iterator[tuple[Program, str]]:
    """Yield every (program, output) with a Halted outcome, in canonical order."""
    for program in enumerate_programs(max_len):
        outcome = run(program, condition, budget)
        if outcome.halted:
            assert outcome.output is not None
            yield program, outcome.output


def kraft_sum(programs: "list[Program] | Iterator[Program]") -> Fraction:
    """Exact rational sum of 2^-len(p) over the given programs."""
    total = Fraction(0)
    for p in programs:
        total += Fraction(1, 1 << len(p))
    return total
