"""Quadruple-style Turing machines, reversibility, and staged protocols.

Machines use per-tape actions: each rule fires in one state and, for
every tape, either rewrites the scanned symbol (``a -> b``) or moves the
head one square (or stays).  Two rules overlap in domain when no tape
lets both read and read differing symbols; they overlap in range when no
tape lets both write and write differing symbols.  Deterministic means
no domain overlaps; reversible additionally means no range overlaps, so
every configuration has at most one predecessor and runs can be retraced
exactly with the rule-wise inverse machine.

``bennett_compile`` turns any deterministic single-tape machine obeying
the home convention (input at cells 0.., head starting and halting on
cell 0, output contiguous from cell 0) into a genuinely reversible
three-tape machine: it simulates forward while journaling rule indices
on a history tape, copies the output to a third tape via a marker-guided
round trip, then consumes the journal while undoing the simulation.  The
result maps x to (x, f(x)) across the work and copy tapes with a blank
history tape, and passes the syntactic reversibility check.

The two staged protocols run at orchestration level over audited
primitives (history-logged run, copy, cancel, swap, uncompute), each of
which is injective on its domain; stage postconditions mirror the
combined-run and concatenation tables row by row and abort loudly with
the offending stage index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

BLANK = "_"
MOVE_NAMES = {-1: "L", 0: "N", 1: "R"}
NAME_MOVES = {"L": -1, "N": 0, "R": 1}


def rw(scan: str, write: str) -> tuple:
    return ("rw", scan, write)


def mv(delta: int) -> tuple:
    if delta not in (-1, 0, 1):
        raise ValueError("move must be -1, 0, or +1")
    return ("mv", delta)


@dataclass(frozen=True)
class Rule:
    source: str
    actions: tuple
    target: str

    def __str__(self) -> str:
        parts = []
        for action in self.actions:
            if action[0] == "rw":
                parts.append(f"{action[1]}->{action[2]}")
            else:
                parts.append(MOVE_NAMES[action[1]])
        return f"{self.source} {','.join(parts)} -> {self.target}"


@dataclass(frozen=True)
class TMSpec:
    name: str
    tapes: int
    initial: str
    halt: str
    rules: tuple
    blank: str = BLANK

    @property
    def states(self) -> frozenset:
        found = {self.initial, self.halt}
        for rule in self.rules:
            found.add(rule.source)
            found.add(rule.target)
        return frozenset(found)

    @property
    def alphabet(self) -> frozenset:
        symbols = {self.blank}
        for rule in self.rules:
            for action in rule.actions:
                if action[0] == "rw":
                    symbols.add(action[1])
                    symbols.add(action[2])
        return frozenset(symbols)


class MachineFormatError(Exception):
    pass


class ProtocolError(Exception):
    def __init__(self, stage: int, message: str):
        super().__init__(f"stage {stage}: {message}")
        self.stage = stage


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def parse_spec(text: str, name: str = "machine") -> TMSpec:
    """Parse the one-rule-per-line format.

    Header lines ``tapes:``, ``blank:``, ``start:``, ``halt:`` may appear
    in any order before the rules.  A rule line is
    ``state action[,action...] -> state`` where an action is ``a->b`` or
    a move letter L/N/R.  ``#`` starts a comment.
    """
    headers = {"tapes": "1", "blank": BLANK}
    rules = []
    header_keys = ("name", "tapes", "blank", "start", "halt")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() in header_keys and value.startswith(" "):
            headers[key.strip()] = value.strip()
            continue
        tokens = line.split()
        if len(tokens) < 4 or tokens[-2] != "->":
            raise MachineFormatError(f"line {lineno}: cannot parse rule {raw!r}")
        source = tokens[0]
        target = tokens[-1]
        action_text = "".join(tokens[1:-2])
        actions = []
        for part in action_text.split(","):
            part = part.strip()
            if part in NAME_MOVES:
                actions.append(mv(NAME_MOVES[part]))
            elif "->" in part:
                scan, _, write = part.partition("->")
                if not scan or not write:
                    raise MachineFormatError(f"line {lineno}: bad action {part!r}")
                actions.append(rw(scan, write))
            else:
                raise MachineFormatError(f"line {lineno}: bad action {part!r}")
        rules.append(Rule(source, tuple(actions), target))

    for required in ("start", "halt"):
        if required not in headers:
            raise MachineFormatError(f"missing {required!r} header")
    tapes = int(headers["tapes"])
    for rule in rules:
        if len(rule.actions) != tapes:
            raise MachineFormatError(
                f"rule {rule} has {len(rule.actions)} actions for {tapes} tapes"
            )
    return TMSpec(
        name=headers.get("name", name),
        tapes=tapes,
        initial=headers["start"],
        halt=headers["halt"],
        rules=tuple(rules),
        blank=headers["blank"],
    )


def serialize_spec(spec: TMSpec) -> str:
    lines = [
        f"name: {spec.name}",
        f"tapes: {spec.tapes}",
        f"blank: {spec.blank}",
        f"start: {spec.initial}",
        f"halt: {spec.halt}",
    ]
    lines.extend(str(rule) for rule in spec.rules)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Overlap checks and inversion
# ---------------------------------------------------------------------------


def _domain_overlaps(a: Rule, b: Rule) -> bool:
    if a.source != b.source:
        return False
    for act_a, act_b in zip(a.actions, b.actions):
        if act_a[0] == "rw" and act_b[0] == "rw" and act_a[1] != act_b[1]:
            return False
    return True


def _range_overlaps(a: Rule, b: Rule) -> bool:
    if a.target != b.target:
        return False
    for act_a, act_b in zip(a.actions, b.actions):
        if act_a[0] == "rw" and act_b[0] == "rw" and act_a[2] != act_b[2]:
            return False
    return True


def check_deterministic(spec: TMSpec) -> list[tuple[int, int]]:
    """Domain-overlapping rule index pairs; empty list means deterministic."""
    bad = []
    for i in range(len(spec.rules)):
        for j in range(i + 1, len(spec.rules)):
            if _domain_overlaps(spec.rules[i], spec.rules[j]):
                bad.append((i, j))
    return bad


def check_reversible(spec: TMSpec) -> list[tuple[int, int]]:
    """Range-overlapping rule index pairs; empty list means reversible."""
    bad = []
    for i in range(len(spec.rules)):
        for j in range(i + 1, len(spec.rules)):
            if _range_overlaps(spec.rules[i], spec.rules[j]):
                bad.append((i, j))
    return bad


def invert_rule(rule: Rule) -> Rule:
    actions = tuple(
        rw(a[2], a[1]) if a[0] == "rw" else mv(-a[1]) for a in rule.actions
    )
    return Rule(rule.target, actions, rule.source)


def invert_spec(spec: TMSpec) -> TMSpec:
    """Rule-wise inverse machine; initial and halt states swap roles."""
    overlaps = check_reversible(spec)
    if overlaps:
        raise ValueError(f"machine is not reversible; range overlaps at {overlaps}")
    return TMSpec(
        name=spec.name + "~",
        tapes=spec.tapes,
        initial=spec.halt,
        halt=spec.initial,
        rules=tuple(invert_rule(r) for r in spec.rules),
        blank=spec.blank,
    )


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------


@dataclass
class Configuration:
    state: str
    tapes: tuple
    heads: tuple

    def clone(self) -> "Configuration":
        return Configuration(self.state, tuple(dict(t) for t in self.tapes), self.heads)

    def scanned(self, blank: str) -> tuple:
        return tuple(
            tape.get(head, blank) for tape, head in zip(self.tapes, self.heads)
        )

    def tape_string(self, index: int = 0, blank: str = BLANK) -> str:
        """Contiguous content from cell 0 rightward, stopping at a blank."""
        tape = self.tapes[index]
        out = []
        pos = 0
        while tape.get(pos, blank) != blank:
            out.append(tape[pos])
            pos += 1
        return "".join(out)

    def nonblank_cells(self, index: int) -> int:
        return len(self.tapes[index])


@dataclass
class Trace:
    spec: TMSpec
    initial: Configuration
    steps: list = field(default_factory=list)  # (rule index, configuration after)
    status: str = "halted"  # halted | step-limit | stuck
    erasure_events: list = field(default_factory=list)  # (step, tape, pos)

    @property
    def final(self) -> Configuration:
        return self.steps[-1][1] if self.steps else self.initial

    @property
    def rule_sequence(self) -> tuple:
        return tuple(index for index, _ in self.steps)

    @property
    def erasure_count(self) -> int:
        return len(self.erasure_events)

    def configurations(self) -> list:
        return [self.initial] + [config for _, config in self.steps]

    def output(self, tape: int = 0) -> str:
        return self.final.tape_string(tape, self.spec.blank)


def config_from_input(spec: TMSpec, bits: str) -> Configuration:
    tape0 = {i: ch for i, ch in enumerate(bits)}
    tapes = tuple([tape0] + [{} for _ in range(spec.tapes - 1)])
    return Configuration(spec.initial, tapes, tuple([0] * spec.tapes))


def _rule_applies(rule: Rule, config: Configuration, blank: str) -> bool:
    for action, tape, head in zip(rule.actions, config.tapes, config.heads):
        if action[0] == "rw" and tape.get(head, blank) != action[1]:
            return False
    return True


def _apply(rule: Rule, config: Configuration, blank: str) -> tuple[Configuration, list]:
    tapes = []
    heads = []
    blanked = []
    for idx, (action, tape, head) in enumerate(
        zip(rule.actions, config.tapes, config.heads)
    ):
        if action[0] == "rw":
            new_tape = dict(tape)
            old = new_tape.get(head, blank)
            if action[2] == blank:
                if old != blank:
                    blanked.append((idx, head))
                new_tape.pop(head, None)
            else:
                new_tape[head] = action[2]
            tapes.append(new_tape)
            heads.append(head)
        else:
            tapes.append(dict(tape))
            heads.append(head + action[1])
    return Configuration(rule.target, tuple(tapes), tuple(heads)), blanked


def run_from_config(
    spec: TMSpec, config: Configuration, step_limit: int = 100_000
) -> Trace:
    by_state: dict[str, list[tuple[int, Rule]]] = {}
    for index, rule in enumerate(spec.rules):
        by_state.setdefault(rule.source, []).append((index, rule))
    irreversible = set()
    for i, j in check_reversible(spec):
        irreversible.add(i)
        irreversible.add(j)

    trace = Trace(spec, config.clone())
    current = trace.initial
    for step in range(step_limit):
        if current.state == spec.halt:
            trace.status = "halted"
            return trace
        fired = None
        for index, rule in by_state.get(current.state, ()):
            if _rule_applies(rule, current, spec.blank):
                fired = (index, rule)
                break
        if fired is None:
            trace.status = "stuck"
            return trace
        index, rule = fired
        current, blanked = _apply(rule, current, spec.blank)
        if index in irreversible:
            for tape_idx, pos in blanked:
                trace.erasure_events.append((step, tape_idx, pos))
        trace.steps.append((index, current))
    trace.status = "halted" if current.state == spec.halt else "step-limit"
    return trace


def run_tm(spec: TMSpec, bits: str, step_limit: int = 100_000) -> Trace:
    """Run on input bits (tape 0, head at cell 0); deterministic."""
    return run_from_config(spec, config_from_input(spec, bits), step_limit)


# ---------------------------------------------------------------------------
# Erasure audit
# ---------------------------------------------------------------------------


def erasure_audit(trace: Trace, output_tapes: tuple = (0,)) -> dict:
    """Bits irreversibly provided at the start and erased by the end.

    Provided: non-blank cells sitting on non-input tapes initially (extra
    information beyond the input).  Erased: destructive blankings by
    range-overlapping rules, plus, for a run cut short of the halt state,
    the garbage still on non-output tapes that would have to be discarded
    to stop there.
    """
    provided = sum(
        trace.initial.nonblank_cells(i) for i in range(1, trace.spec.tapes)
    )
    erased = trace.erasure_count
    if trace.status != "halted":
        for i in range(trace.spec.tapes):
            if i not in output_tapes:
                erased += trace.final.nonblank_cells(i)
    return {"provided_bits": provided, "erased_bits": erased}


# ---------------------------------------------------------------------------
# History-tape compilation
# ---------------------------------------------------------------------------


def bennett_compile(spec: TMSpec, name: str | None = None) -> TMSpec:
    """Compile a deterministic single-tape machine into a reversible one.

    Requires the home convention: the input sits on cells 0.., the head
    starts on cell 0, and the machine halts with its head back on cell 0
    and the output contiguous from cell 0.  No rule may leave the halt
    state.

    The compiled machine has tapes (work, history, copy) and halts with
    the work tape restored to the input, the output on the copy tape, and
    the history tape blank.
    """
    if spec.tapes != 1:
        raise ValueError("can only compile single-tape machines")
    overlaps = check_deterministic(spec)
    if overlaps:
        raise ValueError(f"machine is not deterministic; domain overlaps at {overlaps}")
    if any(rule.source == spec.halt for rule in spec.rules):
        raise ValueError("no rule may leave the halt state")

    blank = spec.blank
    marker = "^"
    start_record = ">"
    work_symbols = sorted(spec.alphabet - {blank}) or ["0", "1"]
    for s in ("0", "1"):
        if s not in work_symbols:
            work_symbols.append(s)
    work_symbols.sort()
    if marker in work_symbols or start_record in work_symbols:
        raise ValueError("work alphabet may not contain the reserved markers '^' and '>'")
    records = [f"r{i}" for i in range(len(spec.rules))]
    if set(records) & set(work_symbols):
        raise ValueError("work alphabet collides with history record symbols")

    def fwd(state: str) -> str:
        return f"s:{state}"

    def back(state: str) -> str:
        return "f1" if state == spec.halt else f"u:{state}"

    rules: list[Rule] = []

    # A fresh entry state journals a start marker, so the entry into the
    # (possibly revisited) original start state carries its own written
    # symbol, and so that the inverse machine's halt state is entered
    # exactly once.
    rules.append(Rule("start*", (mv(0), rw(blank, start_record), mv(0)), fwd(spec.initial)))

    # Forward simulation, journaling the rule index of every step.
    for i, rule in enumerate(spec.rules):
        act = rule.actions[0]
        rules.append(Rule(fwd(rule.source), (act, mv(1), mv(0)), f"m:{i}"))
        rules.append(Rule(f"m:{i}", (mv(0), rw(blank, records[i]), mv(0)), fwd(rule.target)))

    # Copy the output to the copy tape: plant a marker one cell left of
    # home, walk right mirroring symbols, then walk back in lockstep with
    # the fresh copy (whose cells double as the return trail) and erase
    # the marker on arrival.
    rules.append(Rule(fwd(spec.halt), (mv(0), mv(0), mv(-1)), "pre"))
    rules.append(Rule("pre", (mv(0), mv(0), rw(blank, marker)), "cs"))
    for s in work_symbols:
        rules.append(Rule("cs", (rw(s, s), mv(0), mv(1)), f"ca:{s}"))
        rules.append(Rule(f"ca:{s}", (mv(1), mv(0), rw(blank, s)), "cs"))
    rules.append(Rule("cs", (rw(blank, blank), mv(0), mv(0)), "lw"))
    for s in work_symbols:
        rules.append(Rule("lw", (mv(-1), mv(0), rw(s, s)), f"la:{s}"))
        rules.append(Rule(f"la:{s}", (rw(s, s), mv(0), mv(-1)), "lw"))
    rules.append(Rule("lw", (mv(0), mv(0), rw(marker, blank)), "f1"))

    # Uncompute: consume the journal backwards, applying inverse actions.
    for i, rule in enumerate(spec.rules):
        act = rule.actions[0]
        inverse = rw(act[2], act[1]) if act[0] == "rw" else mv(-act[1])
        rules.append(Rule(back(rule.target), (mv(0), rw(records[i], blank), mv(0)), f"um:{i}"))
        rules.append(Rule(f"um:{i}", (inverse, mv(-1), mv(0)), back(rule.source)))
    rules.append(Rule(back(spec.initial), (mv(0), rw(start_record, blank), mv(0)), "halt*"))

    return TMSpec(
        name=name or f"{spec.name}+history",
        tapes=3,
        initial="start*",
        halt="halt*",
        rules=tuple(rules),
        blank=blank,
    )


# ---------------------------------------------------------------------------
# Orchestrated protocol primitives
# ---------------------------------------------------------------------------


def history_run(spec: TMSpec, bits: str, step_limit: int = 100_000) -> tuple[str, tuple]:
    """Run forward, returning (output, journal of applied rule indices)."""
    trace = run_tm(spec, bits, step_limit)
    if trace.status != "halted":
        raise ProtocolError(1, f"{spec.name} did not halt on {bits!r}: {trace.status}")
    return trace.output(), trace.rule_sequence


def uncompute_run(spec: TMSpec, bits: str, history: tuple) -> str:
    """Undo a journaled run: replay inverse rules in reverse order.

    The journal makes the replay deterministic even for irreversible
    machines; any scan mismatch means the journal does not belong to this
    output and aborts.
    """
    config = Configuration(
        spec.halt, ({i: ch for i, ch in enumerate(bits)},), (0,)
    )
    for step, index in enumerate(reversed(history)):
        rule = spec.rules[index]
        if rule.target != config.state:
            raise ProtocolError(
                0, f"journal mismatch at reverse step {step}: state {config.state!r}"
            )
        inverse = invert_rule(rule)
        if not _rule_applies(inverse, config, spec.blank):
            raise ProtocolError(
                0, f"journal mismatch at reverse step {step}: scan differs"
            )
        config, _ = _apply(inverse, config, spec.blank)
    if config.state != spec.initial:
        raise ProtocolError(0, f"uncompute ended in {config.state!r}, not the start state")
    if config.heads != (0,):
        raise ProtocolError(0, f"uncompute ended with head at {config.heads[0]}, not home")
    return config.tape_string(0, spec.blank)


@dataclass
class StageRecord:
    index: int
    action: str
    snapshot: dict


@dataclass
class Fig1Result:
    x: str
    y: str
    stages: list
    provided_bits: int = 0
    erased_bits: int = 0

    @property
    def erasure_count(self) -> int:
        return self.erased_bits


def fig1_protocol(
    prog_xy: TMSpec, prog_yx: TMSpec, x: str, step_limit: int = 100_000
) -> Fig1Result:
    """Combine two one-way machines into one reversible x -> y run.

    Stages: (1) compute y saving the journal, (2) copy y aside, (3) undo
    the computation, (4) swap, (5) compute x from y saving a journal,
    (6) cancel the spare x against the work copy, (7) undo, leaving y
    alone.  Every stage's primitive is injective, so the whole run
    consumes and erases nothing; stage postconditions are asserted
    against the combined-run table and violations abort with the stage
    index.
    """
    stages: list[StageRecord] = []
    work = x
    aux: str | None = None
    hist1: tuple = ()
    hist2: tuple = ()

    def snap(index: int, action: str) -> None:
        stages.append(
            StageRecord(
                index,
                action,
                {"work": work, "aux": aux, "hist1": len(hist1), "hist2": len(hist2)},
            )
        )

    def expect(stage: int, ok: bool, message: str) -> None:
        if not ok:
            raise ProtocolError(stage, message)

    snap(0, "initial configuration")

    work, hist1 = history_run(prog_xy, work, step_limit)
    y = work
    snap(1, "compute y, saving history")

    expect(2, aux is None, "copy target region is not blank")
    aux = work
    snap(2, "copy y to blank region")

    work = uncompute_run(prog_xy, work, hist1)
    hist1 = ()
    expect(3, work == x, f"undo of the forward run gave {work!r}, not the input")
    expect(3, aux == y, "spare copy of y was disturbed")
    snap(3, "undo computation of y from x")

    work, aux = aux, work
    expect(4, work == y and aux == x, "swap failed")
    snap(4, "swap x and y")

    work, hist2 = history_run(prog_yx, work, step_limit)
    expect(5, work == x, f"backward machine gave {work!r}, not the input")
    snap(5, "compute x, saving history")

    expect(6, aux == work, f"cancel needs equal operands, got {aux!r} vs {work!r}")
    aux = None
    snap(6, "cancel extra x")

    work = uncompute_run(prog_yx, work, hist2)
    hist2 = ()
    expect(7, work == y, f"undo of the backward run gave {work!r}, not y")
    expect(7, aux is None, "residue left beside the output")
    snap(7, "undo computation of x from y")

    return Fig1Result(x=x, y=work, stages=stages)


@dataclass(frozen=True)
class ReversibleProgram:
    """Two-way program: a forward machine and its inverse-function machine.

    Applying it runs the staged combination above, which is injective end
    to end; the serialized rule text stands in for the program string on
    the program tape.
    """

    forward: TMSpec
    backward: TMSpec
    name: str = ""

    @property
    def text(self) -> str:
        return serialize_spec(self.forward) + serialize_spec(self.backward)

    def apply(self, bits: str, step_limit: int = 100_000) -> str:
        return fig1_protocol(self.forward, self.backward, bits, step_limit).y


@dataclass
class Fig2Result:
    x: str
    z: str
    stages: list
    provided_bits: int = 0
    erased_bits: int = 0

    @property
    def erasure_count(self) -> int:
        return self.erased_bits


def fig2_concat(
    p: ReversibleProgram, q: ReversibleProgram, x: str, step_limit: int = 100_000
) -> Fig2Result:
    """Run two reversible programs back to back on one program tape.

    Stages: (1) compute (y|x) while transcribing the first program text,
    (2) space the program cursor forward over it, (3) compute (z|y),
    (4) cancel the transcription as the cursor returns.  Ends with z on
    the work tape, a blank transcription region, and the cursor on the
    starting square.
    """
    stages: list[StageRecord] = []
    work = x
    transcript: str | None = None
    cursor = 0

    def snap(index: int, action: str) -> None:
        stages.append(
            StageRecord(
                index,
                action,
                {
                    "work": work,
                    "transcript": None if transcript is None else len(transcript),
                    "cursor": cursor,
                },
            )
        )

    def expect(stage: int, ok: bool, message: str) -> None:
        if not ok:
            raise ProtocolError(stage, message)

    snap(0, "initial configuration")

    expect(1, transcript is None, "transcription region is not blank")
    work = p.apply(work, step_limit)
    transcript = p.text
    expect(1, cursor == 0, "program head did not return to the start")
    snap(1, "compute (y|x), transcribing first program")

    cursor = len(p.text)
    expect(2, cursor == len(transcript or ""), "cursor spaced past the transcript")
    snap(2, "space forward to start of second program")

    work = q.apply(work, step_limit)
    snap(3, "compute (z|y)")

    expect(4, transcript == p.text, "transcription does not cancel against the program")
    for offset in range(len(transcript) - 1, -1, -1):
        if transcript[offset] != p.text[offset]:
            raise ProtocolError(4, f"transcription differs at offset {offset}")
    transcript = None
    cursor = 0
    snap(4, "cancel transcription as head returns")

    return Fig2Result(x=x, z=work, stages=stages)


# ---------------------------------------------------------------------------
# Fixture machines (all single tape, home convention)
# ---------------------------------------------------------------------------


def identity_machine() -> TMSpec:
    return TMSpec("identity", 1, "i0", "H", (Rule("i0", (mv(0),), "H"),))


def bitnot_machine() -> TMSpec:
    """Flip every bit, then walk back home."""
    rules = (
        Rule("n0", (rw("0", "1"),), "n1"),
        Rule("n0", (rw("1", "0"),), "n1"),
        Rule("n1", (mv(1),), "n0"),
        Rule("n0", (rw(BLANK, BLANK),), "h0"),
        Rule("h0", (mv(-1),), "h1"),
        Rule("h1", (rw("0", "0"),), "h0"),
        Rule("h1", (rw("1", "1"),), "h0"),
        Rule("h1", (rw(BLANK, BLANK),), "h2"),
        Rule("h2", (mv(1),), "H"),
    )
    return TMSpec("bitnot", 1, "n0", "H", rules)


def _carry_machine(name: str, flip: str, absorb: str) -> TMSpec:
    """Walk to the string's low-order end, carry leftward, return home.

    Wraps around on overflow/underflow, so the map is a bijection on each
    input length.
    """
    rules = (
        Rule("e0", (rw("0", "0"),), "e1"),
        Rule("e0", (rw("1", "1"),), "e1"),
        Rule("e1", (mv(1),), "e0"),
        Rule("e0", (rw(BLANK, BLANK),), "cp"),
        Rule("cp", (mv(-1),), "c0"),
        Rule("c0", (rw(flip, absorb),), "c1"),
        Rule("c1", (mv(-1),), "c0"),
        Rule("c0", (rw(absorb, flip),), "h0"),
        Rule("c0", (rw(BLANK, BLANK),), "hh"),
        Rule("hh", (mv(1),), "H"),
        Rule("h0", (mv(-1),), "h1"),
        Rule("h1", (rw("0", "0"),), "h0"),
        Rule("h1", (rw("1", "1"),), "h0"),
        Rule("h1", (rw(BLANK, BLANK),), "h2"),
        Rule("h2", (mv(1),), "H"),
    )
    return TMSpec(name, 1, "e0", "H", rules)


def increment_machine() -> TMSpec:
    """Binary +1 mod 2^n; the carry starts at the low-order (right) end."""
    return _carry_machine("increment", "1", "0")


def decrement_machine() -> TMSpec:
    """Binary -1 mod 2^n; exact inverse of the increment machine."""
    return _carry_machine("decrement", "0", "1")


def doubling_machine() -> TMSpec:
    """Append a copy of the input to itself (pair-of-copies layout).

    Marks source digits (0 -> a, 1 -> b), shuttles each leftmost pending
    mark to the first blank, retires it (a -> p, b -> q), and finally
    unmarks everything on the way home.
    """
    rules = [
        Rule("m0", (rw("0", "a"),), "m1"),
        Rule("m0", (rw("1", "b"),), "m1"),
        Rule("m1", (mv(1),), "m0"),
        Rule("m0", (rw(BLANK, BLANK),), "s0"),
        Rule("s0", (mv(-1),), "s1"),
        Rule("s1", (rw("0", "0"),), "s0"),
        Rule("s1", (rw("1", "1"),), "s0"),
        Rule("s1", (rw("a", "a"),), "s0"),
        Rule("s1", (rw("b", "b"),), "s0"),
        Rule("s1", (rw("p", "p"),), "s2"),
        Rule("s1", (rw("q", "q"),), "s2"),
        Rule("s1", (rw(BLANK, BLANK),), "s2"),
        Rule("s2", (mv(1),), "s3"),
        Rule("s3", (rw("a", "p"),), "w0:0"),
        Rule("s3", (rw("b", "q"),), "w0:1"),
        Rule("s3", (rw("0", "0"),), "d0"),
        Rule("s3", (rw("1", "1"),), "d0"),
        Rule("s3", (rw(BLANK, BLANK),), "d0"),
    ]
    for digit in "01":
        rules.extend(
            [
                Rule(f"w0:{digit}", (mv(1),), f"w1:{digit}"),
                Rule(f"w1:{digit}", (rw("0", "0"),), f"w0:{digit}"),
                Rule(f"w1:{digit}", (rw("1", "1"),), f"w0:{digit}"),
                Rule(f"w1:{digit}", (rw("a", "a"),), f"w0:{digit}"),
                Rule(f"w1:{digit}", (rw("b", "b"),), f"w0:{digit}"),
                Rule(f"w1:{digit}", (rw(BLANK, digit),), "s0"),
            ]
        )
    rules.extend(
        [
            Rule("d0", (mv(-1),), "d1"),
            Rule("d1", (rw("p", "0"),), "d0"),
            Rule("d1", (rw("q", "1"),), "d0"),
            Rule("d1", (rw(BLANK, BLANK),), "d2"),
            Rule("d2", (mv(1),), "H"),
        ]
    )
    return TMSpec("doubling", 1, "m0", "H", tuple(rules))


def _oracle_increment(bits: str) -> str:
    if not bits:
        return ""
    return format((int(bits, 2) + 1) % (1 << len(bits)), f"0{len(bits)}b")


def _oracle_decrement(bits: str) -> str:
    if not bits:
        return ""
    return format((int(bits, 2) - 1) % (1 << len(bits)), f"0{len(bits)}b")


FIXTURES: dict[str, tuple[Callable[[], TMSpec], Callable[[str], str]]] = {
    "identity": (identity_machine, lambda s: s),
    "bitnot": (bitnot_machine, lambda s: s.translate(str.maketrans("01", "10"))),
    "increment": (increment_machine, _oracle_increment),
    "decrement": (decrement_machine, _oracle_decrement),
    "doubling": (doubling_machine, lambda s: s + s),
}
