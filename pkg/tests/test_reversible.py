import itertools

import pytest

from infodist.reversible import (
    FIXTURES,
    ProtocolError,
    ReversibleProgram,
    Rule,
    TMSpec,
    bennett_compile,
    bitnot_machine,
    check_deterministic,
    check_reversible,
    decrement_machine,
    doubling_machine,
    erasure_audit,
    fig1_protocol,
    fig2_concat,
    identity_machine,
    increment_machine,
    invert_spec,
    mv,
    parse_spec,
    run_from_config,
    run_tm,
    rw,
    serialize_spec,
)

ALL_INPUTS_6 = [""] + [
    "".join(bits)
    for length in range(1, 7)
    for bits in itertools.product("01", repeat=length)
]


def test_check_deterministic_empty():
    spec = TMSpec("empty", 1, "a", "b", ())
    assert check_deterministic(spec) == []


def test_duplicated_rule_overlaps():
    rule = Rule("a", (rw("0", "1"),), "b")
    spec = TMSpec("dup", 1, "a", "b", (rule, rule))
    assert check_deterministic(spec) == [(0, 1)]


def test_move_rule_overlaps_everything_from_state():
    spec = TMSpec(
        "mix",
        1,
        "a",
        "b",
        (Rule("a", (mv(1),), "b"), Rule("a", (rw("0", "0"),), "b")),
    )
    assert check_deterministic(spec)


def test_range_overlap_same_write():
    spec = TMSpec(
        "clash",
        1,
        "a",
        "z",
        (Rule("a", (rw("0", "1"),), "z"), Rule("b", (rw("1", "1"),), "z")),
    )
    assert check_reversible(spec) == [(0, 1)]


def test_identity_machine_reversible():
    assert check_reversible(identity_machine()) == []


def test_fixtures_deterministic_and_correct():
    for name, (factory, oracle) in FIXTURES.items():
        spec = factory()
        assert check_deterministic(spec) == [], name
        for bits in ALL_INPUTS_6:
            trace = run_tm(spec, bits)
            assert trace.status == "halted", (name, bits)
            assert trace.output() == oracle(bits), (name, bits)
            assert trace.final.heads[0] == 0, (name, bits)


def test_increment_example():
    assert run_tm(increment_machine(), "011").output() == "100"


def test_doubling_example():
    assert run_tm(doubling_machine(), "10").output() == "1010"


def test_invert_requires_reversible():
    with pytest.raises(ValueError):
        invert_spec(increment_machine())


def test_invert_involution():
    spec = bennett_compile(bitnot_machine())
    again = invert_spec(invert_spec(spec))
    assert set(again.rules) == set(spec.rules)
    assert again.initial == spec.initial and again.halt == spec.halt


def test_invert_move_rule():
    spec = TMSpec("m", 1, "a", "b", (Rule("a", (mv(1),), "b"),))
    inverse = invert_spec(spec)
    assert inverse.rules[0] == Rule("b", (mv(-1),), "a")


def test_run_step_limit_flag():
    spec = TMSpec(
        "loop", 1, "a", "z", (Rule("a", (mv(1),), "b"), Rule("b", (mv(-1),), "a"))
    )
    trace = run_tm(spec, "0", step_limit=10)
    assert trace.status == "step-limit"


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_bennett_compile_reversible(name):
    factory, _ = FIXTURES[name]
    compiled = bennett_compile(factory())
    assert check_deterministic(compiled) == []
    assert check_reversible(compiled) == []


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_bennett_compile_semantics(name):
    factory, oracle = FIXTURES[name]
    compiled = bennett_compile(factory())
    for bits in ALL_INPUTS_6[:32]:
        trace = run_tm(compiled, bits)
        assert trace.status == "halted"
        assert trace.final.tape_string(0) == bits
        assert trace.final.tape_string(2) == oracle(bits)
        assert trace.final.nonblank_cells(1) == 0
        assert trace.erasure_count == 0


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_bennett_inverse_retraces(name):
    factory, _ = FIXTURES[name]
    compiled = bennett_compile(factory())
    inverse = invert_spec(compiled)
    for bits in ("", "0", "01", "110", "0101"):
        forward = run_tm(compiled, bits)
        backward = run_from_config(inverse, forward.final)
        assert backward.status == "halted"
        fwd = forward.configurations()
        bwd = backward.configurations()
        assert len(fwd) == len(bwd)
        for a, b in zip(reversed(fwd), bwd):
            assert a.state == b.state
            assert a.heads == b.heads
            assert a.tapes == b.tapes


def test_compile_rejects_multitape():
    spec = TMSpec("two", 2, "a", "b", (Rule("a", (mv(0), mv(0)), "b"),))
    with pytest.raises(ValueError):
        bennett_compile(spec)


def test_compile_rejects_nondeterministic():
    rule = Rule("a", (mv(1),), "b")
    spec = TMSpec("nd", 1, "a", "b", (rule, Rule("a", (mv(0),), "b")))
    with pytest.raises(ValueError):
        bennett_compile(spec)


# ---------------------------------------------------------------------------
# Erasure audit
# ---------------------------------------------------------------------------


def test_reversible_trace_audits_clean():
    compiled = bennett_compile(increment_machine())
    trace = run_tm(compiled, "0110")
    audit = erasure_audit(trace, output_tapes=(0, 2))
    assert audit == {"provided_bits": 0, "erased_bits": 0}


def test_irreversible_blanking_counts():
    # Blank a 1-region: rules erase and also collide in range.
    rules = (
        Rule("a", (rw("1", "_"),), "b"),
        Rule("b", (mv(1),), "a"),
        Rule("c", (rw("0", "_"),), "b"),  # range overlap partner for (a -> b)
        Rule("a", (rw("_", "_"),), "H"),
    )
    spec = TMSpec("blanker", 1, "a", "H", rules)
    trace = run_tm(spec, "1111")
    assert trace.status == "halted"
    assert trace.erasure_count == 4
    assert erasure_audit(trace)["erased_bits"] == 4


def test_truncated_compiled_run_reports_history():
    compiled = bennett_compile(bitnot_machine())
    full = run_tm(compiled, "0101")
    # Find the step where the copy phase ends (state f1), cut there.
    cut = next(
        i for i, (_, config) in enumerate(full.steps) if config.state == "f1"
    )
    truncated = run_tm(compiled, "0101", step_limit=cut + 1)
    assert truncated.status == "step-limit"
    audit = erasure_audit(truncated, output_tapes=(0, 2))
    history_len = truncated.final.nonblank_cells(1)
    assert history_len > 0
    assert audit["erased_bits"] == history_len


# ---------------------------------------------------------------------------
# Staged protocols
# ---------------------------------------------------------------------------


def test_fig1_identity_fixed_point():
    spec = identity_machine()
    result = fig1_protocol(spec, spec, "0110")
    assert result.y == "0110"
    assert result.erasure_count == 0
    assert [s.index for s in result.stages] == list(range(8))


def test_fig1_increment_decrement():
    result = fig1_protocol(increment_machine(), decrement_machine(), "011")
    assert result.y == "100"
    assert result.erasure_count == 0
    final = result.stages[-1].snapshot
    assert final == {"work": "100", "aux": None, "hist1": 0, "hist2": 0}


def test_fig1_stage_rows():
    x = "0101"
    result = fig1_protocol(increment_machine(), decrement_machine(), x)
    y = result.y
    rows = {s.index: s.snapshot for s in result.stages}
    assert rows[0]["work"] == x and rows[0]["aux"] is None
    assert rows[1]["work"] == y and rows[1]["hist1"] > 0
    assert rows[2] == {"work": y, "aux": y, "hist1": rows[1]["hist1"], "hist2": 0}
    assert rows[3]["work"] == x and rows[3]["hist1"] == 0 and rows[3]["aux"] == y
    assert rows[4]["work"] == y and rows[4]["aux"] == x
    assert rows[5]["work"] == x and rows[5]["hist2"] > 0 and rows[5]["aux"] == x
    assert rows[6]["aux"] is None
    assert rows[7] == {"work": y, "aux": None, "hist1": 0, "hist2": 0}


def test_fig1_bad_inverse_aborts_with_stage():
    with pytest.raises(ProtocolError) as err:
        fig1_protocol(increment_machine(), increment_machine(), "01")
    assert err.value.stage == 5


def test_fig1_all_fixture_pairs():
    pairs = [
        (identity_machine(), identity_machine()),
        (bitnot_machine(), bitnot_machine()),
        (increment_machine(), decrement_machine()),
        (decrement_machine(), increment_machine()),
    ]
    for fwd, bwd in pairs:
        for bits in ("", "0", "11", "0110"):
            expected = FIXTURES[fwd.name][1](bits)
            assert fig1_protocol(fwd, bwd, bits).y == expected


def test_fig2_identity():
    ident = ReversibleProgram(identity_machine(), identity_machine(), "id")
    result = fig2_concat(ident, ident, "101")
    assert result.z == "101"
    assert result.erasure_count == 0


def test_fig2_double_increment():
    inc = ReversibleProgram(increment_machine(), decrement_machine(), "inc")
    result = fig2_concat(inc, inc, "001")
    assert result.z == "011"
    rows = {s.index: s.snapshot for s in result.stages}
    assert rows[1]["cursor"] == 0  # program head returns after stage 1
    assert rows[2]["cursor"] == len(inc.text)
    assert rows[4] == {"work": "011", "transcript": None, "cursor": 0}


def test_fig2_transcription_canceled():
    inc = ReversibleProgram(increment_machine(), decrement_machine(), "inc")
    nt = ReversibleProgram(bitnot_machine(), bitnot_machine(), "not")
    result = fig2_concat(inc, nt, "0011")
    assert result.z == FIXTURES["bitnot"][1](FIXTURES["increment"][1]("0011"))
    assert result.stages[-1].snapshot["transcript"] is None


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def test_serialize_parse_roundtrip():
    for factory, _ in FIXTURES.values():
        spec = factory()
        again = parse_spec(serialize_spec(spec))
        assert again.rules == spec.rules
        assert (again.initial, again.halt, again.tapes) == (
            spec.initial,
            spec.halt,
            spec.tapes,
        )


def test_parse_comments_and_moves():
    text = """
    # a tiny machine
    tapes: 1
    start: a
    halt: z
    a 0->1 -> b   # flip
    b R -> a
    a _->_ -> z
    """
    spec = parse_spec(text)
    assert len(spec.rules) == 3
    assert spec.rules[1] == Rule("b", (mv(1),), "a")


def test_parse_errors():
    with pytest.raises(Exception):
        parse_spec("tapes: 1\nstart: a\na 0->1 b\n")  # missing arrow/halt
