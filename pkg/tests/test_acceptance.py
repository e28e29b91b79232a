"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one ``criterion N: PASS/FAIL`` line (visible under
``pytest -v -s`` or in the captured output on failure) and then asserts.
Frozen constants come from the first exhaustive oracle runs and are
re-asserted identical on every run.
"""

import itertools
import math
import time

import pytest

from infodist.codes import index_to_string
from infodist.coloring import color_bound, random_system, randomized_b_coloring, sw_decode, sw_label
from infodist.complexity import e0_table, e1, e3_sum, w_cost
from infodist.conversion import build_graph, enumerate_pairs, verify_roundtrip
from infodist.density import ball_b1, ball_b3, deviation_spread, slope_experiment
from infodist.machine import enumerate_halting, kraft_sum
from infodist.ncd import (
    BuiltinCompressor,
    cluster,
    distance_matrix,
    synthetic_corpus,
    top_split,
)
from infodist.reversible import (
    FIXTURES,
    ReversibleProgram,
    bennett_compile,
    check_reversible,
    decrement_machine,
    fig1_protocol,
    fig2_concat,
    identity_machine,
    increment_machine,
    invert_spec,
    run_from_config,
    run_tm,
)

# Constants frozen from the first exhaustive oracle runs.
FROZEN_TRIANGLE_C = 0
FROZEN_B1_SPREAD = 4.584962500721156
COLORING_BOUND_64_64_8 = 62


def report(number: str, label: str, passed: bool) -> bool:
    print(f"criterion {number} ({label}): {'PASS' if passed else 'FAIL'}")
    return passed


def all_bits(max_length: int, min_length: int = 0):
    for length in range(min_length, max_length + 1):
        if length == 0:
            yield ""
        else:
            for tup in itertools.product("01", repeat=length):
                yield "".join(tup)


def test_criterion_1_prefix_free_and_kraft():
    start = time.perf_counter()
    halting = [p for p, _ in enumerate_halting("", 18)]
    program_set = set(halting)
    violations = sum(
        1 for p in halting for cut in range(3, len(p)) if p[:cut] in program_set
    )
    total = kraft_sum(halting)
    elapsed = time.perf_counter() - start
    ok = violations == 0 and total <= 1 and elapsed <= 60.0
    assert report("1", "prefix-freeness + exact Kraft at 18 bits", ok), (
        violations,
        float(total),
        elapsed,
    )


def test_criterion_2_e0_dominates_e1(table3):
    universe = list(table3.universe)
    found = e0_table(universe, 14)
    violations = [
        (x, y, v, e1(x, y, table3))
        for (x, y), v in found.items()
        if e1(x, y, table3) is None or v < e1(x, y, table3)
    ]
    ok = len(found) > 0 and not violations
    assert report("2", "two-way program length >= max distance", ok), violations


def test_criterion_3_metric_axioms(table4):
    from infodist.complexity import check_admissible

    rep = check_admissible(table4)
    ok = (
        rep.missing_pairs == 0
        and rep.symmetry_violations == 0
        and rep.triangle_c == FROZEN_TRIANGLE_C
        and rep.norm_ok
    )
    assert report("3", "symmetry, frozen triangle constant, normalization", ok), rep


def test_criterion_4_conversion_codec(table3):
    start = time.perf_counter()
    failures = []
    for k1 in range(4, 10):
        for k2 in range(k1, 10):
            rel = enumerate_pairs(table3, k1, k2)
            graph = build_graph(rel)
            failures.extend(verify_roundtrip(graph, rel))
            if graph.max_color >= 2 ** (k1 + 3):
                failures.append(f"color overflow at ({k1},{k2})")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 120.0
    assert report("4", "conversion codec round-trips, color bound", ok), (
        failures[:5],
        elapsed,
    )


def test_criterion_5_coloring_lemma():
    ok = True
    details = []
    for seed in range(20):
        system = random_system(64, 64, seed=seed)
        bound = color_bound(system.m, system.n, 8)
        result = randomized_b_coloring(system, 8, seed=seed, max_attempts=50)
        good = bound == COLORING_BOUND_64_64_8 and result.attempts <= 50
        ok = ok and good
        details.append((seed, bound, result.attempts, result.colors_used))
    assert report("5", "randomized B-coloring within bound and attempts", ok), details


def test_criterion_6_labeling(table3):
    labeling = sw_label(table3, 6, 6, seed=0)
    cell_ok = True
    roundtrip_ok = True
    for x, members in labeling.sets_by_x.items():
        for color in set(labeling.f.values()):
            if len(labeling.candidates(x, color)) > 12:
                cell_ok = False
        for y in members:
            color = labeling.f[y]
            idx = labeling.candidates(x, color).index(y)
            if sw_decode(table3, 6, 6, labeling, x, color, idx) != y:
                roundtrip_ok = False
    ok = cell_ok and roundtrip_ok and labeling.b == 12
    assert report("6", "bounded candidate lists and label round-trip", ok)


def test_criterion_7_reversibility():
    ok = True
    details = []
    for name, (factory, oracle) in sorted(FIXTURES.items()):
        spec = factory()
        compiled = bennett_compile(spec)
        if check_reversible(compiled):
            ok = False
            details.append((name, "not reversible"))
            continue
        inverse = invert_spec(compiled)
        for bits in all_bits(8):
            trace = run_tm(compiled, bits)
            good = (
                trace.status == "halted"
                and trace.final.tape_string(0) == bits
                and trace.final.tape_string(2) == oracle(bits)
                and trace.final.nonblank_cells(1) == 0
                and trace.erasure_count == 0
            )
            if not good:
                ok = False
                details.append((name, bits, trace.status))
                continue
            backward = run_from_config(inverse, trace.final)
            fwd = trace.configurations()
            bwd = backward.configurations()
            if backward.status != "halted" or len(fwd) != len(bwd) or any(
                a.state != b.state or a.heads != b.heads or a.tapes != b.tapes
                for a, b in zip(reversed(fwd), bwd)
            ):
                ok = False
                details.append((name, bits, "retrace mismatch"))

    fig1 = fig1_protocol(increment_machine(), decrement_machine(), "011")
    row7 = fig1.stages[-1].snapshot
    if not (
        fig1.y == "100"
        and fig1.erasure_count == 0
        and row7 == {"work": "100", "aux": None, "hist1": 0, "hist2": 0}
    ):
        ok = False
        details.append(("fig1", row7))

    inc = ReversibleProgram(increment_machine(), decrement_machine(), "inc")
    fig2 = fig2_concat(inc, inc, "001")
    row4 = fig2.stages[-1].snapshot
    if not (
        fig2.z == "011"
        and fig2.erasure_count == 0
        and row4 == {"work": "011", "transcript": None, "cursor": 0}
    ):
        ok = False
        details.append(("fig2", row4))

    assert report("7", "history-tape compile, retrace, staged protocols", ok), details[:5]


def test_criterion_8_chain_and_costs(table4):
    universe = list(table4.universe)
    chain_ok = all(
        e1(x, y, table4) <= e3_sum(x, y, table4) <= 2 * e1(x, y, table4)
        for x in universe
        for y in universe
    )
    anti_ok = all(
        w_cost(x, y, table4) == -w_cost(y, x, table4) for x in universe for y in universe
    )
    trans_ok = all(
        w_cost(x, y, table4) + w_cost(y, z, table4) == w_cost(x, z, table4)
        for x in universe
        for y in universe
        for z in universe
    )
    ok = chain_ok and anti_ok and trans_ok
    assert report("8", "max <= sum <= 2 max; cost anti-symmetry/transitivity", ok)


def test_criterion_9a_density_structure(table5):
    nest_ok = True
    subset_ok = True
    for x in ("", "0", "11", "010", "0110", "10101"):
        counts1 = [ball_b1(table5, x, d).count for d in range(15)]
        counts3 = [ball_b3(table5, x, d).count for d in range(29)]
        if counts1 != sorted(counts1) or counts3 != sorted(counts3):
            nest_ok = False
        for d in range(15):
            if ball_b3(table5, x, d).count > ball_b1(table5, x, d).count:
                subset_ok = False
    spreads = [
        deviation_spread(table5, x, list(range(15))) for x in table5.universe
    ]
    spreads = [s for s in spreads if s is not None]
    spread_ok = (
        max(spreads) == pytest.approx(FROZEN_B1_SPREAD)
        and all(s <= FROZEN_B1_SPREAD + 1e-9 for s in spreads)
    )
    ok = nest_ok and subset_ok and spread_ok
    assert report("9a", "ball nesting, containment, frozen deviation spread", ok)


def test_criterion_9b_restricted_slope_band(table6):
    """Thm-style half-rate growth of length-restricted sum-distance balls.

    On this machine the conditional complexity of a length-6 string never
    drops below its unconditional value (copying costs 3 bits per bit,
    emitting 2), so restricted ball counts jump 0 -> 4 -> 10 -> 63 and no
    window has a slope inside [0.3, 0.7].  The criterion is asserted as
    stated and is expected to fail; see the analysis in the test output.
    """
    length6 = [s for s in table6.universe if len(s) == 6]
    kmax = max(table6.k(x) for x in length6)
    centers = [x for x in length6 if table6.k(x) == kmax]
    in_band = []
    measured = {}
    for x in centers:
        slopes = slope_experiment(table6, x, 6, list(range(20, 33)))
        measured[x] = slopes
        in_band.extend(s for _, s in slopes if 0.3 <= s <= 0.7)
    ok = bool(in_band)
    sample = {x: [(d, round(s, 3)) for d, s in v] for x, v in list(measured.items())[:2]}
    assert report("9b", "restricted ball growth slope in [0.3, 0.7]", ok), (
        "no (d, d+2) window of any near-incompressible length-6 center has a "
        f"slope inside the band; measured sample: {sample}"
    )


def test_criterion_10_ncd_corpus(tmp_path):
    start = time.perf_counter()
    comp = BuiltinCompressor()
    corpus = synthetic_corpus(seed=0)
    sizes_ok = all(len(data) >= 1024 for _, data in corpus)
    matrix = distance_matrix(corpus, comp)
    tree = cluster(matrix)
    left, right = top_split(tree)
    families = {
        frozenset(n for n, _ in corpus if n.startswith("rep")),
        frozenset(n for n, _ in corpus if n.startswith("rnd")),
    }
    elapsed = time.perf_counter() - start
    ok = (
        sizes_ok
        and matrix.max_diagonal() <= 0.1
        and matrix.symmetry_gap() <= 0.05
        and {left, right} == families
        and elapsed <= 10.0
    )
    assert report("10", "compression distance corpus", ok), (
        matrix.max_diagonal(),
        matrix.symmetry_gap(),
        sorted(left),
        sorted(right),
        elapsed,
    )
