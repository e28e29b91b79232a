"""Command-line entry point wiring all modules together.

Output is deterministic for identical argv + seed: JSON with sorted
keys, TSV for matrices, no timestamps.  Exit codes: 0 success, 1 domain
error, 2 usage error.  The empty string is written as ``-`` on input
flags where a placeholder is needed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import coloring as coloring_mod
from . import conversion, density, reversible
from .ncd import (
    BuiltinCompressor,
    cluster as ncd_cluster,
    get_compressor,
    matrix_from_paths,
    ncd as ncd_distance,
    newick as ncd_newick,
)
from .codes import decode_lg, encode_lg, ensure_bits, index_to_string, pair, string_to_index, unpair
from .complexity import (
    ComplexityTable,
    build_table,
    check_admissible,
    e0_search,
    e1,
    e3_sum,
    kraft_by_condition,
    mutual_info,
    strings_up_to,
    w_cost,
    w_prime,
)
from .machine import DEFAULT_BUDGET, ExecBudget, enumerate_halting, kraft_sum, run


@dataclass
class RunConfig:
    max_len: int = 16
    max_steps: int = 4096
    max_output_bits: int = 4096
    universe_len: int = 3
    seed: int = 0
    output_format: str = "json"
    jobs: int = 1

    @property
    def budget(self) -> ExecBudget:
        return ExecBudget(self.max_steps, self.max_output_bits)


def load_config(path: str | None) -> RunConfig:
    """Defaults, overlaid with key=value lines from an optional file and
    the INFODIST_SEED environment variable."""
    config = RunConfig()
    if path:
        for raw in Path(path).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"bad config line: {raw!r}")
            key = key.strip()
            value = value.strip()
            if key in ("max_len", "max_steps", "max_output_bits", "universe_len", "seed", "jobs"):
                setattr(config, key, int(value))
            elif key == "output_format":
                config.output_format = value
            else:
                raise ValueError(f"unknown config key: {key!r}")
    env_seed = os.environ.get("INFODIST_SEED")
    if env_seed is not None:
        config.seed = int(env_seed)
    return config


def bits_arg(value: str) -> str:
    if value == "-":
        return ""
    return ensure_bits(value)


def emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    return value


def _table(config: RunConfig) -> ComplexityTable:
    universe = strings_up_to(config.universe_len)
    return build_table(universe, config.max_len, config.budget, jobs=config.jobs)


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns an exit status)
# ---------------------------------------------------------------------------


def cmd_run(args, config: RunConfig) -> int:
    budget = ExecBudget(args.max_steps or config.max_steps, args.max_out or config.max_output_bits)
    outcome = run(bits_arg(args.prog), bits_arg(args.cond), budget)
    emit(
        {
            "status": outcome.status,
            "output": outcome.output,
            "steps": outcome.steps_used,
            "bits_read": outcome.input_bits_read,
        }
    )
    return 0


def cmd_k(args, config: RunConfig) -> int:
    target = bits_arg(args.target)
    condition = bits_arg(args.cond)
    for program, output in enumerate_halting(condition, config.max_len, config.budget):
        if output == target:
            emit({"value": len(program), "witness": program})
            return 0
    emit({"value": None, "witness": None, "note": f"not found within {config.max_len} bits"})
    return 1


def cmd_dist(args, config: RunConfig) -> int:
    x = bits_arg(args.x)
    y = bits_arg(args.y)
    table = _table(config)
    witness = None
    if args.metric == "e1":
        value = e1(x, y, table)
        exy, eyx = table.entry(x, y), table.entry(y, x)
        if exy is not None and eyx is not None:
            witness = (exy if exy.k >= eyx.k else eyx).witness
    elif args.metric == "e0":
        found = e0_search(x, y, config.max_len, config.budget)
        value, witness = (None, None) if found is None else found
    elif args.metric == "e3sum":
        value = e3_sum(x, y, table)
    elif args.metric == "w":
        value = w_cost(x, y, table)
    elif args.metric == "wprime":
        value = w_prime(x, y, table)
    else:
        value = mutual_info(x, y, table)
    report = check_admissible(table)
    emit(
        {
            "value": value,
            "witness": witness,
            "constants": {
                "triangle_c": report.triangle_c,
                "kraft_max": _jsonable(max(kraft_by_condition(table).values())),
            },
        }
    )
    return 0 if value is not None else 1


def cmd_convert(args, config: RunConfig) -> int:
    table = _table(config)
    rel = conversion.enumerate_pairs(table, args.k1, args.k2)
    graph = conversion.build_graph(rel)
    failures = conversion.verify_roundtrip(graph, rel)
    width = rel.k1 + 3
    emit(
        {
            "pairs": [[x, y] for x, y in rel.pairs],
            "edges": [
                {
                    "xd": e.a,
                    "y": e.b,
                    "d": e.d,
                    "color": e.color,
                    "color_bits": format(e.color, f"0{width}b"),
                }
                for e in graph.edges
            ],
            "verified": not failures,
            "max_color": graph.max_color,
        }
    )
    return 0 if not failures else 1


def cmd_coloring(args, config: RunConfig) -> int:
    seed = args.seed if args.seed is not None else config.seed
    system = coloring_mod.random_system(args.m, args.n, seed=seed)
    bound = coloring_mod.color_bound(system.m, system.n, args.b)
    result = coloring_mod.randomized_b_coloring(system, args.b, seed=seed)
    emit(
        {
            "colors_used": result.colors_used,
            "bound": bound,
            "attempts": result.attempts,
            "max_cell": coloring_mod.max_cell(system, result.color_of),
        }
    )
    return 0


def cmd_swlabel(args, config: RunConfig) -> int:
    table = _table(config)
    seed = args.seed if args.seed is not None else config.seed
    labeling = coloring_mod.sw_label(table, args.k1, args.k2, seed=seed)
    worst = 0
    for x in labeling.sets_by_x:
        for color in set(labeling.f.values()):
            worst = max(worst, len(labeling.candidates(x, color)))
    emit(
        {
            "colors_used": labeling.colors_used,
            "bound": labeling.bound,
            "attempts": labeling.attempts,
            "max_cell": worst,
            "label_width": labeling.label_width,
            "labeled": len(labeling.f),
        }
    )
    return 0


def _load_spec(path: str) -> reversible.TMSpec:
    return reversible.parse_spec(Path(path).read_text(), name=Path(path).stem)


def _trace_payload(trace: reversible.Trace, dump: bool) -> dict:
    payload = {
        "status": trace.status,
        "steps": len(trace.steps),
        "output": trace.output(),
        "erasure_count": trace.erasure_count,
    }
    if dump:
        payload["configurations"] = [
            {
                "state": c.state,
                "heads": list(c.heads),
                "tapes": [sorted(t.items()) for t in c.tapes],
            }
            for c in trace.configurations()
        ]
    return payload


def cmd_rev(args, config: RunConfig) -> int:
    spec = _load_spec(args.spec) if args.spec else None
    if args.action == "check":
        domain = reversible.check_deterministic(spec)
        ranges = reversible.check_reversible(spec)
        emit(
            {
                "deterministic": not domain,
                "reversible": not ranges,
                "domain_overlaps": domain,
                "range_overlaps": ranges,
            }
        )
        return 0
    if args.action == "run":
        trace = reversible.run_tm(spec, bits_arg(args.input), args.step_limit)
        emit(_trace_payload(trace, args.dump_trace))
        return 0 if trace.status == "halted" else 1
    if args.action == "compile":
        compiled = reversible.bennett_compile(spec)
        sys.stdout.write(reversible.serialize_spec(compiled))
        return 0
    if args.action == "invert":
        sys.stdout.write(reversible.serialize_spec(reversible.invert_spec(spec)))
        return 0
    if args.action == "fig1":
        back = _load_spec(args.spec_back) if args.spec_back else spec
        result = reversible.fig1_protocol(spec, back, bits_arg(args.input), args.step_limit)
        emit(
            {
                "y": result.y,
                "erasure_count": result.erasure_count,
                "stages": [
                    {"stage": s.index, "action": s.action, **s.snapshot} for s in result.stages
                ],
            }
        )
        return 0
    # fig2
    back = _load_spec(args.spec_back) if args.spec_back else spec
    second = _load_spec(args.spec2)
    second_back = _load_spec(args.spec2_back) if args.spec2_back else second
    p = reversible.ReversibleProgram(spec, back, "p")
    q = reversible.ReversibleProgram(second, second_back, "q")
    result = reversible.fig2_concat(p, q, bits_arg(args.input), args.step_limit)
    emit(
        {
            "z": result.z,
            "erasure_count": result.erasure_count,
            "stages": [
                {"stage": s.index, "action": s.action, **s.snapshot} for s in result.stages
            ],
        }
    )
    return 0


def cmd_ncd(args, config: RunConfig) -> int:
    comp = get_compressor(args.compressor)
    paths = sorted(Path(args.dir).iterdir(), key=lambda p: p.name)
    paths = [p for p in paths if p.is_file()]
    matrix = matrix_from_paths(paths, comp)
    tree = ncd_cluster(matrix)
    sys.stdout.write(matrix.to_tsv())
    tree_path = Path(args.tree_out) if args.tree_out else Path(args.dir) / "ncd_tree.newick"
    tree_path.write_text(ncd_newick(tree) + "\n")
    return 0


def cmd_balls(args, config: RunConfig) -> int:
    table = _table(config)
    x = bits_arg(args.x)
    fn = density.ball_b1 if args.metric == "e1" else density.ball_b3
    report = fn(table, x, args.d, args.n)
    emit(
        {
            "center": report.center,
            "radius": report.radius,
            "n": report.length_restriction,
            "metric": report.metric,
            "count": report.count,
            "log2_count": report.log2_count,
            "reference": report.reference,
            "deviation": report.deviation,
            "truncated": report.truncated,
            "universe_max_len": report.universe_max_len,
        }
    )
    return 0


def cmd_disperse(args, config: RunConfig) -> int:
    table = _table(config)
    group = [s for s in strings_up_to(config.universe_len) if len(s) == args.len]
    fraction = density.dispersion_check(table, group, args.d, args.slack)
    emit({"len": args.len, "d": args.d, "slack": args.slack, "fraction": fraction})
    return 0


def cmd_selftest(args, config: RunConfig) -> int:
    checks: list(tuple) = []

    def check(name, ok):
        checks.append((name, bool(ok)))
        print(f"{'ok' if ok else 'FAIL'}  {name}")

    check("index/string bijection", all(string_to_index(index_to_string(n)) == n for n in range(2048)))
    sample = ["", "0", "1", "01", "110", "0011"]
    check(
        "lg codes round-trip",
        all(
            decode_lg(level, encode_lg(level, x) + "1010") == (x, len(encode_lg(level, x)))
            for x in sample
            for level in (0, 1, 2, 3)
        ),
    )
    check("pairing round-trip", all(unpair(pair(x, y)) == (x, y) for x in sample for y in sample))
    halting = list(enumerate_halting("", 12, DEFAULT_BUDGET))
    check("kraft sum <= 1 at 12 bits", kraft_sum(p for p, _ in halting) <= 1)
    check("K('') == 3", halting[0] == ("111", ""))
    table = build_table(strings_up_to(2), 12, DEFAULT_BUDGET)
    rel = conversion.enumerate_pairs(table, 5, 5)
    graph = conversion.build_graph(rel)
    check("conversion round-trip", not conversion.verify_roundtrip(graph, rel))
    check("color bound 64/64/8 == 62", coloring_mod.color_bound(64, 64, 8) == 62)
    spec = reversible.bitnot_machine()
    compiled = reversible.bennett_compile(spec)
    check("compiled machine reversible", not reversible.check_reversible(compiled))
    trace = reversible.run_tm(compiled, "101")
    check(
        "compiled bitnot output",
        trace.status == "halted"
        and trace.final.tape_string(0) == "101"
        and trace.final.tape_string(2) == "010"
        and trace.final.nonblank_cells(1) == 0,
    )
    comp = BuiltinCompressor()
    blob = bytes(range(256)) * 8
    check("ncd self-distance small", ncd_distance(blob, blob, comp) <= 0.1)
    failed = [name for name, ok in checks if not ok]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 0 if not failed else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infodist",
        description="Exact budget-bounded description complexity, information distances, "
        "conversion codecs, reversible machine protocols, and compression-based similarity.",
    )
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--max-len", type=int, help="program length bound")
    parser.add_argument("--universe-len", type=int, help="universe string length bound")
    parser.add_argument("--seed", type=int, help="random seed (INFODIST_SEED fallback)")
    parser.add_argument("--jobs", type=int, help="worker count; output is independent of it")

    # The same knobs are accepted after the subcommand; SUPPRESS keeps a
    # value given before the subcommand from being clobbered.
    shared = argparse.ArgumentParser(add_help=False)
    for flag, kind in (
        ("--config", str),
        ("--max-len", int),
        ("--universe-len", int),
        ("--jobs", int),
    ):
        shared.add_argument(flag, type=kind, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[shared], help="execute a program on the toy machine")
    p.add_argument("--prog", required=True)
    p.add_argument("--cond", default="-")
    p.add_argument("--max-steps", type=int)
    p.add_argument("--max-out", type=int)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("k", parents=[shared], help="exact bounded complexity of a target")
    p.add_argument("--target", required=True)
    p.add_argument("--cond", default="-")
    p.set_defaults(fn=cmd_k)

    p = sub.add_parser("dist", parents=[shared], help="distance/cost between two strings")
    p.add_argument("--metric", choices=["e1", "e0", "e3sum", "w", "wprime", "mi"], required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("convert", parents=[shared], help="build and verify the conversion graph")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("coloring", parents=[shared], help="B-color a seeded random set system")
    p.add_argument("--M", dest="m", type=int, required=True)
    p.add_argument("--N", dest="n", type=int, required=True)
    p.add_argument("--B", dest="b", type=int, required=True)
    p.add_argument("--seed", type=int, dest="seed")
    p.set_defaults(fn=cmd_coloring)

    p = sub.add_parser("swlabel", parents=[shared], help="bounded-ambiguity labeling over the table")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--seed", type=int, dest="seed")
    p.set_defaults(fn=cmd_swlabel)

    p = sub.add_parser("rev", parents=[shared], help="reversible machine tools")
    p.add_argument("action", choices=["check", "run", "compile", "invert", "fig1", "fig2"])
    p.add_argument("--spec", required=True)
    p.add_argument("--spec-back", help="inverse-direction machine (fig1/fig2)")
    p.add_argument("--spec2", help="second program, forward machine (fig2)")
    p.add_argument("--spec2-back", help="second program, inverse machine (fig2)")
    p.add_argument("--input", default="-")
    p.add_argument("--step-limit", type=int, default=100_000)
    p.add_argument("--dump-trace", action="store_true")
    p.set_defaults(fn=cmd_rev)

    p = sub.add_parser("ncd", parents=[shared], help="compression distance matrix over a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--compressor", default="builtin")
    p.add_argument("--tree-out", help="Newick output path (default: <dir>/ncd_tree.newick)")
    p.set_defaults(fn=cmd_ncd)

    p = sub.add_parser("balls", parents=[shared], help="neighborhood count around a center")
    p.add_argument("--x", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--metric", choices=["e1", "e3"], default="e1")
    p.set_defaults(fn=cmd_balls)

    p = sub.add_parser("disperse", parents=[shared], help="pairwise distance dispersion of a length class")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--slack", type=int, default=0)
    p.set_defaults(fn=cmd_disperse)

    p = sub.add_parser("selftest", parents=[shared], help="run the embedded invariant suite")
    p.set_defaults(fn=cmd_selftest)

    return parser


def dispatch(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        if args.max_len is not None:
            config.max_len = args.max_len
        if args.universe_len is not None:
            config.universe_len = args.universe_len
        if args.seed is not None:
            config.seed = args.seed
        if args.jobs is not None:
            config.jobs = args.jobs
        return args.fn(args, config)
    except (ValueError, KeyError, LookupError, OSError,
            conversion.ConversionError, coloring_mod.ColoringError,
            reversible.MachineFormatError, reversible.ProtocolError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch())
