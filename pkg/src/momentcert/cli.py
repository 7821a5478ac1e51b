"""Command-line front end.

Subcommands: validate, analyze, simulate, access.  Exit codes are stable:
0 ok, 1 improper network, 2 network parse error, 3 missing initial state,
4 bad arguments.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .boundedness import classify, decide_species_boundedness, explore_accessible
from .certificates import check_theorem1, check_theorem2, check_theorem3
from .dsl import DslError, load_network
from .network import (
    DEFAULT_BOX,
    check_regularity,
    nonnegative_on_box,
    validate_properness,
)
from . import report as rep
from .simulation import DEFAULT_EVENT_CAP, estimate_moments

EXIT_OK = 0
EXIT_IMPROPER = 1
EXIT_PARSE = 2
EXIT_NO_INIT = 3
EXIT_BAD_ARGS = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_ARGS)


def _build_parser():
    parser = _Parser(prog="momentcert", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file", help="network description file")

    p_val = sub.add_parser("validate", help="parse and check properness/regularity")
    add_common(p_val)
    p_val.add_argument("--box", type=int, default=DEFAULT_BOX,
                       help="lattice box bound for regularity/nonnegativity checks")

    p_an = sub.add_parser("analyze", help="boundedness, criticality and certificates")
    add_common(p_an)
    p_an.add_argument("--init", help='initial state "a,b,..." (overrides file init)')
    p_an.add_argument("--box", type=int, default=DEFAULT_BOX)
    p_an.add_argument("--json", help="write the JSON report to this path")

    p_sim = sub.add_parser("simulate", help="ensemble moment estimation")
    add_common(p_sim)
    p_sim.add_argument("--init", help='initial state "a,b,..." (overrides file init)')
    p_sim.add_argument("--t-end", type=float, required=True)
    p_sim.add_argument("--grid", type=int, default=11, help="number of grid times")
    p_sim.add_argument("--orders", default="1,2", help='moment orders, e.g. "1,2,3"')
    p_sim.add_argument("--n-traj", type=int, default=1000)
    p_sim.add_argument("--seed", type=int, help="master seed (generated if omitted)")
    p_sim.add_argument("--event-cap", type=int, default=DEFAULT_EVENT_CAP)
    p_sim.add_argument("--json", help="write the JSON report to this path")
    p_sim.add_argument("--csv", help="write the moment table to this path")

    p_acc = sub.add_parser("access", help="explore the accessible set by BFS")
    add_common(p_acc)
    p_acc.add_argument("--init", help='initial state "a,b,..." (overrides file init)')
    p_acc.add_argument("--box", type=int, default=DEFAULT_BOX)
    p_acc.add_argument("--max-states", type=int, default=100_000)
    p_acc.add_argument("--max-coord", type=int, default=1_000)
    p_acc.add_argument("--witness", action="store_true",
                       help="print a firing path per state")
    return parser


def _load(path):
    try:
        return load_network(path)
    except DslError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _resolve_init(net, arg):
    if arg is None:
        return net.init
    try:
        init = tuple(int(v) for v in arg.split(","))
    except ValueError:
        print(f"bad --init value {arg!r}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_ARGS)
    if len(init) != net.n_species or any(v < 0 for v in init):
        print(
            f"--init must list {net.n_species} nonnegative integers",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_BAD_ARGS)
    return init


def _validated(net, box):
    properness = validate_properness(net)
    regularity = check_regularity(net, box=box)
    nonneg = nonnegative_on_box(net, box=box)
    return properness, regularity, nonneg


def cmd_validate(args):
    net = _load(args.file)
    properness, regularity, nonneg = _validated(net, args.box)
    report = rep.base_report(net, source=args.file)
    report["validation"] = rep.validation_section(
        properness, regularity, nonneg, args.box
    )
    sys.stdout.write(rep.render_text(report))
    improper = [v for v in properness if not v.proper]
    if improper or nonneg:
        return EXIT_IMPROPER
    summary = "all proper"
    print(f"{net.n_species} species, {net.n_reactions} reactions, {summary}")
    return EXIT_OK


def cmd_analyze(args):
    net = _load(args.file)
    init = _resolve_init(net, args.init)
    properness, regularity, nonneg = _validated(net, args.box)
    report = rep.base_report(net, source=args.file)
    report["validation"] = rep.validation_section(
        properness, regularity, nonneg, args.box
    )
    if any(not v.proper for v in properness):
        sys.stdout.write(rep.render_text(report))
        print("network is improper; analysis aborted", file=sys.stderr)
        return EXIT_IMPROPER

    nu = net.nu()
    outcomes = [decide_species_boundedness(nu, i) for i in range(net.n_species)]
    report["boundedness"] = {
        "species": [
            rep.boundedness_entry(net.species[i], outcome, nu)
            for i, outcome in enumerate(outcomes)
        ]
    }
    partition = classify(net)
    report["criticality"] = rep.partition_section(
        partition, net.species, net.reactions
    )
    report["theorem1"] = rep.theorem_section(check_theorem1(net, partition))
    report["theorem2"] = rep.theorem_section(check_theorem2(net))
    report["theorem3"] = rep.theorem_section(
        check_theorem3(net, init) if init is not None else None
    )
    sys.stdout.write(rep.render_text(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(rep.emit_json(report))
    return EXIT_OK


def cmd_simulate(args):
    net = _load(args.file)
    init = _resolve_init(net, args.init)
    if init is None:
        print("simulate requires an initial state (file init line or --init)",
              file=sys.stderr)
        return EXIT_NO_INIT
    if args.n_traj < 2:
        print("--n-traj must be >= 2", file=sys.stderr)
        return EXIT_BAD_ARGS
    if args.t_end <= 0 or args.grid < 2 or args.event_cap < 1:
        print("--t-end must be > 0, --grid >= 2, --event-cap >= 1", file=sys.stderr)
        return EXIT_BAD_ARGS
    try:
        orders = tuple(int(v) for v in args.orders.split(","))
    except ValueError:
        print(f"bad --orders value {args.orders!r}", file=sys.stderr)
        return EXIT_BAD_ARGS
    if not orders or any(r < 1 for r in orders):
        print("--orders must list integers >= 1", file=sys.stderr)
        return EXIT_BAD_ARGS
    properness = validate_properness(net)
    if any(not v.proper for v in properness):
        print("network is improper; refusing to simulate", file=sys.stderr)
        return EXIT_IMPROPER
    seed = args.seed
    if seed is None:
        seed = int(np.random.SeedSequence().entropy % (2**63))
        print(f"generated master seed: {seed}")
    t_grid = np.linspace(0.0, args.t_end, args.grid)
    stats = estimate_moments(
        net, init, t_grid, orders, args.n_traj, seed, event_cap=args.event_cap
    )
    report = rep.base_report(net, source=args.file)
    report["simulation"] = rep.ensemble_section(stats)
    sys.stdout.write(rep.render_text(report))
    csv_text = stats.to_csv()
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(rep.emit_json(report))
    return EXIT_OK


def cmd_access(args):
    net = _load(args.file)
    init = _resolve_init(net, args.init)
    if init is None:
        print("access requires an initial state (file init line or --init)",
              file=sys.stderr)
        return EXIT_NO_INIT
    properness, regularity, _ = _validated(net, args.box)
    if any(not v.proper for v in properness):
        print("network is improper; refusing to explore", file=sys.stderr)
        return EXIT_IMPROPER
    if any(v.status == "VIOLATION" for v in regularity):
        print("warning: regularity violated on the box; paths may be incomplete")
    elif any(v.status == "REGULAR_ON_BOX" for v in regularity):
        print(f"regularity assumed (box-checked up to {args.box})")
    sample = explore_accessible(
        net, init, max_states=args.max_states, max_coord=args.max_coord
    )
    label = "complete" if sample.frontier_exhausted else "SAMPLE (caps hit)"
    print(f"explored {len(sample.states)} states from {tuple(init)}: {label}")
    for state in sorted(sample.states):
        if args.witness:
            path = sample.path_to(state)
            names = ",".join(net.reactions[j].name for j in path) or "-"
            print(f"  {state} via {names}")
        else:
            print(f"  {state}")
    return EXIT_OK


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handler = {
        "validate": cmd_validate,
        "analyze": cmd_analyze,
        "simulate": cmd_simulate,
        "access": cmd_access,
    }[args.command]
    return handler(args)


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
