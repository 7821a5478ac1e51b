#!/usr/bin/env python3
"""Run the five worked example systems end to end and print a verdict table."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from conftest import make_conservation, make_ex1, make_ex2, make_ex3, make_ex4, make_ex5
from momentcert.boundedness import classify, decide_species_boundedness
from momentcert.certificates import (
    BlowupCertificate,
    MomentCertificate,
    check_theorem1,
    check_theorem2,
    check_theorem3,
)


def describe(name, net, x0):
    nu = net.nu()
    bounded = []
    for i in range(net.n_species):
        out = decide_species_boundedness(nu, i)
        bounded.append("B" if hasattr(out, "alpha") else "U")
    part = classify(net)
    t1 = check_theorem1(net, part)
    t2 = check_theorem2(net)
    t3 = check_theorem3(net, x0) if x0 is not None else None

    def tag(out):
        if out is None:
            return "skipped"
        if isinstance(out, MomentCertificate):
            return f"cert gamma={tuple(map(str, out.gamma))}"
        if isinstance(out, BlowupCertificate):
            return f"cert gamma={tuple(map(str, out.gamma))} alpha={out.alpha_exp}"
        return out.status.lower()

    print(f"{name}:")
    print(f"  species bounded/unbounded: {''.join(bounded)}")
    print(
        f"  critical species {part.critical_species} "
        f"reactions {part.critical_reactions}"
    )
    print(f"  T1 {tag(t1)} | T2 {tag(t2)} | T3 {tag(t3)}")


if __name__ == "__main__":
    describe("frozen-start system (ex1)", make_ex1(), (1, 1))
    describe("conversion pair (conservation)", make_conservation(), (3, 2))
    describe("quadratic/linear pair (ex2)", make_ex2(), (10, 10))
    for m in (1, 2, 3):
        describe(f"birth-death m={m} (ex3)", make_ex3(m), (5,))
    describe("catalytic triple (ex4)", make_ex4(), (10, 10))
    describe("double-quadratic pair (ex5)", make_ex5(), (10, 10))
