"""Line-oriented network description format.

    # comment
    species S1 S2
    reaction r1: S1 + S2 -> 2 S1 + S2 @ mass_action 1
    reaction r2: . -> S1 @ poly "x2^2"
    init 10 10

One declaration per line; '.' denotes an empty reaction side; rates and
polynomial coefficients accept integers or rationals "p/q".  Polynomial
expressions may reference species either as x1..xN (declaration order) or
by name.  All errors carry the offending line number.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .network import ReactionNetwork, mass_action_reaction, poly_reaction
from .polynomial import PolynomialParseError, parse_polynomial

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class DslError(ValueError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_rational(text, line_no, what):
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise DslError(line_no, f"invalid {what} {text!r}") from None


def _parse_side(text, species, line_no):
    """Multiset of species counts from '2 S1 + S2' or '.'."""
    counts = [0] * len(species)
    text = text.strip()
    if text == ".":
        return counts
    if not text:
        raise DslError(line_no, "empty reaction side; use '.' for no species")
    for part in text.split("+"):
        tokens = part.split()
        if len(tokens) == 1:
            count, name = 1, tokens[0]
        elif len(tokens) == 2:
            try:
                count = int(tokens[0])
            except ValueError:
                raise DslError(
                    line_no, f"invalid stoichiometric count {tokens[0]!r}"
                ) from None
            name = tokens[1]
        else:
            raise DslError(line_no, f"cannot parse reaction side term {part.strip()!r}")
        if count < 0:
            raise DslError(line_no, "stoichiometric counts must be nonnegative")
        if name not in species:
            raise DslError(line_no, f"unknown species {name!r}")
        counts[species.index(name)] += count
    return counts


def _parse_reaction(body, species, line_no):
    if ":" not in body:
        raise DslError(line_no, "expected 'reaction NAME: LHS -> RHS @ KIND ...'")
    name, rest = body.split(":", 1)
    name = name.strip()
    if not _NAME_RE.match(name):
        raise DslError(line_no, f"invalid reaction name {name!r}")
    if "@" not in rest:
        raise DslError(line_no, "missing '@ KIND' in reaction")
    arrow_part, kind_part = rest.rsplit("@", 1)
    if "->" not in arrow_part:
        raise DslError(line_no, "missing '->' in reaction")
    lhs_text, rhs_text = arrow_part.split("->", 1)
    reactants = _parse_side(lhs_text, species, line_no)
    products = _parse_side(rhs_text, species, line_no)
    column = tuple(p - r for r, p in zip(reactants, products))

    kind_tokens = kind_part.strip().split(None, 1)
    if not kind_tokens:
        raise DslError(line_no, "missing propensity kind after '@'")
    kind = kind_tokens[0]
    if kind == "mass_action":
        if len(kind_tokens) != 2:
            raise DslError(line_no, "mass_action requires a rate")
        rate = _parse_rational(kind_tokens[1].strip(), line_no, "rate")
        if rate <= 0:
            raise DslError(line_no, f"rate must be positive, got {rate}")
        return mass_action_reaction(name, reactants, products, rate)
    if kind == "poly":
        if len(kind_tokens) != 2:
            raise DslError(line_no, 'poly requires a quoted expression, e.g. poly "x1^2"')
        expr = kind_tokens[1].strip()
        if len(expr) < 2 or expr[0] != '"' or expr[-1] != '"':
            raise DslError(line_no, "polynomial expression must be double-quoted")
        names = {s: i for i, s in enumerate(species)}
        try:
            prop = parse_polynomial(expr[1:-1], len(species), var_names=names)
        except PolynomialParseError as exc:
            raise DslError(line_no, f"bad polynomial: {exc}") from None
        return poly_reaction(name, column, prop)
    raise DslError(line_no, f"unknown propensity kind {kind!r}")


def parse_network(text):
    """Parse DSL text into a ReactionNetwork."""
    species = []
    reactions = []
    seen_reactions = set()
    init = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, body = line.partition(" ")
        body = body.strip()
        if keyword == "species":
            names = body.split()
            if not names:
                raise DslError(line_no, "species declaration lists no names")
            for name in names:
                if not _NAME_RE.match(name):
                    raise DslError(line_no, f"invalid species name {name!r}")
                if name in species:
                    raise DslError(line_no, f"duplicate species {name!r}")
                species.append(name)
        elif keyword == "reaction":
            if not species:
                raise DslError(line_no, "reaction declared before any species")
            reaction = _parse_reaction(body, species, line_no)
            if reaction.name in seen_reactions:
                raise DslError(line_no, f"duplicate reaction {reaction.name!r}")
            seen_reactions.add(reaction.name)
            reactions.append(reaction)
        elif keyword == "init":
            if not species:
                raise DslError(line_no, "init declared before any species")
            tokens = body.split()
            if len(tokens) != len(species):
                raise DslError(
                    line_no,
                    f"init lists {len(tokens)} values for {len(species)} species",
                )
            try:
                init = tuple(int(t) for t in tokens)
            except ValueError:
                raise DslError(line_no, "init values must be integers") from None
            if any(v < 0 for v in init):
                raise DslError(line_no, "init values must be nonnegative")
        else:
            raise DslError(line_no, f"unknown declaration {keyword!r}")
    if not species:
        raise DslError(0, "no species declared")
    if not reactions:
        raise DslError(0, "no reactions declared")
    return ReactionNetwork(species=tuple(species), reactions=tuple(reactions), init=init)


def load_network(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_network(fh.read())
