"""Analysis report assembly and serialization.

JSON is the machine interface: exact rationals are serialized as "p/q"
strings (integers as plain numbers) so nothing is lost across tools, and
reports are byte-identical across runs given identical inputs and seeds.
The text rendering is generated from the same dict, so both carry the
same verdicts by construction.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .boundedness import BoundednessCertificate, UnboundednessWitness
from .certificates import BlowupCertificate, MomentCertificate, NotCertified


def frac_str(value):
    """Exact JSON value for a rational: int when integral, else "p/q"."""
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(value):
    if isinstance(value, str):
        num, den = value.split("/")
        return Fraction(int(num), int(den))
    return Fraction(value)


def frac_vector(values):
    return [frac_str(v) for v in values]


def network_section(net, source=None):
    section = {
        "species": list(net.species),
        "reactions": [
            {
                "name": r.name,
                "change": list(r.column),
                "kind": r.kind,
                "propensity": str(r.propensity),
            }
            for r in net.reactions
        ],
        "n_species": net.n_species,
        "n_reactions": net.n_reactions,
        "stoichiometry_rows": [list(row) for row in net.nu()],
        "init": list(net.init) if net.init is not None else None,
    }
    if source is not None:
        section["source"] = source
    return section


def validation_section(properness, regularity, nonneg_failures, box):
    assumptions = []
    if any(v.status == "REGULAR_ON_BOX" for v in regularity):
        assumptions.append("regularity-assumed")
    if any(v.status != "REGULAR_ANALYTIC" for v in regularity):
        assumptions.append("nonnegativity-checked-on-box")
    return {
        "properness": [
            {
                "reaction": v.reaction,
                "verdict": "PROPER" if v.proper else "IMPROPER",
                **(
                    {"species": v.species, "witness": list(v.witness)}
                    if not v.proper
                    else {}
                ),
            }
            for v in properness
        ],
        "regularity": [
            {
                "reaction": v.reaction,
                "status": v.status,
                **({"box": v.box} if v.box is not None else {}),
                **(
                    {"violations": [list(x) for x in v.violations]}
                    if v.violations
                    else {}
                ),
            }
            for v in regularity
        ],
        "nonnegativity_failures": {
            name: list(state) for name, state in nonneg_failures.items()
        },
        "box": box,
        "assumptions": assumptions,
    }


def boundedness_entry(name, outcome, nu):
    if isinstance(outcome, BoundednessCertificate):
        return {
            "species": name,
            "status": "BOUNDED",
            "alpha": list(outcome.alpha),
            "verified": outcome.verify(nu),
        }
    assert isinstance(outcome, UnboundednessWitness)
    return {
        "species": name,
        "status": "UNBOUNDED",
        "witness": list(outcome.w),
        "gain": list(outcome.gain(nu)),
        "verified": outcome.verify(nu),
    }


def partition_section(partition, species, reactions):
    return {
        "critical_species": [species[i] for i in partition.critical_species],
        "critical_reactions": [reactions[j].name for j in partition.critical_reactions],
        "n_critical_species": partition.n_critical_species,
        "n_critical_reactions": partition.n_critical_reactions,
        "nu_c": [list(row) for row in partition.nuc],
        "species_order": list(partition.species_order),
        "reaction_order": list(partition.reaction_order),
        "conservative_degree_test": partition.conservative,
    }


def certificate_json(outcome):
    """The certificate wire format shared by all three theorems."""
    if isinstance(outcome, MomentCertificate):
        data = {
            "theorem": outcome.theorem,
            "gamma": frac_vector(outcome.gamma),
            "verified": outcome.verified,
            "spot_checks": outcome.spot_checks,
        }
        if outcome.theorem == "T1":
            data["full_gamma"] = frac_vector(outcome.full_gamma)
        else:
            data["C"] = frac_str(outcome.C)
            data["zero_drift_reactions"] = list(outcome.zero_drift_reactions)
        data["conclusion"] = outcome.conclusion
        return data
    if isinstance(outcome, BlowupCertificate):
        return {
            "theorem": "T3",
            "gamma": frac_vector(outcome.gamma),
            "C": frac_str(outcome.C),
            "alpha_exp": outcome.alpha_exp,
            "r_min": outcome.r_min,
            "verified": outcome.verified,
            "spot_checks": outcome.spot_checks,
            "notes": outcome.notes,
            "conclusion": outcome.conclusion,
        }
    raise TypeError(f"not a certificate: {outcome!r}")


def theorem_section(outcome):
    if isinstance(outcome, NotCertified):
        data = {"status": outcome.status, "reason": outcome.reason}
        if outcome.dual_ray is not None:
            y, z = outcome.dual_ray
            data["dual_ray"] = {
                "ineq_multipliers": frac_vector(y),
                "eq_multipliers": frac_vector(z),
            }
        return data
    if outcome is None:
        return {"status": "SKIPPED", "reason": "no initial state given"}
    data = {"status": "FEASIBLE" if getattr(outcome, "theorem", "T3") == "T1" else "CERTIFIED"}
    data["certificate"] = certificate_json(outcome)
    return data


def ensemble_section(stats):
    section = {
        "t_grid": [float(t) for t in stats.t_grid],
        "orders": list(stats.orders),
        "mean": [[float(v) for v in row] for row in stats.mean],
        "stderr": [[float(v) for v in row] for row in stats.stderr],
        "n_effective": [int(v) for v in stats.n_effective],
        "censored_frac": [float(v) for v in stats.censored_frac],
        "n_traj": stats.n_traj,
        "master_seed": stats.master_seed,
        "norm": "l1",
    }
    if any(v > 0 for v in section["censored_frac"]):
        section["note"] = (
            "means exclude censored-by-t trajectories and are biased low "
            "wherever censored_frac > 0"
        )
    return section


def emit_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def parse_json(text):
    return json.loads(text)


def base_report(net, source=None):
    return {
        "tool": {"name": "momentcert", "version": __version__},
        "network": network_section(net, source),
    }


# -- text rendering -----------------------------------------------------------


def _render_validation(lines, section):
    lines.append("validation:")
    for item in section["properness"]:
        if item["verdict"] == "PROPER":
            lines.append(f"  {item['reaction']}: PROPER")
        else:
            lines.append(
                f"  {item['reaction']}: IMPROPER (species index {item['species']}, "
                f"witness state {tuple(item['witness'])})"
            )
    for item in section["regularity"]:
        extra = ""
        if item["status"] == "VIOLATION":
            extra = f" at {tuple(item['violations'][0])}"
        elif item["status"] == "REGULAR_ON_BOX":
            extra = f" (box {item['box']})"
        lines.append(f"  {item['reaction']}: {item['status']}{extra}")
    if section["assumptions"]:
        lines.append("  assumptions: " + ", ".join(section["assumptions"]))


def render_text(report):
    lines = []
    net = report["network"]
    lines.append(
        f"{net['n_species']} species, {net['n_reactions']} reactions"
        + (f" [{net['source']}]" if "source" in net else "")
    )
    if "validation" in report:
        _render_validation(lines, report["validation"])
    if "boundedness" in report:
        lines.append("boundedness:")
        for item in report["boundedness"]["species"]:
            if item["status"] == "BOUNDED":
                lines.append(
                    f"  {item['species']}: BOUNDED alpha={tuple(item['alpha'])} "
                    f"verified={item['verified']}"
                )
            else:
                lines.append(
                    f"  {item['species']}: UNBOUNDED witness={tuple(item['witness'])} "
                    f"gain={tuple(item['gain'])} verified={item['verified']}"
                )
    if "criticality" in report:
        crit = report["criticality"]
        lines.append(
            "critical species: "
            + (", ".join(crit["critical_species"]) or "none")
        )
        lines.append(
            "critical reactions: "
            + (", ".join(crit["critical_reactions"]) or "none")
        )
    for key, label in (("theorem1", "T1"), ("theorem2", "T2"), ("theorem3", "T3")):
        if key not in report:
            continue
        sec = report[key]
        if sec["status"] in ("FEASIBLE", "CERTIFIED"):
            cert = sec["certificate"]
            bits = [f"gamma={tuple(cert['gamma'])}"]
            if "C" in cert:
                bits.append(f"C={cert['C']}")
            if "alpha_exp" in cert:
                bits.append(f"alpha_exp={cert['alpha_exp']}")
            if "r_min" in cert:
                bits.append(f"r_min={cert['r_min']}")
            bits.append(f"verified={cert['verified']}")
            lines.append(f"{label}: {sec['status']} " + " ".join(bits))
        else:
            lines.append(f"{label}: {sec['status']} ({sec.get('reason', '')})")
    if "simulation" in report:
        sim = report["simulation"]
        lines.append(
            f"simulation: n_traj={sim['n_traj']} seed={sim['master_seed']} "
            f"orders={tuple(sim['orders'])} grid={len(sim['t_grid'])} points"
        )
    return "\n".join(lines) + "\n"
