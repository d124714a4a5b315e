"""Command-line entry point.

Exit status is 0 when every check passes, 1 when an axiom or round trip
fails, and 2 for malformed input or bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import io
from .core import GroupTable, Report, StructureError, ValidationFailed
from .equivalence import a_map, f_map, roundtrip_near_domain, roundtrip_phi
from .fields import field_of_order, mul_group_of_field
from .near_domain import NearDomain, classify, lemma_closed_forms, validate_near_domain
from .phi import PhiSystem, check_derived_identities, validate_phi
from .search import (
    DEFAULT_CAP,
    ExampleSpec,
    make_example,
    nearfield_census,
    search_phi,
    verify_example_formulas,
)
from .two_transitive import (
    PermutationAction,
    build_group,
    from_group,
    recover,
    roundtrip_action,
    roundtrip_system,
)

OK, FAILED, USAGE = 0, 1, 2


class Session:
    """Collects report text and the exit status for one invocation."""

    def __init__(self, args):
        self.args = args
        self.status = OK
        self.reports = []
        self.lines = []

    def say(self, line):
        self.lines.append(line)

    def report(self, rep: Report, headline: str | None = None):
        self.reports.append(rep)
        if not rep.ok:
            self.status = FAILED
        if headline is not None and rep.ok and not self.args.verbose:
            self.say(headline)
        else:
            self.say(rep.format() if (self.args.verbose or not rep.ok) else
                     f"{rep.subject}: pass")

    def fail(self):
        self.status = FAILED

    def emit_artifact(self, obj):
        text = io.dumps(obj)
        if self.args.output:
            io.dump(obj, self.args.output)
            self.say(f"wrote {self.args.output}")
        else:
            sys.stdout.write(text)
            self.artifact_on_stdout = True

    artifact_on_stdout = False

    def finish(self):
        out = sys.stderr if self.artifact_on_stdout else sys.stdout
        if self.args.json:
            payload = {"status": self.status, "reports": [r.to_dict() for r in self.reports],
                       "lines": self.lines}
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            for line in self.lines:
                out.write(line + "\n")
        return self.status


def _load(path, *kinds):
    obj = io.load(path)
    wanted = {"phi": PhiSystem, "near-domain": NearDomain, "action": PermutationAction,
              "group": GroupTable}
    if not isinstance(obj, tuple(wanted[k] for k in kinds)):
        raise StructureError(f"{path}: expected {' or '.join(kinds)} structure")
    return obj


def _int_list(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_check_phi(s, args):
    S = _load(args.file, "phi")
    rep = validate_phi(S, verbose=args.verbose)
    s.report(rep, f"F1..F4 pass (n={S.n})")
    if rep.ok:
        s.report(check_derived_identities(S), "derived identities pass (phi^2 = id, phi(0) = e, phi E phi = E phi E)")


def _validated_nd(s, path):
    D = _load(path, "near-domain")
    rep, W = validate_near_domain(D)
    s.report(rep, f"A1..A7 pass (n={D.n})")
    return D, rep, W


def cmd_check_nd(s, args):
    D, rep, W = _validated_nd(s, args.file)
    if rep.ok and args.verbose:
        s.say("witnesses:")
        s.say("  h: " + " ".join(f"{y},{z}->{h}" for (y, z), h in W.h.items()))
        s.say("  r: " + " ".join(f"{y},{z}->{r}" for (y, z), r in W.r.items()))
        s.say("  v: " + " ".join(f"{z}->{v}" for z, v in W.v.items()))


def cmd_lemma(s, args):
    D, rep, W = _validated_nd(s, args.file)
    if rep.ok:
        s.report(lemma_closed_forms(D, W), f"witness closed forms and cocycle identity pass (n={D.n})")


def cmd_classify(s, args):
    D, rep, _ = _validated_nd(s, args.file)
    if not rep.ok:
        return
    c = classify(D)
    for k, v in c.flags().items():
        s.say(f"{k}: {str(v).lower()}")
    for k, v in c.excluded.items():
        s.say(f"excluded cells ({k}): {v}")
    if args.verbose:
        for k, v in c.counterexamples.items():
            s.say(f"counterexample ({k}): {list(v)}")


def cmd_a_map(s, args):
    D = _load(args.file, "near-domain")
    S = a_map(D)
    s.say(f"A-map: phi = {list(S.phi)}")
    s.emit_artifact(S)


def cmd_f_map(s, args):
    S = _load(args.file, "phi")
    D = f_map(S, args.L)
    rep, _ = validate_near_domain(D)
    s.report(rep, f"F_L-map (L = {list(args.L)}): A1..A7 pass (n={D.n})")
    s.emit_artifact(D)


def cmd_build_group(s, args):
    S = _load(args.file, "phi")
    G = build_group(S)
    s.report(G.report, f"|G|={G.order}, sharply 2-transitive on {S.n} points")
    s.emit_artifact(G.to_dict(expand=args.expand))


def cmd_from_group(s, args):
    P = _load(args.file, "action")
    if args.base is not None:
        P = P.with_base(args.base)
    rec = recover(P)
    s.report(rec.report, f"coordinatization at base {P.base}: identities pass")
    rep = validate_phi(rec.system, verbose=args.verbose)
    s.report(rep, f"recovered phi-system: F1..F4 pass (n={P.degree})")
    s.emit_artifact(rec.system)


def cmd_roundtrip1(s, args):
    obj = _load(args.file, "phi", "near-domain")
    if isinstance(obj, PhiSystem):
        out = roundtrip_phi(obj)
    else:
        out = roundtrip_near_domain(obj)
    if not out.ok:
        s.fail()
    s.say(out.format())


def cmd_roundtrip2(s, args):
    obj = _load(args.file, "phi", "action")
    if isinstance(obj, PhiSystem):
        S = obj
        first = roundtrip_system(S)
        second = roundtrip_action(build_group(S).as_action())
    else:
        if args.base is not None:
            obj = obj.with_base(args.base)
        first = roundtrip_action(obj)
        S = from_group(obj)
        second = roundtrip_system(S)
    for rep in (first, second):
        s.reports.append(rep)
        if not rep.ok:
            s.fail()
    order = S.n * (S.n - 1)
    if s.status == OK and not args.verbose:
        s.say(f"|G|={order}, both round trips pass")
    else:
        s.say(first.format())
        s.say(second.format())


def _spec(args):
    return ExampleSpec(args.q, args.family, args.a)


def cmd_example(s, args):
    D = make_example(_spec(args))
    rep, _ = validate_near_domain(D)
    s.report(rep, f"{args.family} example over GF({args.q}): A1..A7 pass")
    s.emit_artifact(D)


def cmd_verify_example(s, args):
    spec = _spec(args)
    D = make_example(spec)
    rep, W = validate_near_domain(D)
    s.report(rep, f"{args.family} example over GF({args.q}): A1..A7 pass")
    if rep.ok:
        s.report(verify_example_formulas(spec, D, W))
        c = classify(D)
        s.say("flags: " + ", ".join(f"{k}={str(v).lower()}" for k, v in c.flags().items()))


def cmd_search(s, args):
    if (args.group is None) == (args.q is None):
        raise StructureError("search needs exactly one of --group or --q")
    if args.group is not None:
        g = _load(args.group, "group", "phi", "near-domain")
        g = g if isinstance(g, GroupTable) else g.group
    else:
        g = mul_group_of_field(field_of_order(args.q))
    result = search_phi(g, cap=args.cap)
    census = nearfield_census(result)
    s.say(f"search n={g.n}: {len(result.all_phis)} phi maps satisfy F3+F4, "
          f"{len(result.phi_list)} up to isomorphism")
    if result.derived_failures:
        s.fail()
        s.say(f"derived identities fail for {len(result.derived_failures)} maps")
    s.say(census.format())
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(census.to_csv())
        s.say(f"wrote {args.csv}")
    s.emit_artifact(result.to_dict())


COMMANDS = {
    "check-phi": (cmd_check_phi, "validate a phi-system against F1-F4 and derived identities"),
    "check-nd": (cmd_check_nd, "validate a right near-domain against A1-A7"),
    "lemma": (cmd_lemma, "check closed forms of the witnesses h, r, v"),
    "classify": (cmd_classify, "classification flags of a right near-domain"),
    "a-map": (cmd_a_map, "near-domain -> phi-system"),
    "f-map": (cmd_f_map, "phi-system + bijection L -> near-domain"),
    "build-group": (cmd_build_group, "sharply 2-transitive pair group of a phi-system"),
    "from-group": (cmd_from_group, "phi-system from a sharply 2-transitive permutation group"),
    "roundtrip1": (cmd_roundtrip1, "round trips between near-domains and phi-systems"),
    "roundtrip2": (cmd_roundtrip2, "round trips between phi-systems and permutation groups"),
    "example": (cmd_example, "build an example right near-domain over GF(q)"),
    "verify-example": (cmd_verify_example, "compare an example's witnesses with its family formulas"),
    "search": (cmd_search, "exhaustive phi-system search and near-field census"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true",
                        help="full reports, including the F4 quantifier-domain note")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--timings", action="store_true", help="print elapsed time to stderr")
    common.add_argument("-o", "--output", help="write the constructed structure here")

    parser = argparse.ArgumentParser(prog="neardomain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {}
    for name, (_, help_text) in COMMANDS.items():
        parsers[name] = sub.add_parser(name, parents=[common], help=help_text)
    for name in ("check-phi", "check-nd", "lemma", "classify", "a-map", "f-map",
                 "build-group", "from-group", "roundtrip1", "roundtrip2"):
        parsers[name].add_argument("file")
    parsers["f-map"].add_argument("--L", type=_int_list, required=True,
                                  help="images of 1..n-1, comma separated")
    parsers["build-group"].add_argument("--expand", action="store_true",
                                        help="include the permutation of each pair")
    for name in ("from-group", "roundtrip2"):
        parsers[name].add_argument("--base", type=_int_list, help="base pair e1,e2")
    for name in ("example", "verify-example"):
        p = parsers[name]
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--family", choices=("scaling", "inverse"), required=True)
        p.add_argument("--a", type=int, default=1, help="scaling parameter (field element index)")
    p = parsers["search"]
    p.add_argument("--group", help="JSON file with a group table on B1")
    p.add_argument("--q", type=int, help="use the multiplicative group of GF(q)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest carrier size searched")
    p.add_argument("--csv", help="write the classification table here")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    s = Session(args)
    func = COMMANDS[args.command][0]
    start = time.perf_counter()
    try:
        func(s, args)
    except ValidationFailed as exc:
        s.reports.append(exc.report)
        s.fail()
        s.say(exc.report.format())
    except (StructureError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    status = s.finish()
    if args.timings:
        print(f"time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
