"""Sharply 2-transitive groups built from phi-systems, and the way back.

Group elements are ordered pairs (x1, x2) of distinct points: the pair names
the image of the base pair (e, 0).  Permutations act on the right, so the
product a*b applies a first and then b.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .core import (
    UNIT,
    ZERO,
    Counterexample,
    GroupTable,
    Report,
    StructureError,
    ValidationFailed,
    first_failure,
)
from .equivalence import is_phi_iso, transport_phi
from .phi import PhiSystem, ext_inv, ext_mul

ASSOC_EXHAUSTIVE_MAX_N = 5


def f_action(S: PhiSystem, x: int, y1: int, y2: int) -> int:
    """Image of x under the group element (y1, y2): phi(x phi(y1 y2^-1)) y2."""
    if y1 == y2:
        raise ValueError(f"({y1}, {y2}) is not a pair of distinct points")
    m = lambda a, b: ext_mul(S, a, b)  # noqa: E731
    return m(S.phi[m(x, S.phi[m(y1, ext_inv(S, y2))])], y2)


def pair_mul(S: PhiSystem, a, b):
    return (f_action(S, a[0], *b), f_action(S, a[1], *b))


def pair_inv(S: PhiSystem, a):
    x1, x2 = a
    if x1 == x2:
        raise ValueError(f"{a} is not a pair of distinct points")
    if x2 == ZERO:
        # t -> t*x1 is inverted by t -> t*x1^-1; the general formula breaks down here
        return (S.group.inverse(x1), ZERO)
    m, E, phi = (lambda u, v: ext_mul(S, u, v)), S.inv, S.phi
    c = E(phi[m(x1, E(x2))])
    return (m(phi[E(x2)], c), c)


def distinct_pairs(n):
    return [(a, b) for a, b in product(range(n), repeat=2) if a != b]


def compose(p, q):
    """Right action: t -> q(p(t))."""
    return tuple(q[t] for t in p)


def invert(p):
    out = [0] * len(p)
    for t, pt in enumerate(p):
        out[pt] = t
    return tuple(out)


def sharp_two_transitivity(n, perms) -> Counterexample | None:
    """Every ordered pair of distinct points goes to every other by exactly one perm."""
    hits = Counter()
    for p in perms:
        for a, b in distinct_pairs(n):
            hits[a, b, p[a], p[b]] += 1
    for (a, b), (c, d) in product(distinct_pairs(n), repeat=2):
        k = hits[a, b, c, d]
        if k != 1:
            return Counterexample((a, b, c, d), f"{k} elements map ({a},{b}) to ({c},{d})")
    return None


@dataclass(frozen=True)
class PermutationAction:
    degree: int
    perms: tuple
    base: tuple = (UNIT, ZERO)

    def __post_init__(self):
        n = int(self.degree)
        if n < 2:
            raise StructureError("degree must be at least 2")
        perms = tuple(tuple(int(t) for t in p) for p in self.perms)
        for p in perms:
            if sorted(p) != list(range(n)):
                raise StructureError(f"{list(p)} is not a permutation of 0..{n - 1}")
        base = tuple(int(t) for t in self.base)
        if len(base) != 2 or base[0] == base[1] or not all(0 <= t < n for t in base):
            raise StructureError(f"base must be two distinct points of 0..{n - 1}")
        object.__setattr__(self, "degree", n)
        object.__setattr__(self, "perms", perms)
        object.__setattr__(self, "base", base)

    def with_base(self, base) -> "PermutationAction":
        return PermutationAction(self.degree, self.perms, tuple(base))

    def to_dict(self) -> dict:
        return {"degree": self.degree, "perms": [list(p) for p in self.perms], "base": list(self.base)}


def close_generators(degree: int, gens) -> tuple:
    """Saturate a generating set under composition; identity comes first."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                c = compose(p, g)
                if c not in seen:
                    seen[c] = None
                    nxt.append(c)
        frontier = nxt
    return tuple(seen)


def validate_action(P: PermutationAction) -> Report:
    n = P.degree
    perms = P.perms
    members = set(perms)
    rep = Report(f"permutation group (degree {n}, {len(perms)} elements)")
    rep.record("distinct", None if len(members) == len(perms) else
               Counterexample((), "repeated permutation"))
    rep.record("identity", None if tuple(range(n)) in members else
               Counterexample((), "identity missing"))
    rep.record("closure", first_failure(
        product(range(len(perms)), repeat=2),
        lambda i, j: compose(perms[i], perms[j]) in members, "product of elements i, j missing"))
    rep.record("inverses", first_failure(
        ((i,) for i in range(len(perms))), lambda i: invert(perms[i]) in members,
        "inverse of element i missing"))
    rep.record("sharply 2-transitive", sharp_two_transitivity(n, perms))
    return rep


@dataclass
class PairGroup:
    system: PhiSystem
    elements: tuple
    perms: dict
    report: Report

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        return pair_mul(self.system, a, b)

    def inv(self, a):
        return pair_inv(self.system, a)

    def as_action(self, base=(UNIT, ZERO)) -> PermutationAction:
        return PermutationAction(self.system.n, tuple(self.perms[g] for g in self.elements), base)

    def to_dict(self, expand: bool = False) -> dict:
        out = {"n": self.system.n, "order": self.order, "pairs": [list(g) for g in self.elements]}
        if expand:
            out["perms"] = [list(self.perms[g]) for g in self.elements]
        return out


def build_group(S: PhiSystem) -> PairGroup:
    n = S.n
    els = tuple(distinct_pairs(n))
    member = set(els)
    perms = {g: tuple(f_action(S, t, *g) for t in range(n)) for g in els}
    unit = (UNIT, ZERO)
    rep = Report(f"pair group (n={n})")
    rep.record("order", None if len(els) == n * (n - 1) else
               Counterexample((len(els),), f"expected {n * (n - 1)}"))
    rep.record("action bijective", first_failure(
        ((g,) for g in els), lambda g: sorted(perms[g]) == list(range(n)),
        "x -> f(x, y1, y2) is not a bijection"))
    rep.record("closure", first_failure(
        product(els, repeat=2), lambda a, b: pair_mul(S, a, b) in member, "product leaves B^2 minus diagonal"))
    rep.record("unit", first_failure(
        ((g,) for g in els), lambda g: pair_mul(S, g, unit) == g and pair_mul(S, unit, g) == g,
        "(e,0) is not a two-sided unit"))
    rep.record("inverse", first_failure(
        ((g,) for g in els),
        lambda g: pair_mul(S, pair_inv(S, g), g) == unit and pair_mul(S, g, pair_inv(S, g)) == unit,
        "inverse formula is not two-sided"))
    if n <= ASSOC_EXHAUSTIVE_MAX_N:
        rep.record("associativity", first_failure(
            product(els, repeat=3),
            lambda a, b, c: pair_mul(S, pair_mul(S, a, b), c) == pair_mul(S, a, pair_mul(S, b, c)),
            "(ab)c != a(bc)"))
    else:
        # faithful action + homomorphism implies associativity
        faithful = len(set(perms.values())) == len(els)
        rep.record("associativity", first_failure(
            product(els, repeat=2),
            lambda a, b: faithful and perms.get(pair_mul(S, a, b)) == compose(perms[a], perms[b]),
            "action of ab differs from action of a then b"))
    rep.record("sharply 2-transitive", sharp_two_transitivity(n, perms.values()))
    return PairGroup(S, els, perms, rep)


@dataclass
class Recovery:
    """A phi-system read off a sharply 2-transitive group at a base pair."""

    system: PhiSystem
    relabel: tuple  # original point -> carrier index
    coords: dict  # (e1 g, e2 g) -> g
    report: Report


def canonical_relabel(n, base) -> tuple:
    e1, e2 = base
    rest = [t for t in range(n) if t not in (e1, e2)]
    rho = [0] * n
    rho[e2], rho[e1] = ZERO, UNIT
    for i, t in enumerate(rest, start=2):
        rho[t] = i
    return tuple(rho)


def recover(P: PermutationAction) -> Recovery:
    rep = validate_action(P)
    if not rep.ok:
        raise ValidationFailed(rep)
    n = P.degree
    e1, e2 = P.base
    coords = {}
    for g in P.perms:
        key = (g[e1], g[e2])
        if key in coords:
            raise RuntimeError(f"two group elements share coordinates {key}")
        coords[key] = g

    B1 = [t for t in range(n) if t != e2]
    mul = lambda x, y: coords[y, e2][x]  # noqa: E731
    inv = {x: next(y for y in B1 if mul(x, y) == e1) for x in B1}
    swap = coords[e2, e1]
    phi = lambda x: swap[x]  # noqa: E731

    checks = Report("coordinatization identities")
    checks.record("[e2,e1] involution", None if compose(swap, swap) == tuple(range(n)) else
                  Counterexample((e2, e1), "[e2,e1]^2 != id"))
    checks.record("e2 left zero", first_failure(
        ((y,) for y in B1), lambda y: mul(e2, y) == e2, "e2 * y != e2"))
    checks.record("[e2,e1][x2,x1] = [x1,x2]", first_failure(
        distinct_pairs(n), lambda x1, x2: compose(swap, coords[x2, x1]) == coords[x1, x2],
        "swap identity fails"))
    checks.record("[x1,x2] = [phi(x1),phi(x2)][e2,e1]", first_failure(
        distinct_pairs(n), lambda x1, x2: compose(coords[phi(x1), phi(x2)], swap) == coords[x1, x2],
        "conjugation identity fails"))

    def factorization(x1, x2):
        if x2 == e2:
            return True
        a = coords[phi(mul(x1, inv[x2])), e2]
        return compose(compose(a, swap), coords[x2, e2]) == coords[x1, x2]

    checks.record("[x1,x2] = [phi(x1 x2^-1),e2][e2,e1][x2,e2]", first_failure(
        distinct_pairs(n), factorization, "factorization does not reproduce the element"))

    rho = canonical_relabel(n, P.base)
    back = invert(rho)
    group = GroupTable.from_function(n, lambda x, y: rho[mul(back[x], back[y])])
    system = PhiSystem(group, tuple(rho[phi(back[x])] for x in range(n)))
    return Recovery(system, rho, coords, checks)


def from_group(P: PermutationAction) -> PhiSystem:
    return recover(P).system


def connecting_map(S: PhiSystem, base) -> tuple:
    """x -> phi(x phi(e1 e2^-1)) e2 followed by the canonical relabeling for base."""
    rho = canonical_relabel(S.n, base)
    return tuple(rho[f_action(S, x, *base)] for x in range(S.n))


def roundtrip_system(S: PhiSystem, bases=None) -> Report:
    """Rebuild S from its pair group at each base pair and compare tables exactly."""
    G = build_group(S)
    rep = Report(f"G then F_(e1,e2) (n={S.n}, |G|={G.order})")
    rep.merge(G.report, "G: ")
    if not G.report.ok:
        return rep
    for base in (distinct_pairs(S.n) if bases is None else bases):
        base = tuple(base)
        rec = recover(G.as_action(base))
        c = connecting_map(S, base)
        cx = None
        if not rec.report.ok:
            cx = Counterexample(base, f"coordinatization fails {sorted(rec.report.failures)}")
        elif not is_phi_iso(S, rec.system, c):
            cx = Counterexample(base, "connecting map is not an isomorphism")
        elif transport_phi(S, c) != rec.system:
            cx = Counterexample(base, "tables differ after relabeling")
        rep.record(f"base {base}", cx)
    return rep


def roundtrip_action(P: PermutationAction) -> Report:
    """Rebuild P from the phi-system it coordinatizes, element by element."""
    rec = recover(P)
    S = rec.system
    G = build_group(S)
    rho = rec.relabel
    e1, e2 = P.base
    rep = Report(f"F_(e1,e2) then G (degree {P.degree}, base {P.base})")
    rep.merge(rec.report, "F: ")
    rep.merge(G.report, "G: ")
    rep.record("order", None if G.order == len(P.perms) else
               Counterexample((G.order, len(P.perms)), "group orders differ"))

    def matches(g):
        pair = (rho[g[e1]], rho[g[e2]])
        return all(f_action(S, rho[t], *pair) == rho[g[t]] for t in range(P.degree))

    rep.record("elementwise", first_failure(((g,) for g in P.perms), matches,
                                            "action differs after coordinatization"))
    return rep


def affine_group(F) -> PermutationAction:
    """All maps x -> a x + b over a finite field, a != 0."""
    els = list(F.elements())
    perms = [tuple(F.add(F.mul(a, x), b) for x in els) for a in els[1:] for b in els]
    perms.sort(key=lambda p: p != tuple(els))
    return PermutationAction(F.q, tuple(perms))

