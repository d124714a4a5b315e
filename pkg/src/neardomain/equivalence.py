"""Translations between right near-domains and phi-systems, and isomorphism search."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .core import UNIT, ZERO, GroupTable, StructureError, ValidationFailed, check_bijection
from .near_domain import NearDomain, validate_near_domain
from .phi import PhiSystem, ext_mul, validate_phi


def a_map(D: NearDomain) -> PhiSystem:
    """phi(x) = x*a + e with a = 0 - e."""
    rep, _ = validate_near_domain(D)
    if not rep.ok:
        raise ValidationFailed(rep)
    a = D.minus(ZERO, UNIT)
    return PhiSystem(D.group, tuple(D.plus(D.mul(x, a), UNIT) for x in range(D.n)))


def f_map(S: PhiSystem, L) -> NearDomain:
    """x + y = phi(x E(L(y))) y and x - y = phi(x y^-1) L(y) for a bijection L of B1.

    ``L`` lists the images of 1..n-1.
    """
    n = S.n
    L = check_bijection(L, range(1, n), "L")
    rep = validate_phi(S)
    if not rep.ok:
        raise ValidationFailed(rep)
    phi, inv = S.phi, S.group.inverse
    B, B1 = range(n), range(1, n)
    add = tuple(tuple(ext_mul(S, phi[ext_mul(S, x, inv(L[y - 1]))], y) for y in B1) for x in B)
    sub = tuple(tuple(ext_mul(S, phi[ext_mul(S, x, inv(y))], L[y - 1]) for y in B1) for x in B)
    return NearDomain(S.group, add, sub, L)


def bijections(n: int):
    """All bijections of B1 = 1..n-1 as image tuples, in lexicographic order."""
    return permutations(range(1, n))


@dataclass
class IsoWitness:
    map: tuple
    kind: str

    def to_dict(self):
        return {"map": list(self.map), "kind": self.kind}


def _search_iso(n, binops1, binops2, unops1, unops2):
    """Bijection m of 0..n-1 fixing 0 and 1 with m(op1(x,y)) = op2(m(x),m(y)).

    Binary ops are callables returning None outside their domain; assignments
    are extended by closing under every operation before branching.
    """

    def close(m, used):
        while True:
            implied = []
            pairs = list(m.items())
            for x, mx in pairs:
                for u1, u2 in zip(unops1, unops2):
                    implied.append((u1(x), u2(mx)))
                for y, my in pairs:
                    for b1, b2 in zip(binops1, binops2):
                        a, b = b1(x, y), b2(mx, my)
                        if (a is None) != (b is None):
                            return False
                        if a is not None:
                            implied.append((a, b))
            grew = False
            for a, b in implied:
                if a in m:
                    if m[a] != b:
                        return False
                elif b in used:
                    return False
                else:
                    m[a] = b
                    used.add(b)
                    grew = True
            if not grew:
                return True

    def extend(m, used):
        if not close(m, used):
            return None
        if len(m) == n:
            return m
        x = next(i for i in range(n) if i not in m)
        for y in range(n):
            if y in used:
                continue
            m2, used2 = dict(m), set(used)
            m2[x] = y
            used2.add(y)
            found = extend(m2, used2)
            if found is not None:
                return found
        return None

    found = extend({ZERO: ZERO, UNIT: UNIT}, {ZERO, UNIT})
    return None if found is None else tuple(found[i] for i in range(n))


def _group_op(g: GroupTable):
    return lambda x, y: None if x == ZERO or y == ZERO else g.prod(x, y)


def iso_check_phi(S1: PhiSystem, S2: PhiSystem) -> IsoWitness | None:
    if S1.n != S2.n:
        return None
    m = _search_iso(
        S1.n,
        [_group_op(S1.group)], [_group_op(S2.group)],
        [S1.phi.__getitem__], [S2.phi.__getitem__],
    )
    return None if m is None else IsoWitness(m, "phi-system-iso")


def iso_check_near_domain(D1: NearDomain, D2: NearDomain) -> IsoWitness | None:
    if D1.n != D2.n:
        return None

    def ops(D):
        part = lambda f: (lambda x, y: None if y == ZERO else f(x, y))  # noqa: E731
        return [part(D.mul), part(D.plus), part(D.minus)]

    m = _search_iso(D1.n, ops(D1), ops(D2), [], [])
    return None if m is None else IsoWitness(m, "near-domain-iso")


def is_phi_iso(S1: PhiSystem, S2: PhiSystem, m) -> bool:
    """Check that the bijection m is an isomorphism S1 -> S2 pointwise."""
    n = S1.n
    if sorted(m) != list(range(n)) or m[ZERO] != ZERO or m[UNIT] != UNIT:
        return False
    return all(m[S1.phi[x]] == S2.phi[m[x]] for x in range(n)) and all(
        m[S1.group.prod(x, y)] == S2.group.prod(m[x], m[y])
        for x in range(1, n) for y in range(1, n)
    )


def transport_phi(S: PhiSystem, m) -> PhiSystem:
    """Relabel S along the carrier bijection m (m[0] = 0, m[1] = 1)."""
    n = S.n
    m = check_bijection(m, range(n), "relabeling")
    if m[ZERO] != ZERO or m[UNIT] != UNIT:
        raise StructureError("relabeling must fix 0 and e")
    back = {m[x]: x for x in range(n)}
    g = GroupTable.from_function(n, lambda x, y: m[S.group.prod(back[x], back[y])])
    return PhiSystem(g, tuple(m[S.phi[back[x]]] for x in range(n)))


@dataclass
class RoundTrip1:
    """Outcome of a sweep over bijections L."""

    n: int
    tried: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def format(self):
        head = f"round trip over {self.tried} bijections L (n={self.n}): "
        if self.ok:
            return head + "pass"
        return head + "FAIL\n" + "\n".join(f"  L={list(L)}: {msg}" for L, msg in self.failures)


def roundtrip_phi(S: PhiSystem, Ls=None) -> RoundTrip1:
    """For each L: F_L(S) is a right near-domain and A(F_L(S)) is isomorphic to S."""
    out = RoundTrip1(S.n)
    for L in (bijections(S.n) if Ls is None else Ls):
        out.tried += 1
        D = f_map(S, L)
        rep, _ = validate_near_domain(D)
        if not rep.ok:
            out.failures.append((L, f"F_L output fails {sorted(rep.failures)}"))
            continue
        back = a_map(D)
        if iso_check_phi(S, back) is None:
            out.failures.append((L, "A(F_L(S)) not isomorphic to S"))
    return out


def roundtrip_near_domain(D: NearDomain) -> RoundTrip1:
    """F_L'(A(D)) equals D exactly when L' = D.L."""
    out = RoundTrip1(D.n)
    S = a_map(D)
    for L in bijections(D.n):
        out.tried += 1
        same = f_map(S, L) == D
        if same != (L == D.L):
            msg = "tables differ although L' = L" if same is False else "tables equal although L' != L"
            out.failures.append((L, msg))
    return out
