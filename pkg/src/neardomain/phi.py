"""Phi-systems (B, *, ^-1, phi, 0): a group on B1 plus a self-map phi of B."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import (
    UNIT,
    ZERO,
    Counterexample,
    GroupTable,
    Report,
    StructureError,
    first_failure,
    validate_group,
)
from .fields import Field, mul_group_of_field

F4_DOMAIN_NOTE = (
    "F4 is quantified over x in B and y in B1 minus {e}; the symbol e_1 in its "
    "statement is read as the multiplicative unit e"
)


@dataclass(frozen=True)
class PhiSystem:
    group: GroupTable
    phi: tuple

    def __post_init__(self):
        phi = tuple(int(v) for v in self.phi)
        if len(phi) != self.group.n:
            raise StructureError(f"phi must have length n = {self.group.n}")
        if any(not 0 <= v < self.group.n for v in phi):
            raise StructureError(f"phi entries must lie in 0..{self.group.n - 1}")
        object.__setattr__(self, "phi", phi)

    @property
    def n(self) -> int:
        return self.group.n

    def mul(self, x, y):
        return ext_mul(self, x, y)

    def inv(self, x):
        return ext_inv(self, x)

    def to_dict(self) -> dict:
        return {**self.group.to_dict(), "phi": list(self.phi)}


def ext_mul(S: PhiSystem, x: int, y: int) -> int:
    """Product extended to all of B: 0*y = 0 and x*0 = phi(x)."""
    if y == ZERO:
        return S.phi[x]
    if x == ZERO:
        return ZERO
    return S.group.prod(x, y)


def ext_inv(S: PhiSystem, x: int) -> int:
    return ZERO if x == ZERO else S.group.inverse(x)


def _partial_mul(S, x, y):
    # (*): B x B1 -> B; None when the right factor is 0
    if y == ZERO:
        return None
    return ZERO if x == ZERO else S.group.prod(x, y)


def f4_holds(S: PhiSystem, x: int, y: int) -> bool:
    """phi(phi(x)phi(y)) == phi(x phi(y^-1)) y, evaluated in the partial signature.

    An instance whose products would need a right factor 0 is ill-typed and
    counts as a violation.
    """
    phi = S.phi
    left = _partial_mul(S, phi[x], phi[y])
    inner = _partial_mul(S, x, phi[S.group.inverse(y)])
    if left is None or inner is None:
        return False
    return phi[left] == _partial_mul(S, phi[inner], y)


def validate_phi(S: PhiSystem, verbose: bool = False) -> Report:
    n = S.n
    rep = Report(f"phi-system (n={n})")
    group = validate_group(S.group)
    rep.record("F1", next(iter(group.failures.values()), None))
    rep.record("F2", first_failure(
        ((y,) for y in range(1, n)), lambda y: ext_mul(S, ZERO, y) == ZERO, "0*y != 0"))
    rep.record("F3", None if S.phi[UNIT] == ZERO else
               Counterexample((UNIT,), f"phi(e) = {S.phi[UNIT]}, expected 0"))
    rep.record("F4", first_failure(
        product(range(n), range(2, n)), lambda x, y: f4_holds(S, x, y),
        "phi(phi(x)phi(y)) != phi(x phi(y^-1)) y"))
    if verbose:
        rep.notes.append(F4_DOMAIN_NOTE)
    return rep


def check_derived_identities(S: PhiSystem) -> Report:
    n = S.n
    phi, E = S.phi, S.inv
    rep = Report(f"derived identities (n={n})")
    rep.record("phi^2 = id", first_failure(
        ((x,) for x in range(n)), lambda x: phi[phi[x]] == x, "phi(phi(x)) != x"))
    rep.record("phi(0) = e", None if phi[ZERO] == UNIT else
               Counterexample((ZERO,), f"phi(0) = {phi[ZERO]}"))
    rep.record("phi E phi = E phi E", first_failure(
        ((y,) for y in range(2, n)), lambda y: phi[E(phi[y])] == E(phi[E(y)]),
        "phi(E(phi(y))) != E(phi(E(y)))"))
    rep.record("phi preserves B - {0,e}", first_failure(
        ((x,) for x in range(2, n)), lambda x: phi[x] >= 2, "phi(x) in {0, e}"))

    def t_form(x, t):
        # phi(phi(x)phi(t)) = phi(x phi(E t)) t, the F4 restatement with y = E phi E(t)
        return phi[S.mul(phi[x], phi[t])] == S.mul(phi[S.mul(x, phi[E(t)])], t)

    rep.record("F4 t-form", first_failure(
        product(range(n), range(2, n)), t_form, "phi(phi(x)phi(t)) != phi(x phi(E t)) t"))
    return rep


def standard_phi_system(F: Field) -> PhiSystem:
    """phi(x) = 1 - x over GF(q)."""
    return PhiSystem(mul_group_of_field(F), tuple(F.sub(1, x) for x in F.elements()))
