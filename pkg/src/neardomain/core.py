"""Carriers, group tables on B1 and validation reports.

Elements of a carrier B of size n are the integers 0..n-1.  Index 0 is the
additive zero and index 1 is the multiplicative unit e.  B1 = B minus {0}
is numbered by the same carrier indices 1..n-1; a table over B1 is stored
with rows and columns shifted down by one, so ``mul[x - 1][y - 1]`` holds
the carrier index of ``x * y``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

ZERO = 0
UNIT = 1


class StructureError(ValueError):
    """A table is malformed: wrong shape, out-of-range entry, not a bijection."""


class ValidationFailed(Exception):
    """Raised by constructions whose input fails its axioms."""

    def __init__(self, report: "Report"):
        super().__init__(report.format())
        self.report = report


@dataclass(frozen=True)
class Counterexample:
    cell: tuple
    message: str = ""

    def __str__(self):
        cell = ", ".join(str(c) for c in self.cell)
        return f"({cell}) {self.message}".rstrip()


@dataclass
class Report:
    """Outcome of a batch of checks, one entry per named axiom or identity.

    Each entry holds ``None`` when the check passed or the first
    counterexample found.
    """

    subject: str
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.checks.values())

    @property
    def failures(self) -> dict:
        return {k: v for k, v in self.checks.items() if v is not None}

    def record(self, name: str, counterexample: Counterexample | None):
        self.checks[name] = counterexample

    def merge(self, other: "Report", prefix: str = ""):
        for name, cx in other.checks.items():
            self.checks[prefix + name] = cx
        self.notes.extend(other.notes)

    def format(self) -> str:
        lines = [f"{self.subject}: {'pass' if self.ok else 'FAIL'}"]
        for name, cx in self.checks.items():
            lines.append(f"  {name}: {'ok' if cx is None else 'FAIL ' + str(cx)}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": {
                k: None if v is None else {"cell": list(v.cell), "message": v.message}
                for k, v in self.checks.items()
            },
            "notes": list(self.notes),
        }


def first_failure(cells, predicate, message=""):
    """Return a Counterexample for the first cell where predicate is false."""
    for cell in cells:
        if not predicate(*cell):
            return Counterexample(tuple(cell), message)
    return None


def _as_rows(table, name):
    try:
        return tuple(tuple(int(v) for v in row) for row in table)
    except TypeError as exc:
        raise StructureError(f"{name} must be a list of integer rows") from exc


def check_bijection(values, domain, name):
    values = tuple(values)
    if sorted(values) != sorted(domain):
        raise StructureError(f"{name} is not a bijection of {sorted(domain)}: {list(values)}")
    return values


@dataclass(frozen=True)
class GroupTable:
    """Multiplication table of a group on B1 = {1, ..., n-1} with unit 1."""

    mul: tuple
    inv: tuple

    def __post_init__(self):
        mul = _as_rows(self.mul, "mul")
        inv = tuple(int(v) for v in self.inv)
        m = len(mul)
        if m < 1:
            raise StructureError("group on B1 needs at least one element (n >= 2)")
        if any(len(row) != m for row in mul):
            raise StructureError(f"mul must be {m}x{m}")
        if len(inv) != m:
            raise StructureError(f"inv must have length {m}")
        for v in (*(v for row in mul for v in row), *inv):
            if not 1 <= v <= m:
                raise StructureError(f"entry {v} outside B1 = 1..{m}")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)

    @property
    def n(self) -> int:
        return len(self.mul) + 1

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def unit(self) -> int:
        return UNIT

    def elements(self):
        return range(1, self.n)

    def prod(self, x: int, y: int) -> int:
        return self.mul[x - 1][y - 1]

    def inverse(self, x: int) -> int:
        return self.inv[x - 1]

    def to_dict(self) -> dict:
        return {"n": self.n, "mul": [list(r) for r in self.mul], "inv": list(self.inv)}

    @classmethod
    def from_function(cls, n, op, inverse=None):
        """Build a table from a product function on carrier indices 1..n-1."""
        els = range(1, n)
        mul = tuple(tuple(op(x, y) for y in els) for x in els)
        if inverse is None:
            inv = tuple(next(y for y in els if mul[x - 1][y - 1] == UNIT) for x in els)
        else:
            inv = tuple(inverse(x) for x in els)
        return cls(mul, inv)


def validate_group(table: GroupTable) -> Report:
    """Exhaustively check the group axioms of a table on B1."""
    g = table
    els = list(g.elements())
    rep = Report(f"group of order {g.order}")
    e = g.unit
    rep.record("unit", first_failure(
        ((x,) for x in els), lambda x: g.prod(e, x) == x and g.prod(x, e) == x,
        "e*x = x*e = x violated"))
    rep.record("inverse", first_failure(
        ((x,) for x in els),
        lambda x: g.prod(g.inverse(x), x) == e and g.prod(x, g.inverse(x)) == e,
        "x^-1 * x = x * x^-1 = e violated"))
    rep.record("associativity", first_failure(
        product(els, repeat=3),
        lambda x, y, z: g.prod(g.prod(x, y), z) == g.prod(x, g.prod(y, z)),
        "(xy)z != x(yz)"))
    full = set(els)
    latin = None
    for x in els:
        if set(g.mul[x - 1]) != full:
            latin = Counterexample((x,), "row is not a permutation of B1")
            break
        if {g.prod(y, x) for y in els} != full:
            latin = Counterexample((x,), "column is not a permutation of B1")
            break
    rep.record("latin square", latin)
    return rep


def cyclic_group(order: int) -> GroupTable:
    """C_order on B1 with carrier index k + 1 standing for the k-th power."""
    return GroupTable.from_function(order + 1, lambda x, y: (x - 1 + y - 1) % order + 1)


def group_from_permutations(perms) -> GroupTable:
    """Regular table of a closed list of permutations; perms[0] must be identity.

    Composition is left to right: (p*q)(t) = q(p(t)).
    """
    perms = [tuple(p) for p in perms]
    index = {p: i + 1 for i, p in enumerate(perms)}
    if perms[0] != tuple(range(len(perms[0]))):
        raise StructureError("first permutation must be the identity")

    def op(x, y):
        p, q = perms[x - 1], perms[y - 1]
        return index[tuple(q[t] for t in p)]

    return GroupTable.from_function(len(perms) + 1, op)


def klein_group() -> GroupTable:
    """Klein four-group with carrier indices 1..4 for bit vectors 00, 01, 10, 11."""
    return GroupTable.from_function(5, lambda x, y: ((x - 1) ^ (y - 1)) + 1)


def dihedral_group(k: int) -> GroupTable:
    """Dihedral group of order 2k (k = 3 gives S3) as symmetries of a k-gon."""
    rots = [tuple((t + s) % k for t in range(k)) for s in range(k)]
    refl = [tuple((s - t) % k for t in range(k)) for s in range(k)]
    return group_from_permutations(rots + refl)


def quaternion_group() -> GroupTable:
    """Q8 as unit quaternions +-1, +-i, +-j, +-k.  Carrier index 1 is +1."""
    # (sign, basis) with basis 0=1, 1=i, 2=j, 3=k
    basis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    els = [(s, b) for b in range(4) for s in (1, -1)]
    index = {q: i + 1 for i, q in enumerate(els)}

    def op(x, y):
        (s1, b1), (s2, b2) = els[x - 1], els[y - 1]
        s, b = basis_mul[b1, b2]
        return index[(s1 * s2 * s, b)]

    return GroupTable.from_function(9, op)
