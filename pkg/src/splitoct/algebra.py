"""Exact arithmetic for the octonions and the split octonions.

Both algebras live on the same 8-dimensional real vector space
Span{1, e1, ..., e7} and differ only in the signs of a handful of
structure constants.  The signed multiplication grid below is the single
source of truth: ``±``/``∓`` entries take the upper sign in the octonions
and the lower sign in the split octonions.

Coefficients are generic: plain ints and :class:`fractions.Fraction` give
exact results (used by every identity check), floats work wherever a
tolerance is acceptable, and any object supporting ``+``, ``-`` and
multiplication by small ints can ride along (the symbolic layer does).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Sequence


class AlgebraKind(Enum):
    """Selects the upper-sign (octonion) or lower-sign (split) structure."""

    OCTONION = "octonion"
    SPLIT_OCTONION = "split"


# Multiplication grid for the imaginary units.  Rows are the left factor
# e1..e7, columns the right factor e1..e7.  "1" means the unit element.
# Upper sign of ±/∓ -> octonions, lower sign -> split octonions.
_GRID = [
    #  e1      e2      e3      e4      e5      e6      e7
    ["-1",   "e4",   "e7",   "-e2",  "e6",   "-e5",  "-e3"],   # e1
    ["-e4",  "-1",   "e5",   "e1",   "-e3",  "e7",   "-e6"],   # e2
    ["-e7",  "-e5",  "∓1",   "e6",   "±e2",  "∓e4",  "±e1"],   # e3
    ["e2",   "-e1",  "-e6",  "-1",   "e7",   "e3",   "-e5"],   # e4
    ["-e6",  "e3",   "∓e2",  "-e7",  "∓1",   "±e1",  "±e4"],   # e5
    ["e5",   "-e7",  "±e4",  "-e3",  "∓e1",  "∓1",   "±e2"],   # e6
    ["e3",   "e6",   "∓e1",  "e5",   "∓e4",  "∓e2",  "∓1"],    # e7
]

# Diagonal signs each algebra must exhibit (e1..e7); used as an
# independent reference by the structural checks so a corrupted table is
# caught rather than trusted.
EXPECTED_DIAGONAL = {
    AlgebraKind.OCTONION: (-1, -1, -1, -1, -1, -1, -1),
    AlgebraKind.SPLIT_OCTONION: (-1, -1, 1, -1, 1, 1, 1),
}


def _parse_cell(cell: str, kind: AlgebraKind) -> tuple[int, int]:
    split = kind is AlgebraKind.SPLIT_OCTONION
    if cell.startswith("±"):
        sign, rest = (-1 if split else 1), cell[1:]
    elif cell.startswith("∓"):
        sign, rest = (1 if split else -1), cell[1:]
    elif cell.startswith("-"):
        sign, rest = -1, cell[1:]
    else:
        sign, rest = 1, cell
    target = 0 if rest == "1" else int(rest[1:])
    return sign, target


class StructureTable:
    """The 7x7 table of (sign, target) pairs for one algebra.

    ``entry(i, j)`` with 1-based indices returns (sign, k) such that
    ``e_i * e_j = sign * e_k`` (k = 0 meaning the unit element).
    Instances are immutable; :meth:`with_flipped_sign` exists purely as a
    corruption hook for negative-control tests.
    """

    __slots__ = ("kind", "_signs", "_targets")

    def __init__(self, kind: AlgebraKind, signs, targets):
        self.kind = kind
        self._signs = signs
        self._targets = targets

    @classmethod
    def for_kind(cls, kind: AlgebraKind) -> "StructureTable":
        return _canonical_table(kind)

    def entry(self, i: int, j: int) -> tuple[int, int]:
        """Sign and target index for e_i * e_j, i and j in 1..7."""
        return self._signs[i - 1][j - 1], self._targets[i - 1][j - 1]

    def product(self, i: int, j: int) -> tuple[int, int]:
        """Like entry() but accepting 0 (the unit) on either side."""
        if i == 0:
            return 1, j
        if j == 0:
            return 1, i
        return self.entry(i, j)

    def diagonal_signs(self) -> tuple[int, ...]:
        return tuple(self._signs[i][i] for i in range(7))

    def with_flipped_sign(self, i: int, j: int) -> "StructureTable":
        """Copy of the table with the sign of the (i, j) entry negated."""
        signs = [list(row) for row in self._signs]
        signs[i - 1][j - 1] = -signs[i - 1][j - 1]
        return StructureTable(
            self.kind,
            tuple(tuple(row) for row in signs),
            self._targets,
        )

    def structural_failures(self) -> list[str]:
        """Violations of antisymmetry, closure, or the diagonal signs."""
        problems = []
        for i in range(1, 8):
            s, k = self.entry(i, i)
            if k != 0:
                problems.append(f"e{i}*e{i} does not land on the unit")
        if self.diagonal_signs() != EXPECTED_DIAGONAL[self.kind]:
            problems.append(
                f"diagonal signs {self.diagonal_signs()} != "
                f"expected {EXPECTED_DIAGONAL[self.kind]} for {self.kind.value}"
            )
        for i in range(1, 8):
            for j in range(1, 8):
                if i == j:
                    continue
                s, k = self.entry(i, j)
                s2, k2 = self.entry(j, i)
                if abs(s) != 1:
                    problems.append(f"entry ({i},{j}) sign is not ±1")
                if k in (0, i, j):
                    problems.append(f"e{i}*e{j} -> e{k} violates closure")
                if k2 != k or s2 != -s:
                    problems.append(
                        f"e{i}*e{j} = {s:+d}*e{k} but e{j}*e{i} = {s2:+d}*e{k2}"
                    )
        return problems

    def rows_rendered(self) -> list[list[str]]:
        """Table entries as strings, for display."""
        out = []
        for i in range(1, 8):
            row = []
            for j in range(1, 8):
                s, k = self.entry(i, j)
                body = "1" if k == 0 else f"e{k}"
                row.append(("-" if s < 0 else "") + body)
            out.append(row)
        return out


@lru_cache(maxsize=None)
def _canonical_table(kind: AlgebraKind) -> StructureTable:
    signs = []
    targets = []
    for row in _GRID:
        srow, trow = [], []
        for cell in row:
            s, t = _parse_cell(cell, kind)
            srow.append(s)
            trow.append(t)
        signs.append(tuple(srow))
        targets.append(tuple(trow))
    return StructureTable(kind, tuple(signs), tuple(targets))


class Octonion:
    """An element of either algebra: 8 coefficients, index 0 the unit.

    Structural only; which algebra an element belongs to is decided by
    the kind passed to :func:`multiply` and friends.  Addition,
    subtraction, negation and scalar multiplication work via operators;
    the algebra product does not (it needs a kind), use multiply().
    """

    __slots__ = ("c",)

    def __init__(self, coefficients: Iterable):
        c = tuple(coefficients)
        if len(c) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(c)}")
        self.c = c

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def unit(cls) -> "Octonion":
        return cls.basis(0)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        if not 0 <= i <= 7:
            raise ValueError(f"basis index {i} out of range 0..7")
        return cls(tuple(1 if j == i else 0 for j in range(8)))

    @property
    def is_imaginary(self) -> bool:
        return not self.c[0]

    @property
    def is_zero(self) -> bool:
        return not any(self.c)

    def conjugate(self) -> "Octonion":
        return Octonion((self.c[0],) + tuple(-v for v in self.c[1:]))

    def __getitem__(self, i: int):
        return self.c[i]

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(a - b for a, b in zip(self.c, other.c))

    def __neg__(self) -> "Octonion":
        return Octonion(-v for v in self.c)

    def __mul__(self, scalar) -> "Octonion":
        if isinstance(scalar, Octonion):
            raise TypeError(
                "octonion*octonion needs an algebra kind; use multiply(kind, a, b)"
            )
        return Octonion(v * scalar for v in self.c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"Octonion({list(self.c)!r})"

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self.c):
            if not v:
                continue
            label = "1" if i == 0 else f"e{i}"
            if v == 1 and i != 0:
                term = label
            elif v == -1 and i != 0:
                term = f"-{label}"
            else:
                term = f"{v}" if i == 0 else f"{v}*{label}"
            parts.append(term if not parts or term.startswith("-") else f"+{term}")
        return "".join(parts) if parts else "0"


def _resolve_table(kind, table: Optional[StructureTable]) -> StructureTable:
    if table is not None:
        return table
    return StructureTable.for_kind(kind)


def multiply(kind: AlgebraKind, a: Octonion, b: Octonion,
             table: Optional[StructureTable] = None) -> Octonion:
    """Algebra product of a and b, bilinear extension of the table."""
    t = _resolve_table(kind, table)
    signs, targets = t._signs, t._targets
    ac, bc = a.c, b.c
    out = [0] * 8
    a0, b0 = ac[0], bc[0]
    if a0:
        for j in range(8):
            if bc[j]:
                out[j] = a0 * bc[j]
    if b0:
        for i in range(1, 8):
            if ac[i]:
                out[i] = out[i] + ac[i] * b0
    for i in range(1, 8):
        ai = ac[i]
        if not ai:
            continue
        srow, trow = signs[i - 1], targets[i - 1]
        for j in range(1, 8):
            bj = bc[j]
            if not bj:
                continue
            out[trow[j - 1]] = out[trow[j - 1]] + srow[j - 1] * (ai * bj)
    return Octonion(out)


def conjugate(a: Octonion) -> Octonion:
    """Composition-algebra conjugation: negate the imaginary part."""
    return a.conjugate()


def norm_form(kind: AlgebraKind, a: Octonion,
              table: Optional[StructureTable] = None):
    """N(a): the unit coefficient of a * conjugate(a).

    The remaining seven coefficients of that product must vanish; exact
    coefficient rings are checked exactly, floats within rounding slack.
    """
    p = multiply(kind, a, a.conjugate(), table=table)
    if any(isinstance(v, float) for v in a.c):
        scale = max(abs(float(v)) for v in a.c) ** 2 or 1.0
        bad = [v for v in p.c[1:] if abs(v) > 1e-12 * scale]
    else:
        bad = [v for v in p.c[1:] if v]
    if bad:
        raise AssertionError(
            f"x*conj(x) has nonzero imaginary part {p} for x={a}"
        )
    return p.c[0]


def signature(kind: AlgebraKind) -> tuple[int, int]:
    """Counts of basis directions with positive / negative norm."""
    pos = neg = 0
    for i in range(8):
        n = norm_form(kind, Octonion.basis(i))
        if n > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def associator(kind: AlgebraKind, x: Octonion, y: Octonion, z: Octonion,
               table: Optional[StructureTable] = None) -> Octonion:
    """(xy)z - x(yz); nonzero values witness nonassociativity."""
    t = _resolve_table(kind, table)
    return multiply(kind, multiply(kind, x, y, table=t), z, table=t) - \
        multiply(kind, x, multiply(kind, y, z, table=t), table=t)


def associativity_witness(kind: AlgebraKind) -> tuple[Octonion, Octonion, Octonion, Octonion]:
    """The basis triple (e1, e2, e3) and its nonzero associator."""
    x, y, z = Octonion.basis(1), Octonion.basis(2), Octonion.basis(3)
    return x, y, z, associator(kind, x, y, z)


def random_octonion(rng: random.Random) -> Octonion:
    """Integer coefficients uniform in [-9, 9]: products stay exact."""
    return Octonion(tuple(rng.randint(-9, 9) for _ in range(8)))


@dataclass
class IdentityCheck:
    name: str
    holds: bool
    trials: int
    counterexample: Optional[str] = None


@dataclass
class IdentityReport:
    kind: AlgebraKind
    trials: int
    seed: int
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {
            "algebra": self.kind.value,
            "trials": self.trials,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.holds else "fail",
                    "trials": c.trials,
                    "detail": c.counterexample or "",
                }
                for c in self.checks
            ],
        }


def check_identities(kind: AlgebraKind, trials: int, seed: int,
                     table: Optional[StructureTable] = None) -> IdentityReport:
    """Exact randomized suite: the identities both algebras must satisfy.

    Covers anticommutativity of distinct imaginary units, left and right
    alternativity, the Moufang identity (xy)(zx) = (x(yz))x, and norm
    multiplicativity.  All arithmetic is over integers, so a reported
    pass is exact, not approximate.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t = _resolve_table(kind, table)
    rng = random.Random(seed)
    report = IdentityReport(kind=kind, trials=trials, seed=seed)

    anti_fail = None
    pairs = 0
    for i in range(1, 8):
        for j in range(i + 1, 8):
            pairs += 1
            ei, ej = Octonion.basis(i), Octonion.basis(j)
            if multiply(kind, ei, ej, table=t) != -multiply(kind, ej, ei, table=t):
                anti_fail = f"e{i}*e{j} != -e{j}*e{i}"
                break
        if anti_fail:
            break
    report.checks.append(IdentityCheck(
        "anticommutativity", anti_fail is None, pairs, anti_fail))

    def run(name, nargs, predicate):
        rng_local = random.Random(rng.randrange(2 ** 63))
        counter = None
        for _ in range(trials):
            args = tuple(random_octonion(rng_local) for _ in range(nargs))
            if not predicate(*args):
                counter = ", ".join(str(a) for a in args)
                break
        report.checks.append(IdentityCheck(name, counter is None, trials, counter))

    def mul(a, b):
        return multiply(kind, a, b, table=t)

    run("left_alternative", 2, lambda x, y: mul(x, mul(x, y)) == mul(mul(x, x), y))
    run("right_alternative", 2, lambda x, y: mul(mul(y, x), x) == mul(y, mul(x, x)))
    run("moufang", 3,
        lambda x, y, z: mul(mul(x, y), mul(z, x)) == mul(mul(x, mul(y, z)), x))

    def norm_multiplicative(x, y):
        try:
            return norm_form(kind, mul(x, y), table=t) == \
                norm_form(kind, x, table=t) * norm_form(kind, y, table=t)
        except AssertionError:
            return False

    run("norm_multiplicative", 2, norm_multiplicative)
    return report


def search_null_pair(kind: AlgebraKind, trials: int, seed: int
                     ) -> Optional[tuple[Octonion, Octonion]]:
    """Randomized hunt for zero divisors among combinations of 1 and e7.

    Returns (x, y), both nonzero with N(x) = 0 and x*y = 0, or None when
    no such pair turns up (as must happen for the octonions, where the
    norm is positive definite).
    """
    rng = random.Random(seed)
    for _ in range(trials):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        x = Octonion((a, 0, 0, 0, 0, 0, 0, b))
        if x.is_zero or norm_form(kind, x) != 0:
            continue
        y = x.conjugate()
        if not y.is_zero and multiply(kind, x, y).is_zero:
            return x, y
    return None
