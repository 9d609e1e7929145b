"""Derivation Lie algebra and automorphism predicates for both algebras.

A derivation satisfies the Leibniz rule D(xy) = D(x)y + xD(y) and kills
the unit, so it is determined by a 7x7 matrix on the imaginary span.
Imposing the rule on all basis pairs e_i e_j with i <= j gives a linear
system over 49 unknowns whose exact rational null space is computed by
Gaussian elimination; its dimension is 14 for both algebras, the
dimension of the exceptional Lie algebra g2 (compact form for the
octonions, split form for the split octonions).  Floating-point rank is
deliberately never used: the dimension is a discrete invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence

from .algebra import AlgebraKind, Octonion, StructureTable, multiply
from .symbolic import MaxwellDecomposition


@dataclass(frozen=True)
class LinearMap7:
    """A linear map on the imaginary span, unit implicitly fixed.

    rows[a][b] is the coefficient of e_{a+1} in the image of e_{b+1}
    (columns are images).  Candidates may fail every predicate; nothing
    structural is assumed.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != 7 or any(len(r) != 7 for r in self.rows):
            raise ValueError("a LinearMap7 is a 7x7 matrix")

    @classmethod
    def from_rows(cls, rows) -> "LinearMap7":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls) -> "LinearMap7":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(7)] for i in range(7)]
        )

    @classmethod
    def zero(cls) -> "LinearMap7":
        return cls.from_rows([[0] * 7 for _ in range(7)])

    @classmethod
    def basis_swap(cls, i: int, j: int) -> "LinearMap7":
        """e_i <-> e_j, all other units fixed (1-based indices)."""
        perm = list(range(7))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return cls.from_rows(
            [[1 if perm[col] == row else 0 for col in range(7)] for row in range(7)]
        )

    @classmethod
    def signed_permutation(cls, images: Sequence[tuple[int, int]]) -> "LinearMap7":
        """images[b] = (sign, a) meaning e_{b+1} -> sign * e_a (1-based a)."""
        rows = [[0] * 7 for _ in range(7)]
        for b, (sign, a) in enumerate(images):
            rows[a - 1][b] = sign
        return cls.from_rows(rows)

    def image_of_basis(self, j: int) -> Octonion:
        """The image of e_j (1-based) as an imaginary octonion."""
        return Octonion((0,) + tuple(self.rows[a][j - 1] for a in range(7)))

    def apply(self, x: Octonion) -> Octonion:
        """Extension to the whole algebra fixing the unit coefficient."""
        out = [x.c[0]] + [0] * 7
        for b in range(7):
            xb = x.c[b + 1]
            if not xb:
                continue
            for a in range(7):
                if self.rows[a][b]:
                    out[a + 1] = out[a + 1] + self.rows[a][b] * xb
        return Octonion(out)

    def compose(self, other: "LinearMap7") -> "LinearMap7":
        """self after other."""
        rows = [[sum(self.rows[a][k] * other.rows[k][b] for k in range(7))
                 for b in range(7)] for a in range(7)]
        return LinearMap7.from_rows(rows)

    def is_invertible(self) -> bool:
        return rank([list(r) for r in self.rows]) == 7

    def render_rows(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.rows]


@dataclass
class Verdict:
    ok: bool
    failures: list[str]

    def __bool__(self) -> bool:
        return self.ok


class NotAutomorphismError(ValueError):
    """transport through a map that is not an automorphism."""

    def __init__(self, verdict: Verdict):
        super().__init__("; ".join(verdict.failures) or "not an automorphism")
        self.verdict = verdict


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over exact rationals; returns pivot columns."""
    rows = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the exact null space, one vector per free column."""
    if not rows:
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pc in zip(reduced, pivots):
            vec[pc] = -prow[fc]
        basis.append(vec)
    return basis


def _unknown(a: int, b: int) -> int:
    # index of D[a][b] (1-based a, b) in the 49-vector of unknowns
    return 7 * (a - 1) + (b - 1)


def leibniz_system(kind: AlgebraKind) -> list[list[int]]:
    """Rows of the Leibniz system over the 49 matrix entries.

    One block of up to 8 coordinate equations per unordered basis pair
    (squares included); identically-zero rows are dropped.
    """
    table = StructureTable.for_kind(kind)
    rows = []
    for i in range(1, 8):
        for j in range(i, 8):
            block = [[0] * 49 for _ in range(8)]
            s, m = table.entry(i, j)
            if m != 0:
                for a in range(1, 8):
                    block[a][_unknown(a, m)] -= s
            for a in range(1, 8):
                s1, t1 = table.product(a, j)
                block[t1][_unknown(a, i)] += s1
                s2, t2 = table.product(i, a)
                block[t2][_unknown(a, j)] += s2
            rows.extend(eq for eq in block if any(eq))
    return rows


def _integerized(vec: list[Fraction]) -> list[Fraction]:
    denom = lcm(*(v.denominator for v in vec))
    return [v * denom for v in vec]


@lru_cache(maxsize=None)
def derivation_space(kind: AlgebraKind) -> tuple[LinearMap7, ...]:
    """Exact basis of the derivation Lie algebra, integer-scaled."""
    rows = [[Fraction(v) for v in row] for row in leibniz_system(kind)]
    basis = []
    for vec in nullspace(rows, 49):
        vec = _integerized(vec)
        basis.append(LinearMap7.from_rows(
            [vec[7 * a:7 * a + 7] for a in range(7)]
        ))
    return tuple(basis)


def derivation_dimension(kind: AlgebraKind) -> int:
    """Null-space dimension of the Leibniz system: 14 for both algebras."""
    return len(derivation_space(kind))


def is_derivation(kind: AlgebraKind, d: LinearMap7) -> Verdict:
    """Exact Leibniz check D(xy) = D(x)y + xD(y) on every basis pair."""
    table = StructureTable.for_kind(kind)
    failures = []
    images = [None] + [d.image_of_basis(j) for j in range(1, 8)]
    for i in range(1, 8):
        for j in range(1, 8):
            s, m = table.entry(i, j)
            lhs = Octonion.zero() if m == 0 else s * images[m]
            rhs = multiply(kind, images[i], Octonion.basis(j)) + \
                multiply(kind, Octonion.basis(i), images[j])
            if lhs != rhs:
                failures.append(f"Leibniz fails on (e{i}, e{j})")
    return Verdict(not failures, failures)


def is_automorphism(kind: AlgebraKind, s: LinearMap7) -> Verdict:
    """Invertibility plus s(e_i)s(e_j) = s(e_i e_j) on all ordered pairs."""
    failures = []
    if not s.is_invertible():
        failures.append("map is singular")
    table = StructureTable.for_kind(kind)
    images = [Octonion.unit()] + [s.image_of_basis(j) for j in range(1, 8)]
    for i in range(1, 8):
        for j in range(1, 8):
            sign, m = table.entry(i, j)
            expected = sign * images[m]
            got = multiply(kind, images[i], images[j])
            if got != expected:
                failures.append(
                    f"s(e{i})s(e{j}) = {got} but s(e{i}*e{j}) = {expected}"
                )
    return Verdict(not failures, failures)


def transport_maxwell(kind: AlgebraKind, s: LinearMap7,
                      decomposition: MaxwellDecomposition) -> MaxwellDecomposition:
    """Push a decomposition through an automorphism and regroup.

    The unit coefficient is fixed; imaginary coefficients transform by
    the matrix.  Zero stays zero, so transporting the expansion of a
    Maxwell solution witnesses that sigma(F) again solves sigma(d)F = 0.
    """
    verdict = is_automorphism(kind, s)
    if not verdict:
        raise NotAutomorphismError(verdict)
    coeffs = decomposition.to_coefficients()
    out = [coeffs[0]] + [None] * 7
    for a in range(1, 8):
        acc = coeffs[0] - coeffs[0]  # typed zero of the coefficient ring
        for b in range(1, 8):
            entry = s.rows[a - 1][b - 1]
            if entry:
                acc = acc + coeffs[b] * entry
        out[a] = acc
    return MaxwellDecomposition.from_coefficients(out)
