"""Exact symbolic expansion of the Dirac-like operator on a field octonion.

The operator d = e1*d_x + e2*d_y + e4*d_z + e7*d_t acts by left algebra
multiplication on an octonion whose coefficients are the electromagnetic
field components (plus an optional scalar S on e7 and a real part F0).
Expanding the product and regrouping the eight output coefficients into
(scalar, Q-vector, e7Q-vector, e7) blocks yields, for the split algebra,
exactly the vacuum Maxwell equations; this module computes that expansion
over formal first-derivative atoms and compares it against the same
blocks built directly from divergence/curl/gradient definitions.

No simplification beyond collecting like atoms happens: the identity
holds literally term by term, and the machinery keeps it that way.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional

from .algebra import AlgebraKind, Octonion, multiply

VARS = ("t", "x", "y", "z")
SPACE_VARS = ("x", "y", "z")


class FieldName(str, Enum):
    EX = "Ex"
    EY = "Ey"
    EZ = "Ez"
    BX = "Bx"
    BY = "By"
    BZ = "Bz"
    S = "S"
    F0 = "F0"


E_COMPONENTS = (FieldName.EX, FieldName.EY, FieldName.EZ)
B_COMPONENTS = (FieldName.BX, FieldName.BY, FieldName.BZ)

# Octonion slot of each field: F = Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6
# + Bz e5 (+ S e7 + F0).  This placement is what makes the expansion work;
# do not reorder.
FIELD_SLOT = {
    FieldName.F0: 0,
    FieldName.EX: 1,
    FieldName.EY: 2,
    FieldName.BX: 3,
    FieldName.EZ: 4,
    FieldName.BZ: 5,
    FieldName.BY: 6,
    FieldName.S: 7,
}
SLOT_FIELD = {slot: name for name, slot in FIELD_SLOT.items()}

# The operator pairs each coordinate derivative with a basis unit.
DIRAC_PAIRS = (("x", 1), ("y", 2), ("z", 4), ("t", 7))

_FIELD_ORDER = {name: i for i, name in enumerate(FieldName)}
_VAR_ORDER = {v: i for i, v in enumerate(VARS)}


class DerivAtom(NamedTuple):
    """The opaque first-derivative symbol d_var(field)."""

    var: str
    field: FieldName

    def render(self) -> str:
        return f"d_{self.var}({self.field.value})"


def _sort_key(atom: DerivAtom):
    return (_FIELD_ORDER[atom.field], _VAR_ORDER[atom.var])


class SymbolicScalar:
    """A rational linear combination of derivative atoms, in canonical form.

    Zero coefficients are never stored, so equality is plain map equality.
    Multiplication is only by rationals; products of two symbolic scalars
    are second-order objects and deliberately unsupported.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[DerivAtom, Fraction]] = None):
        clean = {}
        if terms:
            for atom, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[atom] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "SymbolicScalar":
        return cls()

    @classmethod
    def atom(cls, var: str, field: FieldName, coeff=1) -> "SymbolicScalar":
        if var not in VARS:
            raise ValueError(f"unknown variable {var!r}")
        return cls({DerivAtom(var, FieldName(field)): Fraction(coeff)})

    def __add__(self, other):
        if isinstance(other, SymbolicScalar):
            merged = dict(self.terms)
            for atom, coeff in other.terms.items():
                merged[atom] = merged.get(atom, Fraction(0)) + coeff
            return SymbolicScalar(merged)
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SymbolicScalar({a: -c for a, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, SymbolicScalar):
            raise TypeError("products of derivative atoms are out of scope")
        return SymbolicScalar({a: c * scalar for a, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymbolicScalar):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def atoms(self) -> set[DerivAtom]:
        return set(self.terms)

    def sorted_terms(self) -> list[tuple[DerivAtom, Fraction]]:
        return sorted(self.terms.items(), key=lambda it: _sort_key(it[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for atom, coeff in self.sorted_terms():
            if coeff == 1:
                parts.append(f"+ {atom.render()}")
            elif coeff == -1:
                parts.append(f"- {atom.render()}")
            else:
                sign = "+" if coeff > 0 else "-"
                parts.append(f"{sign} {abs(coeff)}*{atom.render()}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def to_json(self) -> list[dict]:
        out = []
        for atom, coeff in self.sorted_terms():
            sign = int(coeff) if coeff.denominator == 1 else str(coeff)
            out.append({"sign": sign, "var": atom.var, "field": atom.field.value})
        return out

    def __repr__(self) -> str:
        return f"SymbolicScalar({self.render()})"


def _as_symbolic(value) -> SymbolicScalar:
    if isinstance(value, SymbolicScalar):
        return value
    if value == 0:
        return SymbolicScalar.zero()
    raise TypeError(f"cannot coerce {value!r} into a symbolic scalar")


class FieldOctonion:
    """An octonion whose slots hold rational combinations of field names.

    ``standard()`` produces the canonical placement (E on e1,e2,e4; B on
    e3,e6,e5; optionally S on e7 and a real part F0).  General rational
    combinations are allowed so that linearity of the operator is a
    testable statement rather than an article of faith.
    """

    __slots__ = ("slots",)

    def __init__(self, slots: Iterable[Mapping[FieldName, Fraction]]):
        cleaned = []
        for combo in slots:
            cleaned.append({
                FieldName(f): Fraction(c) for f, c in combo.items() if c
            })
        if len(cleaned) != 8:
            raise ValueError("a field octonion has exactly 8 slots")
        self.slots = tuple(cleaned)

    @classmethod
    def standard(cls, with_S: bool = False, with_F0: bool = False) -> "FieldOctonion":
        slots = [dict() for _ in range(8)]
        for name in (*E_COMPONENTS, *B_COMPONENTS):
            slots[FIELD_SLOT[name]][name] = Fraction(1)
        if with_S:
            slots[FIELD_SLOT[FieldName.S]][FieldName.S] = Fraction(1)
        if with_F0:
            slots[FIELD_SLOT[FieldName.F0]][FieldName.F0] = Fraction(1)
        return cls(slots)

    @classmethod
    def single(cls, slot: int, name: FieldName, coeff=1) -> "FieldOctonion":
        slots = [dict() for _ in range(8)]
        slots[slot][FieldName(name)] = Fraction(coeff)
        return cls(slots)

    def __add__(self, other: "FieldOctonion") -> "FieldOctonion":
        slots = []
        for a, b in zip(self.slots, other.slots):
            merged = dict(a)
            for name, coeff in b.items():
                merged[name] = merged.get(name, Fraction(0)) + coeff
            slots.append(merged)
        return FieldOctonion(slots)

    def scale(self, factor) -> "FieldOctonion":
        factor = Fraction(factor)
        return FieldOctonion(
            [{n: c * factor for n, c in combo.items()} for combo in self.slots]
        )

    def derivative(self, var: str) -> Octonion:
        """d_var applied slot-wise: field names become derivative atoms."""
        coeffs = []
        for combo in self.slots:
            acc = SymbolicScalar.zero()
            for name, coeff in combo.items():
                acc = acc + SymbolicScalar.atom(var, name, coeff)
            coeffs.append(acc)
        return Octonion(coeffs)


@dataclass(frozen=True)
class MaxwellDecomposition:
    """The (scalar, Q-vector, e7Q-vector, e7) regrouping of an octonion.

    Q-vector components sit on (e1, e2, e4) and e7Q-vector components on
    (e3, e6, e5), both in x, y, z order.  Flattening and regrouping are
    inverse to each other, so nothing is lost.
    """

    scalar_part: SymbolicScalar
    q_vec: tuple[SymbolicScalar, SymbolicScalar, SymbolicScalar]
    e7q_vec: tuple[SymbolicScalar, SymbolicScalar, SymbolicScalar]
    e7_part: SymbolicScalar

    @classmethod
    def from_coefficients(cls, coeffs) -> "MaxwellDecomposition":
        c = [_as_symbolic(v) for v in coeffs]
        if len(c) != 8:
            raise ValueError("expected 8 octonion coefficients")
        return cls(
            scalar_part=c[0],
            q_vec=(c[1], c[2], c[4]),
            e7q_vec=(c[3], c[6], c[5]),
            e7_part=c[7],
        )

    def to_coefficients(self) -> tuple[SymbolicScalar, ...]:
        qx, qy, qz = self.q_vec
        ex3, ex6, ex5 = self.e7q_vec
        return (self.scalar_part, qx, qy, ex3, qz, ex5, ex6, self.e7_part)

    def components(self) -> list[tuple[str, SymbolicScalar]]:
        return [
            ("scalar", self.scalar_part),
            ("q_vec.x", self.q_vec[0]),
            ("q_vec.y", self.q_vec[1]),
            ("q_vec.z", self.q_vec[2]),
            ("e7q_vec.x", self.e7q_vec[0]),
            ("e7q_vec.y", self.e7q_vec[1]),
            ("e7q_vec.z", self.e7q_vec[2]),
            ("e7", self.e7_part),
        ]

    def __sub__(self, other: "MaxwellDecomposition") -> "MaxwellDecomposition":
        return MaxwellDecomposition.from_coefficients(
            tuple(a - b for a, b in
                  zip(self.to_coefficients(), other.to_coefficients()))
        )

    def __add__(self, other: "MaxwellDecomposition") -> "MaxwellDecomposition":
        return MaxwellDecomposition.from_coefficients(
            tuple(a + b for a, b in
                  zip(self.to_coefficients(), other.to_coefficients()))
        )

    @property
    def is_zero(self) -> bool:
        return all(not s for _, s in self.components())

    def render_lines(self) -> list[str]:
        return [f"{name} = {scalar.render()}" for name, scalar in self.components()]

    def to_json(self) -> dict:
        return {
            "scalar": self.scalar_part.to_json(),
            "q_vec": {
                "x": self.q_vec[0].to_json(),
                "y": self.q_vec[1].to_json(),
                "z": self.q_vec[2].to_json(),
            },
            "e7q_vec": {
                "x": self.e7q_vec[0].to_json(),
                "y": self.e7q_vec[1].to_json(),
                "z": self.e7q_vec[2].to_json(),
            },
            "e7": self.e7_part.to_json(),
        }


def dirac_coefficients(kind: AlgebraKind, f: FieldOctonion) -> tuple:
    """The eight raw coefficients of sum_mu e_mu * d_mu(f), ungrouped."""
    total = Octonion.zero()
    for var, basis_index in DIRAC_PAIRS:
        total = total + multiply(kind, Octonion.basis(basis_index), f.derivative(var))
    return tuple(_as_symbolic(v) for v in total.c)


def apply_dirac(kind: AlgebraKind, f: FieldOctonion) -> MaxwellDecomposition:
    """Expand the operator on f through the algebra product and regroup."""
    return MaxwellDecomposition.from_coefficients(dirac_coefficients(kind, f))


def _divergence(components) -> SymbolicScalar:
    acc = SymbolicScalar.zero()
    for var, name in zip(SPACE_VARS, components):
        acc = acc + SymbolicScalar.atom(var, name)
    return acc


def _curl(components) -> tuple[SymbolicScalar, SymbolicScalar, SymbolicScalar]:
    cx, cy, cz = components
    return (
        SymbolicScalar.atom("y", cz) - SymbolicScalar.atom("z", cy),
        SymbolicScalar.atom("z", cx) - SymbolicScalar.atom("x", cz),
        SymbolicScalar.atom("x", cy) - SymbolicScalar.atom("y", cx),
    )


def _gradient(name: FieldName) -> tuple[SymbolicScalar, SymbolicScalar, SymbolicScalar]:
    return tuple(SymbolicScalar.atom(var, name) for var in SPACE_VARS)


def _time_derivative(name: FieldName) -> SymbolicScalar:
    return SymbolicScalar.atom("t", name)


def expected_decomposition(kind: AlgebraKind, with_S: bool = False,
                           with_F0: bool = False) -> MaxwellDecomposition:
    """The Maxwell-side blocks built straight from vector calculus.

    scalar = -div E (+- dS/dt), Q = curl E -+ dB/dt (+ grad F0),
    e7Q = -curl B + dE/dt (- grad S), e7 = div B (+ dF0/dt); the sign of
    the time-derivative terms on B and S is the one the algebra kind
    picks (upper for octonions, lower for split octonions).  Everything
    here is assembled from div/curl/grad definitions, never from the
    algebra product, so the comparison against apply_dirac is two-route.
    """
    tsign = 1 if kind is AlgebraKind.SPLIT_OCTONION else -1

    scalar = -_divergence(E_COMPONENTS)
    curl_e = _curl(E_COMPONENTS)
    q = [curl_e[i] + tsign * _time_derivative(B_COMPONENTS[i]) for i in range(3)]
    curl_b = _curl(B_COMPONENTS)
    e7q = [-curl_b[i] + _time_derivative(E_COMPONENTS[i]) for i in range(3)]
    e7 = _divergence(B_COMPONENTS)

    if with_S:
        scalar = scalar + tsign * _time_derivative(FieldName.S)
        grad_s = _gradient(FieldName.S)
        e7q = [e7q[i] - grad_s[i] for i in range(3)]
    if with_F0:
        grad_f0 = _gradient(FieldName.F0)
        q = [q[i] + grad_f0[i] for i in range(3)]
        e7 = e7 + _time_derivative(FieldName.F0)

    return MaxwellDecomposition(
        scalar_part=scalar,
        q_vec=tuple(q),
        e7q_vec=tuple(e7q),
        e7_part=e7,
    )


@dataclass
class ExpansionVerdict:
    kind: AlgebraKind
    with_S: bool
    with_F0: bool
    expanded: MaxwellDecomposition
    expected: MaxwellDecomposition
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.ok


def verify_expansion(kind: AlgebraKind, with_S: bool = False,
                     with_F0: bool = False) -> ExpansionVerdict:
    """Exact component-by-component comparison of the two constructions."""
    f = FieldOctonion.standard(with_S=with_S, with_F0=with_F0)
    expanded = apply_dirac(kind, f)
    expected = expected_decomposition(kind, with_S=with_S, with_F0=with_F0)
    mismatches = []
    for (name, lhs), (_, rhs) in zip(expanded.components(), expected.components()):
        if lhs != rhs:
            mismatches.append(
                f"{name}: expanded [{lhs.render()}] != expected [{rhs.render()}]"
            )
    return ExpansionVerdict(kind, with_S, with_F0, expanded, expected, mismatches)


def sign_discrimination(with_S: bool = False, with_F0: bool = False
                        ) -> MaxwellDecomposition:
    """Split expansion minus octonion expansion of the same field."""
    f = FieldOctonion.standard(with_S=with_S, with_F0=with_F0)
    return apply_dirac(AlgebraKind.SPLIT_OCTONION, f) - \
        apply_dirac(AlgebraKind.OCTONION, f)
