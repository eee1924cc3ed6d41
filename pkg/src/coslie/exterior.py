"""Alternating forms, the scalar Chevalley-Eilenberg differential in low
degree, cocycle predicates, and the top-form coefficient of alpha ^ omega^n.

Sign convention: d(alpha)(x, y) = -alpha([x, y]), and in degree two
d(omega)(x, y, z) = -(omega([x,y],z) + omega([y,z],x) + omega([z,x],y)).
Kernels are convention-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Mapping

from . import scalars as sc
from .errors import DimensionMismatch, EvenDimension, ParametricUnsupported
from .lie_core import LieAlgebra
from .scalars import Scalar, Vector


@dataclass(frozen=True)
class OneForm:
    dim: int
    coeffs: tuple

    def __post_init__(self):
        c = sc.vec(self.coeffs)
        if len(c) != self.dim:
            raise DimensionMismatch("one-form coefficient count != dim")
        object.__setattr__(self, "coeffs", c)

    @staticmethod
    def zero(dim: int) -> "OneForm":
        return OneForm(dim, sc.zero_vec(dim))

    @staticmethod
    def dual(dim: int, k: int, coeff=1) -> "OneForm":
        """coeff * e^k (1-based k)."""
        return OneForm(
            dim, tuple(sc.as_scalar(coeff) if i == k - 1 else sc.ZERO for i in range(dim))
        )

    @staticmethod
    def from_dict(dim: int, comps: Mapping[int, Scalar]) -> "OneForm":
        v = [sc.ZERO] * dim
        for k, c in comps.items():
            v[k - 1] = sc.add(v[k - 1], sc.as_scalar(c))
        return OneForm(dim, tuple(v))

    def apply(self, x: Vector) -> Scalar:
        if len(x) != self.dim:
            raise DimensionMismatch("vector length != form dim")
        return sum((sc.mul(a, b) for a, b in zip(self.coeffs, x)), start=sc.ZERO)

    def is_zero(self) -> bool:
        return sc.vec_is_zero(self.coeffs)

    def subs(self, assignment) -> "OneForm":
        return OneForm(self.dim, tuple(sc.scalar_subs(c, assignment) for c in self.coeffs))

    def is_parametric(self) -> bool:
        return any(not sc.is_rational(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.dim == other.dim and sc.vecs_equal(self.coeffs, other.coeffs)


def _norm_pairs(dim: int, coeffs: Mapping) -> dict:
    out = {}
    for (i, j), c in coeffs.items():
        if not (0 <= i < j < dim):
            raise DimensionMismatch(f"bad two-form index pair {(i, j)}")
        c = sc.as_scalar(c)
        if not sc.is_zero(c):
            out[(i, j)] = c
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class TwoForm:
    dim: int
    coeffs: dict = field(default_factory=dict)  # (i, j) 0-based, i<j -> Scalar

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _norm_pairs(self.dim, self.coeffs))

    @staticmethod
    def zero(dim: int) -> "TwoForm":
        return TwoForm(dim, {})

    @staticmethod
    def from_dict(dim: int, comps: Mapping) -> "TwoForm":
        """1-based constructor: {(i, j): coeff}, i < j."""
        return TwoForm(dim, {(i - 1, j - 1): c for (i, j), c in comps.items()})

    def value_basis(self, i: int, j: int) -> Scalar:
        """omega(e_i, e_j), 0-based, any index order."""
        if i == j:
            return sc.ZERO
        if i < j:
            return self.coeffs.get((i, j), sc.ZERO)
        return sc.neg(self.coeffs.get((j, i), sc.ZERO))

    def value(self, x: Vector, y: Vector) -> Scalar:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length != form dim")
        total = sc.ZERO
        for (i, j), c in self.coeffs.items():
            term = sc.sub(sc.mul(x[i], y[j]), sc.mul(x[j], y[i]))
            total = sc.add(total, sc.mul(c, term))
        return total

    def contract(self, x: Vector) -> OneForm:
        """Inner product i_x omega as a one-form."""
        return OneForm(
            self.dim,
            tuple(
                self.value(x, sc.basis_vec(self.dim, l)) for l in range(self.dim)
            ),
        )

    def matrix(self) -> list:
        return [
            [self.value_basis(i, j) for j in range(self.dim)] for i in range(self.dim)
        ]

    def is_zero(self) -> bool:
        return not self.coeffs

    def subs(self, assignment) -> "TwoForm":
        return TwoForm(
            self.dim, {ij: sc.scalar_subs(c, assignment) for ij, c in self.coeffs.items()}
        )

    def is_parametric(self) -> bool:
        return any(not sc.is_rational(c) for c in self.coeffs.values())

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        if self.dim != other.dim:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            sc.scalars_equal(self.value_basis(i, j), other.value_basis(i, j))
            for i, j in keys
        )


@dataclass(frozen=True)
class ThreeForm:
    dim: int
    coeffs: dict = field(default_factory=dict)  # (i, j, k) 0-based, i<j<k

    def __post_init__(self):
        out = {}
        for (i, j, k), c in self.coeffs.items():
            if not (0 <= i < j < k < self.dim):
                raise DimensionMismatch(f"bad three-form index triple {(i, j, k)}")
            c = sc.as_scalar(c)
            if not sc.is_zero(c):
                out[(i, j, k)] = c
        object.__setattr__(self, "coeffs", dict(sorted(out.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def value_basis(self, i: int, j: int, k: int) -> Scalar:
        return self.coeffs.get((i, j, k), sc.ZERO)


# ---------------------------------------------------------------------------
# Differentials


def d1(L: LieAlgebra, alpha: OneForm) -> TwoForm:
    if alpha.dim != L.dim:
        raise DimensionMismatch("form/algebra dimension mismatch")
    coeffs = {}
    for (i, j), v in L.brackets.items():
        coeffs[(i, j)] = sc.neg(alpha.apply(v))
    return TwoForm(L.dim, coeffs)


def d2(L: LieAlgebra, omega: TwoForm) -> ThreeForm:
    if omega.dim != L.dim:
        raise DimensionMismatch("form/algebra dimension mismatch")
    coeffs = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                s = sc.add(
                    omega.value(L.bracket_basis(i, j), sc.basis_vec(L.dim, k)),
                    sc.add(
                        omega.value(L.bracket_basis(j, k), sc.basis_vec(L.dim, i)),
                        omega.value(L.bracket_basis(k, i), sc.basis_vec(L.dim, j)),
                    ),
                )
                coeffs[(i, j, k)] = sc.neg(s)
    return ThreeForm(L.dim, coeffs)


def is_1cocycle(L: LieAlgebra, alpha: OneForm) -> bool:
    return d1(L, alpha).is_zero()


def is_2cocycle(L: LieAlgebra, omega: TwoForm) -> bool:
    return d2(L, omega).is_zero()


# ---------------------------------------------------------------------------
# Volume coefficient


def _perm_sign(seq) -> int:
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def volume_coeff(L: LieAlgebra, alpha: OneForm, omega: TwoForm) -> Scalar:
    """Coefficient of e^{1...2n+1} in alpha ^ omega^n, by direct expansion.

    omega^n is expanded over unordered n-element sets of omega's monomials
    with pairwise-disjoint support (times n!), each signed by the parity of
    its concatenated index sequence.
    """
    if L.dim % 2 == 0:
        raise EvenDimension("volume coefficient needs odd dimension")
    if alpha.dim != L.dim or omega.dim != L.dim:
        raise DimensionMismatch("form/algebra dimension mismatch")
    n = (L.dim - 1) // 2
    total = sc.ZERO
    monomials = list(omega.coeffs.items())
    scale = Fraction(factorial(n))
    for combo in combinations(monomials, n):
        support = [x for (pair, _) in combo for x in pair]
        if len(set(support)) != 2 * n:
            continue
        missing = next(m for m in range(L.dim) if m not in support)
        coeff = alpha.coeffs[missing]
        if sc.is_zero(coeff):
            continue
        for _, c in combo:
            coeff = sc.mul(coeff, c)
        sign = _perm_sign([missing] + support)
        term = sc.mul(coeff, scale if sign > 0 else -scale)
        total = sc.add(total, term)
    return total


# ---------------------------------------------------------------------------
# Cocycle spaces


def _pair_index(dim: int):
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    return pairs, {p: n for n, p in enumerate(pairs)}


def cocycle_spaces(L: LieAlgebra):
    """(basis of Z^1 as OneForms, basis of Z^2 as TwoForms), echelon order."""
    if L.is_parametric():
        raise ParametricUnsupported("cocycle spaces need rational structure constants")
    dim = L.dim
    pairs, _ = _pair_index(dim)

    # Z^1: rows indexed by bracket pairs, columns by dual basis index l.
    rows1 = [[v[l] for l in range(dim)] for v in (L.bracket_basis(i, j) for i, j in pairs)]
    if rows1:
        z1 = [OneForm(dim, v) for v in sc.nullspace(rows1)]
    else:
        z1 = [OneForm.dual(dim, l + 1) for l in range(dim)]

    # Z^2: rows indexed by triples, columns by pair monomials e^{pq}.
    rows2 = []
    for i in range(dim):
        ei = sc.basis_vec(dim, i)
        for j in range(i + 1, dim):
            ej = sc.basis_vec(dim, j)
            for k in range(j + 1, dim):
                ek = sc.basis_vec(dim, k)
                row = []
                for (p, q) in pairs:
                    mono = TwoForm(dim, {(p, q): sc.ONE})
                    s = sc.add(
                        mono.value(L.bracket_basis(i, j), ek),
                        sc.add(
                            mono.value(L.bracket_basis(j, k), ei),
                            mono.value(L.bracket_basis(k, i), ej),
                        ),
                    )
                    row.append(s)
                rows2.append(row)
    if rows2:
        z2 = [
            TwoForm(dim, {pairs[c]: v[c] for c in range(len(pairs))})
            for v in sc.nullspace(rows2)
        ]
    else:
        z2 = [TwoForm(dim, {p: sc.ONE}) for p in pairs]
    return z1, z2
