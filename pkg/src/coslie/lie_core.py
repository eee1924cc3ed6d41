"""Lie algebras by structure constants.

Brackets are stored sparsely for i < j only (0-based internally), so
antisymmetry holds by construction and cannot be violated by bad input.
Human-facing constructors and defect reports use 1-based indices to match
the usual e1..en naming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import scalars as sc
from .errors import DimensionMismatch, ParametricUnsupported
from .scalars import Vector


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    brackets: dict = field(default_factory=dict)  # (i, j) 0-based, i<j -> Vector
    basis_names: tuple = ()

    def __post_init__(self):
        if self.dim <= 0:
            raise ValueError("dimension must be positive")
        if not self.basis_names:
            object.__setattr__(
                self, "basis_names", tuple(f"e{i + 1}" for i in range(self.dim))
            )
        if len(self.basis_names) != self.dim:
            raise DimensionMismatch("basis_names length != dim")
        clean = {}
        for (i, j), v in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise DimensionMismatch(f"bad bracket index pair {(i, j)}")
            if len(v) != self.dim:
                raise DimensionMismatch("bracket value has wrong length")
            v = sc.vec(v)
            if not sc.vec_is_zero(v):
                clean[(i, j)] = v
        object.__setattr__(self, "brackets", clean)

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_table(dim: int, table: Mapping) -> "LieAlgebra":
        """1-based constructor: {(i, j): {k: coeff}} with i < j."""
        brackets = {}
        for (i, j), comps in table.items():
            v = [sc.ZERO] * dim
            for k, coeff in comps.items():
                v[k - 1] = sc.add(v[k - 1], sc.as_scalar(coeff))
            brackets[(i - 1, j - 1)] = tuple(v)
        return LieAlgebra(dim, brackets)

    @staticmethod
    def abelian(dim: int) -> "LieAlgebra":
        return LieAlgebra(dim, {})

    # -- basic structure ----------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for 0-based i, j in any order."""
        if i == j:
            return sc.zero_vec(self.dim)
        if i < j:
            return self.brackets.get((i, j), sc.zero_vec(self.dim))
        v = self.brackets.get((j, i))
        return sc.zero_vec(self.dim) if v is None else tuple(sc.neg(x) for x in v)

    def is_parametric(self) -> bool:
        return any(
            not isinstance(x, Fraction) and not sc.is_rational(x)
            for v in self.brackets.values()
            for x in v
        )

    def subs(self, assignment: Mapping[str, Fraction]) -> "LieAlgebra":
        return LieAlgebra(
            self.dim,
            {
                ij: tuple(sc.scalar_subs(x, assignment) for x in v)
                for ij, v in self.brackets.items()
            },
            self.basis_names,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        if self.dim != other.dim:
            return False
        keys = set(self.brackets) | set(other.brackets)
        return all(
            sc.vecs_equal(self.bracket_basis(i, j), other.bracket_basis(i, j))
            for i, j in keys
        )


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: tuple  # rows; column i is the image of e_i

    def __post_init__(self):
        m = tuple(tuple(sc.as_scalar(x) for x in row) for row in self.matrix)
        if len(m) != self.target_dim or any(len(r) != self.source_dim for r in m):
            raise DimensionMismatch("matrix shape does not match declared dims")
        object.__setattr__(self, "matrix", m)

    @staticmethod
    def from_columns(columns: Sequence[Vector]) -> "LinearMap":
        target = len(columns[0])
        rows = tuple(
            tuple(sc.as_scalar(col[r]) for col in columns) for r in range(target)
        )
        return LinearMap(len(columns), target, rows)

    @staticmethod
    def zero(n: int) -> "LinearMap":
        return LinearMap(n, n, tuple((sc.ZERO,) * n for _ in range(n)))

    @staticmethod
    def identity(n: int) -> "LinearMap":
        return LinearMap(
            n, n, tuple(tuple(sc.ONE if i == j else sc.ZERO for j in range(n)) for i in range(n))
        )

    def column(self, i: int) -> Vector:
        return tuple(row[i] for row in self.matrix)

    def apply(self, x: Vector) -> Vector:
        if len(x) != self.source_dim:
            raise DimensionMismatch("vector length != source dim")
        return tuple(
            sum((sc.mul(row[i], x[i]) for i in range(self.source_dim)), start=sc.ZERO)
            for row in self.matrix
        )

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap.from_columns(
            [self.apply(other.column(i)) for i in range(other.source_dim)]
        )

    def is_parametric(self) -> bool:
        return any(not sc.is_rational(x) for row in self.matrix for x in row)


# ---------------------------------------------------------------------------
# Operations


def bracket(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """Bilinear antisymmetric extension of the structure constants."""
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch("vector length != algebra dim")
    out = sc.zero_vec(L.dim)
    for (i, j), v in L.brackets.items():
        c = sc.sub(sc.mul(x[i], y[j]), sc.mul(x[j], y[i]))
        if not sc.is_zero(c):
            out = sc.vec_add(out, sc.vec_scale(c, v))
    return out


def check_jacobi(L: LieAlgebra) -> list:
    """All (i, j, k) 1-based triples with a nonzero cyclic defect."""
    defects = []
    for i in range(L.dim):
        ei = sc.basis_vec(L.dim, i)
        for j in range(i + 1, L.dim):
            ej = sc.basis_vec(L.dim, j)
            for k in range(j + 1, L.dim):
                ek = sc.basis_vec(L.dim, k)
                d = sc.vec_add(
                    bracket(L, L.bracket_basis(i, j), ek),
                    sc.vec_add(
                        bracket(L, L.bracket_basis(j, k), ei),
                        bracket(L, L.bracket_basis(k, i), ej),
                    ),
                )
                if not sc.vec_is_zero(d):
                    defects.append((i + 1, j + 1, k + 1, d))
    return defects


def ad(L: LieAlgebra, x: Vector) -> LinearMap:
    """Matrix of y -> [x, y]."""
    if len(x) != L.dim:
        raise DimensionMismatch("vector length != algebra dim")
    cols = [bracket(L, x, sc.basis_vec(L.dim, j)) for j in range(L.dim)]
    return LinearMap.from_columns(cols)


def _require_rational(L: LieAlgebra):
    if L.is_parametric():
        raise ParametricUnsupported(
            "operation needs rational structure constants; substitute parameters first"
        )


def center(L: LieAlgebra) -> list:
    """Echelon basis of {x : [x, y] = 0 for all y}."""
    _require_rational(L)
    rows = []
    for j in range(L.dim):
        for k in range(L.dim):
            rows.append([L.bracket_basis(i, j)[k] for i in range(L.dim)])
    return sc.nullspace(rows)


def _span_rows(vectors: list) -> list:
    """Echelon basis (nonzero rref rows) of the span of the given vectors."""
    if not vectors:
        return []
    rows, _ = sc.rref([list(v) for v in vectors])
    return [tuple(r) for r in rows]


def derived_series(L: LieAlgebra) -> list:
    """D^0 = g, D^{k+1} = [D^k, D^k] until stabilization."""
    _require_rational(L)
    chain = [[sc.basis_vec(L.dim, i) for i in range(L.dim)]]
    while True:
        current = chain[-1]
        products = [
            bracket(L, current[p], current[q])
            for p in range(len(current))
            for q in range(p + 1, len(current))
        ]
        nxt = _span_rows([v for v in products if not sc.vec_is_zero(v)])
        chain.append(nxt)
        if len(nxt) == len(current) or not nxt:
            return chain


def is_solvable(L: LieAlgebra) -> bool:
    return not derived_series(L)[-1]


def derived_dim(L: LieAlgebra) -> int:
    return len(derived_series(L)[1])


def is_derivation(L: LieAlgebra, phi: LinearMap) -> list:
    """Defects phi([x,y]) - [phi x, y] - [x, phi y] on basis pairs; [] = pass."""
    if phi.source_dim != L.dim or phi.target_dim != L.dim:
        raise DimensionMismatch("map is not an endomorphism of the algebra")
    defects = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            d = sc.vec_sub(
                phi.apply(L.bracket_basis(i, j)),
                sc.vec_add(
                    bracket(L, phi.column(i), sc.basis_vec(L.dim, j)),
                    bracket(L, sc.basis_vec(L.dim, i), phi.column(j)),
                ),
            )
            if not sc.vec_is_zero(d):
                defects.append((i + 1, j + 1, d))
    return defects


@dataclass
class IsoReport:
    invertible: bool
    bracket_defects: list
    alpha_defect: Optional[tuple]
    omega_defects: list
    ok: bool

    def __str__(self):
        if self.ok:
            return "isomorphism"
        bits = []
        if not self.invertible:
            bits.append("map not invertible")
        if self.bracket_defects:
            bits.append(f"bracket defects at {[d[:2] for d in self.bracket_defects]}")
        if self.alpha_defect is not None:
            bits.append("alpha pullback mismatch")
        if self.omega_defects:
            bits.append(f"omega pullback mismatch at {[d[:2] for d in self.omega_defects]}")
        return "; ".join(bits)


def check_isomorphism(
    L1: LieAlgebra,
    L2: LieAlgebra,
    M: LinearMap,
    alpha1=None,
    alpha2=None,
    omega1=None,
    omega2=None,
) -> IsoReport:
    """True iff M is invertible, M[x,y]_1 = [Mx, My]_2, and pullbacks match.

    Forms follow the convention M*(alpha2) = alpha1, M*(omega2) = omega1.
    """
    if L1.dim != L2.dim or M.source_dim != L1.dim or M.target_dim != L2.dim:
        raise DimensionMismatch("isomorphism check needs equal dimensions")
    invertible = not sc.is_zero(sc.det_poly([list(r) for r in M.matrix]))
    bracket_defects = []
    for i in range(L1.dim):
        for j in range(i + 1, L1.dim):
            d = sc.vec_sub(
                M.apply(L1.bracket_basis(i, j)),
                bracket(L2, M.column(i), M.column(j)),
            )
            if not sc.vec_is_zero(d):
                bracket_defects.append((i + 1, j + 1, d))
    alpha_defect = None
    if alpha1 is not None and alpha2 is not None:
        pulled = tuple(alpha2.apply(M.column(i)) for i in range(L1.dim))
        if not sc.vecs_equal(pulled, alpha1.coeffs):
            alpha_defect = sc.vec_sub(pulled, alpha1.coeffs)
    omega_defects = []
    if omega1 is not None and omega2 is not None:
        for i in range(L1.dim):
            for j in range(i + 1, L1.dim):
                got = omega2.value(M.column(i), M.column(j))
                want = omega1.value_basis(i, j)
                if not sc.scalars_equal(got, want):
                    omega_defects.append((i + 1, j + 1, sc.sub(got, want)))
    ok = invertible and not bracket_defects and alpha_defect is None and not omega_defects
    return IsoReport(invertible, bracket_defects, alpha_defect, omega_defects, ok)
