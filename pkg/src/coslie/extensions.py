"""Double extensions of Lie algebras and the three cosymplectic
construction procedures built on top of them.

The extension of an n-dimensional base is (n+2)-dimensional with basis
ordered (e_1 .. e_n, d, e), matching the worked examples this package
verifies: d sits at index n, e at index n+1 (0-based).  The bracket is

    [x, y] = [x, y]_base + theta(x, y) e      x, y in the base
    [d, x] = phi(x) + lambda(x) e
    [d, e] = v + t e
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import scalars as sc
from .cosymplectic import (
    CosymplecticStructure,
    SymplecticPair,
    ist_defects_empty,
    kernel_symplectic,
    to_symplectic,
    validate,
)
from .errors import (
    ConditionsFail,
    DimensionMismatch,
    NotCosymplectic,
)
from .exterior import OneForm, TwoForm
from .lie_core import LieAlgebra, LinearMap, bracket, check_jacobi, is_derivation
from .scalars import Scalar, Vector


@dataclass(frozen=True)
class ExtensionData:
    phi: LinearMap
    lam: OneForm
    v: Vector
    t: Scalar
    theta: TwoForm

    def __post_init__(self):
        n = self.phi.source_dim
        if (
            self.phi.target_dim != n
            or self.lam.dim != n
            or len(self.v) != n
            or self.theta.dim != n
        ):
            raise DimensionMismatch("extension data dimensions disagree")
        object.__setattr__(self, "v", sc.vec(self.v))
        object.__setattr__(self, "t", sc.as_scalar(self.t))

    @property
    def dim(self) -> int:
        return self.phi.source_dim

    @staticmethod
    def zero(n: int) -> "ExtensionData":
        return ExtensionData(
            LinearMap.zero(n), OneForm.zero(n), sc.zero_vec(n), sc.ZERO, TwoForm.zero(n)
        )


def partial_phi(L: LieAlgebra, phi: LinearMap) -> dict:
    """The vector-valued 2-form phi([x,y]) - [phi x, y] - [x, phi y]."""
    out = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            out[(i, j)] = sc.vec_sub(
                phi.apply(L.bracket_basis(i, j)),
                sc.vec_add(
                    bracket(L, phi.column(i), sc.basis_vec(L.dim, j)),
                    bracket(L, sc.basis_vec(L.dim, i), phi.column(j)),
                ),
            )
    return out


def form_twist(theta: TwoForm, phi: LinearMap) -> TwoForm:
    """theta_phi(x, y) = theta(phi x, y) + theta(x, phi y)."""
    n = theta.dim
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            coeffs[(i, j)] = sc.add(
                theta.value(phi.column(i), sc.basis_vec(n, j)),
                theta.value(sc.basis_vec(n, i), phi.column(j)),
            )
    return TwoForm(n, coeffs)


def prop_conditions(Gbar: LieAlgebra, E: ExtensionData) -> list:
    """Failures of the three double-extension compatibility conditions.

    1. phi([x,y]) - [phi x, y] - [x, phi y] = theta(x, y) v
    2. t theta - theta_phi = d(lambda)
    3. v central and in ker(theta)
    Works symbolically; an empty list means the assembled bracket is Lie.
    """
    n = Gbar.dim
    failures = []
    dphi = partial_phi(Gbar, E.phi)
    for (i, j), val in dphi.items():
        want = sc.vec_scale(E.theta.value_basis(i, j), E.v)
        if not sc.vecs_equal(val, want):
            failures.append(f"partial(phi) != theta v at (e{i + 1}, e{j + 1})")
    twist = form_twist(E.theta, E.phi)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = sc.sub(
                sc.mul(E.t, E.theta.value_basis(i, j)), twist.value_basis(i, j)
            )
            rhs = sc.neg(E.lam.apply(Gbar.bracket_basis(i, j)))
            if not sc.scalars_equal(lhs, rhs):
                failures.append(f"t theta - theta_phi != d(lambda) at (e{i + 1}, e{j + 1})")
    for j in range(n):
        if not sc.vec_is_zero(bracket(Gbar, E.v, sc.basis_vec(n, j))):
            failures.append(f"v not central against e{j + 1}")
            break
    for j in range(n):
        if not sc.is_zero(E.theta.value(E.v, sc.basis_vec(n, j))):
            failures.append(f"v not in ker(theta) against e{j + 1}")
            break
    return failures


def assemble_extension(Gbar: LieAlgebra, E: ExtensionData) -> LieAlgebra:
    """Build the (n+2)-dimensional bracket without any condition checks."""
    n = Gbar.dim
    d_idx, e_idx = n, n + 1
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            base = Gbar.bracket_basis(i, j)
            th = E.theta.value_basis(i, j)
            if not sc.vec_is_zero(base) or not sc.is_zero(th):
                brackets[(i, j)] = tuple(base) + (sc.ZERO, th)
    for i in range(n):
        img = tuple(E.phi.column(i)) + (sc.ZERO, E.lam.coeffs[i])
        if not sc.vec_is_zero(img):
            # stored as [e_i, d] = -[d, e_i]
            brackets[(i, d_idx)] = tuple(sc.neg(x) for x in img)
    de = tuple(E.v) + (sc.ZERO, E.t)
    if not sc.vec_is_zero(de):
        brackets[(d_idx, e_idx)] = de
    return LieAlgebra(n + 2, brackets)


def double_extend(Gbar: LieAlgebra, E: ExtensionData) -> LieAlgebra:
    """Checked double extension.

    Verifies the compatibility conditions and, independently, the Jacobi
    identity of the assembled bracket; the two verdicts must agree.
    """
    failures = prop_conditions(Gbar, E)
    L = assemble_extension(Gbar, E)
    defects = check_jacobi(L)
    if failures:
        raise ConditionsFail(failures + [f"jacobi defects: {len(defects)} triple(s)"])
    if defects:
        raise AssertionError(
            "conditions hold but Jacobi fails; construction is inconsistent"
        )
    return L


def ist_check(P: SymplecticPair, D: LinearMap) -> bool:
    """omega(Dx, y) = -omega(x, Dy) on all basis pairs."""
    if D.source_dim != P.algebra.dim:
        raise DimensionMismatch("map/pair dimension mismatch")
    return ist_defects_empty(P, D)


@dataclass
class IstComponentReport:
    cond_i: list
    cond_ii: list
    cond_iii: list
    cond_iv: Optional[Scalar]
    direct: bool
    ok: bool
    agree: bool

    def failed(self) -> list:
        out = []
        if self.cond_i:
            out.append("i")
        if self.cond_ii:
            out.append("ii")
        if self.cond_iii:
            out.append("iii")
        if self.cond_iv is not None:
            out.append("iv")
        return out


def ist_component_check(
    Gbar: LieAlgebra, abar: OneForm, obar: TwoForm, E: ExtensionData
) -> IstComponentReport:
    """Componentwise test that D = (phi, lambda, v, t) is an i.s.t. of the
    symplectization (Gbar + <e>, obar + abar ^ e^*).

    The four components: (i) phi restricted to ker(abar) is an i.s.t. of
    obar there; (ii) lambda(x) = obar(x, phi(xi)); (iii) obar(v, x) =
    abar(phi(x)); (iv) t = -abar(phi(xi)); all for x in ker(abar), xi the
    Reeb vector.  Also runs the direct i.s.t. test on the assembled map;
    the two verdicts must agree.
    """
    rep = validate(Gbar, abar, obar)
    if not rep.ok:
        raise NotCosymplectic(rep)
    S = CosymplecticStructure.make(Gbar, abar, obar)
    red = kernel_symplectic(S)
    m = red.pair.algebra.dim
    hbasis = red.basis[:m]
    xi = S.reeb
    phi_xi = E.phi.apply(xi)

    cond_i = []
    for a in range(m):
        for b in range(a + 1, m):
            val = sc.add(
                obar.value(E.phi.apply(hbasis[a]), hbasis[b]),
                obar.value(hbasis[a], E.phi.apply(hbasis[b])),
            )
            if not sc.is_zero(val):
                cond_i.append((a + 1, b + 1, val))
    cond_ii = []
    for a in range(m):
        val = sc.sub(E.lam.apply(hbasis[a]), obar.value(hbasis[a], phi_xi))
        if not sc.is_zero(val):
            cond_ii.append((a + 1, val))
    cond_iii = []
    for a in range(m):
        val = sc.sub(obar.value(E.v, hbasis[a]), abar.apply(E.phi.apply(hbasis[a])))
        if not sc.is_zero(val):
            cond_iii.append((a + 1, val))
    iv_defect = sc.add(E.t, abar.apply(phi_xi))
    cond_iv = None if sc.is_zero(iv_defect) else iv_defect

    pair = to_symplectic(Gbar, abar, obar)
    n = Gbar.dim
    cols = [tuple(E.phi.column(i)) + (E.lam.coeffs[i],) for i in range(n)]
    cols.append(tuple(E.v) + (E.t,))
    D = LinearMap.from_columns(cols)
    direct = ist_check(pair, D)
    ok = not cond_i and not cond_ii and not cond_iii and cond_iv is None
    return IstComponentReport(cond_i, cond_ii, cond_iii, cond_iv, direct, ok, ok == direct)


@dataclass
class ConstructionResult:
    structure: CosymplecticStructure
    base_dim: int

    @property
    def algebra(self) -> LieAlgebra:
        return self.structure.algebra


def _extend_form_with_e_star(abar: OneForm, obar: TwoForm, n: int) -> TwoForm:
    """obar + abar ^ e^* on the (n+2)-dimensional extension basis."""
    coeffs = dict(obar.coeffs)
    for i in range(n):
        c = abar.coeffs[i]
        if not sc.is_zero(c):
            coeffs[(i, n + 1)] = c
    return TwoForm(n + 2, coeffs)


def _d_wedge_e_star(obar: TwoForm, n: int) -> TwoForm:
    coeffs = dict(obar.coeffs)
    coeffs[(n, n + 1)] = sc.ONE
    return TwoForm(n + 2, coeffs)


def construct_A(
    Gbar: LieAlgebra, abar: OneForm, obar: TwoForm, E: ExtensionData
) -> ConstructionResult:
    """Double extension with theta = 0 carrying (obar + abar ^ e^*, d^*).

    Hypotheses checked: the i.s.t. component conditions, phi a derivation,
    v central, and the two closure conditions obar([x,y], phi(xi)) = 0 and
    obar([phi(xi), xi], x) = 0 over ker(abar).  The Reeb vector of the
    result is d.
    """
    n = Gbar.dim
    failures = []
    if not E.theta.is_zero():
        failures.append("theta must be zero for this construction")
    ist_rep = ist_component_check(Gbar, abar, obar, E)
    if not ist_rep.ok:
        failures.append(f"extension data is not an i.s.t.: components {ist_rep.failed()}")
    if is_derivation(Gbar, E.phi):
        failures.append("phi is not a derivation of the base")
    if any(
        not sc.vec_is_zero(bracket(Gbar, E.v, sc.basis_vec(n, j))) for j in range(n)
    ):
        failures.append("v is not central in the base")
    S = CosymplecticStructure.make(Gbar, abar, obar)
    red = kernel_symplectic(S)
    m = red.pair.algebra.dim
    hbasis = red.basis[:m]
    xi = S.reeb
    phi_xi = E.phi.apply(xi)
    for a in range(m):
        for b in range(a + 1, m):
            if not sc.is_zero(obar.value(bracket(Gbar, hbasis[a], hbasis[b]), phi_xi)):
                failures.append(f"obar([h{a + 1}, h{b + 1}], phi(xi)) != 0")
    br = bracket(Gbar, phi_xi, xi)
    for a in range(m):
        if not sc.is_zero(obar.value(br, hbasis[a])):
            failures.append(f"obar([phi(xi), xi], h{a + 1}) != 0")
            break
    if failures:
        raise ConditionsFail(failures)
    L = double_extend(Gbar, E)
    alpha = OneForm.dual(n + 2, n + 1)  # d^*
    omega = _extend_form_with_e_star(abar, obar, n)
    S_out = CosymplecticStructure.make(L, alpha, omega)
    want = sc.basis_vec(n + 2, n)
    if not sc.vecs_equal(S_out.reeb, want):
        raise AssertionError("Reeb vector of the extension is not d")
    return ConstructionResult(S_out, n)


def construct_B(
    Gbar: LieAlgebra,
    abar: OneForm,
    obar: TwoForm,
    E: ExtensionData,
    alpha_d: Scalar = sc.ZERO,
) -> ConstructionResult:
    """Double extension by theta = obar_phi with v = 0, carrying
    (obar + d^* ^ e^*, abar extended by alpha(d) = alpha_d, alpha(e) = 0).

    Conditions checked: v = 0, theta = obar_phi, phi a derivation,
    abar o phi = 0, and t obar_phi - obar_{phi,phi} = d(lambda).  The Reeb
    vector stays the one of the base.
    """
    n = Gbar.dim
    failures = []
    obar_phi = form_twist(obar, E.phi)
    if not sc.vec_is_zero(E.v):
        failures.append("v must be zero for this construction")
    if E.theta != obar_phi:
        failures.append("theta must equal obar_phi")
    if is_derivation(Gbar, E.phi):
        failures.append("phi is not a derivation of the base")
    comp = [abar.apply(E.phi.column(i)) for i in range(n)]
    if any(not sc.is_zero(c) for c in comp):
        failures.append("abar o phi != 0")
    twist2 = form_twist(obar_phi, E.phi)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = sc.sub(
                sc.mul(E.t, obar_phi.value_basis(i, j)), twist2.value_basis(i, j)
            )
            rhs = sc.neg(E.lam.apply(Gbar.bracket_basis(i, j)))
            if not sc.scalars_equal(lhs, rhs):
                failures.append(
                    f"t obar_phi - obar_phiphi != d(lambda) at (e{i + 1}, e{j + 1})"
                )
    rep = validate(Gbar, abar, obar)
    if not rep.ok:
        failures.append("base triple is not cosymplectic")
    if failures:
        raise ConditionsFail(failures)
    L = double_extend(Gbar, ExtensionData(E.phi, E.lam, E.v, E.t, obar_phi))
    alpha = OneForm(
        n + 2, tuple(abar.coeffs) + (sc.as_scalar(alpha_d), sc.ZERO)
    )
    omega = _d_wedge_e_star(obar, n)
    S_out = CosymplecticStructure.make(L, alpha, omega)
    S_base = CosymplecticStructure.make(Gbar, abar, obar)
    want = tuple(S_base.reeb) + (sc.ZERO, sc.ZERO)
    if not sc.vecs_equal(S_out.reeb, want):
        raise AssertionError("Reeb vector of the extension moved")
    return ConstructionResult(S_out, n)


def construct_C(
    Gbar: LieAlgebra,
    abar: OneForm,
    obar: TwoForm,
    phi: LinearMap,
    v: Vector,
    alpha_d: Scalar = sc.ZERO,
) -> ConstructionResult:
    """Double extension by theta = 0 with forced lambda = abar o phi and
    t = abar(v), carrying (obar + d^* ^ e^*, abar extended by
    alpha(d) = alpha_d and alpha(e) = -1).

    Conditions checked: obar_phi = 0, abar(phi([x, y])) = 0, phi a
    derivation, and v central with obar(v, .) = 0.  The Reeb vector stays
    the one of the base.
    """
    n = Gbar.dim
    failures = []
    lam = OneForm(n, tuple(abar.apply(phi.column(i)) for i in range(n)))
    t = abar.apply(v)
    obar_phi = form_twist(obar, phi)
    if not obar_phi.is_zero():
        failures.append("obar_phi != 0")
    if is_derivation(Gbar, phi):
        failures.append("phi is not a derivation of the base")
    for i in range(n):
        for j in range(i + 1, n):
            if not sc.is_zero(abar.apply(phi.apply(Gbar.bracket_basis(i, j)))):
                failures.append(f"abar(phi([e{i + 1}, e{j + 1}])) != 0")
    if any(
        not sc.vec_is_zero(bracket(Gbar, sc.vec(v), sc.basis_vec(n, j))) for j in range(n)
    ):
        failures.append("v is not central in the base")
    if any(
        not sc.is_zero(obar.value(sc.vec(v), sc.basis_vec(n, j))) for j in range(n)
    ):
        failures.append("v is not in ker(obar)")
    rep = validate(Gbar, abar, obar)
    if not rep.ok:
        failures.append("base triple is not cosymplectic")
    if failures:
        raise ConditionsFail(failures)
    E = ExtensionData(phi, lam, sc.vec(v), t, TwoForm.zero(n))
    L = double_extend(Gbar, E)
    alpha = OneForm(
        n + 2, tuple(abar.coeffs) + (sc.as_scalar(alpha_d), sc.as_scalar(-1))
    )
    omega = _d_wedge_e_star(obar, n)
    S_out = CosymplecticStructure.make(L, alpha, omega)
    S_base = CosymplecticStructure.make(Gbar, abar, obar)
    want = tuple(S_base.reeb) + (sc.ZERO, sc.ZERO)
    if not sc.vecs_equal(S_out.reeb, want):
        raise AssertionError("Reeb vector of the extension moved")
    return ConstructionResult(S_out, n)
