from __future__ import annotations

import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from coslie import scalars as sc
from coslie.catalog import get_entry, heisenberg, instantiate, list_entries
from coslie.cosymplectic import (
    CosymplecticStructure,
    LsaTable,
    SymplecticPair,
    _lsa_via_parts,
    _lsa_via_phi,
    biinvariance,
    cosymplectic_lsa,
    exists_cosymplectic,
    from_symplectic_derivation,
    kernel_symplectic,
    left_symmetry_defect,
    phi_map,
    reeb,
    symplectic_lsa,
    to_symplectic,
    validate,
)
from coslie.errors import (
    DegenerateOmega,
    EvenDimension,
    NotDerivation,
    NotIst,
    SingularPhi,
)
from coslie.exterior import OneForm, TwoForm, is_2cocycle
from coslie.lie_core import LieAlgebra, LinearMap, check_isomorphism
from coslie.scalars import Poly, ratfn

E3 = lambda k: OneForm.dual(3, k)
W = lambda d: TwoForm.from_dict(3, d)


def make(L, alpha, omega):
    return CosymplecticStructure.make(L, alpha, omega)


def validated_catalog_structures():
    """Deterministic list of (name, structure) for every catalog entry that
    yields a validated instance, across dimensions 3, 5 and 7."""
    out = []
    for name in list_entries():
        entry = get_entry(name)
        if entry.kind == "heisenberg":
            continue
        if entry.kind == "aff":
            from coslie.catalog import aff_corrected_algebra, AFF_ALPHA, AFF_OMEGA

            out.append((name + "@lam=0", make(entry.algebra({"lam": F(0)}), AFF_ALPHA, AFF_OMEGA)))
            out.append(
                (name + "@corrected-lam=1", make(aff_corrected_algebra(F(1)), AFF_ALPHA, AFF_OMEGA))
            )
            continue
        L, alpha, omega = instantiate(name, entry.sample)
        rep = validate(L, alpha, omega)
        if rep.ok:
            out.append((name, make(L, alpha, omega)))
    return out


STRUCTURES = validated_catalog_structures()


# ---------------------------------------------------------------------------
# Phi and validation


def test_phi_map_example(g21):
    P = phi_map(g21, E3(3), W({(1, 2): 1}))
    assert [P[l][0] for l in range(3)] == [F(0), F(1), F(0)]   # Phi(e1) = e^2
    assert [P[l][1] for l in range(3)] == [F(-1), F(0), F(0)]  # Phi(e2) = -e^1
    assert [P[l][2] for l in range(3)] == [F(0), F(0), F(1)]   # Phi(e3) = e^3


def test_phi_zero_forms(g21):
    P = phi_map(g21, OneForm.zero(3), TwoForm.zero(3))
    assert all(x == 0 for row in P for x in row)


def test_phi_heisenberg_pairs_nothing_with_the_center():
    h5 = heisenberg(2)
    from coslie.exterior import cocycle_spaces

    z1, z2 = cocycle_spaces(h5)
    # any cocycle choice pairs the central element to zero
    for a in z1:
        assert sc.is_zero(a.coeffs[4])
    for w in z2:
        assert all(sc.is_zero(w.value_basis(i, 4)) for i in range(5))


def test_validate_examples(g21):
    assert validate(g21, E3(3), W({(1, 2): 1})).ok
    bad = validate(g21, E3(1), W({(1, 2): 1}))
    assert not bad.ok and not bad.cocycle1
    assert validate(LieAlgebra.abelian(3), E3(3), W({(1, 2): 1})).ok
    with pytest.raises(EvenDimension):
        validate(LieAlgebra.abelian(4), OneForm.zero(4), TwoForm.zero(4))


def test_validate_parametric_returns_polynomial(g21):
    lam = Poly.var("lam")
    rep = validate(g21, OneForm(3, (sc.ZERO, sc.ZERO, lam)), W({(1, 2): 1}))
    assert rep.ok
    assert isinstance(rep.volume, Poly)
    assert sc.scalars_equal(rep.volume, lam)


def test_reeb_examples(g21, g34):
    assert reeb(g21, E3(3), W({(1, 2): 1})) == (F(0), F(0), F(1))
    xi = reeb(g34, OneForm.from_dict(3, {3: F(2)}), W({(1, 2): 1}))
    assert xi == (F(0), F(0), F(1, 2))
    with pytest.raises(SingularPhi):
        reeb(g21, E3(3), TwoForm.zero(3))


def test_reeb_invariants_on_catalog():
    for name, S in STRUCTURES:
        assert sc.scalars_equal(S.alpha.apply(S.reeb), sc.ONE), name
        contracted = S.omega.contract(S.reeb)
        assert contracted.is_zero(), name


# ---------------------------------------------------------------------------
# Existence


def test_exists_h3_yes_h5_no():
    assert exists_cosymplectic(heisenberg(1)).exists
    res5 = exists_cosymplectic(heisenberg(2))
    assert not res5.exists and sc.is_zero(res5.det)


def test_exists_perfect_algebra_no(sl2):
    res = exists_cosymplectic(sl2)
    assert not res.exists
    assert res.z1_dim == 0


def test_exists_witness_validates(g31):
    res = exists_cosymplectic(g31)
    assert res.exists
    rep = validate(g31, res.alpha, res.omega)
    assert rep.ok


def test_exists_scales_to_large_cocycle_spaces():
    # abelian algebras have the largest possible cocycle spaces; the staged
    # witness search must settle these without touching the symbolic
    # determinant
    for dim in (5, 7, 9):
        L = LieAlgebra.abelian(dim)
        res = exists_cosymplectic(L)
        assert res.exists
        assert validate(L, res.alpha, res.omega).ok
    res9 = exists_cosymplectic(heisenberg(4))
    assert not res9.exists and sc.is_zero(res9.det)


# ---------------------------------------------------------------------------
# Kernel reduction and the one-higher symplectic pair


def test_kernel_symplectic_examples(g31, g34):
    S = make(g31, E3(2), W({(1, 3): 1}))
    red = kernel_symplectic(S)
    assert red.pair.algebra.brackets == {}
    assert red.pair.omega.coeffs == {(0, 1): F(1)}
    assert red.deriv.column(1) == (F(1), F(0))  # e3 -> e1 in kept coordinates
    assert sc.vec_is_zero(red.deriv.column(0))

    S0 = make(LieAlgebra.abelian(3), E3(3), W({(1, 2): 1}))
    assert all(sc.vec_is_zero(kernel_symplectic(S0).deriv.column(i)) for i in range(2))

    S34 = make(g34, E3(3), W({(1, 2): 1}))
    D = kernel_symplectic(S34).deriv
    assert D.column(0) == (F(-1), F(0))
    assert D.column(1) == (F(0), F(1))


def test_from_symplectic_derivation_examples():
    fl = SymplecticPair(LieAlgebra.abelian(2), TwoForm.from_dict(2, {(1, 2): 1}))
    S = from_symplectic_derivation(fl, LinearMap.zero(2))
    assert S.algebra.brackets == {}
    assert S.alpha == OneForm.dual(3, 3)

    nil = from_symplectic_derivation(fl, LinearMap(2, 2, ((0, 1), (0, 0))))
    # bracket [xi, e2] = e1 with xi stored last: [e2, e3] = -e1
    assert nil.algebra.brackets == {(1, 2): (F(-1), F(0), F(0))}
    relabel = LinearMap.from_columns([(F(-1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))])
    g31 = LieAlgebra.from_table(3, {(2, 3): {1: 1}})
    assert check_isomorphism(nil.algebra, g31, relabel).ok


def test_from_symplectic_derivation_rejects_bad_maps():
    fl = SymplecticPair(LieAlgebra.abelian(2), TwoForm.from_dict(2, {(1, 2): 1}))
    with pytest.raises(NotIst):
        from_symplectic_derivation(fl, LinearMap.identity(2))
    hh = SymplecticPair(
        LieAlgebra.from_table(2, {(1, 2): {1: 1}}), TwoForm.from_dict(2, {(1, 2): 1})
    )
    not_deriv = LinearMap(2, 2, ((0, 0), (1, 0)))
    with pytest.raises(NotDerivation):
        from_symplectic_derivation(hh, not_deriv)


def test_roundtrip_on_dim3_catalog_entries():
    for name, S in STRUCTURES:
        if S.dim != 3:
            continue
        red = kernel_symplectic(S)
        rebuilt = from_symplectic_derivation(red.pair, red.deriv)
        M = LinearMap.from_columns(list(red.basis))
        rep = check_isomorphism(
            rebuilt.algebra, S.algebra, M, rebuilt.alpha, S.alpha, rebuilt.omega, S.omega
        )
        assert rep.ok, (name, str(rep))


def test_to_symplectic_example_and_equivalence(g21):
    pair = to_symplectic(g21, E3(3), W({(1, 2): 1}))
    assert pair.algebra.dim == 4
    assert pair.omega.coeffs == {(0, 1): F(1), (2, 3): F(1)}
    c2, det, ok = pair.validate()
    assert ok

    tiny = to_symplectic(LieAlgebra.abelian(1), OneForm.dual(1, 1), TwoForm.zero(1))
    assert tiny.omega.coeffs == {(0, 1): F(1)}
    assert tiny.validate()[2]

    # a non-cocycle alpha makes the output omega non-closed
    bad = to_symplectic(g21, E3(1), W({(1, 2): 1}))
    assert not is_2cocycle(bad.algebra, bad.omega)


def test_to_symplectic_equivalence_both_directions_on_catalog():
    for name, S in STRUCTURES:
        pair = to_symplectic(S.algebra, S.alpha, S.omega)
        assert pair.validate()[2], name
    # broken inputs: degenerate volume -> degenerate pair
    g21 = LieAlgebra.from_table(3, {(1, 2): {1: 1}})
    degenerate = to_symplectic(g21, E3(3), TwoForm.zero(3))
    c2, det, ok = degenerate.validate()
    assert c2 and sc.is_zero(det) and not ok
    # non-closed omega -> non-closed extension
    bad_omega = to_symplectic(g21, E3(3), W({(1, 3): 1}))
    assert not bad_omega.validate()[0]


# ---------------------------------------------------------------------------
# Left-symmetric products


def test_symplectic_lsa_examples():
    hh = SymplecticPair(
        LieAlgebra.from_table(2, {(1, 2): {1: 1}}), TwoForm.from_dict(2, {(1, 2): 1})
    )
    T = symplectic_lsa(hh)
    assert T.products[0][1] == (F(1), F(0))
    assert T.products[1][1] == (F(0), F(1))
    assert sc.vec_is_zero(T.products[0][0]) and sc.vec_is_zero(T.products[1][0])

    ab = SymplecticPair(LieAlgebra.abelian(2), TwoForm.from_dict(2, {(1, 2): 1}))
    Tz = symplectic_lsa(ab)
    assert all(sc.vec_is_zero(Tz.products[i][j]) for i in range(2) for j in range(2))

    with pytest.raises(DegenerateOmega):
        symplectic_lsa(SymplecticPair(LieAlgebra.abelian(2), TwoForm.zero(2)))


def test_symplectic_lsa_recovers_commutator():
    for name, S in STRUCTURES:
        red = kernel_symplectic(S)
        T = symplectic_lsa(red.pair)
        m = red.pair.algebra.dim
        for i in range(m):
            for j in range(m):
                lhs = sc.vec_sub(T.products[i][j], T.products[j][i])
                assert sc.vecs_equal(lhs, red.pair.algebra.bracket_basis(i, j)), name


def expected_table(dim, entries):
    return LsaTable.from_dict(dim, entries)


def test_cosymplectic_lsa_printed_tables_at_unit_scale(g31, g34, g35):
    S31 = make(g31, E3(3), W({(1, 2): 1}))
    assert cosymplectic_lsa(S31) == expected_table(
        3, {(2, 2): {3: 1}, (3, 2): {1: -1}}
    )
    S34 = make(g34, E3(3), W({(1, 2): 1}))
    assert cosymplectic_lsa(S34) == expected_table(
        3, {(1, 2): {3: 1}, (2, 1): {3: 1}, (3, 1): {1: -1}, (3, 2): {2: 1}}
    )
    S35 = make(g35, E3(3), W({(1, 2): 1}))
    assert cosymplectic_lsa(S35) == expected_table(
        3, {(1, 1): {3: 1}, (2, 2): {3: 1}, (3, 1): {2: 1}, (3, 2): {1: -1}}
    )


def test_cosymplectic_lsa_of_printed_normal_form_differs(g31):
    # the printed normal form of the Weyl algebra produces this table, not
    # the catalog's attributed product table (which belongs to (lam e^3, e^{12}))
    S = make(g31, E3(2), W({(1, 3): 1}))
    assert cosymplectic_lsa(S) == expected_table(3, {(2, 3): {1: 1}, (3, 3): {2: -1}})


def test_cosymplectic_lsa_symbolic_lambda(g34):
    lam = Poly.var("lam")
    S = make(g34, OneForm(3, (sc.ZERO, sc.ZERO, lam)), W({(1, 2): 1}))
    T = cosymplectic_lsa(S)
    inv_lam2 = ratfn(Poly.const(1), lam * lam)
    assert sc.vecs_equal(T.products[0][1], (sc.ZERO, sc.ZERO, inv_lam2))
    assert sc.vecs_equal(T.products[2][0], (F(-1), F(0), F(0)))


def test_two_routes_agree_on_catalog():
    for name, S in STRUCTURES:
        assert _lsa_via_phi(S) == _lsa_via_parts(S), name


def test_left_symmetry_on_catalog():
    for name, S in STRUCTURES:
        T = cosymplectic_lsa(S)
        rep = left_symmetry_defect(T, S.algebra)
        assert rep["pass"], name


def test_left_symmetry_defect_reports_commutator_mismatch():
    # product e1.e2 = e1 with abelian bracket: commutator defect e1
    T = LsaTable.from_dict(2, {(1, 2): {1: 1}})
    rep = left_symmetry_defect(T, LieAlgebra.abelian(2))
    assert not rep["pass"]
    assert rep["commutator"] == [(1, 2, (F(1), F(0)))]

    Tz = LsaTable.from_dict(2, {})
    assert left_symmetry_defect(Tz, LieAlgebra.abelian(2))["pass"]


def test_derivation_identity_on_catalog():
    for name, S in STRUCTURES:
        red = kernel_symplectic(S)
        star = symplectic_lsa(red.pair)
        D = red.deriv
        m = red.pair.algebra.dim
        for a in range(m):
            for b in range(m):
                lhs = D.apply(star.products[a][b])
                rhs = sc.vec_add(
                    star.product(D.column(a), sc.basis_vec(m, b)),
                    star.product(sc.basis_vec(m, a), D.column(b)),
                )
                assert sc.vecs_equal(lhs, rhs), name


# ---------------------------------------------------------------------------
# Bi-invariance


def test_biinvariance_examples(g21, g34):
    S = make(g21, E3(3), W({(1, 2): 1}))
    rep = biinvariance(S)
    assert rep.ok and rep.associative and rep.failed_conditions == []

    S34 = make(g34, E3(3), W({(1, 2): 1}))
    rep34 = biinvariance(S34)
    assert not rep34.ok and not rep34.associative
    assert 4 in rep34.failed_conditions

    S0 = make(LieAlgebra.abelian(3), E3(3), W({(1, 2): 1}))
    rep0 = biinvariance(S0)
    assert rep0.ok and rep0.associative


def test_biinvariance_conditions_iff_associative_on_catalog():
    for name, S in STRUCTURES:
        rep = biinvariance(S)
        assert rep.ok == rep.associative, name


# ---------------------------------------------------------------------------
# Nondegeneracy equivalence: volume = 0  <=>  det Phi = 0


def test_volume_vanishes_iff_phi_singular_on_random_points():
    rng = random.Random(31415)
    from coslie.scalars import det_poly
    from coslie.exterior import volume_coeff

    algebras = []
    for name in list_entries():
        entry = get_entry(name)
        if entry.kind == "family":
            algebras.append((name, entry.algebra(entry.struct_params or None)))
    algebras.append(("aff", get_entry("aff(2,R)⋉<e7>").algebra({"lam": F(1)})))
    for name, L in algebras:
        dim = L.dim
        for _ in range(50):
            alpha = OneForm(dim, tuple(F(rng.randint(-2, 2)) for _ in range(dim)))
            omega = TwoForm(
                dim,
                {
                    p: F(rng.randint(-2, 2))
                    for p in combinations(range(dim), 2)
                },
            )
            vol = volume_coeff(L, alpha, omega)
            det = det_poly(phi_map(L, alpha, omega))
            assert (vol == 0) == (det == 0), name
