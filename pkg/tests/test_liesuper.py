"""Structure constants, invariant tensors, and the built-in modules."""

from fractions import Fraction

import pytest

from superchord.liesuper import (
    build_gl, casimir_tensor, extend_identity, invariant_form, rep_combine,
    standard_rep)
from superchord.scalars import QALPHA, alpha
from superchord.supergraded import SuperMap


def frac(x):
    return Fraction(x)


def test_gl11_basis_and_parities():
    g = build_gl(1, 1)
    assert g.dim == 4
    assert g.labels == ((1, 1), (1, 2), (2, 1), (2, 2))
    assert g.parities == (0, 1, 1, 0)


def test_build_gl_rejects_degenerate_sizes():
    with pytest.raises(ValueError):
        build_gl(0, 1)
    with pytest.raises(ValueError):
        build_gl(3, -1)


def test_sl_casimir_rejects_zero_superdimension():
    g = build_gl(1, 1)
    with pytest.raises(ValueError):
        casimir_tensor(g, "sl")


def test_bracket_examples_gl21():
    g = build_gl(2, 1)
    ix = g.index
    assert g.bracket(ix[(1, 1)], ix[(1, 2)]) == {ix[(1, 2)]: 1}
    # odd/odd bracket is the anticommutator
    assert g.bracket(ix[(1, 3)], ix[(3, 1)]) == {ix[(1, 1)]: 1, ix[(3, 3)]: 1}
    assert g.bracket(ix[(1, 2)], ix[(2, 1)]) == {ix[(1, 1)]: 1, ix[(2, 2)]: -1}
    assert g.bracket(ix[(3, 1)], ix[(3, 2)]) == {}


def test_super_jacobi_gl21_all_triples():
    g = build_gl(2, 1)
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                assert g.jacobi_residual(i, j, k) == {}


def test_invariant_form_values_and_supersymmetry():
    g = build_gl(2, 1)
    ix = g.index
    form = invariant_form(g)
    assert form[(ix[(1, 2)], ix[(2, 1)])] == 1
    assert form[(ix[(3, 3)], ix[(3, 3)])] == -1
    assert form[(ix[(1, 1)], ix[(1, 1)])] == 1
    assert form.get((ix[(1, 2)], ix[(1, 2)]), 0) == 0
    for i in range(g.dim):
        for j in range(g.dim):
            s = (-1) ** (g.parities[i] * g.parities[j])
            assert form.get((i, j), 0) == s * form.get((j, i), 0)


def test_invariant_form_ad_invariance():
    # B([x, y], z) = B(x, [y, z]) for all basis triples.
    g = build_gl(2, 1)
    form = invariant_form(g)
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                left = sum(c * form.get((l, k), 0)
                           for l, c in g.bracket(i, j).items())
                right = sum(c * form.get((i, l), 0)
                            for l, c in g.bracket(j, k).items())
                assert left == right


def test_casimir_gl11_frozen_inverse():
    # Inverting the 4x4 Gram matrix of the supertrace form by hand gives
    # t = E11xE11 - E12xE21 + E21xE12 - E22xE22.
    g = build_gl(1, 1)
    t = casimir_tensor(g, "gl")
    assert t.terms == {(0, 0): 1, (1, 2): -1, (2, 1): 1, (3, 3): -1}


def test_casimir_gl21_supersymmetric_and_invariant():
    g = build_gl(2, 1)
    for which in ("gl", "sl"):
        t = casimir_tensor(g, which)
        assert t.is_supersymmetric()
        assert t.is_invariant()


def test_casimir_gl21_formula():
    g = build_gl(2, 1)
    ix = g.index
    t = casimir_tensor(g, "gl")
    expected = {}
    for a in range(1, 4):
        for b in range(1, 4):
            sign = -1 if b == 3 else 1
            expected[(ix[(a, b)], ix[(b, a)])] = Fraction(sign)
    assert t.terms == expected


def test_tsl_is_dual_to_restricted_form():
    # Contracting t_sl with B projects any x onto the supertraceless part:
    # sum_ij t^{ij} B(x, e_i) e_j = x - (str x / sdim) I.
    g = build_gl(2, 1)
    form = invariant_form(g)
    t = casimir_tensor(g, "sl")
    ident = g.identity_coords()
    for x in range(g.dim):
        out = {}
        for (i, j), c in t.terms.items():
            v = out.get(j, 0) + c * form.get((x, i), 0)
            out[j] = v
        out = {k: v for k, v in out.items() if v}
        a, b = g.labels[x]
        strx = 0 if a != b else (1 if a <= g.m else -1)
        expect = {x: Fraction(1)}
        for k, c in ident.items():
            v = expect.get(k, 0) - Fraction(strx) * c
            expect[k] = v
        expect = {k: v for k, v in expect.items() if v}
        assert out == expect


def test_extend_identity_spot_entries():
    g = build_gl(2, 1)
    ix = g.index
    t = casimir_tensor(g, "sl")
    a = alpha() * 2 + 2
    s = extend_identity(t, a)
    e11 = ix[(1, 1)]
    e33 = ix[(3, 3)]
    # t_sl has no (E11, E11) component for gl(2|1), so s picks up a there.
    assert s.terms[(e11, e11)] == a
    # (E33, E33): -1 from t_gl, -1 from the identity substraction, +a.
    assert s.terms[(e33, e33)] == a - 2
    assert s.is_supersymmetric()
    assert s.is_invariant()


def test_defining_rep_gl21():
    g = build_gl(2, 1)
    rep = standard_rep(g, "defining")
    assert rep.space.superdim() == 1
    assert rep.space.parities == (0, 0, 1)
    ix = g.index
    assert rep.act(ix[(1, 2)]).m == {(0, 1): 1}
    omega = rep.casimir(casimir_tensor(g, "gl"))
    assert omega == SuperMap.identity(rep.space, rep.ring)


def test_defining_casimir_gl11_vanishes():
    g = build_gl(1, 1)
    rep = standard_rep(g, "defining")
    omega = rep.casimir(casimir_tensor(g, "gl"))
    assert omega.is_zero()


def test_v_alpha_action_table():
    # Frozen from a hand computation with the PBW basis w, E31 w, E32 w,
    # E32 E31 w (parities even, odd, odd, even).
    g = build_gl(2, 1)
    rep = standard_rep(g, "v_alpha")
    assert rep.space.parities == (0, 1, 1, 0)
    ix = g.index
    a = alpha()
    one = QALPHA.one

    def mat(i):
        return rep.act(ix[i]).m

    assert mat((1, 1)) == {(1, 1): -one, (3, 3): -one}
    assert mat((2, 2)) == {(2, 2): -one, (3, 3): -one}
    assert mat((3, 3)) == {(0, 0): a, (1, 1): a + 1, (2, 2): a + 1,
                           (3, 3): a + 2}
    assert mat((1, 2)) == {(2, 1): -one}
    assert mat((2, 1)) == {(1, 2): -one}
    assert mat((1, 3)) == {(0, 1): a, (2, 3): -(a + 1)}
    assert mat((2, 3)) == {(0, 2): a, (1, 3): a + 1}
    assert mat((3, 1)) == {(1, 0): one, (3, 2): -one}
    assert mat((3, 2)) == {(2, 0): one, (3, 1): one}


def test_v_alpha_casimir_eigenvalues():
    g = build_gl(2, 1)
    rep = standard_rep(g, "v_alpha")
    a = alpha()
    omega_gl = rep.casimir(casimir_tensor(g, "gl"))
    omega_sl = rep.casimir(casimir_tensor(g, "sl"))
    ident = SuperMap.identity(rep.space, rep.ring)
    assert omega_gl == ident.scale(-(a * a + a * 2))
    assert omega_sl == ident.scale(-(a * a * 2 + a * 2))


def test_v_alpha_one_term_constant_kills_casimir():
    # s = a (I x I) + t_sl acts by zero on V_alpha exactly when
    # a = (2 alpha + 2)/alpha.
    g = build_gl(2, 1)
    rep = standard_rep(g, "v_alpha")
    t = casimir_tensor(g, "sl")
    a_lg = (alpha() * 2 + 2) / alpha()
    s = extend_identity(t, a_lg)
    assert rep.casimir(s).is_zero()
    # The nearby polynomial constant does not work.
    s_bad = extend_identity(t, alpha() * 2 + 2)
    assert not rep.casimir(s_bad).is_zero()


def test_n_beta_trivial_at_zero():
    g = build_gl(2, 1)
    rep = standard_rep(g, "n_beta", beta=0)
    assert all(rep.act(i).is_zero() for i in range(g.dim))


def test_n_beta_weights():
    g = build_gl(2, 1)
    ix = g.index
    rep = standard_rep(g, "n_beta", beta=Fraction(5))
    assert rep.act(ix[(1, 1)]).m == {(0, 0): QALPHA.coerce(5)}
    assert rep.act(ix[(3, 3)]).m == {(0, 0): QALPHA.coerce(-5)}
    assert rep.act(ix[(1, 2)]).is_zero()


def test_dual_rep_satisfies_axioms():
    g = build_gl(2, 1)
    rep = standard_rep(g, "defining")
    dual = rep_combine("dual", rep)
    assert dual.check_axioms()
    assert dual.space.parities == rep.space.parities
    ix = g.index
    # rho*(E12)[k, j] = -rho(E12)[j, k] on even indices
    assert dual.act(ix[(1, 2)]).m == {(1, 0): -1}


def test_dual_of_v_alpha_satisfies_axioms():
    g = build_gl(2, 1)
    rep = standard_rep(g, "v_alpha")
    dual = rep_combine("dual", rep)
    assert dual.check_axioms()


def test_tensor_rep_carrier_and_axioms():
    g = build_gl(2, 1)
    rep = standard_rep(g, "defining")
    two = rep_combine("tensor", rep, rep)
    evens = sum(1 for p in two.space.parities if p == 0)
    odds = sum(1 for p in two.space.parities if p == 1)
    assert (evens, odds) == (5, 4)
    assert two.check_axioms()


def test_rep_combine_rejects_bad_kinds():
    g = build_gl(2, 1)
    rep = standard_rep(g, "defining")
    with pytest.raises(ValueError):
        rep_combine("sum", rep, rep)
    with pytest.raises(ValueError):
        rep_combine("tensor", rep)
