"""Oscillator images of the Borel generators and the expression evaluator."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qloop.borelrep import (CartanPower, Compose, Gen, OscWord, RepSpec, Scale,
                            Sum, apply, bar_reflection_check,
                            flip_involution_check, get_evaluator, identity,
                            image_e, image_qh, power, rotation_order_check,
                            serre_check, twist_consistency,
                            weight_relation_check)
from qloop.exactfield import QRational, kappa, qnum
from qloop.fock import FockState, apply_mode
from qloop.rootsys import CartanExponent

ONE = QRational.one()
qp = QRational.q_power
KI = kappa().inv()


def qN(*d):
    return ("qN", tuple(d))


# ----------------------------------------------------------------- rep specs

def test_repspec_validation():
    RepSpec(1, 1)
    RepSpec(3, 4, True)
    with pytest.raises(ValueError):
        RepSpec(0, 1)
    with pytest.raises(ValueError):
        RepSpec(2, 4)
    with pytest.raises(ValueError):
        RepSpec(2, 0)


# -------------------------------------------------------------- image tables

def test_generator_images_rank_one():
    # a = 2: e_0 is the bare creation operator, e_1 the kappa-scaled killer
    s12 = RepSpec(1, 2)
    assert image_e(0, s12) == OscWord(1, ONE, (("bdag", 1),))
    assert image_e(1, s12) == OscWord(1, -KI, (("b", 1), qN(1)))
    # a = 1: the two images swap roles
    s11 = RepSpec(1, 1)
    assert image_e(0, s11) == OscWord(1, -KI, (("b", 1), qN(1)))
    assert image_e(1, s11) == OscWord(1, ONE, (("bdag", 1),))


def test_generator_images_middle_row():
    # generic row: a two-mode hopping word with a balanced q-power
    s32 = RepSpec(3, 2)
    assert image_e(3, s32) == OscWord(3, -qp(-1), (("b", 1), ("bdag", 2), qN(1, -1, 0)))
    # creation row (i = a) picks up the q-power of all later modes
    assert image_e(2, s32).normalized() == OscWord(3, ONE, (("bdag", 1), qN(0, 1, 1)))
    # kappa row (i = a-1) annihilates against the last mode
    assert image_e(1, s32).normalized() == OscWord(3, -KI, (("b", 3), qN(0, 0, 1)))


def test_cartan_images():
    # h_1 at (l=3, a=2) acts as q^-(N_1 + N_2 + 2 N_3)
    w = image_qh(CartanExponent.h(3, 1), RepSpec(3, 2))
    assert w == OscWord(3, ONE, (qN(-1, -1, -2),))
    # middle rows act by a difference of neighbouring number operators
    w = image_qh(CartanExponent.h(3, 3), RepSpec(3, 2))
    assert w == OscWord(3, ONE, (qN(-1, 1, 0),))
    # exponents add: q^(h_1 + h_3) = q^(h_1) q^(h_3)
    x = CartanExponent.h(3, 1) + CartanExponent.h(3, 3)
    assert image_qh(x, RepSpec(3, 2)) == OscWord(3, ONE, (qN(-2, 0, -2),))


def test_images_preserve_rank():
    for l in (1, 2, 3):
        for a in range(1, l + 2):
            for bar in (False, True):
                spec = RepSpec(l, a, bar)
                for i in range(l + 1):
                    assert image_e(i, spec).l == l
                    assert image_qh(CartanExponent.h(l, i), spec).l == l


# -------------------------------------------------- twist and reflection laws

def test_rotation_has_order_l_plus_one():
    for l in (1, 2, 3):
        assert rotation_order_check(l)


def test_flip_is_an_involution():
    for l in (1, 2, 3):
        assert flip_involution_check(l)


def test_all_images_come_from_the_base_module_by_twisting():
    for l in (1, 2, 3):
        for a in range(1, l + 2):
            for bar in (False, True):
                for i in range(l + 1):
                    assert twist_consistency(l, a, bar, i)


def test_bar_images_are_reflected_images():
    for l in (1, 2, 3):
        for a in range(1, l + 2):
            for i in range(l + 1):
                assert bar_reflection_check(l, a, i)


# ------------------------------------------------------- word application law

osc_atoms = st.one_of(
    st.tuples(st.sampled_from(("b", "bdag")), st.integers(1, 2)),
    st.tuples(st.just("qN"), st.tuples(st.integers(-2, 2), st.integers(-2, 2))),
)


@given(st.lists(osc_atoms, max_size=5), st.tuples(st.integers(0, 3), st.integers(0, 3)))
@settings(max_examples=60, deadline=None)
def test_word_application_matches_mode_by_mode_action(atoms, m):
    spec = RepSpec(2, 2)
    pattern = spec.pattern()
    word = OscWord(2, qnum(2), atoms)
    res = word.apply_basis(pattern, m)
    got = FockState.zero(2) if res is None else FockState(2, {res[1]: res[0]})

    state = FockState.basis(m)
    for atom in reversed(atoms):
        if atom[0] == "qN":
            for j, d in enumerate(atom[1]):
                if d:
                    state = apply_mode(("qN", d), j + 1, pattern, state)
        else:
            state = apply_mode(atom[0], atom[1], pattern, state)
    assert got == state.scale(qnum(2))


@given(st.lists(osc_atoms, max_size=5), st.tuples(st.integers(0, 3), st.integers(0, 3)))
@settings(max_examples=60, deadline=None)
def test_normalized_word_acts_identically(atoms, m):
    # normalization reorders ladder atoms only across distinct modes
    modes = [a[1] for a in atoms if a[0] != "qN"]
    if len(set(modes)) != len(modes):
        return
    pattern = RepSpec(2, 2).pattern()
    word = OscWord(2, qnum(2), atoms)
    assert word.apply_basis(pattern, m) == word.normalized().apply_basis(pattern, m)


# ----------------------------------------------------------------- evaluator

def _ref_apply(expr, ev, state):
    """Reference semantics by structural recursion, no memoization."""
    if isinstance(expr, Gen):
        out = FockState.zero(ev.spec.l)
        for m, c in state.items():
            res = image_e(expr.i, ev.spec).apply_basis(ev.pattern, m)
            if res is not None:
                out = out + FockState(ev.spec.l, {res[1]: res[0]}).scale(c)
        return out
    if isinstance(expr, CartanPower):
        out = FockState.zero(ev.spec.l)
        for m, c in state.items():
            res = image_qh(expr.x, ev.spec).apply_basis(ev.pattern, m)
            out = out + FockState(ev.spec.l, {res[1]: res[0]}).scale(c)
        return out
    if isinstance(expr, Scale):
        return _ref_apply(expr.child, ev, state).scale(expr.c)
    if isinstance(expr, Sum):
        out = FockState.zero(ev.spec.l)
        for child in expr.children:
            out = out + _ref_apply(child, ev, state)
        return out
    if isinstance(expr, Compose):
        return _ref_apply(expr.left, ev, _ref_apply(expr.right, ev, state))
    raise TypeError


@st.composite
def op_exprs(draw, l, depth=3):
    if depth == 0 or draw(st.booleans()):
        if draw(st.booleans()):
            return Gen(draw(st.integers(0, l)))
        return CartanPower(CartanExponent.h(l, draw(st.integers(0, l))))
    kind = draw(st.sampled_from(("sum", "scale", "compose")))
    if kind == "sum":
        return Sum((draw(op_exprs(l, depth - 1)), draw(op_exprs(l, depth - 1))))
    if kind == "scale":
        return Scale(qnum(draw(st.integers(1, 3))), draw(op_exprs(l, depth - 1)))
    return Compose(draw(op_exprs(l, depth - 1)), draw(op_exprs(l, depth - 1)))


@given(op_exprs(2), st.tuples(st.integers(0, 2), st.integers(0, 2)))
@settings(max_examples=50, deadline=None)
def test_evaluator_matches_reference_semantics(expr, m):
    spec = RepSpec(2, 2)
    ev = get_evaluator(spec)
    assert ev.apply_basis(expr, m) == _ref_apply(expr, ev, FockState.basis(m))


def test_operator_overloads_build_the_right_trees():
    spec = RepSpec(2, 1)
    ev = get_evaluator(spec)
    e0, e1 = Gen(0), Gen(1)
    m = (1, 1)
    v = FockState.basis(m)
    assert ev.apply_basis(e0 * e1 - e1 * e0, m) == \
        ev.apply(e0, ev.apply_basis(e1, m)) - ev.apply(e1, ev.apply_basis(e0, m))
    assert ev.apply_basis(2 * e0, m) == ev.apply_basis(e0, m).scale(QRational.from_int(2))
    assert ev.apply_basis(-e0, m) == ev.apply_basis(e0, m).scale(-ONE)
    assert ev.apply(identity(2), v) == v
    assert ev.apply_basis(power(e0, 3, 2), m) == \
        ev.apply(e0, ev.apply(e0, ev.apply_basis(e0, m)))
    assert ev.apply_basis(power(e0, 0, 2), m) == v


def test_evaluator_is_linear_and_cached():
    spec = RepSpec(2, 3)
    ev = get_evaluator(spec)
    assert get_evaluator(RepSpec(2, 3)) is ev
    e = Gen(1)
    v = FockState.basis((1, 0)).scale(qnum(2)) + FockState.basis((0, 1))
    direct = ev.apply(e, v)
    parts = ev.apply_basis(e, (1, 0)).scale(qnum(2)) + ev.apply_basis(e, (0, 1))
    assert direct == parts
    assert ev.apply_basis(e, (1, 0)) is ev.apply_basis(e, (1, 0))


def test_qh_exponent_is_additive():
    spec = RepSpec(3, 2)
    ev = get_evaluator(spec)
    x = CartanExponent.h(3, 0)
    y = CartanExponent.h(3, 2)
    for m in ((0, 0, 0), (1, 2, 0), (2, 1, 1)):
        assert ev.qh_exponent(x + y, m) == ev.qh_exponent(x, m) + ev.qh_exponent(y, m)
        assert ev.qh_exponent(-x, m) == -ev.qh_exponent(x, m)


def test_one_shot_apply_helper():
    spec = RepSpec(1, 2)
    v = FockState.basis((0,))
    assert apply(Gen(0), spec, v) == FockState.basis((1,))


# ----------------------------------------------------- relations on the image

def test_serre_relations_small_ranks():
    for l in (1, 2):
        samples = list(itertools.product(range(2), repeat=l))
        for a in range(1, l + 2):
            for bar in (False, True):
                spec = RepSpec(l, a, bar)
                for i in range(l + 1):
                    for j in range(l + 1):
                        if i != j:
                            assert serre_check(i, j, spec, samples), (l, a, bar, i, j)


def test_weight_relations_small_ranks():
    for l in (1, 2):
        samples = list(itertools.product(range(2), repeat=l))
        for a in range(1, l + 2):
            for bar in (False, True):
                spec = RepSpec(l, a, bar)
                for i in range(l + 1):
                    for j in range(l + 1):
                        x = CartanExponent.h(l, j)
                        assert weight_relation_check(i, x, spec, samples), (l, a, bar, i, j)
