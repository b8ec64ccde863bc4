"""l-weights of the q-oscillator Borel representations and factorizations.

Every Fock basis vector v_m of a representation theta_a (or its mirrored
counterpart) is an l-weight vector: each q**h_i acts by an integer power of
q and the generating series

    phi_i(u) = q**h_i (1 - kappa_q e'_{delta, alpha_i}(-o_i u))

acts diagonally with an eigenvalue that is a rational function Psi_i(u) of
the spectral variable.  This module computes the eigenvalue series directly
from the operator realization (phi_series), states the closed rational
expressions for Psi_i and the weight lambda (closed_psi, closed_lambda), and
combines the l-weights of one-dimensional shifts, prefundamental modules and
oscillator modules to check the factorization identities relating the two
families (factor_check).

Twist conventions.  The spectral twist enters every eigenvalue through the
single combination zs = zeta**s, kept as one exact scalar: a twisted series
is the untwisted one with u -> zs*u.  Mirrored representations satisfy

    Psi-bar_{i, m, a}(u) = Psi_{l-i+1, m, l-a+2}(-(-1)**l u),
    lambda-bar_{m, a}    = iota(lambda_{m, l-a+2}),

with iota(omega_i) = omega_{l-i+1}.  Weights are written over the fundamental
weights omega_1 .. omega_l; the affine pairing is fixed by level zero,
<lambda, h_0> = -sum_i <lambda, h_i>.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .borelrep import RepSpec, get_evaluator
from .exactfield import QRational, URational, USeries, kappa
from .rootsys import CartanExponent, o_sign
from .rootvectors import e_prime_imag

_ONE = QRational.one()
_ZERO = QRational.zero()


class NotDiagonal(Exception):
    """An imaginary root vector failed to act diagonally on a basis vector."""

    def __init__(self, spec: RepSpec, i: int, n: int, m: tuple):
        super().__init__(
            f"e'({n}delta, alpha_{i}) is not diagonal on v_{m} for l={spec.l}, "
            f"a={spec.a}, bar={spec.bar}"
        )
        self.spec = spec
        self.i = i
        self.n = n
        self.m = m


@dataclass(frozen=True)
class Weight:
    """An integral weight over the fundamental weights omega_1 .. omega_l."""

    l: int
    omega: tuple

    def __post_init__(self):
        if len(self.omega) != self.l:
            raise ValueError("need one coefficient per fundamental weight")

    @classmethod
    def zero(cls, l: int) -> "Weight":
        return cls(l, (0,) * l)

    @classmethod
    def fundamental(cls, l: int, i: int, mult: int = 1) -> "Weight":
        if not (1 <= i <= l):
            raise IndexError("fundamental weight index out of range")
        return cls(l, tuple(mult if j == i else 0 for j in range(1, l + 1)))

    def __add__(self, other: "Weight") -> "Weight":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        return Weight(self.l, tuple(x + y for x, y in zip(self.omega, other.omega)))

    def __neg__(self) -> "Weight":
        return Weight(self.l, tuple(-x for x in self.omega))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def pair_h(self, j: int) -> int:
        """<self, h_j> for j = 0 .. l; level zero fixes the affine value."""
        if j == 0:
            return -sum(self.omega)
        if not (1 <= j <= self.l):
            raise IndexError("Cartan index out of range")
        return self.omega[j - 1]

    def iota(self) -> "Weight":
        """The diagram reflection omega_i -> omega_{l-i+1}."""
        return Weight(self.l, tuple(reversed(self.omega)))


def _check_m(l: int, m) -> tuple:
    mt = tuple(m)
    if len(mt) != l or any(x < 0 for x in mt):
        raise ValueError("occupation vector must have l nonnegative entries")
    return mt


def _msum(m: tuple, lo: int, hi: int) -> int:
    # 1-indexed inclusive partial sum; empty when lo > hi
    return sum(m[j - 1] for j in range(lo, hi + 1)) if lo <= hi else 0


def _psi_parts(i: int, l: int, a: int, m: tuple):
    """Prefactor exponent and root exponents of Psi_{i, m, a}.

    Returns (e0, num, den): the function is q**e0 times a product of factors
    (1 - q**c zs u) over c in num, divided by the same over c in den.
    """
    if a == 1:
        if i == 1:
            return (
                -2 * m[0] - _msum(m, 2, l) - l - 1,
                [-2 * _msum(m, 2, l) - l + 2],
                [-2 * _msum(m, 1, l) - l, -2 * _msum(m, 1, l) - l + 2],
            )
        return (
            m[i - 2] - m[i - 1],
            [-2 * _msum(m, i - 1, l) - l + i - 1, -2 * _msum(m, i + 1, l) - l + i + 1],
            [-2 * _msum(m, i, l) - l + i - 1, -2 * _msum(m, i, l) - l + i + 1],
        )
    if a == l + 1:
        if i <= l - 1:
            return (m[i] - m[i - 1], [], [])
        return (-2 * m[l - 1] - _msum(m, 1, l - 1), [1], [])
    if i <= a - 2:
        return (m[l + i - a + 1] - m[l + i - a], [], [])
    if i == a - 1:
        return (
            _msum(m, 1, l - a + 1) - _msum(m, l - a + 2, l - 1) - 2 * m[l - 1] + l - a + 1,
            [-2 * _msum(m, 1, l - a + 1) - l + a],
            [],
        )
    if i == a:
        return (
            -2 * m[0] - _msum(m, 2, l - a + 1) + _msum(m, l - a + 2, l) - l + a - 2,
            [-2 * _msum(m, 2, l - a + 1) - l + a + 1],
            [-2 * _msum(m, 1, l - a + 1) - l + a - 1, -2 * _msum(m, 1, l - a + 1) - l + a + 1],
        )
    return (
        m[i - a - 1] - m[i - a],
        [-2 * _msum(m, i - a, l - a + 1) - l + i - 1,
         -2 * _msum(m, i - a + 2, l - a + 1) - l + i + 1],
        [-2 * _msum(m, i - a + 1, l - a + 1) - l + i - 1,
         -2 * _msum(m, i - a + 1, l - a + 1) - l + i + 1],
    )


def _roots_poly(exps, zeff: QRational) -> tuple:
    """The u-polynomial prod_c (1 - q**c zeff u) as QRational coefficients."""
    poly = [_ONE]
    for c in exps:
        r = QRational.q_power(c) * zeff
        nxt = [_ZERO] * (len(poly) + 1)
        for k, ck in enumerate(poly):
            nxt[k] = nxt[k] + ck
            nxt[k + 1] = nxt[k + 1] - ck * r
        poly = nxt
    return tuple(poly)


def closed_psi(i: int, spec: RepSpec, m) -> URational:
    """The closed rational form of the eigenvalue of phi_i(u) on v_m."""
    l = spec.l
    mt = _check_m(l, m)
    if not (1 <= i <= l):
        raise IndexError("node index out of range")
    if spec.bar:
        e0, num, den = _psi_parts(l - i + 1, l, l - spec.a + 2, mt)
        # the mirrored series is the reflected one at u -> -(-1)**l u
        zeff = spec.zs if l % 2 else -spec.zs
    else:
        e0, num, den = _psi_parts(i, l, spec.a, mt)
        zeff = spec.zs
    c0 = QRational.q_power(e0)
    return URational(tuple(c0 * x for x in _roots_poly(num, zeff)), _roots_poly(den, zeff))


def closed_lambda(spec: RepSpec, m) -> Weight:
    """The closed form of the weight of v_m."""
    l = spec.l
    mt = _check_m(l, m)
    if spec.bar:
        return closed_lambda(RepSpec(l, l - spec.a + 2), mt).iota()
    a = spec.a
    c = [0] * (l + 1)
    if a == 1:
        c[1] = -(2 * mt[0] + _msum(mt, 2, l) + l + 1)
        for i in range(2, l + 1):
            c[i] = -(mt[i - 1] - mt[i - 2])
    elif a == l + 1:
        for i in range(1, l):
            c[i] = mt[i] - mt[i - 1]
        c[l] = -(_msum(mt, 1, l - 1) + 2 * mt[l - 1])
    else:
        for i in range(1, a - 1):
            c[i] = mt[l + i - a + 1] - mt[l + i - a]
        for i in range(a + 1, l + 1):
            c[i] = -(mt[i - a] - mt[i - a - 1])
        c[a - 1] = (
            _msum(mt, 1, l - a + 1) - _msum(mt, l - a + 2, l - 1) - 2 * mt[l - 1] + l - a + 1
        )
        c[a] = -(2 * mt[0] + _msum(mt, 2, l - a + 1) - _msum(mt, l - a + 2, l) + l - a + 2)
    return Weight(l, tuple(c[1:]))


def phi_series(i: int, spec: RepSpec, m, order: int) -> USeries:
    """Eigenvalue series of phi_i(u) on v_m, computed by operator action.

    The u**n coefficient comes from applying the imaginary root vector
    e'_{n delta, alpha_i}; NotDiagonal is raised if that action fails to be
    diagonal on v_m.  The spectral twist rescales u at the very end.
    """
    l = spec.l
    mt = _check_m(l, m)
    if not (1 <= i <= l):
        raise IndexError("node index out of range")
    if order < 0:
        raise ValueError("order must be >= 0")
    ev = get_evaluator(spec)
    c0 = QRational.q_power(ev.qh_exponent(CartanExponent.h(l, i), mt))
    o = o_sign(i, l)
    kap = kappa()
    coeffs = [c0]
    for n in range(1, order + 1):
        out = ev.apply_basis(e_prime_imag(l, i, i + 1, n), mt)
        items = dict(out.items())
        if not items:
            s = _ZERO
        elif set(items) == {mt}:
            s = items[mt]
        else:
            raise NotDiagonal(spec, i, n, mt)
        c = kap * c0 * s
        if (-1) ** (n + 1) * o ** n < 0:
            c = -c
        coeffs.append(c)
    series = USeries(order, coeffs)
    if spec.zs != _ONE:
        series = series.scale_var(spec.zs)
    return series


@dataclass(frozen=True)
class LWeight:
    """A highest l-weight: a weight and one rational function Psi_i per node.

    The constant term law Psi_i(0) = q**<lambda, h_i> is enforced on
    construction, so products of valid l-weights stay valid.
    """

    weight: Weight
    psi: tuple

    def __post_init__(self):
        if len(self.psi) != self.weight.l:
            raise ValueError("need one Psi per node")
        for k, f in enumerate(self.psi):
            if f.constant_term() != QRational.q_power(self.weight.omega[k]):
                raise ValueError("constant term of Psi must be q**<lambda, h_i>")


def lweight_product(*factors: LWeight) -> LWeight:
    """Componentwise product: weights add, Psi functions multiply."""
    if not factors:
        raise ValueError("need at least one factor")
    w = factors[0].weight
    psi = list(factors[0].psi)
    for f in factors[1:]:
        w = w + f.weight
        psi = [p * g for p, g in zip(psi, f.psi)]
    return LWeight(w, tuple(psi))


def prefundamental(l: int, i: int, sign: int, x: QRational) -> LWeight:
    """Highest l-weight of the prefundamental module with parameter x.

    Psi_i = (1 - x u)**sign with sign +1 or -1, all other Psi_j = 1, weight 0.
    """
    if not (1 <= i <= l):
        raise IndexError("node index out of range")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lin = (_ONE, -x)
    psi = []
    for j in range(1, l + 1):
        if j != i:
            psi.append(URational.one())
        elif sign == 1:
            psi.append(URational(lin))
        else:
            psi.append(URational((_ONE,), lin))
    return LWeight(Weight.zero(l), tuple(psi))


def shift_weight(w: Weight) -> LWeight:
    """Highest l-weight of the one-dimensional module with weight w."""
    psi = tuple(URational.constant(QRational.q_power(c)) for c in w.omega)
    return LWeight(w, psi)


def oscillator_lweight(spec: RepSpec, m=None) -> LWeight:
    """The closed-form l-weight of v_m (the highest one for m = 0)."""
    mt = _check_m(spec.l, m) if m is not None else (0,) * spec.l
    lam = closed_lambda(spec, mt)
    psi = tuple(closed_psi(i, spec, mt) for i in range(1, spec.l + 1))
    return LWeight(lam, psi)


# ---------------------------------------------------------------------------
# factorization identities between oscillator and prefundamental l-weights

def xi_osc(l: int, a: int) -> Weight:
    """The shift relating theta_a to its prefundamental factorization."""
    if a == 1:
        return Weight.fundamental(l, 1, -(l + 1))
    if a == l + 1:
        return Weight.zero(l)
    return Weight.fundamental(l, a - 1, l - a + 1) + Weight.fundamental(l, a, -(l - a + 2))


def xi_pref_minus(l: int, i: int) -> Weight:
    """The shift in the oscillator factorization of the negative family."""
    return Weight(l, tuple(
        -2 if j < i else (-(l - i + 2) if j == i else 0) for j in range(1, l + 1)
    ))


def xi_pref_plus(l: int, i: int) -> Weight:
    """The shift in the oscillator factorization of the positive family."""
    return Weight(l, tuple(
        l - i if j == i else (-2 if j > i else 0) for j in range(1, l + 1)
    ))


def factor_osc(l: int, a: int, zs: QRational = _ONE) -> bool:
    """theta_a with twist zs matches a shift times prefundamental factors."""
    lhs = oscillator_lweight(RepSpec(l, a, False, zs))
    shift = shift_weight(xi_osc(l, a))
    if a == 1:
        rhs = lweight_product(shift, prefundamental(l, 1, -1, QRational.q_power(-l) * zs))
    elif a == l + 1:
        rhs = lweight_product(shift, prefundamental(l, l, 1, QRational.q_power(1) * zs))
    else:
        rhs = lweight_product(
            shift,
            prefundamental(l, a - 1, 1, QRational.q_power(-l + a) * zs),
            prefundamental(l, a, -1, QRational.q_power(-l + a - 1) * zs),
        )
    return lhs == rhs


def factor_pref_minus(l: int, i: int, zs: QRational = _ONE) -> bool:
    """Shifted negative prefundamental as a product of theta_1 .. theta_i."""
    lhs = lweight_product(shift_weight(xi_pref_minus(l, i)), prefundamental(l, i, -1, zs))
    rhs = lweight_product(*[
        oscillator_lweight(RepSpec(l, b, False, QRational.q_power(l + i - 2 * b + 1) * zs))
        for b in range(1, i + 1)
    ])
    return lhs == rhs


def factor_pref_plus(l: int, i: int, zs: QRational = _ONE) -> bool:
    """Shifted positive prefundamental as a product of theta_{i+1} .. theta_{l+1}."""
    lhs = lweight_product(shift_weight(xi_pref_plus(l, i)), prefundamental(l, i, 1, zs))
    rhs = lweight_product(*[
        oscillator_lweight(RepSpec(l, b, False, QRational.q_power(l + i - 2 * b + 1) * zs))
        for b in range(i + 1, l + 2)
    ])
    return lhs == rhs


def factor_full_tensor(l: int, zs_list) -> bool:
    """Product of all theta_a, one twist each, telescopes to l linear ratios."""
    zs_list = tuple(zs_list)
    if len(zs_list) != l + 1:
        raise ValueError("need one twist per tensor factor")
    lhs = lweight_product(*[
        oscillator_lweight(RepSpec(l, a, False, zs_list[a - 1])) for a in range(1, l + 2)
    ])
    c = QRational.q_power(-2)
    psi = []
    for i in range(1, l + 1):
        num = (c, -(c * QRational.q_power(-l + i + 1) * zs_list[i]))
        den = (_ONE, -(QRational.q_power(-l + i - 1) * zs_list[i - 1]))
        psi.append(URational(num, den))
    rhs = LWeight(Weight(l, (-2,) * l), tuple(psi))
    return lhs == rhs


def factor_check(kind: str, l: int, index: int = 0, zs: QRational = _ONE,
                 zs_list=None) -> bool:
    """Dispatch on the factorization family.

    kind is one of "osc" (index = a), "pref-minus" / "pref-plus" (index = i)
    or "full-tensor" (zs_list holds l+1 twists, defaulting to zs everywhere).
    """
    if kind == "osc":
        return factor_osc(l, index, zs)
    if kind == "pref-minus":
        return factor_pref_minus(l, index, zs)
    if kind == "pref-plus":
        return factor_pref_plus(l, index, zs)
    if kind == "full-tensor":
        if zs_list is None:
            zs_list = (zs,) * (l + 1)
        return factor_full_tensor(l, zs_list)
    raise ValueError(f"unknown factorization kind {kind!r}")


# ---------------------------------------------------------------------------
# grid verification

def _entry(spec: RepSpec, i: int, m: tuple, status: str, expected: str,
           computed: str) -> dict:
    return {
        "l": spec.l,
        "a": spec.a,
        "bar": spec.bar,
        "i": i,
        "m": list(m),
        "status": status,
        "expected": expected,
        "computed": computed,
    }


def verify_grid(l: int, order: int, m_max: int = 1, bar: bool = False,
                zs: QRational = _ONE, a_values=None) -> list:
    """Check operator weights and eigenvalue series against the closed forms.

    Runs over every a (or the given a_values), every occupation vector with
    entries up to m_max, every node i, comparing q**h_j exponents with the
    closed weight and the phi_i series with the closed Psi_i through the
    given order.  Returns a list of discrepancy entries; empty means pass.
    """
    found = []
    if a_values is None:
        a_values = range(1, l + 2)
    for a in a_values:
        spec = RepSpec(l, a, bar, zs)
        ev = get_evaluator(spec)
        for m in itertools.product(range(m_max + 1), repeat=l):
            lam = closed_lambda(spec, m)
            for j in range(l + 1):
                t = ev.qh_exponent(CartanExponent.h(l, j), m)
                if t != lam.pair_h(j):
                    found.append(_entry(spec, j, m, "weight-mismatch",
                                        f"q^{lam.pair_h(j)}", f"q^{t}"))
            for i in range(1, l + 1):
                closed = closed_psi(i, spec, m)
                try:
                    series = phi_series(i, spec, m, order)
                except NotDiagonal:
                    found.append(_entry(spec, i, m, "not-diagonal",
                                        repr(closed), "not diagonal"))
                    continue
                if closed.expand(order) != series:
                    found.append(_entry(spec, i, m, "psi-mismatch",
                                        repr(closed), repr(series)))
    return found
