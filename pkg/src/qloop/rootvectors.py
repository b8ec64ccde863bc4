"""Root vectors of the positive Borel subalgebra as operator expressions.

All root vectors are built from the generators e_0 .. e_l with the
q-commutator

    [x, y]_q = x y - q**(-(rx|ry)) y x

graded by the roots rx, ry of its arguments.  The families:

- real, e_{alpha_{ij} + n delta}: at n = 0 the right-nested chain
  [e_i, [..., [e_{j-2}, e_{j-1}]_q ]_q ]_q, and for n >= 1 the level step
  [2]_q**-1 [e_{alpha_{ij} + (n-1) delta}, e'_{delta, alpha_{ij}}]_q;

- dual real, e_{(delta - alpha_{ij}) + n delta}: at n = 0 a chain seeded by
  e_0 = e_{delta - theta}, climbing [e_k, e_{delta - alpha_{1,k+1}}]_q for
  k = l .. j and then [e_k, e_{delta - alpha_{k,j}}]_q for k = 1 .. i-1;
  for n >= 1 the level step [2]_q**-1 [e'_{delta, alpha_{ij}}, .]_q;

- primed imaginary, e'_{n delta, gamma} = [e_{gamma + (n-1) delta},
  e_{delta - gamma}]_q;

- unprimed imaginary, defined by -kappa_q e_{delta,gamma}(u) =
  log(1 - kappa_q e'_{delta,gamma}(u)), expanded into ordered compositions
  of the level n.

The Drinfeld generators xi+_{i,n}, xi-_{i,n} (n > 0) and chi_{i,n} are sign-
decorated root vectors for the simple gamma = alpha_i.  Constructors are
memoized, so repeated builds share subtrees and evaluator caches apply.
"""

from __future__ import annotations

from functools import lru_cache

from .exactfield import QRational, kappa, qnum
from .borelrep import CartanPower, Compose, Gen, OpExpr, RepSpec, Scale, Sum, get_evaluator
from .rootsys import CartanExponent, RootIndex, bilinear, finite_cartan_entry, o_sign


def qcomm(x: OpExpr, rx: RootIndex, y: OpExpr, ry: RootIndex) -> OpExpr:
    """The graded q-commutator [x, y]_q = x y - q**(-(rx|ry)) y x."""
    c = -QRational.q_power(-bilinear(rx, ry))
    return Sum((Compose(x, y), Scale(c, Compose(y, x))))


def _check_gamma(l: int, i: int, j: int):
    if not (1 <= i < j <= l + 1):
        raise ValueError("finite root alpha_{ij} needs 1 <= i < j <= l+1")


@lru_cache(maxsize=None)
def e_real(l: int, i: int, j: int, n: int) -> OpExpr:
    """Root vector of alpha_{ij} + n delta."""
    _check_gamma(l, i, j)
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        expr = Gen(j - 1)
        for k in range(j - 2, i - 1, -1):
            expr = qcomm(Gen(k), RootIndex.simple(l, k), expr, RootIndex.alpha(l, k + 1, j))
        return expr
    prev_root = RootIndex.alpha(l, i, j) + (n - 1) * RootIndex.delta(l)
    return Scale(
        qnum(2).inv(),
        qcomm(e_real(l, i, j, n - 1), prev_root, e_prime_imag(l, i, j, 1), RootIndex.delta(l)),
    )


@lru_cache(maxsize=None)
def e_dual(l: int, i: int, j: int, n: int) -> OpExpr:
    """Root vector of (delta - alpha_{ij}) + n delta."""
    _check_gamma(l, i, j)
    if n < 0:
        raise ValueError("need n >= 0")
    delta = RootIndex.delta(l)
    if n == 0:
        expr = Gen(0)
        for k in range(l, j - 1, -1):
            cur = delta - RootIndex.alpha(l, 1, k + 1)
            expr = qcomm(Gen(k), RootIndex.simple(l, k), expr, cur)
        for k in range(1, i):
            cur = delta - RootIndex.alpha(l, k, j)
            expr = qcomm(Gen(k), RootIndex.simple(l, k), expr, cur)
        return expr
    prev_root = delta - RootIndex.alpha(l, i, j) + (n - 1) * delta
    return Scale(
        qnum(2).inv(),
        qcomm(e_prime_imag(l, i, j, 1), delta, e_dual(l, i, j, n - 1), prev_root),
    )


@lru_cache(maxsize=None)
def e_prime_imag(l: int, i: int, j: int, n: int) -> OpExpr:
    """Primed imaginary root vector e'_{n delta, alpha_{ij}}."""
    _check_gamma(l, i, j)
    if n < 1:
        raise ValueError("need n >= 1")
    gamma = RootIndex.alpha(l, i, j)
    prev_root = gamma + (n - 1) * RootIndex.delta(l)
    return qcomm(e_real(l, i, j, n - 1), prev_root, e_dual(l, i, j, 0), RootIndex.delta(l) - gamma)


def _compositions(n: int):
    """Ordered tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def e_unprimed_imag(l: int, i: int, n: int) -> OpExpr:
    """Unprimed imaginary root vector e_{n delta, alpha_i} for simple alpha_i.

    Matching coefficients in -kappa_q E(u) = log(1 - kappa_q E'(u)) gives

        e_{n delta} = sum_{j >= 1} (kappa_q**(j-1) / j)
                      sum_{k_1 + ... + k_j = n} e'_{k_1 delta} ... e'_{k_j delta},

    the inner sum over ordered compositions.
    """
    if not (1 <= i <= l):
        raise IndexError("node index out of range")
    if n < 1:
        raise ValueError("need n >= 1")
    kq = kappa()
    terms = []
    for comp in _compositions(n):
        parts = len(comp)
        expr = e_prime_imag(l, i, i + 1, comp[0])
        for k in comp[1:]:
            expr = Compose(expr, e_prime_imag(l, i, i + 1, k))
        terms.append(Scale(kq ** (parts - 1) / QRational.from_int(parts), expr))
    return Sum(tuple(terms))


@lru_cache(maxsize=None)
def xi_plus(l: int, i: int, n: int) -> OpExpr:
    """Drinfeld generator xi+_{i,n} = (-1)**n o_i**n e_{alpha_i + n delta}, n >= 0."""
    if n < 0:
        raise ValueError("need n >= 0")
    sign = (-o_sign(i, l)) ** n
    return Scale(QRational.from_int(sign), e_real(l, i, i + 1, n))


@lru_cache(maxsize=None)
def xi_minus(l: int, i: int, n: int) -> OpExpr:
    """Drinfeld generator xi-_{i,n} = (-1)**n o_i**(n+1) e_{(delta-alpha_i)+(n-1)delta} q**h_i, n > 0."""
    if n < 1:
        raise ValueError("the positive Borel subalgebra contains xi- only for n > 0")
    sign = (-1) ** n * o_sign(i, l) ** (n + 1)
    return Scale(
        QRational.from_int(sign),
        Compose(e_dual(l, i, i + 1, n - 1), CartanPower(CartanExponent.h(l, i))),
    )


@lru_cache(maxsize=None)
def chi(l: int, i: int, n: int) -> OpExpr:
    """Drinfeld generator chi_{i,n} = (-1)**(n+1) o_i**n e_{n delta, alpha_i}, n > 0."""
    if n < 1:
        raise ValueError("need n >= 1")
    sign = (-1) ** (n + 1) * o_sign(i, l) ** n
    return Scale(QRational.from_int(sign), e_unprimed_imag(l, i, n))


def drinfeld_check(i: int, j: int, n: int, m: int, spec: RepSpec, samples) -> bool:
    """[chi_{i,n}, xi+_{j,m}] = (1/n) [n a_ij]_q xi+_{j,n+m} on sample basis vectors."""
    l = spec.l
    x = chi(l, i, n)
    y = xi_plus(l, j, m)
    lhs = Sum((Compose(x, y), Scale(QRational.from_int(-1), Compose(y, x))))
    c = qnum(n * finite_cartan_entry(l, i, j)) / QRational.from_int(n)
    rhs = Scale(c, xi_plus(l, j, n + m))
    ev = get_evaluator(spec)
    return all((ev.apply_basis(lhs, s) - ev.apply_basis(rhs, s)).is_zero() for s in samples)


def drinfeld_check_minus(i: int, j: int, n: int, m: int, spec: RepSpec, samples) -> bool:
    """[chi_{i,n}, xi-_{j,m}] = -(1/n) [n a_ij]_q xi-_{j,n+m} on sample basis vectors, m > 0."""
    l = spec.l
    x = chi(l, i, n)
    y = xi_minus(l, j, m)
    lhs = Sum((Compose(x, y), Scale(QRational.from_int(-1), Compose(y, x))))
    c = -qnum(n * finite_cartan_entry(l, i, j)) / QRational.from_int(n)
    rhs = Scale(c, xi_minus(l, j, n + m))
    ev = get_evaluator(spec)
    return all((ev.apply_basis(lhs, s) - ev.apply_basis(rhs, s)).is_zero() for s in samples)
