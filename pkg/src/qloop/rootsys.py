"""The affine root system of type A_l^(1) and its convex normal order.

Positive roots of the affine algebra come in three families built from the
finite positive roots alpha_{ij} = alpha_i + ... + alpha_{j-1} (1 <= i < j <=
l+1) and the imaginary root delta = alpha_0 + alpha_1 + ... + alpha_l:

    real     alpha_{ij} + n*delta          n >= 0
    imaginary  n*delta                     n >= 1
    dual     (delta - alpha_{ij}) + n*delta  n >= 0

A root is stored by its coefficient vector over the simple roots alpha_0 ..
alpha_l.  The bilinear form is induced by the extended Cartan matrix; for
l = 1 the two nodes of the Dynkin diagram are joined by a double bond, so
a_{01} = a_{10} = -2 there.

The normal (convex) order puts every real root before every imaginary root
before every dual root, refined lexicographically inside the real and dual
blocks; imaginary roots are ordered by their level.  Cartan exponents (the
integer vectors x with q**x in the algebra) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass


class NotAPositiveRoot(ValueError):
    """Coefficient vector is not a positive root of A_l^(1)."""


def cartan_entry(l: int, i: int, j: int) -> int:
    """Extended Cartan matrix entry a_{ij}, indices 0..l."""
    if not (0 <= i <= l and 0 <= j <= l):
        raise IndexError("Cartan index out of range")
    if i == j:
        return 2
    if l == 1:
        return -2
    return -1 if (i - j) % (l + 1) in (1, l) else 0


def finite_cartan_entry(l: int, i: int, j: int) -> int:
    """Finite type A_l Cartan matrix entry, indices 1..l."""
    if not (1 <= i <= l and 1 <= j <= l):
        raise IndexError("Cartan index out of range")
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def o_sign(i: int, l: int) -> int:
    """The alternating sign o_i = -(-1)**i on the finite nodes 1..l."""
    if not (1 <= i <= l):
        raise IndexError("node index out of range")
    return -1 if i % 2 == 0 else 1


@dataclass(frozen=True)
class RootIndex:
    """An element of the positive root lattice of A_l^(1)."""

    l: int
    coeffs: tuple

    def __post_init__(self):
        if self.l < 1 or len(self.coeffs) != self.l + 1:
            raise ValueError("coefficient vector must have length l+1")

    @staticmethod
    def simple(l: int, i: int) -> "RootIndex":
        if not (0 <= i <= l):
            raise IndexError("simple root index out of range")
        return RootIndex(l, tuple(1 if k == i else 0 for k in range(l + 1)))

    @staticmethod
    def alpha(l: int, i: int, j: int) -> "RootIndex":
        """The finite positive root alpha_{ij} = alpha_i + ... + alpha_{j-1}."""
        if not (1 <= i < j <= l + 1):
            raise NotAPositiveRoot(f"alpha_{{{i},{j}}} needs 1 <= i < j <= l+1")
        return RootIndex(l, tuple(1 if i <= k < j else 0 for k in range(l + 1)))

    @staticmethod
    def delta(l: int) -> "RootIndex":
        return RootIndex(l, (1,) * (l + 1))

    def __add__(self, other: "RootIndex") -> "RootIndex":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        return RootIndex(self.l, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootIndex") -> "RootIndex":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        return RootIndex(self.l, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, n: int) -> "RootIndex":
        return RootIndex(self.l, tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def classify(self):
        """Sort into the three positive families.

        Returns ("real", i, j, n) for alpha_{ij} + n*delta, ("dual", i, j, n)
        for (delta - alpha_{ij}) + n*delta, ("imaginary", n) for n*delta, or
        None when the vector is not a positive root.
        """
        c = self.coeffs
        m = min(c)
        if m < 0:
            return None
        pat = tuple(x - m for x in c)
        if all(x == 0 for x in pat):
            return ("imaginary", m) if m >= 1 else None
        if any(x not in (0, 1) for x in pat):
            return None
        ones = [k for k, x in enumerate(pat) if x == 1]
        if pat[0] == 0:
            # support of alpha_{ij} must be a contiguous block inside 1..l
            i, j = ones[0], ones[-1] + 1
            if ones == list(range(i, j)):
                return ("real", i, j, m)
            return None
        zeros = [k for k, x in enumerate(pat) if x == 0]
        if not zeros:
            return None
        i, j = zeros[0], zeros[-1] + 1
        if i >= 1 and zeros == list(range(i, j)):
            return ("dual", i, j, m)
        return None

    def is_positive_root(self) -> bool:
        return self.classify() is not None


def bilinear(a: RootIndex, b: RootIndex) -> int:
    """Symmetric form (a|b) induced by the extended Cartan matrix."""
    if a.l != b.l:
        raise ValueError("rank mismatch")
    total = 0
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                if cb:
                    total += ca * cb * cartan_entry(a.l, i, j)
    return total


_BLOCK = {"real": 0, "imaginary": 1, "dual": 2}


def normal_less(a: RootIndex, b: RootIndex) -> bool:
    """Strict convex order: real block, then imaginary, then dual."""
    ca = a.classify()
    cb = b.classify()
    if ca is None or cb is None:
        raise NotAPositiveRoot("normal_less is defined on positive roots only")
    ba, bb = _BLOCK[ca[0]], _BLOCK[cb[0]]
    if ba != bb:
        return ba < bb
    if ca[0] == "imaginary":
        return ca[1] < cb[1]
    _, i, j, r = ca
    _, m, n, s = cb
    if ca[0] == "real":
        return (i, r, j) < (m, s, n)
    # dual block: first index and level run backwards
    return (-i, -r, j) < (-m, -s, n)


@dataclass(frozen=True)
class CartanExponent:
    """Integer vector x over h_0..h_l, labelling the group-like q**(nu x)."""

    l: int
    coeffs: tuple

    def __post_init__(self):
        if self.l < 1 or len(self.coeffs) != self.l + 1:
            raise ValueError("coefficient vector must have length l+1")

    @staticmethod
    def h(l: int, i: int) -> "CartanExponent":
        if not (0 <= i <= l):
            raise IndexError("Cartan index out of range")
        return CartanExponent(l, tuple(1 if k == i else 0 for k in range(l + 1)))

    @staticmethod
    def zero(l: int) -> "CartanExponent":
        return CartanExponent(l, (0,) * (l + 1))

    def __add__(self, other: "CartanExponent") -> "CartanExponent":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        return CartanExponent(self.l, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CartanExponent") -> "CartanExponent":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        return CartanExponent(self.l, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CartanExponent":
        return CartanExponent(self.l, tuple(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "CartanExponent":
        return CartanExponent(self.l, tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def pair_root(self, root: RootIndex) -> int:
        """The eigenvalue exponent <root, x> = sum_j x_j a_{j i} c_i."""
        if self.l != root.l:
            raise ValueError("rank mismatch")
        total = 0
        for jj, xj in enumerate(self.coeffs):
            if xj:
                for ii, ci in enumerate(root.coeffs):
                    if ci:
                        total += xj * ci * cartan_entry(self.l, jj, ii)
        return total
