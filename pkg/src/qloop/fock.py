"""Tensor products of q-oscillator Fock modules.

Each of the l tensor slots carries one of the two standard q-oscillator Fock
modules over the algebra generated by b, bdag and the group-likes q**(nu N):

    chi_plus:   q**(nu N) v_m = q**(nu m) v_m,
                bdag v_m = v_{m+1},       b v_m = [m]_q v_{m-1}
    chi_minus:  q**(nu N) v_m = q**(-nu (m+1)) v_m,
                b v_m = v_{m+1},          bdag v_m = -[m]_q v_{m-1}

with v_{-1} = 0 in both.  States are finite QRational combinations of
occupation vectors m in Z_{>=0}^l.  The module type of every slot is fixed by
a ModePattern; the oscillator representations use l-a+1 minus slots followed
by a-1 plus slots, and their mirrored counterparts swap the two groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import QRational, qnum

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class ModePattern:
    """Assignment of a Fock module type to each of the l tensor slots."""

    l: int
    kinds: tuple

    def __post_init__(self):
        if self.l < 1 or len(self.kinds) != self.l:
            raise ValueError("pattern must assign one kind per slot")
        if any(k not in (PLUS, MINUS) for k in self.kinds):
            raise ValueError("slot kinds must be 'plus' or 'minus'")

    @staticmethod
    def theta(l: int, a: int) -> "ModePattern":
        """Slots of the a-th oscillator module: l-a+1 minus, then a-1 plus."""
        if not (1 <= a <= l + 1):
            raise ValueError("need 1 <= a <= l+1")
        return ModePattern(l, (MINUS,) * (l - a + 1) + (PLUS,) * (a - 1))

    @staticmethod
    def theta_bar(l: int, a: int) -> "ModePattern":
        """Slots of the mirrored a-th module: a-1 minus, then l-a+1 plus."""
        if not (1 <= a <= l + 1):
            raise ValueError("need 1 <= a <= l+1")
        return ModePattern(l, (MINUS,) * (a - 1) + (PLUS,) * (l - a + 1))


class FockState:
    """A finite linear combination of occupation basis vectors."""

    __slots__ = ("l", "_terms")

    def __init__(self, l: int, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            if isinstance(c, int):
                c = QRational.from_int(c)
            if not c.is_zero():
                clean[m] = c
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("FockState is immutable")

    @staticmethod
    def basis(m) -> "FockState":
        m = tuple(m)
        if not m or any(x < 0 for x in m):
            raise ValueError("occupation numbers must be >= 0")
        return FockState(len(m), {m: QRational.one()})

    @staticmethod
    def zero(l: int) -> "FockState":
        return FockState(l, {})

    def items(self):
        return self._terms.items()

    def coefficient(self, m) -> QRational:
        return self._terms.get(tuple(m), QRational.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "FockState") -> "FockState":
        if self.l != other.l:
            raise ValueError("rank mismatch")
        terms = dict(self._terms)
        for m, c in other._terms.items():
            acc = terms.get(m)
            terms[m] = c if acc is None else acc + c
        return FockState(self.l, terms)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + other.scale(QRational.from_int(-1))

    def scale(self, c: QRational) -> "FockState":
        if c.is_zero():
            return FockState.zero(self.l)
        return FockState(self.l, {m: c * x for m, x in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self.l == other.l and self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = [f"({c!r})*v{list(m)}" for m, c in sorted(self._terms.items())]
        return " + ".join(parts)


def _mode_on_basis(op, mode: int, kind: str, m: tuple):
    """Action of one oscillator generator on one basis vector.

    Returns (coefficient, new occupation vector) or None when the vector is
    annihilated.  op is 'b', 'bdag', or ('qN', k) for q**(k N).
    """
    j = mode - 1
    mj = m[j]
    if op == "b":
        if kind == PLUS:
            if mj == 0:
                return None
            return qnum(mj), m[:j] + (mj - 1,) + m[j + 1:]
        return QRational.one(), m[:j] + (mj + 1,) + m[j + 1:]
    if op == "bdag":
        if kind == PLUS:
            return QRational.one(), m[:j] + (mj + 1,) + m[j + 1:]
        if mj == 0:
            return None
        return -qnum(mj), m[:j] + (mj - 1,) + m[j + 1:]
    tag, k = op
    if tag != "qN":
        raise ValueError(f"unknown oscillator generator {op!r}")
    t = k * mj if kind == PLUS else -k * (mj + 1)
    return QRational.q_power(t), m


def apply_mode(op, mode: int, pattern: ModePattern, state: FockState) -> FockState:
    """Apply b, bdag or q**(k N) in one tensor slot to a state."""
    if not (1 <= mode <= pattern.l):
        raise IndexError("mode out of range")
    if state.l != pattern.l:
        raise ValueError("rank mismatch")
    kind = pattern.kinds[mode - 1]
    out = {}
    for m, c in state.items():
        hit = _mode_on_basis(op, mode, kind, m)
        if hit is None:
            continue
        coeff, m2 = hit
        acc = out.get(m2)
        out[m2] = coeff * c if acc is None else acc + coeff * c
    return FockState(pattern.l, out)


def basis_vector(a: int, bar: bool, m) -> FockState:
    """The distinguished basis vector with occupation numbers m.

    In every slot the module's own ladder operator built from the vacuum
    gives the occupation vector with unit coefficient, for the mirrored
    modules as well, so the two families share one occupation basis.
    """
    m = tuple(m)
    l = len(m)
    if not (1 <= a <= l + 1):
        raise ValueError("need 1 <= a <= l+1")
    return FockState.basis(m)
