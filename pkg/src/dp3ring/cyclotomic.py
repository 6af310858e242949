"""Exact arithmetic in the quadratic cyclotomic field Q(zeta), zeta a
primitive sixth root of unity.

A value is stored as the pair (p, q) meaning p + q*zeta with p and q exact
rationals.  Every product is reduced by zeta^2 = zeta - 1, so the pair is a
canonical form and equality is plain structural comparison.  No floats
anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class CycNum:
    """An element p + q*zeta of Q(zeta)."""

    __slots__ = ("p", "q")

    def __init__(self, p: int | Fraction = 0, q: int | Fraction = 0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def _coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        return None

    def __add__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return CycNum(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return CycNum(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycNum(-self.p, -self.q)

    def __mul__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        # (p1 + q1 z)(p2 + q2 z), then z^2 = z - 1
        p1, q1, p2, q2 = self.p, self.q, other.p, other.q
        return CycNum(p1 * p2 - q1 * q2, p1 * q2 + q1 * p2 + q1 * q2)

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        """Multiplicative inverse.  Raises ZeroDivisionError on zero."""
        # Conjugate of p + q*zeta is (p + q) - q*zeta; the norm
        # p^2 + pq + q^2 is positive definite over Q.
        norm = self.p * self.p + self.p * self.q + self.q * self.q
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        return CycNum((self.p + self.q) / norm, -self.q / norm)

    def __truediv__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        out = CycNum(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        # agree with Fraction/int hashes on rational values
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        if self.q == 1:
            zpart = "zeta"
        elif self.q == -1:
            zpart = "-zeta"
        else:
            zpart = f"{self.q}*zeta"
        if self.p == 0:
            return zpart
        if self.q < 0:
            return f"{self.p} - {zpart[1:]}"
        return f"{self.p} + {zpart}"

    __repr__ = __str__


ZERO = CycNum(0)
ONE = CycNum(1)
ZETA = CycNum(0, 1)
# primitive cube root of unity: omega = zeta^2 = zeta - 1
OMEGA = CycNum(-1, 1)

# zeta^k for k = 0..5; the powers repeat with period six
_ZETA_POWERS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def zeta_pow(k: int) -> CycNum:
    """zeta^k in canonical form, any integer k."""
    p, q = _ZETA_POWERS[k % 6]
    return CycNum(p, q)
