"""The rank-four divisor class lattice of the degree-six del Pezzo surface
(the plane blown up at three general points).

Classes are written (a, b, c, d) for aH - cE1 - bE2 - dE3, H the pullback
of a general line and E1, E2, E3 the exceptional curves; the intersection
form is then aa' - bb' - cc' - dd'.  The module also carries the order-six
lattice isometry induced by the cyclic symmetry of the six -1-curves, the
sequence of twisting divisor classes built from it, Riemann-Roch, and the
combinatorial ampleness and vanishing tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, OMEGA


@dataclass(frozen=True)
class DivisorClass:
    """Integer 4-vector (a, b, c, d) meaning aH - cE1 - bE2 - dE3."""

    a: int
    b: int
    c: int
    d: int

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.a, k * self.b, k * self.c, k * self.d)

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        """Intersection number under the signature (1, 3) form."""
        return (
            self.a * other.a - self.b * other.b - self.c * other.c - self.d * other.d
        )

    def __str__(self):
        return f"({self.a},{self.b},{self.c},{self.d})"


ZERO_CLASS = DivisorClass(0, 0, 0, 0)
H = DivisorClass(1, 0, 0, 0)
E1 = DivisorClass(0, 0, -1, 0)
E2 = DivisorClass(0, -1, 0, 0)
E3 = DivisorClass(0, 0, 0, -1)
# canonical class; -K = (3,1,1,1) is ample
K = DivisorClass(-3, -1, -1, -1)
MINUS_K = DivisorClass(3, 1, 1, 1)
# strict transforms of the lines through pairs of blown-up points
L1 = DivisorClass(1, 1, 0, 1)
L2 = DivisorClass(1, 0, 1, 1)
L3 = DivisorClass(1, 1, 1, 0)

# generators of the effective cone: testing positivity against these six
# curves is the whole Nakai-Moishezon criterion on this surface
EFFECTIVE_GENERATORS = (L1, L2, L3, E1, E2, E3)

# the order-six isometry of the lattice induced by rotating the hexagon of
# -1-curves one step
ROTATION = (
    (2, -1, -1, -1),
    (1, -1, -1, 0),
    (1, 0, -1, -1),
    (1, -1, 0, -1),
)

# class of the first twisting bundle: the -1-curve X = 0
FIRST_TWIST = L1


def intersect(left: DivisorClass, right: DivisorClass) -> int:
    return left.dot(right)


def rotate_class(div: DivisorClass, matrix=None) -> DivisorClass:
    """Apply the hexagon rotation (or a supplied 4x4 matrix) to a class."""
    m = ROTATION if matrix is None else matrix
    v = div.coords
    return DivisorClass(*(sum(row[j] * v[j] for j in range(4)) for row in m))


def rotate_class_power(div: DivisorClass, times: int, matrix=None) -> DivisorClass:
    for _ in range(times):
        div = rotate_class(div, matrix)
    return div


def twist_divisor(n: int) -> DivisorClass:
    """Class of the n-th twisting bundle: the orbit sum of the first one.

    Computed by the linear recursion D_0 = 0, D_{n+1} = D_1 + rot(D_n).
    """
    if n < 0:
        raise ValueError("twist index must be non-negative")
    div = ZERO_CLASS
    for _ in range(n):
        div = FIRST_TWIST + rotate_class(div)
    return div


def chi(div: DivisorClass) -> int:
    """Euler characteristic by Riemann-Roch: 1 + D.(D - K)/2."""
    twice = div.dot(div - K)
    if twice % 2:
        raise ArithmeticError(
            f"odd self-pairing {twice} for {div}; lattice constants corrupted"
        )
    return 1 + twice // 2


def is_ample(div: DivisorClass) -> bool:
    """Nakai-Moishezon against the six effective-cone generators."""
    if div.dot(div) <= 0:
        return False
    return all(div.dot(curve) > 0 for curve in EFFECTIVE_GENERATORS)


def vanishing_criterion(div: DivisorClass) -> bool:
    """Numeric test equivalent to D - K ample, hence h1(D) = h2(D) = 0.

    Expands the Nakai-Moishezon inequalities for D - K coordinatewise.
    """
    a, b, c, d = div.coords
    if (a + 3) ** 2 <= (b + 1) ** 2 + (c + 1) ** 2 + (d + 1) ** 2:
        return False
    if b <= -1 or c <= -1 or d <= -1:
        return False
    return a + 1 > b + c and a + 1 > b + d and a + 1 > c + d


def h0_formula(n: int) -> int:
    """Closed-form section count of the n-th twist divisor.

    With n = 6m + r: (m+1)(3m+r) for r != 0, and 3m^2 + 3m + 1 for r = 0.
    """
    if n < 0:
        raise ValueError("twist index must be non-negative")
    m, r = divmod(n, 6)
    if r == 0:
        return 3 * m * m + 3 * m + 1
    return (m + 1) * (3 * m + r)


def _rotate_cyc_vector(vec, matrix):
    return tuple(
        sum(CycNum(row[j]) * vec[j] for j in range(4)) for row in matrix
    )


def rotation_eigensystem(matrix=None) -> list[tuple[tuple[CycNum, ...], CycNum]]:
    """The four exact eigenpairs of the lattice rotation over Q(zeta).

    Each returned (vector, eigenvalue) is verified to satisfy M v = lambda v
    exactly; an ArithmeticError means the matrix is not the hexagon rotation.
    """
    m = ROTATION if matrix is None else matrix
    one = CycNum(1)
    omega2 = OMEGA * OMEGA
    pairs = [
        (tuple(CycNum(1) for _ in range(4)), -one),
        ((CycNum(3), CycNum(1), CycNum(1), CycNum(1)), one),
        ((CycNum(0), CycNum(1), OMEGA, omega2), omega2),
        ((CycNum(0), CycNum(1), omega2, OMEGA), OMEGA),
    ]
    for vec, value in pairs:
        image = _rotate_cyc_vector(vec, m)
        expected = tuple(value * entry for entry in vec)
        if image != expected:
            raise ArithmeticError(
                f"eigenpair check failed: M*{vec} = {image}, expected {expected}"
            )
    return pairs
