"""The Z^4-graded total coordinate ring C[X, Y, Z, s, t, u] of the
degree-six del Pezzo surface.

Each variable cuts out one of the six -1-curves and its multidegree is that
curve's divisor class; the graded piece in degree D is spanned by the
monomials of multidegree D, which this module enumerates directly.  The
cyclic rotation X -> u -> Y -> t -> Z -> s -> X of the variables realizes
the hexagon symmetry on sections and matches the lattice rotation on
multidegrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .picard import DivisorClass

VARIABLES = ("X", "Y", "Z", "s", "t", "u")

WEIGHT_TABLE = (
    DivisorClass(1, 1, 0, 1),   # X
    DivisorClass(1, 0, 1, 1),   # Y
    DivisorClass(1, 1, 1, 0),   # Z
    DivisorClass(0, -1, 0, 0),  # s
    DivisorClass(0, 0, -1, 0),  # t
    DivisorClass(0, 0, 0, -1),  # u
)

# one rotation step sends variable i to variable _ROT_IMAGE[i]
_ROT_IMAGE = (5, 4, 3, 0, 2, 1)

# _ROT_SOURCE[m][j] = which old exponent lands on variable j after m steps
_ROT_SOURCE = []
_perm = list(range(6))
for _ in range(6):
    _ROT_SOURCE.append(tuple(_perm))
    _perm = [_perm[_ROT_IMAGE.index(j)] for j in range(6)]
_ROT_SOURCE = tuple(_ROT_SOURCE)

# the nine codimension-two coordinate subspaces removed before taking the
# torus quotient, as unordered variable pairs
IRRELEVANT_PAIRS = tuple(
    frozenset(pair)
    for pair in (
        ("X", "t"), ("Y", "s"), ("Z", "u"),
        ("X", "Y"), ("Y", "Z"), ("Z", "X"),
        ("s", "t"), ("u", "t"), ("s", "u"),
    )
)


def rotate_variable(name: str, times: int = 1) -> str:
    """Image of a variable under the cyclic rotation."""
    i = VARIABLES.index(name)
    for _ in range(times % 6):
        i = _ROT_IMAGE[i]
    return VARIABLES[i]


def rotate_exponents(exps: tuple[int, ...], times: int = 1) -> tuple[int, ...]:
    src = _ROT_SOURCE[times % 6]
    return tuple(exps[src[j]] for j in range(6))


@dataclass(frozen=True, order=True)
class CoxMonomial:
    """Exponent 6-vector in the fixed variable order X, Y, Z, s, t, u."""

    exps: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.exps) != 6 or any(e < 0 for e in self.exps):
            raise ValueError(f"bad exponent vector {self.exps!r}")

    def __mul__(self, other: CoxMonomial) -> CoxMonomial:
        return CoxMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def render(self) -> str:
        parts = []
        for name, exp in zip(VARIABLES, self.exps):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


UNIT = CoxMonomial((0, 0, 0, 0, 0, 0))


def variable_monomial(name: str) -> CoxMonomial:
    i = VARIABLES.index(name)
    return CoxMonomial(tuple(1 if j == i else 0 for j in range(6)))


def multidegree(mono: CoxMonomial) -> DivisorClass:
    """Integer combination of the variable weights by the exponents."""
    out = DivisorClass(0, 0, 0, 0)
    for exp, weight in zip(mono.exps, WEIGHT_TABLE):
        if exp:
            out = out + exp * weight
    return out


def rotate_monomial(mono: CoxMonomial, times: int = 1) -> CoxMonomial:
    return CoxMonomial(rotate_exponents(mono.exps, times))


def parse_monomial(text: str) -> CoxMonomial:
    """Parse the canonical rendering, e.g. "X^2*Y*s*u^2" or "1"."""
    text = text.strip()
    if text == "1":
        return UNIT
    exps = [0] * 6
    for piece in text.split("*"):
        name, _, power = piece.partition("^")
        if name not in VARIABLES:
            raise ValueError(f"unknown variable {name!r}")
        exps[VARIABLES.index(name)] += int(power) if power else 1
    return CoxMonomial(tuple(exps))


class CoxPoly:
    """Commutative polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[CoxMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                clean[mono] = value
        self.terms = clean

    @classmethod
    def from_monomial(cls, mono: CoxMonomial, coeff=1) -> CoxPoly:
        return cls({mono: coeff})

    def __add__(self, other: CoxPoly) -> CoxPoly:
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return CoxPoly(out)

    def __sub__(self, other: CoxPoly) -> CoxPoly:
        return self + (-other)

    def __neg__(self) -> CoxPoly:
        return CoxPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CoxPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, CoxPoly):
            return NotImplemented
        out: dict[CoxMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                prod = m1 * m2
                out[prod] = out.get(prod, Fraction(0)) + c1 * c2
        return CoxPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CoxPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[CoxMonomial]:
        # canonical display order: lex on exponent vectors, largest first
        return sorted(self.terms, reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in self.monomials():
            coeff = self.terms[mono]
            body = mono.render()
            if coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{coeff}*{body}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<cox: {self.render()}>"


def rotate_vars(obj, times: int = 1):
    """Apply the cyclic variable rotation to a monomial or polynomial."""
    if isinstance(obj, CoxMonomial):
        return rotate_monomial(obj, times)
    if isinstance(obj, CoxPoly):
        return CoxPoly({rotate_monomial(m, times): c for m, c in obj.terms.items()})
    raise TypeError(f"cannot rotate {type(obj).__name__}")


@dataclass(frozen=True)
class SectionSpace:
    """A divisor class together with the sorted monomial basis of its piece.

    The basis is strictly sorted in the canonical display order (lex on
    exponent vectors, largest first), so there are no duplicates.
    """

    degree: DivisorClass
    basis: tuple[CoxMonomial, ...]

    def __post_init__(self):
        for prev, cur in zip(self.basis, self.basis[1:]):
            if not prev > cur:
                raise ValueError("basis must be strictly sorted")
        for mono in self.basis:
            if multidegree(mono) != self.degree:
                raise ValueError(f"{mono} does not have multidegree {self.degree}")

    @property
    def dimension(self) -> int:
        return len(self.basis)


def enumerate_sections(div: DivisorClass) -> SectionSpace:
    """All monomials of multidegree (a, b, c, d), sorted lexicographically.

    The first coordinate forces i + j + k = a on the X, Y, Z exponents and
    the s, t, u exponents are then the slacks i+k-b, j+k-c, i+j-d, so the
    search space is the O(a^2) triangle; a monomial exists iff all three
    slacks are non-negative.
    """
    a, b, c, d = div.coords
    found = []
    for i in range(a + 1):
        for j in range(a - i + 1):
            k = a - i - j
            es = i + k - b
            et = j + k - c
            eu = i + j - d
            if es >= 0 and et >= 0 and eu >= 0:
                found.append(CoxMonomial((i, j, k, es, et, eu)))
    found.sort(reverse=True)
    return SectionSpace(div, tuple(found))


def section_count(div: DivisorClass) -> int:
    """Dimension of the graded piece in degree D, by direct enumeration."""
    return enumerate_sections(div).dimension
