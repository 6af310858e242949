"""Sections of the twisting line bundles with the rotation-twisted product.

The n-th graded piece is the space of Cox monomials of multidegree equal to
the n-th twist divisor.  Multiplication of a degree-m section a by a
degree-n section b is the ordinary Cox product of a with the m-fold
variable rotation of b.  Words in x (degree 1, image X) and y (degree 2,
image Z*t) evaluate into the ring left to right, and that evaluation
reproduces the whole low-degree dictionary below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cox import (
    CoxMonomial,
    CoxPoly,
    SectionSpace,
    enumerate_sections,
    multidegree,
    rotate_exponents,
    rotate_monomial,
    rotate_vars,
)
from .ncpoly import NcPoly, XY
from .picard import twist_divisor

# generator images: x -> X, y -> Z*t
_X_EXPS = (1, 0, 0, 0, 0, 0)
_Y_EXPS = (0, 0, 1, 0, 1, 0)
_LETTER_EXPS = {"x": _X_EXPS, "y": _Y_EXPS}
_LETTER_DEGREE = {"x": 1, "y": 2}

# word = section-monomial dictionary in degrees 1..6; every entry is
# reproduced by word_image (tested) and pins the rotation direction
LOW_DEGREE_TABLE = (
    ("x", "X"),
    ("xx", "X*u"),
    ("y", "Z*t"),
    ("xxx", "X*Y*u"),
    ("yx", "Y*Z*t"),
    ("xy", "X*Z*s"),
    ("xxxx", "X*Y*t*u"),
    ("yxx", "Y*Z*t^2"),
    ("yy", "X*Z*s*t"),
    ("xxy", "X^2*s*u"),
    ("xxxxx", "X*Y*Z*t*u"),
    ("yxxx", "Y*Z^2*t^2"),
    ("yyx", "X*Z^2*s*t"),
    ("xyy", "X^2*Z*s*u"),
    ("xxxy", "X^2*Y*u^2"),
    ("xxxxxx", "X*Y*Z*s*t*u"),
    ("yxxxx", "Y*Z^2*s*t^2"),
    ("yyxx", "X*Z^2*s^2*t"),
    ("xyyx", "X^2*Z*s^2*u"),
    ("xxyy", "X^2*Y*s*u^2"),
    ("xxxxy", "X*Y^2*t*u^2"),
    ("yxxy", "Y^2*Z*t^2*u"),
)


@dataclass(frozen=True)
class GradedSection:
    """A degree-n element: a rational polynomial supported in one multidegree."""

    n: int
    poly: CoxPoly

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("section degree must be non-negative")
        target = twist_divisor(self.n)
        for mono in self.poly.terms:
            if multidegree(mono) != target:
                raise ValueError(
                    f"monomial {mono} breaks homogeneity: multidegree "
                    f"{multidegree(mono)} != {target}"
                )

    def render(self) -> str:
        return self.poly.render()

    def __str__(self):
        return self.render()


def twisted_mul(a: GradedSection, b: GradedSection) -> GradedSection:
    """Product of a degree-m and a degree-n section: a times rot^m(b)."""
    return GradedSection(a.n + b.n, a.poly * rotate_vars(b.poly, a.n))


def twist_basis(n: int) -> SectionSpace:
    """Monomial basis of the degree-n piece of the twisted ring."""
    return enumerate_sections(twist_divisor(n))


def word_image(word: str) -> CoxMonomial:
    """Evaluate an x,y-word left to right into a section monomial.

    The accumulated weighted degree m twists the next letter's image by
    rot^m; the result always has coefficient one since rotation introduces
    no scalars.
    """
    exps = (0, 0, 0, 0, 0, 0)
    m = 0
    for ch in word:
        try:
            gen = _LETTER_EXPS[ch]
        except KeyError:
            raise ValueError(f"words use only 'x' and 'y', got {ch!r}") from None
        shifted = rotate_exponents(gen, m)
        exps = tuple(e + g for e, g in zip(exps, shifted))
        m += _LETTER_DEGREE[ch]
    return CoxMonomial(exps)


def word_image_exponents(n: int) -> tuple[int, set[tuple[int, ...]]]:
    """(word count, set of image exponent vectors) over all degree-n words."""
    images: set[tuple[int, ...]] = set()
    count = 0

    def walk(exps: tuple[int, ...], m: int, remaining: int):
        nonlocal count
        if remaining == 0:
            count += 1
            images.add(exps)
            return
        for letter in ("x", "y"):
            weight = _LETTER_DEGREE[letter]
            if weight <= remaining:
                shifted = rotate_exponents(_LETTER_EXPS[letter], m)
                walk(
                    tuple(e + g for e, g in zip(exps, shifted)),
                    m + weight,
                    remaining - weight,
                )

    walk((0, 0, 0, 0, 0, 0), 0, n)
    return count, images


def section_from_xy(p: NcPoly) -> GradedSection:
    """Image of a homogeneous rational x,y-polynomial in the twisted ring."""
    if p.alphabet != XY:
        raise ValueError("expected a polynomial over the x,y alphabet")
    if p.is_zero:
        raise ValueError("cannot infer the degree of the zero polynomial")
    degree = p.homogeneous_degree()
    if degree is None:
        raise ValueError("polynomial is not homogeneous")
    poly = CoxPoly()
    for word, coeff in p.terms.items():
        if not coeff.is_rational:
            raise ValueError("twisted-ring sections carry rational coefficients")
        poly = poly + CoxPoly.from_monomial(word_image(word), coeff.p)
    return GradedSection(degree, poly)


def degree_two_covers(n: int) -> bool:
    """True iff products of degree-2 basis monomials with rot^2 of the
    degree-n basis already cover the whole degree-(n+2) basis."""
    target = set(twist_basis(n + 2).basis)
    quadratic = twist_basis(2).basis
    lower = twist_basis(n).basis
    cover = {a * rotate_monomial(b, 2) for a in quadratic for b in lower}
    return target <= cover


def check_generation(n: int) -> bool:
    """True iff the degree-(n+2) basis is covered by twisted products with a
    degree-1 or degree-2 monomial on the left.

    The quadratic products alone suffice except in degree three, where the
    linear generator is also needed (x*y is not a product of degree-2 by
    degree-1 elements).
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    target = set(twist_basis(n + 2).basis)
    quadratic = twist_basis(2).basis
    cover = {a * rotate_monomial(b, 2) for a in quadratic for b in twist_basis(n).basis}
    if target <= cover:
        return True
    linear = twist_basis(1).basis
    cover |= {a * rotate_monomial(b, 1) for a in linear for b in twist_basis(n + 1).basis}
    return target <= cover
