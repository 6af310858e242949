"""Rewriting engine for the ring presented on w, z, x by

    zw = zeta*wz,    xw = -zeta^2*wx + z,    xz = zeta*zx - w^2,

with weights w = 2, z = 3, x = 1.  Repeated rewriting moves every word onto
the ordered-monomial basis {w^i z^j x^k}, which is a linear basis, so the
normal form is unique.  The same ring is generated by x (weight 1) and
y = w + x^2 (weight 2) subject to x^5 = yxy and y^2 = xyx; `xy_to_pbw`
converts from that presentation.

Termination: each rule application strictly decreases the measure
(#x, #z, inversions) in lexicographic order, where inversions counts the
pairs x-before-w, x-before-z and z-before-w.  The swap part of a rule
removes one inversion; the correction part drops an x (and for xz also a
z).  The measure is asserted on every application.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, ONE, ZETA
from .ncpoly import NcPoly, WZX, XY, AlphabetMismatchError

# -zeta^2 = 1 - zeta
_MINUS_ZETA_SQ = -(ZETA * ZETA)

REWRITE_RULES: dict[str, tuple[tuple[CycNum, str], ...]] = {
    "zw": ((ZETA, "wz"),),
    "xw": ((_MINUS_ZETA_SQ, "wx"), (ONE, "z")),
    "xz": ((ZETA, "zx"), (-ONE, "ww")),
}


def termination_measure(word: str) -> tuple[int, int, int]:
    """(#x, #z, inversions); rewriting strictly decreases this, lexicographically."""
    inversions = 0
    for i, ch in enumerate(word):
        if ch == "x":
            inversions += sum(1 for other in word[i + 1 :] if other in "wz")
        elif ch == "z":
            inversions += sum(1 for other in word[i + 1 :] if other == "w")
    return (word.count("x"), word.count("z"), inversions)


def _find_redex(word: str, rightmost: bool) -> int | None:
    indices = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in indices:
        if word[i : i + 2] in REWRITE_RULES:
            return i
    return None


def is_pbw_word(word: str) -> bool:
    """True iff the word is a sorted block w...w z...z x...x."""
    return _find_redex(word, rightmost=False) is None


def normal_form(p: NcPoly, strategy: str = "leftmost") -> NcPoly:
    """Unique ordered-monomial representative of p's class.

    `strategy` picks which reducible pair is rewritten first; by confluence
    the result does not depend on it (tested), only the intermediate work
    does.
    """
    if p.alphabet != WZX:
        raise AlphabetMismatchError("normal_form expects the w,z,x alphabet")
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rightmost = strategy == "rightmost"
    pending = list(p.terms.items())
    out: dict[str, CycNum] = {}
    while pending:
        word, coeff = pending.pop()
        i = _find_redex(word, rightmost)
        if i is None:
            out[word] = out.get(word, CycNum(0)) + coeff
            continue
        measure = termination_measure(word)
        for rule_coeff, replacement in REWRITE_RULES[word[i : i + 2]]:
            new_word = word[:i] + replacement + word[i + 2 :]
            assert termination_measure(new_word) < measure
            pending.append((new_word, coeff * rule_coeff))
    return NcPoly(WZX, out)


_Y_IMAGE = NcPoly(WZX, {"w": 1, "xx": 1})
_XY_IMAGES = {"x": NcPoly.variable(WZX, "x"), "y": _Y_IMAGE}


def xy_to_pbw(p: NcPoly) -> NcPoly:
    """Express an x,y-polynomial in the ordered w,z,x basis (y = w + x^2)."""
    if p.alphabet != XY:
        raise AlphabetMismatchError("xy_to_pbw expects the x,y alphabet")
    if p.is_zero:
        return NcPoly.zero(WZX)
    return normal_form(p.substitute(_XY_IMAGES))


@dataclass(frozen=True, order=True)
class PbwMonomial:
    """Exponent triple (i, j, k) for the basis monomial w^i z^j x^k."""

    i: int
    j: int
    k: int

    @property
    def degree(self) -> int:
        return 2 * self.i + 3 * self.j + self.k

    def word(self) -> str:
        return "w" * self.i + "z" * self.j + "x" * self.k

    def render(self) -> str:
        parts = []
        for letter, exp in (("w", self.i), ("z", self.j), ("x", self.k)):
            if exp == 1:
                parts.append(letter)
            elif exp > 1:
                parts.append(f"{letter}^{exp}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


def pbw_basis(n: int) -> list[PbwMonomial]:
    """All (i, j, k) >= 0 with 2i + 3j + k = n, sorted by (i, j, k)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    out = []
    for i in range(n // 2 + 1):
        rest = n - 2 * i
        for j in range(rest // 3 + 1):
            out.append(PbwMonomial(i, j, rest - 3 * j))
    return out


def hilbert_coeffs(max_degree: int) -> list[int]:
    """Graded dimensions [dim_0, ..., dim_max_degree] via basis counting."""
    if max_degree < 0:
        raise ValueError("degree must be non-negative")
    return [len(pbw_basis(n)) for n in range(max_degree + 1)]


def pbw_coefficients(p: NcPoly) -> dict[PbwMonomial, CycNum]:
    """Coefficients of a polynomial already in normal form on the basis."""
    out: dict[PbwMonomial, CycNum] = {}
    for word, coeff in p.terms.items():
        if not is_pbw_word(word):
            raise ValueError(f"word {word!r} is not an ordered monomial")
        out[PbwMonomial(word.count("w"), word.count("z"), word.count("x"))] = coeff
    return out


def commutes_with_generators(p: NcPoly) -> bool:
    """True iff p commutes with both x and y, hence is central."""
    if p.alphabet != XY:
        raise AlphabetMismatchError("expects the x,y alphabet")
    for letter in ("x", "y"):
        g = NcPoly.variable(XY, letter)
        if not xy_to_pbw(p * g - g * p).is_zero:
            return False
    return True
