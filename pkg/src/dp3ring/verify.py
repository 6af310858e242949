"""Machine verification suite.

Every finitely checkable identity relating the rewriting side to the
section side runs here: graded dimensions, the degree-by-degree
isomorphism, lattice structure, ampleness equivalences, generation, and
the cubic Veronese relations.  Each check reports pass or fail with a
witness on failure; properties with no finite certificate are listed
explicitly instead of being claimed.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from . import cox, ore, picard, thcr
from .cyclotomic import CycNum
from .ncpoly import XY, parse
from .picard import (
    DivisorClass,
    K,
    MINUS_K,
    chi,
    h0_formula,
    intersect,
    is_ample,
    rotate_class,
    rotation_eigensystem,
    twist_divisor,
    vanishing_criterion,
)

NOT_MACHINE_CHECKABLE = (
    "category equivalence between surface sheaves and graded modules up to torsion",
    "sigma-ampleness of the twisting bundle",
    "noetherianity",
    "global homological dimension three",
    "Auslander-Gorenstein and Cohen-Macaulay properties",
    "module-finiteness over the center",
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    witness: str | None = None
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    max_degree: int
    checks: list[CheckResult] = field(default_factory=list)
    not_machine_checkable: tuple[str, ...] = NOT_MACHINE_CHECKABLE

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_text(self) -> str:
        lines = [f"verification report (max degree {self.max_degree})"]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"  {status} {check.name}: {check.detail}"
            if check.witness:
                line += f" [witness: {check.witness}]"
            lines.append(line)
        lines.append("not machine-checkable (reported, never claimed):")
        for item in self.not_machine_checkable:
            lines.append(f"  - {item}")
        done = sum(1 for check in self.checks if check.passed)
        lines.append(f"result: {done}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_dict(self, include_timing: bool = False) -> dict:
        checks = []
        for check in self.checks:
            entry = {
                "name": check.name,
                "passed": check.passed,
                "detail": check.detail,
                "witness": check.witness,
            }
            if include_timing:
                entry["elapsed"] = check.elapsed
            checks.append(entry)
        return {
            "max_degree": self.max_degree,
            "all_passed": self.all_passed,
            "checks": checks,
            "not_machine_checkable": list(self.not_machine_checkable),
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)


# -- exact linear algebra ------------------------------------------------------


def matrix_rank(rows: list[list[CycNum]]) -> int:
    """Rank over Q(zeta) by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = CycNum(1)
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev
            m[r][col] = CycNum(0)
        prev = m[rank][col]
        rank += 1
    return rank


# -- individual checks -----------------------------------------------------------


def check_defining_relations() -> CheckResult:
    """The defining relations vanish in normal form, the same identities
    hold between section images, x^6 is central, and the whole low-degree
    dictionary reproduces."""
    problems = []
    for text in ("x^5 - y*x*y", "y^2 - x*y*x", "x^6 - y^3"):
        if not ore.xy_to_pbw(parse(text, XY)).is_zero:
            problems.append(f"{text} does not reduce to 0")
    for lhs, rhs in (("xxxxx", "yxy"), ("yy", "xyx"), ("xxxxxx", "yyy")):
        if thcr.word_image(lhs) != thcr.word_image(rhs):
            problems.append(f"section images of {lhs} and {rhs} differ")
    if not ore.commutes_with_generators(parse("x^6", XY)):
        problems.append("x^6 is not central")
    for word, expected in thcr.LOW_DEGREE_TABLE:
        if thcr.word_image(word) != cox.parse_monomial(expected):
            problems.append(f"{word} maps to {thcr.word_image(word)}, not {expected}")
    return CheckResult(
        "defining_relations",
        not problems,
        f"relations, centrality of x^6 and all {len(thcr.LOW_DEGREE_TABLE)} "
        "dictionary entries",
        "; ".join(problems) or None,
    )


def iso_degree_matches(n: int) -> bool:
    """Single-degree isomorphism test: the basis count equals the section
    count and the word images cover the monomial basis exactly."""
    _, images = thcr.word_image_exponents(n)
    basis = {mono.exps for mono in thcr.twist_basis(n).basis}
    return len(ore.pbw_basis(n)) == len(basis) and images == basis


def check_graded_isomorphism(max_degree: int) -> CheckResult:
    """In each degree the basis count matches the section count and the word
    images cover the monomial basis exactly."""
    dims = []
    fib = [1, 1]
    while len(fib) <= max_degree:
        fib.append(fib[-1] + fib[-2])
    for n in range(max_degree + 1):
        count, images = thcr.word_image_exponents(n)
        if count != fib[n]:
            return CheckResult(
                "graded_isomorphism",
                False,
                f"degrees 0..{max_degree}",
                f"word enumerator produced {count} words of degree {n}, expected {fib[n]}",
            )
        basis = {mono.exps for mono in thcr.twist_basis(n).basis}
        dim = len(ore.pbw_basis(n))
        if dim != len(basis) or images != basis:
            return CheckResult(
                "graded_isomorphism",
                False,
                f"degrees 0..{max_degree}",
                f"degree {n}: basis dim {dim}, section dim {len(basis)}, "
                f"image set {'equal' if images == basis else 'different'}",
            )
        dims.append(dim)
    return CheckResult(
        "graded_isomorphism",
        True,
        f"degrees 0..{max_degree}: dims {dims[:7]}... and image sets match",
    )


def check_hilbert_series(max_degree: int) -> CheckResult:
    """Basis counts agree with the series 1/((1-t)(1-t^2)(1-t^3))."""
    coeffs = [1] + [0] * max_degree
    for step in (1, 2, 3):
        for i in range(step, max_degree + 1):
            coeffs[i] += coeffs[i - step]
    actual = ore.hilbert_coeffs(max_degree)
    if actual != coeffs:
        first = next(n for n in range(max_degree + 1) if actual[n] != coeffs[n])
        return CheckResult(
            "hilbert_series",
            False,
            f"degrees 0..{max_degree}",
            f"degree {first}: counted {actual[first]}, series says {coeffs[first]}",
        )
    return CheckResult(
        "hilbert_series", True, f"coefficients 0..{max_degree} match the series"
    )


def check_dimension_match(max_degree: int) -> CheckResult:
    """Basis count, section count, closed form and Euler characteristic all
    agree in every degree."""
    for n in range(max_degree + 1):
        div = twist_divisor(n)
        values = (
            len(ore.pbw_basis(n)),
            cox.section_count(div),
            h0_formula(n),
            chi(div),
        )
        if len(set(values)) != 1:
            return CheckResult(
                "dimension_match",
                False,
                f"degrees 0..{max_degree}",
                f"degree {n}: basis/sections/formula/chi = {values}",
            )
    return CheckResult(
        "dimension_match",
        True,
        f"degrees 0..{max_degree}: basis = sections = formula = chi",
    )


def check_cubic_veronese() -> CheckResult:
    """Among x^3, xy, yx the quadratic relations form exactly a plane:
    (x^3)^2 = (xy)^2 = (yx)^2, and dim of degree six is 9 - 2."""
    gens = [parse(text, XY) for text in ("x^3", "x*y", "y*x")]
    basis6 = ore.pbw_basis(6)
    rows = []
    for left in gens:
        for right in gens:
            coeffs = ore.pbw_coefficients(ore.xy_to_pbw(left * right))
            rows.append([coeffs.get(mono, CycNum(0)) for mono in basis6])
    kernel = len(rows) - matrix_rank(rows)
    problems = []
    if kernel != 2:
        problems.append(f"kernel dimension {kernel} != 2")
    if not ore.xy_to_pbw(gens[0] * gens[0] - gens[1] * gens[1]).is_zero:
        problems.append("(x^3)^2 != (xy)^2")
    if not ore.xy_to_pbw(gens[1] * gens[1] - gens[2] * gens[2]).is_zero:
        problems.append("(xy)^2 != (yx)^2")
    dim3 = len(ore.pbw_basis(3))
    if not (len(basis6) == 7 and dim3 == 3 and len(basis6) == dim3 * dim3 - 2):
        problems.append(f"dims: degree six {len(basis6)}, degree three {dim3}")
    return CheckResult(
        "cubic_veronese",
        not problems,
        "9 products span a 7-dim space; relation plane has dimension 2",
        "; ".join(problems) or None,
    )


def check_anticanonical_cone(max_degree: int) -> CheckResult:
    """Degrees divisible by six match the section counts of multiples of the
    anticanonical class, with values 3n^2 + 3n + 1."""
    seen = []
    for n in range(max_degree // 6 + 1):
        values = (
            len(ore.pbw_basis(6 * n)),
            cox.section_count(n * MINUS_K),
            3 * n * n + 3 * n + 1,
        )
        if len(set(values)) != 1:
            return CheckResult(
                "anticanonical_cone",
                False,
                f"multiples 0..{max_degree // 6}",
                f"n={n}: basis/sections/formula = {values}",
            )
        seen.append(values[0])
    return CheckResult(
        "anticanonical_cone", True, f"multiples 0..{max_degree // 6}: values {seen}"
    )


def check_generation(max_degree: int) -> CheckResult:
    """Every degree is covered by twisted products with degree-1 and degree-2
    monomials; the quadratic part alone suffices except in degree three."""
    need_linear = []
    for n in range(max_degree - 1):
        if not thcr.check_generation(n):
            return CheckResult(
                "generation",
                False,
                f"degrees 0..{max_degree - 2}",
                f"degree {n + 2} not generated",
            )
        if not thcr.degree_two_covers(n):
            need_linear.append(n + 2)
    return CheckResult(
        "generation",
        True,
        f"degrees 0..{max_degree - 2} generated; linear part needed only in "
        f"degrees {need_linear}",
    )


# rows of the surjectivity-step divisor table: (residue, first multiple,
# coordinate formulas in m)
_GENERATION_TABLE = (
    (0, 2, lambda m: (3 * m + 1, m - 1, m + 1, m + 1)),
    (1, 1, lambda m: (3 * m + 2, m, m + 1, m + 2)),
    (2, 1, lambda m: (3 * m + 2, m, m + 1, m + 1)),
    (3, 1, lambda m: (3 * m + 3, m, m + 2, m + 2)),
    (4, 1, lambda m: (3 * m + 3, m, m + 1, m + 2)),
    (5, 1, lambda m: (3 * m + 4, m + 1, m + 2, m + 2)),
)

GENERATION_TABLE_MAX_M = 6


def check_generation_divisors() -> CheckResult:
    """The divisor table driving the surjectivity argument is reproduced by
    D_r - 2*D_2 - (m+1)*K and satisfies the vanishing criterion rowwise.

    The unbounded ranges are truncated at m = 6 (recorded here); the
    induction beyond that is a sum-of-amples argument, not a finite check.
    """
    two_d2 = 2 * twist_divisor(2)
    for r, first_m, formula in _GENERATION_TABLE:
        for m in range(first_m, GENERATION_TABLE_MAX_M + 1):
            listed = DivisorClass(*formula(m))
            built = twist_divisor(r) - two_d2 - (m + 1) * K
            if listed != built:
                return CheckResult(
                    "generation_divisor_table",
                    False,
                    "6 row families, m up to 6",
                    f"r={r}, m={m}: table {listed} != constructed {built}",
                )
            if not vanishing_criterion(listed):
                return CheckResult(
                    "generation_divisor_table",
                    False,
                    "6 row families, m up to 6",
                    f"r={r}, m={m}: vanishing criterion fails for {listed}",
                )
    return CheckResult(
        "generation_divisor_table",
        True,
        "6 row families verified for m up to 6 (ranges truncated there)",
    )


def check_hexagon() -> CheckResult:
    """The six variable weights intersect as a hexagon (cyclic tridiagonal
    matrix), rotation of variables matches rotation of classes, and the nine
    irrelevant pairs are permuted."""
    cycle = ("X", "u", "Y", "t", "Z", "s")
    weights = [cox.WEIGHT_TABLE[cox.VARIABLES.index(v)] for v in cycle]
    problems = []
    for i in range(6):
        for j in range(6):
            expected = -1 if i == j else (1 if (i - j) % 6 in (1, 5) else 0)
            actual = intersect(weights[i], weights[j])
            if actual != expected:
                problems.append(
                    f"{cycle[i]}.{cycle[j]} = {actual}, expected {expected}"
                )
    for name in cox.VARIABLES:
        mono = cox.variable_monomial(name)
        lhs = cox.multidegree(cox.rotate_monomial(mono))
        rhs = rotate_class(cox.multidegree(mono))
        if lhs != rhs:
            problems.append(f"rotation mismatch on {name}: {lhs} != {rhs}")
    pair_set = set(cox.IRRELEVANT_PAIRS)
    for pair in cox.IRRELEVANT_PAIRS:
        image = frozenset(cox.rotate_variable(v) for v in pair)
        if image not in pair_set:
            problems.append(f"pair {set(pair)} rotates out of the irrelevant locus")
    return CheckResult(
        "hexagon",
        not problems,
        "cyclic tridiagonal intersection matrix; 9 irrelevant pairs permuted",
        "; ".join(problems) or None,
    )


def check_rotation_order() -> CheckResult:
    """The lattice rotation has order six, fixes the anticanonical class,
    and K.K = 6."""
    problems = []
    matrix = picard.ROTATION
    power = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for _ in range(6):
        power = [
            [sum(matrix[i][k] * power[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)
        ]
    if power != [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]:
        problems.append(f"sixth power is {power}, not the identity")
    if rotate_class(MINUS_K) != MINUS_K:
        problems.append("anticanonical class is not fixed")
    if intersect(K, K) != 6:
        problems.append(f"K.K = {intersect(K, K)} != 6")
    return CheckResult(
        "rotation_order",
        not problems,
        "sixth power is the identity; anticanonical class fixed; K.K = 6",
        "; ".join(problems) or None,
    )


def check_rotation_isometry(pairs: int = 1000, seed: int = 0) -> CheckResult:
    """The rotation preserves the intersection form on random class pairs."""
    rng = random.Random(seed)
    for _ in range(pairs):
        left = DivisorClass(*(rng.randint(-9, 9) for _ in range(4)))
        right = DivisorClass(*(rng.randint(-9, 9) for _ in range(4)))
        before = intersect(left, right)
        after = intersect(rotate_class(left), rotate_class(right))
        if before != after:
            return CheckResult(
                "rotation_isometry",
                False,
                f"{pairs} seeded random pairs",
                f"{left}.{right} = {before} but rotates to {after}",
            )
    return CheckResult(
        "rotation_isometry", True, f"{pairs} seeded random pairs preserved"
    )


def check_rotation_eigensystem() -> CheckResult:
    """The four exact eigenpairs over Q(zeta) verify."""
    try:
        pairs = rotation_eigensystem()
    except ArithmeticError as exc:
        return CheckResult(
            "rotation_eigensystem", False, "4 exact eigenpairs", str(exc)
        )
    values = ", ".join(str(value) for _, value in pairs)
    return CheckResult(
        "rotation_eigensystem", True, f"4 exact eigenpairs; eigenvalues {values}"
    )


_TWIST_TABLE = {
    1: (1, 1, 0, 1),
    2: (1, 1, 0, 0),
    3: (2, 1, 1, 1),
    4: (2, 1, 0, 1),
    5: (3, 2, 1, 1),
    6: (3, 1, 1, 1),
    7: (4, 2, 1, 2),
}


def check_twist_divisor_table() -> CheckResult:
    """The first seven twist divisors take their tabulated values."""
    for n, coords in _TWIST_TABLE.items():
        if twist_divisor(n) != DivisorClass(*coords):
            return CheckResult(
                "twist_divisor_table",
                False,
                "twists 1..7",
                f"twist {n} is {twist_divisor(n)}, expected {coords}",
            )
    return CheckResult("twist_divisor_table", True, "twists 1..7 match the table")


def check_orbit_sum_identity(max_degree: int) -> CheckResult:
    """Twist divisors repeat modulo six up to anticanonical shifts:
    D(6m+r) = D(r) - m*K."""
    for n in range(max_degree + 1):
        m, r = divmod(n, 6)
        if twist_divisor(n) != twist_divisor(r) - m * K:
            return CheckResult(
                "orbit_sum_identity",
                False,
                f"twists 0..{max_degree}",
                f"twist {n} != twist {r} - {m}K",
            )
    return CheckResult(
        "orbit_sum_identity", True, f"twists 0..{max_degree}: D(6m+r) = D(r) - mK"
    )


def check_euler_char_step(max_degree: int) -> CheckResult:
    """chi grows by n + 6 across a full rotation period."""
    for n in range(max_degree + 1):
        step = chi(twist_divisor(n + 6)) - chi(twist_divisor(n))
        if step != n + 6:
            return CheckResult(
                "euler_char_step",
                False,
                f"degrees 0..{max_degree}",
                f"degree {n}: chi step {step} != {n + 6}",
            )
    return CheckResult(
        "euler_char_step", True, f"degrees 0..{max_degree}: chi(D(n+6)) - chi(D(n)) = n + 6"
    )


def check_twist_ampleness(max_degree: int) -> CheckResult:
    """D(n) - K is ample for every n >= 2 up to the cap; the vanishing
    criterion holds for twists 0, 2..7 and fails exactly at twist 1."""
    problems = []
    for n in (0, 2, 3, 4, 5, 6, 7):
        if not vanishing_criterion(twist_divisor(n)):
            problems.append(f"vanishing criterion fails at twist {n}")
    if vanishing_criterion(twist_divisor(1)):
        problems.append("vanishing criterion unexpectedly holds at twist 1")
    if is_ample(twist_divisor(1) - K):
        problems.append("D(1) - K is not expected to be ample")
    for n in range(2, max_degree + 1):
        if not is_ample(twist_divisor(n) - K):
            problems.append(f"D({n}) - K is not ample")
            break
    return CheckResult(
        "twist_ampleness",
        not problems,
        f"D(n) - K ample for 2 <= n <= {max_degree}; twist 1 is the known exception",
        "; ".join(problems) or None,
    )


def check_ample_criterion_box() -> CheckResult:
    """The coordinate vanishing criterion agrees with Nakai-Moishezon for
    D - K on the whole box [-5, 9]^4."""
    count = 0
    for a in range(-5, 10):
        for b in range(-5, 10):
            for c in range(-5, 10):
                for d in range(-5, 10):
                    div = DivisorClass(a, b, c, d)
                    count += 1
                    if vanishing_criterion(div) != is_ample(div - K):
                        return CheckResult(
                            "ample_criterion_box",
                            False,
                            f"{count} classes tested",
                            f"criterion and ampleness of D - K disagree at {div}",
                        )
    return CheckResult(
        "ample_criterion_box", True, f"{count} classes in [-5,9]^4 agree"
    )


def run_all(max_degree: int = 24) -> VerificationReport:
    """Run every check at the given degree cap and aggregate a report.

    Failures are recorded, never raised; two runs produce identical reports.
    """
    if max_degree < 6:
        raise ValueError("max_degree must be at least 6")
    plan = (
        check_defining_relations,
        lambda: check_graded_isomorphism(max_degree),
        lambda: check_hilbert_series(max_degree),
        lambda: check_dimension_match(max_degree),
        check_cubic_veronese,
        lambda: check_anticanonical_cone(max_degree),
        lambda: check_generation(max_degree),
        check_generation_divisors,
        check_hexagon,
        check_rotation_order,
        check_rotation_isometry,
        check_rotation_eigensystem,
        check_twist_divisor_table,
        lambda: check_orbit_sum_identity(max_degree),
        lambda: check_euler_char_step(max_degree),
        lambda: check_twist_ampleness(max_degree),
        check_ample_criterion_box,
    )
    report = VerificationReport(max_degree=max_degree)
    for step in plan:
        start = time.perf_counter()
        result = step()
        result.elapsed = time.perf_counter() - start
        report.checks.append(result)
    return report
