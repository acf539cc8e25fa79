"""Newton-Puiseux series: parsing, conjugates, coincidence, trees, intersections.

Characteristic zero and characteristic p share one code path.  Coefficients
are exact: in characteristic zero a nonzero rational magnitude together with a
rational angle (the coefficient q*e^{2*pi*i*theta}; conjugation only ever
multiplies by roots of unity, so this decides every comparison), in
characteristic p an element of the prime field or of the extension F_{p^m}
generated by the required root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import coprime_part, denominator_lcm, is_prime, p_adic_valuation, rat_str
from .ewtree import (
    EWTree,
    contact_complexity,
    exponent_at_contact,
    glue_branch_chains,
    tripod_intersection,
)
from .ffield import FiniteField, field_with_unity_root

__all__ = [
    "AngleCoeff",
    "NPSeries",
    "ParseError",
    "parse_np_series",
    "char_exponents",
    "conjugates",
    "coincidence_order",
    "ew_from_series",
    "lotus_tree_from_series",
    "contact_p",
    "tripod_p",
    "intersection_oracle",
    "PlanePoly",
    "has_np_root",
]


@dataclass(frozen=True)
class AngleCoeff:
    """A characteristic-zero coefficient q * e^(2*pi*i*theta), q rational.

    Stored normalized with positive magnitude and angle in [0, 1), so that
    plain equality of the fields is exact coefficient equality.
    """

    magnitude: Fraction
    angle: Fraction

    @staticmethod
    def of(q: Fraction | int, angle: Fraction | int = 0) -> "AngleCoeff":
        q = Fraction(q)
        angle = Fraction(angle) % 1
        if q == 0:
            raise ValueError("zero coefficient")
        if q < 0:
            q, angle = -q, (angle + Fraction(1, 2)) % 1
        return AngleCoeff(q, angle)

    def rotated(self, theta: Fraction) -> "AngleCoeff":
        return AngleCoeff(self.magnitude, (self.angle + theta) % 1)

    def render(self) -> str:
        mag = rat_str(self.magnitude)
        if self.angle == 0:
            return mag
        if self.angle == Fraction(1, 2):
            return f"-{mag}"
        return f"{mag}*e({rat_str(self.angle)})"


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class NPSeries:
    """A finite-support Newton-Puiseux series with positive exponents.

    ``terms`` maps strictly increasing exponents to nonzero coefficients:
    AngleCoeff in characteristic zero; in characteristic p either prime-field
    integers (as parsed) or tuples over the attached FiniteField (after
    conjugation).
    """

    char: int
    terms: tuple[tuple[Fraction, object], ...]
    field: FiniteField | None = None

    def __post_init__(self):
        exps = [e for e, _ in self.terms]
        if any(e <= 0 for e in exps):
            raise ValueError("series exponents must be positive")
        if sorted(exps) != exps or len(set(exps)) != len(exps):
            raise ValueError("series exponents must be strictly increasing")

    @property
    def n(self) -> int:
        """Least common denominator of the exponents."""
        return denominator_lcm(e for e, _ in self.terms)

    def coefficient(self, exponent: Fraction):
        for e, c in self.terms:
            if e == exponent:
                return c
        return None

    def support(self) -> list[Fraction]:
        return [e for e, _ in self.terms]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if self.char == 0:
                coeff = c.render()
            elif isinstance(c, tuple):
                coeff = "(" + ",".join(str(x) for x in c) + ")"
            else:
                coeff = str(c)
            exp = rat_str(e)
            x = "x" if e == 1 else (f"x^{exp}" if "/" not in exp else f"x^({exp})")
            parts.append(x if coeff == "1" else f"{coeff}*{x}")
        return " + ".join(parts)


def parse_np_series(text: str, char: int = 0) -> NPSeries:
    """Parse the little series DSL: sums of terms ``c*x^(a/b)``.

    Coefficients are rational literals in characteristic zero and integers
    modulo p in characteristic p; exponents must be positive.  Whitespace is
    ignored.  Raises ParseError with a position on malformed input.
    """
    if char != 0 and not is_prime(char):
        raise ValueError(f"characteristic must be 0 or prime, got {char}")
    s = text
    i = 0
    n = len(s)

    def skip_ws():
        nonlocal i
        while i < n and s[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and s[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected an integer", start)
        return int(s[start:i])

    def read_rational(allow_fraction: bool) -> Fraction:
        nonlocal i
        num = read_int()
        skip_ws()
        if allow_fraction and i < n and s[i] == "/":
            i += 1
            skip_ws()
            den = read_int()
            if den == 0:
                raise ParseError("zero denominator", i)
            return Fraction(num, den)
        return Fraction(num)

    def read_exponent() -> Fraction:
        nonlocal i
        skip_ws()
        if i < n and s[i] == "(":
            i += 1
            skip_ws()
            value = read_rational(allow_fraction=True)
            skip_ws()
            if i >= n or s[i] != ")":
                raise ParseError("expected ')'", i)
            i += 1
            return value
        return read_rational(allow_fraction=True)

    terms: list[tuple[Fraction, object]] = []
    skip_ws()
    first = True
    while i < n:
        sign = 1
        skip_ws()
        if not first or (i < n and s[i] in "+-"):
            if i >= n or s[i] not in "+-":
                raise ParseError("expected '+' or '-'", i)
            sign = -1 if s[i] == "-" else 1
            i += 1
            skip_ws()
        first = False
        coeff_val: Fraction | None = None
        if i < n and (s[i].isdigit() or s[i] == "("):
            parenthesized = s[i] == "("
            if parenthesized:
                i += 1
                skip_ws()
            coeff_val = read_rational(allow_fraction=True)
            skip_ws()
            if parenthesized:
                if i >= n or s[i] != ")":
                    raise ParseError("expected ')'", i)
                i += 1
                skip_ws()
            if i < n and s[i] == "*":
                i += 1
                skip_ws()
        if i >= n or s[i] != "x":
            raise ParseError("expected 'x'", i)
        i += 1
        skip_ws()
        exponent = Fraction(1)
        if i < n and s[i] == "^":
            i += 1
            exponent = read_exponent()
        if exponent <= 0:
            raise ParseError(f"exponent {exponent} is not positive", i)
        if coeff_val is None:
            coeff_val = Fraction(1)
        coeff_val *= sign
        if any(e == exponent for e, _ in terms):
            raise ParseError(f"duplicate exponent {rat_str(exponent)}", i)
        if char == 0:
            coeff: object = AngleCoeff.of(coeff_val)
        else:
            if coeff_val.denominator != 1:
                raise ParseError("coefficients must be integers in positive characteristic", i)
            residue = coeff_val.numerator % char
            if residue == 0:
                raise ParseError("coefficient vanishes modulo the characteristic", i)
            coeff = residue
        terms.append((exponent, coeff))
        skip_ws()
    if not terms:
        raise ParseError("empty series", 0)
    terms.sort(key=lambda t: t[0])
    return NPSeries(char, tuple(terms))


def char_exponents(series: NPSeries) -> list[Fraction]:
    """Characteristic exponents of the series, by denominator jumps.

    With n the least common denominator and the support written as j/n, take
    e_0 = n, b_i the least j not divisible by e_{i-1}, e_i = gcd(e_{i-1}, b_i)
    until e_h = 1; the characteristic exponents are the b_i/n.
    """
    n = series.n
    support_j = [int(e * n) for e in series.support()]
    out = []
    e_cur = n
    while e_cur != 1:
        candidates = [j for j in support_j if j % e_cur]
        if not candidates:
            break
        b = min(candidates)
        out.append(Fraction(b, n))
        e_cur = gcd(e_cur, b)
    return out


def _coprime(series: NPSeries) -> int:
    """n[:p] with n[:0] = n, so both characteristics share one code path."""
    n = series.n
    return n if series.char == 0 else coprime_part(n, series.char)


def conjugates(series: NPSeries) -> list[NPSeries]:
    """The orbit of the series under substituting the n-th roots of x^(1/n).

    Exactly n distinct members in characteristic zero and n[:p] in
    characteristic p.
    """
    n = series.n
    count = _coprime(series)
    out = []
    if series.char == 0:
        for k in range(count):
            terms = tuple(
                (e, c.rotated(Fraction(k * int(e * n), n) % 1)) for e, c in series.terms
            )
            out.append(NPSeries(0, terms))
    else:
        p = series.char
        if series.field is not None:
            raise ValueError("conjugates expects prime-field input coefficients")
        field, zeta = field_with_unity_root(p, count)
        for k in range(count):
            terms = []
            for e, c in series.terms:
                j = int(e * n)
                factor = field.pow(zeta, (k * j) % count)
                terms.append((e, field.mul(field.embed(c), factor)))
            out.append(NPSeries(p, tuple(terms), field))
    assert len({s.terms for s in out}) == count, "conjugates are not distinct"
    return out


def _coeffs_equal(char: int, a, b, field: FiniteField | None) -> bool:
    if a is None or b is None:
        return a is None and b is None
    if char == 0:
        return a == b
    lift = lambda c: field.embed(c) if isinstance(c, int) else c
    if field is None:
        return a % char == b % char
    return lift(a) == lift(b)


def _order_of_difference(a: NPSeries, b: NPSeries) -> Fraction | None:
    """nu_x(a - b): least exponent where the coefficients differ; None if equal."""
    field = a.field or b.field
    exponents = sorted(set(a.support()) | set(b.support()))
    for e in exponents:
        if not _coeffs_equal(a.char, a.coefficient(e), b.coefficient(e), field):
            return e
    return None


def coincidence_order(s1: NPSeries, s2: NPSeries) -> Fraction:
    """Order of coincidence of two distinct branches: the largest valuation of
    a difference of conjugate roots."""
    if s1.char != s2.char:
        raise ValueError("series live in different characteristics")
    best = None
    for tau in conjugates(s2):
        d = _order_of_difference(s1, tau)
        if d is None:
            raise ValueError("the two series define the same branch")
        best = d if best is None else max(best, d)
    return best


def _branch_chain(series: NPSeries) -> dict:
    """Marker/index chain of one branch, feeding the tree gluing.

    In characteristic p the interior indices are the coprime parts of the
    auxiliary (denominator) indices, and the value at the leaf itself is the
    full intersection number with the reference axis, namely n.
    """
    n = series.n
    p = series.char
    alphas = char_exponents(series)
    e_chain = [n]
    for a in alphas:
        e_chain.append(gcd(e_chain[-1], int(a * n)))
    markers = []
    for i, a in enumerate(alphas):
        aux = n // e_chain[i]
        markers.append((a, aux if p == 0 else coprime_part(aux, p)))
    leaf_aux = n // e_chain[-1]
    leaf_index = leaf_aux if p == 0 else coprime_part(leaf_aux, p)
    chain = {"markers": markers, "leaf_index": leaf_index, "arrowhead": True}
    if p != 0:
        chain["leaf_value"] = n
    return chain


def ew_from_series(branches: dict[str, NPSeries | str], char: int = 0) -> EWTree:
    """The Eggers-Wall tree of a set of branches given by Newton-Puiseux series.

    In characteristic zero this is the classical tree; in characteristic p the
    Newton-Puiseux tree with coprime-part indices in the interior and the full
    intersection number with the reference axis at each leaf.
    """
    parsed: dict[str, NPSeries] = {}
    for label, value in branches.items():
        series = parse_np_series(value, char) if isinstance(value, str) else value
        if series.char != char:
            raise ValueError(f"branch {label!r} has characteristic {series.char}, not {char}")
        parsed[label] = series
    labels = list(parsed)
    coincidence = {}
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            coincidence[frozenset((a, b))] = coincidence_order(parsed[a], parsed[b])
    chains = {label: _branch_chain(s) for label, s in parsed.items()}
    return glue_branch_chains(chains, coincidence)


def lotus_tree_from_series(branches: dict[str, NPSeries | str], char: int) -> EWTree:
    """The lotus-style (blowup) Eggers-Wall tree of char-p branches with roots.

    Branch segments carry full denominator indices; ramification points are
    placed by inverting the contact complexity at the resultant-oracle
    intersection numbers, which is how the blowup tree is recovered when
    Newton-Puiseux coincidence orders are unreliable.  Assumes each series'
    denominator-jump exponents are the characteristic exponents of its branch
    (wild overweight deformations are out of scope).
    """
    parsed = {
        label: (parse_np_series(v, char) if isinstance(v, str) else v)
        for label, v in branches.items()
    }
    chains = {}
    for label, s in parsed.items():
        n = s.n
        alphas = char_exponents(s)
        e_chain = [n]
        for a in alphas:
            e_chain.append(gcd(e_chain[-1], int(a * n)))
        chains[label] = {
            "markers": [(a, n // e_chain[i]) for i, a in enumerate(alphas)],
            "leaf_index": n // e_chain[-1],
            "arrowhead": True,
        }
    labels = list(parsed)
    coincidence = {}
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            inter = intersection_oracle(parsed[a], parsed[b], char)
            contact = Fraction(inter, parsed[a].n * parsed[b].n)
            ea = exponent_at_contact(chains[a], contact)
            eb = exponent_at_contact(chains[b], contact)
            if ea != eb:
                raise ValueError(
                    f"branches {a!r}, {b!r}: center exponents {ea} vs {eb} disagree"
                )
            coincidence[frozenset((a, b))] = ea
    return glue_branch_chains(chains, coincidence)


def contact_p(tree: EWTree, point):
    """Contact complexity on a characteristic-p Newton-Puiseux tree."""
    return contact_complexity(tree, point)


def tripod_p(tree: EWTree, a, b) -> int:
    """Tripod intersection number on a characteristic-p Newton-Puiseux tree."""
    return tripod_intersection(tree, a, b)


def intersection_oracle(s1: NPSeries | str, s2: NPSeries | str, char: int = 0) -> int:
    """Brute-force intersection number of two branches from their series.

    deg(g) times the valuation of the product of the differences between the
    distinct conjugates of the first series and a root of the second, each
    conjugate counted p^{v_p(n)} times in characteristic p.  This is the
    independent oracle for every lotus- and tree-based intersection method.
    """
    if isinstance(s1, str):
        s1 = parse_np_series(s1, char)
    if isinstance(s2, str):
        s2 = parse_np_series(s2, char)
    if s1.char != s2.char:
        raise ValueError("series live in different characteristics")
    p = s1.char
    multiplicity = 1 if p == 0 else p ** p_adic_valuation(s1.n, p)
    total = Fraction(0)
    for xi in conjugates(s1):
        d = _order_of_difference(xi, s2)
        if d is None:
            raise ValueError("the two series define the same branch")
        total += d
    value = s2.n * multiplicity * total
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral intersection number {value}")
    return int(value)


# -- polynomials and the existence criterion -------------------------------------


@dataclass(frozen=True)
class PlanePoly:
    """A y-monic polynomial with power-series coefficients, at finite support.

    ``monomials`` maps (x-exponent, y-exponent) pairs to nonzero coefficients
    of the prime field (rationals when char is 0).
    """

    char: int
    monomials: tuple[tuple[tuple[int, int], object], ...]

    @staticmethod
    def of(char: int, entries: dict[tuple[int, int], object]) -> "PlanePoly":
        cleaned = {}
        for (i, j), c in entries.items():
            if char:
                c = int(c) % char
            else:
                c = Fraction(c)
            if c:
                cleaned[(i, j)] = c
        poly = PlanePoly(char, tuple(sorted(cleaned.items())))
        poly.y_degree()  # validates monicity
        return poly

    @staticmethod
    def from_dict(data: dict) -> "PlanePoly":
        return PlanePoly.of(
            data["char"], {(m["i"], m["j"]): m["c"] for m in data["monomials"]}
        )

    def to_dict(self) -> dict:
        return {
            "char": self.char,
            "monomials": [
                {"i": i, "j": j, "c": int(c) if self.char else rat_str(c)}
                for (i, j), c in self.monomials
            ],
        }

    def y_degree(self) -> int:
        degree = max(j for (_, j), _ in self.monomials)
        top = [((i, j), c) for (i, j), c in self.monomials if j == degree]
        if top != [((0, degree), 1 if self.char else Fraction(1))]:
            raise ValueError("polynomial is not monic in y")
        return degree


def has_np_root(poly: PlanePoly, p: int | None = None) -> bool:
    """Whether a monic irreducible polynomial has a Newton-Puiseux root.

    True exactly when the polynomial is a polynomial in y^q, q = p^{v_p(n)}
    for n the y-degree.  Irreducibility is the caller's obligation; it is not
    checked here.
    """
    if p is None:
        p = poly.char
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = poly.y_degree()
    q = p ** p_adic_valuation(n, p)
    return all(j % q == 0 for (_, j), _ in poly.monomials)
