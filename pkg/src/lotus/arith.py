"""Exact scalar arithmetic: rationals, infinity, continued fractions, p-parts.

Everything downstream (simplicial complexes, trees, invariants) computes with
the types in this module.  There is deliberately no floating point anywhere:
all equality tests in the test suite are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "Rational",
    "Infinity",
    "INF",
    "ExtendedRational",
    "rat",
    "rat_str",
    "cf_expand",
    "cf_eval",
    "wedge",
    "is_prime",
    "p_adic_valuation",
    "coprime_part",
]

# The universal scalar.  fractions.Fraction already maintains the invariants
# we need (lowest terms, positive denominator, exact arithmetic).
Rational = Fraction


class Infinity:
    """The point at infinity of [0, inf]; compares above every Rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("lotus-infinity")

    def __lt__(self, other):
        if isinstance(other, (Infinity, Fraction, int)):
            return False
        return NotImplemented

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        if isinstance(other, Infinity):
            return False
        if isinstance(other, (Fraction, int)):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (Infinity, Fraction, int)):
            return True
        return NotImplemented


INF = Infinity()

# A value in Q>=0 together with the symbol infinity.
ExtendedRational = Fraction | Infinity


def rat(text: str | int | Fraction) -> ExtendedRational:
    """Parse "num/den" (den omitted when 1) or "inf" into an exact value."""
    if isinstance(text, Infinity):
        return text
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = text.strip()
    if s == "inf":
        return INF
    return Fraction(s)


def rat_str(value: ExtendedRational | int) -> str:
    """Serialize a Rational as "num/den" (den omitted when 1); infinity as "inf"."""
    if isinstance(value, Infinity):
        return "inf"
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def cf_expand(q: Fraction | int) -> tuple[int, ...]:
    """Continued fraction expansion [a_1, ..., a_k] of a positive rational.

    Canonical form: a_1 >= 0, later terms >= 1, and the last term is > 1
    unless the value is 1 (which expands to [1]).
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"cf_expand requires a positive rational, got {q}")
    terms = []
    num, den = q.numerator, q.denominator
    while True:
        a, r = divmod(num, den)
        terms.append(a)
        if r == 0:
            break
        num, den = den, r
    return tuple(terms)


def cf_eval(terms) -> Fraction:
    """Evaluate a continued fraction a_1 + 1/(a_2 + 1/(... + 1/a_k))."""
    terms = tuple(terms)
    if not terms:
        raise ValueError("empty continued fraction")
    if terms[0] < 0 or any(a < 1 for a in terms[1:]):
        raise ValueError(f"invalid continued fraction terms {terms}")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return value


def wedge(g: Fraction | int, m: Fraction | int) -> Fraction:
    """The slope g /\\ m whose Newton lotus is the intersection of those of g and m.

    Computed by the three-case rule on the canonical continued fraction
    expansions; symmetric and idempotent.
    """
    a = cf_expand(g)
    b = cf_expand(m)
    j = 0
    while j < min(len(a), len(b)) and a[j] == b[j]:
        j += 1
    # Normalize so that either a is the common prefix or a diverges downward.
    if len(a) != j and (len(b) == j or a[j] > b[j]):
        a, b = b, a
    k = len(a)
    if k == j:
        return cf_eval(a[:j]) if j else Fraction(0)
    if k == j + 1:
        return cf_eval(a[: j + 1])
    return cf_eval(a[:j] + (a[j] + 1,))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit (and beyond) input used here."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def p_adic_valuation(n: int, p: int) -> int:
    """Largest v with p^v | n, for n != 0 and p prime."""
    if n == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def coprime_part(n: int, p: int) -> int:
    """The part n[:p] of n coprime to p, i.e. n / p^{v_p(n)}."""
    v = p_adic_valuation(n, p)
    return n // p**v


def denominator_lcm(values) -> int:
    """lcm of the denominators of a collection of rationals."""
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def exponent_gcd_chain(n: int, numerators) -> list[int]:
    """The chain e_0 = n, e_i = gcd(e_{i-1}, b_i) for the given numerators b_i."""
    chain = [n]
    for b in numerators:
        chain.append(gcd(chain[-1], b))
    return chain
