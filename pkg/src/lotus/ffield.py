"""Finite field extensions F_{p^m} and roots of unity of prescribed order.

The conjugation of Newton-Puiseux series in characteristic p multiplies
coefficients by powers of a root of unity whose exact order is the coprime
part n[:p] of the exponent denominator.  This module builds, once per (p, n'),
the smallest field F_{p^m} containing such a root and hands back exact
arithmetic on it.

Deterministic choices throughout: the modulus is the lexicographically
smallest monic irreducible of the right degree, the generator is the smallest
primitive element, so repeated runs agree byte for byte.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import is_prime

__all__ = ["FiniteField", "field_with_unity_root"]


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's variant, fixed seeds)."""
    from math import gcd

    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division plus Pollard rho."""
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int):
    m = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m + 1):
                res[i - m + j] = (res[i - m + j] - c * modulus[j]) % p
    res = res[:m] + [0] * max(0, m - len(res))
    return tuple(res[:m])


class FiniteField:
    """F_{p^m} as F_p[x] modulo a fixed monic irreducible.

    Elements are length-m coefficient tuples (constant term first).  The field
    object also knows a chosen primitive element.
    """

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.m = m
        self.modulus = self._smallest_irreducible()
        self.one = self.embed(1)
        self.zero = self.embed(0)
        self.generator = self._smallest_primitive()

    # -- construction of the modulus and generator ---------------------------

    def _candidates(self):
        # Monic degree-m polynomials x^m + c_{m-1} x^{m-1} + ... + c_0, ordered
        # lexicographically on the word (c_{m-1}, ..., c_0): the constant term
        # is the fastest-varying base-p digit of the enumeration code.
        p, m = self.p, self.m
        for code in range(p**m):
            digits = []
            rem = code
            for _ in range(m):
                digits.append(rem % p)
                rem //= p
            yield tuple(digits) + (1,)

    def _is_irreducible(self, poly: tuple[int, ...]) -> bool:
        # Rabin's test: x^(p^m) == x mod poly, and gcd(x^(p^(m/q)) - x, poly)
        # is constant for every prime q dividing m.
        p, m = self.p, len(poly) - 1
        if m == 1:
            return True
        x = (0, 1) + (0,) * (m - 2)

        def frobenius_iterate(times: int):
            cur = x
            for _ in range(times):
                cur = _poly_pow(cur, p, poly, p)
            return cur

        if frobenius_iterate(m) != x:
            return False
        for q in sorted(factorize(m)):
            diff = _poly_sub(frobenius_iterate(m // q), x, p)
            if _poly_gcd_degree(diff, poly, p) != 0:
                return False
        return True

    def _smallest_irreducible(self) -> tuple[int, ...]:
        if self.m == 1:
            return (0, 1)
        for cand in self._candidates():
            if self._is_irreducible(cand):
                return cand
        raise ArithmeticError("no irreducible polynomial found")

    def _smallest_primitive(self) -> tuple[int, ...]:
        order = self.p**self.m - 1
        primes = sorted(factorize(order))
        for code in range(1, self.p**self.m):
            el = self._decode(code)
            if all(self.pow(el, order // q) != self.one for q in primes):
                return el
        raise ArithmeticError("no primitive element found")

    def _decode(self, code: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.m):
            coeffs.append(code % self.p)
            code //= self.p
        return tuple(coeffs)

    # -- arithmetic ------------------------------------------------------------

    def embed(self, c: int) -> tuple[int, ...]:
        return (c % self.p,) + (0,) * (self.m - 1)

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        if self.m == 1:
            return ((a[0] * b[0]) % self.p,)
        return _poly_mul(a, b, self.modulus, self.p)

    def pow(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def unity_root(self, order: int) -> tuple[int, ...]:
        """An element of exact multiplicative order ``order``."""
        size = self.p**self.m - 1
        if size % order:
            raise ValueError(f"F_{self.p}^{self.m} has no root of unity of order {order}")
        zeta = self.pow(self.generator, size // order)
        for q in sorted(factorize(order)):
            if self.pow(zeta, order // q) == self.one:
                raise ArithmeticError("generator was not primitive")
        return zeta


def _poly_pow(a, e, modulus, p):
    result = (1,) + (0,) * (len(modulus) - 2)
    base = a
    while e:
        if e & 1:
            result = _poly_mul(result, base, modulus, p)
        base = _poly_mul(base, base, modulus, p)
        e >>= 1
    return result


def _poly_sub(a, b, p):
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    return tuple((x - y) % p for x, y in zip(a, b))


def _poly_degree(a) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p (b not necessarily monic)."""
    a = list(a)
    db = _poly_degree(b)
    inv = pow(b[db], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            factor = a[i] * inv % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - factor * b[j]) % p
    return tuple(a[:db]) if db > 0 else ()


def _poly_gcd_degree(a, b, p) -> int:
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(a, b, p)
    return _poly_degree(a)


@lru_cache(maxsize=None)
def field_with_unity_root(p: int, order: int) -> tuple[FiniteField, tuple[int, ...]]:
    """The smallest F_{p^m} containing a root of unity of the given order.

    ``order`` must be coprime to p; m is the multiplicative order of p modulo
    ``order``.
    """
    if order % p == 0:
        raise ValueError("order must be coprime to p")
    if order == 1:
        field = FiniteField(p, 1)
        return field, field.one
    m = 1
    acc = p % order
    while acc != 1:
        acc = (acc * p) % order
        m += 1
    field = FiniteField(p, m)
    return field, field.unity_root(order)
