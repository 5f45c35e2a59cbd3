"""Prime powers, modular inverses and small finite fields GF(p^m).

Elements of GF(p^m) are integers in [0, q): the coefficient vector
(c_0, ..., c_{m-1}) of a polynomial in the field generator x is stored as
sum(c_j * p**j). Addition is digitwise mod p; multiplication goes through
log/antilog tables built from the designated generator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from .errors import DivisionByZero, NotInvertible, NotPrime, NotPrimePower


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def require_prime(m: int) -> int:
    if not is_prime(m):
        raise NotPrime(f"{m} is not prime")
    return m


def factor_prime_power(q: int) -> Tuple[int, int]:
    """Return (p, m) with q == p**m, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p = factors[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


def inverse_mod(a: int, n: int) -> int:
    """Inverse of a modulo n, in [1, n)."""
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {n}") from None


# -- polynomials over GF(p), coefficient lists lowest degree first ---------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a modulo b (b monic)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        coef = a[i] % p
        if coef:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - coef * b[j]) % p
    return _poly_trim([x % p for x in a[:db]])


def _is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def _lowest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    # Candidates ordered by the base-p integer of (c_0, ..., c_{m-1}).
    for code in range(p**m):
        low = [(code // p**j) % p for j in range(m)]
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _digits(v: int, p: int, m: int) -> list[int]:
    return [(v // p**j) % p for j in range(m)]


def _undigits(c, p: int) -> int:
    return sum(int(x) * p**j for j, x in enumerate(c))


def _poly_mul_raw(a: int, b: int, p: int, m: int, modulus) -> int:
    if m == 1:
        return a * b % p
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    return _undigits(_poly_mod(prod, list(modulus), p), p)


def _pow_raw(a: int, t: int, p: int, m: int, modulus) -> int:
    result, base = 1, a
    while t:
        if t & 1:
            result = _poly_mul_raw(result, base, p, m, modulus)
        base = _poly_mul_raw(base, base, p, m, modulus)
        t >>= 1
    return result


def _order_raw(a: int, p: int, m: int, modulus) -> int:
    order = p**m - 1
    for r in prime_factors(order):
        while order % r == 0 and _pow_raw(a, order // r, p, m, modulus) == 1:
            order //= r
    return order


@dataclass(frozen=True)
class FieldSpec:
    """A concrete model of GF(p^m) with a fixed multiplicative generator."""

    p: int
    m: int
    q: int
    modulus: Tuple[int, ...]
    generator: int

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def build_field(q: int) -> FieldSpec:
    """Build GF(q) deterministically.

    The modulus is the lexicographically lowest monic irreducible of degree m
    (for m = 1 the placeholder x), and the generator is the smallest element
    of multiplicative order q - 1.
    """
    p, m = factor_prime_power(q)
    modulus = (0, 1) if m == 1 else _lowest_irreducible(p, m)
    for g in range(1, q):
        if _order_raw(g, p, m, modulus) == q - 1:
            return FieldSpec(p=p, m=m, q=q, modulus=modulus, generator=g)
    raise AssertionError(f"GF({q}) has no generator")


@lru_cache(maxsize=None)
def log_tables(spec: FieldSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Antilog table exp[t] = g^t (length q - 1) and log table (log[0] = -1)."""
    q = spec.q
    exp = np.empty(q - 1, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for t in range(q - 1):
        exp[t] = x
        log[x] = t
        x = _poly_mul_raw(x, spec.generator, spec.p, spec.m, spec.modulus)
    exp.setflags(write=False)
    log.setflags(write=False)
    return exp, log


def _check(spec: FieldSpec, *xs) -> None:
    for x in xs:
        if not 0 <= x < spec.q:
            raise ValueError(f"{x} is not an element of {spec!r}")


def field_add(spec: FieldSpec, a, b):
    """Digitwise sum mod p. Accepts ints or integer numpy arrays."""
    if spec.m == 1:
        return (a + b) % spec.p
    out = 0
    place = 1
    for _ in range(spec.m):
        out = out + ((a // place + b // place) % spec.p) * place
        place *= spec.p
    return out


def field_neg(spec: FieldSpec, a):
    if spec.m == 1:
        return (-a) % spec.p
    out = 0
    place = 1
    for _ in range(spec.m):
        out = out + ((-(a // place)) % spec.p) * place
        place *= spec.p
    return out


def field_sub(spec: FieldSpec, a, b):
    return field_add(spec, a, field_neg(spec, b))


def field_mul(spec: FieldSpec, a: int, b: int) -> int:
    _check(spec, a, b)
    if a == 0 or b == 0:
        return 0
    exp, log = log_tables(spec)
    return int(exp[(log[a] + log[b]) % (spec.q - 1)])


def field_inv(spec: FieldSpec, a: int) -> int:
    _check(spec, a)
    if a == 0:
        raise DivisionByZero(f"0 has no inverse in {spec!r}")
    exp, log = log_tables(spec)
    return int(exp[(-log[a]) % (spec.q - 1)])


def pow_mod_order(spec: FieldSpec, a: int, t: int) -> int:
    """a**t in the field by square-and-multiply; negative t uses the inverse."""
    _check(spec, a)
    if a == 0:
        raise DivisionByZero("exponentiation of 0 is not supported")
    if t < 0:
        a, t = field_inv(spec, a), -t
    return _pow_raw(a, t, spec.p, spec.m, spec.modulus)


def element_order(spec: FieldSpec, a: int) -> int:
    _check(spec, a)
    if a == 0:
        raise DivisionByZero("0 has no multiplicative order")
    return _order_raw(a, spec.p, spec.m, spec.modulus)
