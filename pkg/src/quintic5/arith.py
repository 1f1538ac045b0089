"""Elementary integer arithmetic: primality, factorization, and a brute-force
factorization oracle for the fifth cyclotomic polynomial over prime fields.

Everything here is deliberately self-contained and dumb. In particular the
splitting oracle knows nothing about congruence conditions on p; it exists so
that the congruence-based splitting rule elsewhere can be cross-checked against
an independent computation.
"""

from __future__ import annotations

from dataclasses import dataclass

# Fixed Miller-Rabin witness set; deterministic for every modulus below
# 3.3 * 10^24, which covers the full 64-bit range this library targets.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Gaps between consecutive integers coprime to 30, starting from 7.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

# The oracle is an exhaustive O(p) search; refuse inputs where that stops
# being a reasonable thing to run.
_ORACLE_LIMIT = 10**6


def is_prime(m: int) -> bool:
    """Deterministic primality test for 64-bit integers."""
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """n together with its factorization, primes increasing, exponents >= 1.

    Instances produced by factorize (or the enumeration sieve) are guaranteed
    consistent; construct by hand only with data you trust.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        """Recheck the invariants; used on untrusted data and in tests."""
        prod = 1
        prev = 1
        for p, e in self.factors:
            assert p > prev, f"primes out of order in {self.factors}"
            assert e >= 1, f"bad exponent {e} for prime {p}"
            assert is_prime(p), f"{p} is not prime"
            prod *= p**e
            prev = p
        assert prod == self.n, f"product {prod} != n {self.n}"


def factorize(n: int) -> PrimeFactorization:
    """Factor n >= 2 by trial division with a 2/3/5 wheel.

    Worst case is O(sqrt n) divisions, fine at the table scale this library
    works at (the enumeration layer uses a sieve instead, not this).
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}: need an integer >= 2")
    m = n
    factors = []
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p = 7
    i = 0
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        factors.append((m, 1))
    return PrimeFactorization(n, tuple(factors))


def mult_order_mod5(p: int) -> int:
    """Smallest f >= 1 with p^f = 1 (mod 5), for a prime p != 5.

    This is the residue degree of p in the field of fifth roots of unity.
    """
    if p == 5:
        raise ValueError("5 is the ramified prime; it has no order mod 5")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = p % 5
    f = 1
    while x != 1:
        x = x * p % 5
        f += 1
    return f


def cyclotomic_splitting_oracle(p: int) -> tuple[int, int]:
    """Factor x^4 + x^3 + x^2 + x + 1 over F_p by exhaustive search.

    Returns (f, g): the common degree of the irreducible factors and their
    count, so f * g = 4. Strategy: enumerate all roots in F_p; if rootless,
    sweep every monic quadratic for a divisor. No number theory about p is
    consulted, which is the point.
    """
    if p == 5:
        raise ValueError("x^4+x^3+x^2+x+1 = (x-1)^4 over F_5; 5 is excluded")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= _ORACLE_LIMIT:
        raise ValueError(f"oracle is exhaustive; p must be below {_ORACLE_LIMIT}")

    roots = []
    for c in range(p):
        if ((((c + 1) * c + 1) * c + 1) * c + 1) % p == 0:
            roots.append(c)
    if roots:
        # A quartic with any root must split completely here (the factor
        # degrees all agree); anything else means the sweep is broken.
        if len(roots) != 4:
            raise ArithmeticError(f"expected 0 or 4 roots mod {p}, found {len(roots)}")
        return (1, 4)

    split = _quadratic_split(p)
    if split is not None:
        a, b, c, d = split
        assert (a + c) % p == 1 and (b + d + a * c) % p == 1
        assert (a * d + b * c) % p == 1 and b * d % p == 1
        return (2, 2)
    return (4, 1)


def _quadratic_split(p: int) -> tuple[int, int, int, int] | None:
    """Find x^2+ax+b, x^2+cx+d multiplying to the quartic over F_p, if any.

    For each a the remaining coefficients are forced up to one quadratic
    condition, checked multiplicatively so the sweep needs no inversions:
    with c = 1-a, s = b+d = 1-ac, u = a-c, t = d*u = 1-sc, a valid split
    exists iff (su - t)t = u^2 (and b*d = 1 falls out).
    """
    for a in range(p):
        c = (1 - a) % p
        s = (1 - a * c) % p
        u = (a - c) % p
        t = (1 - s * c) % p
        if u:
            if ((s * u - t) * t - u * u) % p == 0:
                d = t * pow(u, p - 2, p) % p
                b = (s - d) % p
                return (a, b, c, d)
        elif a * s % p == 1:
            # Equal linear coefficients: need any root of y^2 - sy + 1.
            for y in range(p):
                if (y * y - s * y + 1) % p == 0:
                    return (a, y, c, (s - y) % p)
    return None
