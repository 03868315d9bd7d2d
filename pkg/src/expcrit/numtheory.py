"""Integer helpers: factorization, p-parts, multiplicative orders."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=4096)
def factorize(n):
    """Prime factorization of ``n`` as a tuple of ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n):
    return [p for p, _ in factorize(n)]


def is_prime(n):
    return n >= 2 and factorize(n) == ((n, 1),)


def p_part(n, p):
    """Largest power of the prime ``p`` dividing ``n``."""
    if n < 1:
        raise ValueError("p_part expects a positive integer")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def prime_power(n):
    """Return ``(p, k)`` if ``n = p**k`` with ``k >= 1``, else ``None``."""
    f = factorize(n) if n > 1 else ()
    if len(f) == 1:
        return f[0]
    return None


def multiplicative_order(a, n):
    """Order of ``a`` in the unit group mod ``n``."""
    a %= n
    if n == 1:
        return 1
    x, k = a, 1
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise ValueError(f"{a} is not a unit mod {n}")
    return k
