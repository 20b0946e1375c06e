"""Exact integer, rational and finite-field arithmetic.

Rationals are ``fractions.Fraction`` throughout the package (always reduced,
positive denominator).  Polynomials over F_ell are coefficient lists
``[a_0, a_1, ...]`` of ints in ``[0, ell)`` with no trailing zeros; ``[]`` is
the zero polynomial.  Polynomials over Z/Q use the same little-endian layout
with int or Fraction coefficients.
"""

import random
from fractions import Fraction
from math import gcd, isqrt

import sympy


# ---------------------------------------------------------------------------
# primes and modular arithmetic

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin primality test (valid well beyond 2^64)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n):
    """List of primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, b in enumerate(sieve) if b]


def factorize(n):
    """Prime factorization of n >= 1 as a {prime: exponent} dict (trial division)."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def gcdex(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def multiplicative_order(a, n):
    """Order of a in (Z/n)^*; raises if gcd(a, n) != 1."""
    a %= n
    if gcd(a, n) != 1:
        raise ValueError("element not a unit")
    order, x = 1, a
    while x != 1:
        x = x * a % n
        order += 1
    return order


def is_primitive_root(a, N):
    """True iff a generates (Z/N)^* for an odd prime N."""
    a %= N
    if a == 0:
        return False
    phi = N - 1
    return all(pow(a, phi // q, N) != 1 for q in factorize(phi))


def is_square_mod(a, N):
    """Euler criterion for an odd prime N, a coprime to N."""
    return pow(a % N, (N - 1) // 2, N) == 1


def is_pth_power_mod(a, ell, p):
    """True iff a is a p-th power in F_ell^*.

    Decided by a^((ell-1)/gcd(p, ell-1)) == 1; in particular every unit
    qualifies when p does not divide ell - 1.
    """
    if a % ell == 0:
        raise ValueError("argument divisible by modulus")
    g = gcd(p, ell - 1)
    return pow(a, (ell - 1) // g, ell) == 1


# ---------------------------------------------------------------------------
# polynomials over F_ell

def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul_mod(f, g, ell):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % ell
    return poly_trim(out)


def poly_divmod_mod(f, g, ell):
    """Quotient and remainder of f by g over F_ell; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, ell)
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % ell
        k = len(f) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % ell
        poly_trim(f)
    return poly_trim(q), f


def poly_gcd_mod(f, g, ell):
    f, g = list(f), list(g)
    while g:
        f, g = g, poly_divmod_mod(f, g, ell)[1]
    if f:
        inv = pow(f[-1], -1, ell)
        f = [c * inv % ell for c in f]
    return f


def poly_powmod(base, e, modpoly, ell):
    """base^e modulo (modpoly, ell) by square and multiply."""
    result = [1]
    base = poly_divmod_mod(base, modpoly, ell)[1]
    while e:
        if e & 1:
            result = poly_divmod_mod(poly_mul_mod(result, base, ell), modpoly, ell)[1]
        base = poly_divmod_mod(poly_mul_mod(base, base, ell), modpoly, ell)[1]
        e >>= 1
    return result


def _poly_deriv(f, ell):
    return poly_trim([i * c % ell for i, c in enumerate(f)][1:])


def _squarefree_parts(f, ell):
    """Yield (g, k) with g squarefree and f = prod g^k, g monic."""
    inv = pow(f[-1], -1, ell)
    f = [c * inv % ell for c in f]
    k = 1
    while len(f) > 1:
        d = _poly_deriv(f, ell)
        if not d:
            # f = h(x^ell); over the prime field the ell-th root just
            # contracts exponents (Frobenius fixes coefficients)
            f = poly_trim(f[::ell])
            k *= ell
            continue
        c = poly_gcd_mod(f, d, ell)
        w = poly_divmod_mod(f, c, ell)[0]
        i = 1
        while len(w) > 1:
            y = poly_gcd_mod(w, c, ell)
            z = poly_divmod_mod(w, y, ell)[0]
            if len(z) > 1:
                yield z, i * k
            w = y
            c = poly_divmod_mod(c, y, ell)[0]
            i += 1
        f = c


def _distinct_degree(f, ell):
    """Split squarefree monic f over F_ell into (d, product of degree-d factors)."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        h = poly_powmod(h, ell, f, ell)
        g = poly_gcd_mod([(c - b) % ell for c, b in
                          zip(h + [0] * len(f), x + [0] * len(f))], f, ell)
        if len(g) > 1:
            out.append((d, g))
            f = poly_divmod_mod(f, g, ell)[0]
            h = poly_divmod_mod(h, f, ell)[1]
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def _equal_degree_split(f, d, ell, rng):
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(ell) for _ in range(n)]
        poly_trim(a)
        if len(a) < 2:
            continue
        if ell == 2:
            # trace map instead of the odd-characteristic power trick
            t, acc = a, a
            for _ in range(d - 1):
                acc = poly_powmod(acc, 2, f, ell)
                t = poly_trim([(u + v) % 2 for u, v in
                               zip(t + [0] * len(acc), acc + [0] * len(t))])
            g = poly_gcd_mod(t, f, ell)
        else:
            b = poly_powmod(a, (ell ** d - 1) // 2, f, ell)
            b = list(b)
            if b:
                b[0] = (b[0] - 1) % ell
            g = poly_gcd_mod(poly_trim(b), f, ell)
        if 0 < len(g) - 1 < n:
            rest = poly_divmod_mod(f, g, ell)[0]
            return _equal_degree_split(g, d, ell, rng) + \
                _equal_degree_split(rest, d, ell, rng)


def factor_mod(f, ell):
    """Factor f over F_ell into monic irreducibles.

    Returns a list of (factor, multiplicity) sorted by (degree, coefficients);
    the randomized equal-degree stage is deterministically seeded so output is
    reproducible.
    """
    f = poly_trim([c % ell for c in f])
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    factors = []
    for g, mult in _squarefree_parts(f, ell):
        for d, prod in _distinct_degree(g, ell):
            rng = random.Random((ell, d, tuple(prod)).__repr__())
            for irred in _equal_degree_split(prod, d, ell, rng):
                factors.append((irred, mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return factors


def factor_degrees_mod(f, ell):
    """Degrees (with multiplicity) of the irreducible factors of f over F_ell.

    Requires f nonzero with leading coefficient not divisible by ell, so that
    no degree is lost in reduction.  Returned sorted ascending.
    """
    f = list(f)
    poly_trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f[-1] % ell == 0:
        raise ValueError("leading coefficient divisible by modulus")
    if len(f) == 1:
        return []
    degrees = []
    for g, mult in factor_mod(f, ell):
        degrees.extend([len(g) - 1] * mult)
    return sorted(degrees)


# ---------------------------------------------------------------------------
# polynomials over Z and Q

def poly_content(f):
    """Content of an integer polynomial (gcd of coefficients, >= 0)."""
    c = 0
    for a in f:
        c = gcd(c, a)
    return c


def factor_over_Q(f):
    """Factor an integer polynomial into irreducibles over Q.

    Returns (unit, factors) where unit is a Fraction and factors is a list of
    primitive integer polynomials with positive leading coefficient, repeated
    according to multiplicity, such that unit * prod(factors) == f exactly.
    """
    f = poly_trim([int(c) for c in f])
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(f)), x, domain="QQ")
    coeff, parts = expr.factor_list()
    unit = Fraction(sympy.Rational(coeff).p, sympy.Rational(coeff).q)
    factors = []
    for poly, mult in parts:
        raw = [Fraction(c.p, c.q) for c in
               (sympy.Rational(v) for v in reversed(poly.all_coeffs()))]
        denom = 1
        for c in raw:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        coeffs = [int(c * denom) for c in raw]
        unit /= Fraction(denom) ** mult
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
            unit *= (-1) ** mult
        cont = poly_content(coeffs)
        if cont != 1:
            coeffs = [c // cont for c in coeffs]
            unit *= Fraction(cont) ** mult
        factors.extend([coeffs] * mult)
    factors.sort(key=lambda g: (len(g), g))
    # exactness guard: rebuild the input
    prod = [1]
    for g in factors:
        prod = poly_mul_int(prod, g)
    rebuilt = [unit * c for c in prod]
    if rebuilt != [Fraction(c) for c in f]:
        raise ArithmeticError("factorization failed to reconstruct input")
    return unit, factors


def poly_mul_int(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly_trim(out)


def poly_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc
