"""Arithmetic in orders Z[t]/(m) of number fields.

Elements are coefficient vectors over the power basis 1, t, ..., t^(d-1).
Prime ideals above a rational prime p come from factoring m mod p; the order
is *not* assumed maximal (a flag records when p^2 divides disc(m), the only
case where the factorization could misrepresent the true splitting).

Valuations are computed by ideal-power membership: P^k is represented by a
triangular Z-basis (Hermite-style) of the corresponding sublattice and
membership is tested by exact back-substitution.  This works uniformly for
ramified primes and avoids any p-adic approximation.
"""

import math
from fractions import Fraction

from .arith import factor_mod, gcdex, poly_trim


def _qpoly_divmod(f, g):
    """Divide Fraction polynomials; g monic-led (leading coeff invertible)."""
    f = list(f)
    dg = len(g) - 1
    q = [Fraction(0)] * max(len(f) - dg, 0)
    inv = Fraction(1) / g[-1]
    while f and len(f) - 1 >= dg:
        c = f[-1] * inv
        k = len(f) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * b
        while f and f[-1] == 0:
            f.pop()
    return q, f


def _qpoly_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def det_fraction(rows):
    """Determinant of a square matrix of Fractions by exact elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def resultant(f, g):
    """Resultant of two polynomials via the Sylvester determinant.

    Convention: for monic f, Res(f, g) = prod of g over the roots of f.
    """
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    if not f or not g:
        raise ValueError("resultant of zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + f[::-1] + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + g[::-1] + [Fraction(0)] * (size - n - 1 - i))
    return det_fraction(rows)


class Order:
    """The order Z[t]/(m) for a monic integer polynomial m, irreducible over Q."""

    def __init__(self, minpoly, check_irreducible=True):
        minpoly = [int(c) for c in minpoly]
        poly_trim(minpoly)
        if len(minpoly) < 2 or minpoly[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        if check_irreducible:
            from .arith import factor_over_Q
            _, factors = factor_over_Q(minpoly)
            if len(factors) != 1:
                raise ValueError("minimal polynomial is reducible over Q")
        self.minpoly = minpoly
        self.degree = len(minpoly) - 1

    def __eq__(self, other):
        return isinstance(other, Order) and self.minpoly == other.minpoly

    def __repr__(self):
        return f"Order(Z[t]/{self.minpoly})"

    def element(self, coeffs):
        return OrderElement(self, coeffs)

    def zero(self):
        return self.element([0] * self.degree)

    def one(self):
        return self.element([1] + [0] * (self.degree - 1))

    def generator(self):
        if self.degree == 1:
            return self.element([-self.minpoly[0]])
        return self.element([0, 1] + [0] * (self.degree - 2))

    def from_integer(self, n):
        return self.element([n] + [0] * (self.degree - 1))

    def discriminant(self):
        """disc(m) = (-1)^(d(d-1)/2) Res(m, m') for monic m."""
        d = self.degree
        deriv = [i * c for i, c in enumerate(self.minpoly)][1:]
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        val = sign * resultant(self.minpoly, deriv)
        assert val.denominator == 1
        return int(val)

    def index_uncertain_at(self, p):
        """True when p^2 | disc(m), so p could divide [O_K : Z[t]/(m)]."""
        return self.discriminant() % (p * p) == 0

    def primes_above(self, p):
        """Prime ideals of Z[t]/(m) above p, from factoring m mod p.

        Sorted deterministically by generator polynomial.  When
        index_uncertain_at(p) holds, each ideal carries index_warning=True.
        """
        warn = self.index_uncertain_at(p)
        out = []
        for g, e in factor_mod(self.minpoly, p):
            out.append(PrimeIdeal(self, p, g, e, len(g) - 1, index_warning=warn))
        assert sum(P.e * P.f for P in out) == self.degree
        return out


class OrderElement:
    """Element of an Order, as Fraction coefficients over the power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > order.degree:
            _, coeffs = _qpoly_divmod(coeffs, [Fraction(c) for c in order.minpoly])
        coeffs += [Fraction(0)] * (order.degree - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    def __repr__(self):
        return f"OrderElement({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        return (isinstance(other, OrderElement) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return OrderElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return OrderElement(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return OrderElement(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return OrderElement(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        prod = _qpoly_mul(self.coeffs, other.coeffs)
        return OrderElement(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.order.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, OrderElement):
            if other.order != self.order:
                raise ValueError("elements of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return OrderElement(self.order, [other] + [0] * (self.order.degree - 1))
        raise TypeError(f"cannot coerce {other!r}")

    def multiplication_matrix(self):
        """Matrix of multiplication by self on the power basis (columns = images)."""
        d = self.order.degree
        m = [Fraction(c) for c in self.order.minpoly]
        cols = []
        cur = list(self.coeffs)
        for _ in range(d):
            cols.append(cur + [Fraction(0)] * (d - len(cur)))
            cur = _qpoly_divmod(_qpoly_mul(cur, [Fraction(0), Fraction(1)]), m)[1]
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def norm(self):
        """Field norm, as det of the multiplication matrix."""
        return det_fraction(self.multiplication_matrix())

    def trace(self):
        mat = self.multiplication_matrix()
        return sum(mat[i][i] for i in range(self.order.degree))

    def to_json(self):
        return {
            "minpoly": list(self.order.minpoly),
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json(data, order=None):
        if order is None:
            order = Order(data["minpoly"])
        return order.element([Fraction(n, d) for n, d in data["coeffs"]])


class PrimeIdeal:
    """Prime (p, g(t)) of Z[t]/(m), with ramification index e and residue degree f."""

    def __init__(self, order, p, g, e, f, index_warning=False):
        self.order = order
        self.p = p
        self.g = [int(c) % p for c in g]
        self.e = e
        self.f = f
        self.index_warning = index_warning
        self._power_bases = {}

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, g={self.g}, e={self.e}, f={self.f})"

    def norm(self):
        return self.p ** self.f

    def _lattice_basis(self, k):
        """Triangular Z-basis of P^k as a sublattice of Z^d (rows)."""
        if k in self._power_bases:
            return self._power_bases[k]
        order, d, p = self.order, self.order.degree, self.p
        if k == 0:
            basis = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
            self._power_bases[0] = basis
            return basis
        gen = order.element(self.g)
        rows = []
        for i in range(k + 1):
            elt = order.from_integer(p ** i) * gen ** (k - i)
            for j in range(d):
                shifted = elt * order.generator() ** j
                assert shifted.is_integral()
                rows.append([int(c) for c in shifted.coeffs])
        basis = _hnf(rows, d)
        self._power_bases[k] = basis
        return basis

    def contains(self, elt, k=1):
        """Whether elt (an integral OrderElement) lies in P^k."""
        if not elt.is_integral():
            raise ValueError("not in order")
        v = [int(c) for c in elt.coeffs]
        return _in_lattice(v, self._lattice_basis(k))

    def valuation(self, elt, cap=None):
        """Exact P-adic valuation of elt; math.inf for zero.

        With cap set, returns min(valuation, cap) without testing deeper powers.
        """
        if isinstance(elt, (int, Fraction)):
            elt = self.order.from_integer(elt)
        if not elt.is_integral():
            raise ValueError("not in order")
        if elt.is_zero():
            return math.inf
        k = 0
        while cap is None or k < cap:
            if not self.contains(elt, k + 1):
                return k
            k += 1
        return cap


def _hnf(rows, d):
    """Triangular basis (row i pivoted at column i) of the lattice the rows span."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(d):
        active = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not active:
            raise ValueError("lattice not of full rank")
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            new_active = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                reduced = [a - q * b for a, b in zip(r, piv)]
                if reduced[col] != 0:
                    new_active.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            if len(new_active) == 1:
                active = new_active
                break
            active = new_active
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        work = rest
    return basis


def _in_lattice(v, basis):
    """Whether integer vector v is a Z-combination of the triangular basis rows."""
    d = len(v)
    v = list(v)
    coeffs = []
    for j in range(d):
        residual = v[j] - sum(coeffs[i] * basis[i][j] for i in range(j))
        q, r = divmod(residual, basis[j][j])
        if r != 0:
            return False
        coeffs.append(q)
    return True
