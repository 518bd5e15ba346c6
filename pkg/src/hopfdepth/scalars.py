"""Exact scalars: rationals, cyclotomic numbers and prime fields.

``Cyc`` models an element of Q(zeta_n) in the power basis
1, zeta_n, ..., zeta_n^(phi(n)-1) reduced modulo the n-th cyclotomic
polynomial.  Every value is kept in a canonical form with *minimal*
conductor, so equality and hashing are syntactic and two values built
along different routes always compare equal iff they agree in the common
cyclotomic field.  Values are immutable and safe to share between
threads or processes.

Rational is an alias for fractions.Fraction: arbitrary precision, always
in lowest terms with positive denominator, which is exactly the contract
the rest of the package needs.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .linalg import Echelon

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def divisors(n):
    """Ascending list of positive divisors of n."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def euler_phi(n):
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n):
    """x^k mod Phi_n for k = 0 .. max(n, 2*phi(n) - 2), as Fraction tuples."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}) since Phi_n is monic
    top = tuple(Fraction(-c) for c in mod[:phi])
    table = []
    for k in range(phi):
        row = [_F0] * phi
        row[k] = _F1
        table.append(tuple(row))
    kmax = max(n, 2 * phi - 2)
    for _ in range(phi, kmax + 1):
        prev = table[-1]
        row = [_F0] + list(prev[: phi - 1])
        c = prev[phi - 1]
        if c:
            row = [a + c * b for a, b in zip(row, top)]
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def _subfield_solver(n, d):
    """Tracked echelon over the rows embedding the zeta_d power basis into Q(zeta_n)."""
    phi_n = euler_phi(n)
    table = _power_table(n)
    step = n // d
    ech = Echelon(phi_n, _F1, track=True)
    for j in range(euler_phi(d)):
        ech.push(table[j * step])
    return ech


def _canonical_form(n, coeffs):
    """Reduce a coefficient tuple over Q(zeta_n) to its minimal conductor."""
    if n == 1:
        return 1, (coeffs[0],)
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    for d in divisors(n)[1:-1]:
        sub = _subfield_solver(n, d).coordinates(coeffs)
        if sub is not None:
            return d, tuple(sub)
    return n, tuple(coeffs)


def _reduce_mod(n, poly_coeffs):
    """Reduce arbitrary-degree coefficients to the power basis of Q(zeta_n)."""
    phi = euler_phi(n)
    table = _power_table(n)
    out = [_F0] * phi
    for k, c in enumerate(poly_coeffs):
        if not c:
            continue
        row = table[k]
        for j in range(phi):
            rj = row[j]
            if rj:
                out[j] = out[j] + c * rj
    return out


class Cyc:
    """An exact cyclotomic number, canonically reduced to minimal conductor."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs, _canonical=False):
        if not _canonical:
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != euler_phi(order):
                raise ValueError("coefficient count must be phi(order)")
            order, coeffs = _canonical_form(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc values are immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def rational(q):
        q = Fraction(q)
        cached = _RATIONAL_CACHE.get(q)
        if cached is not None:
            return cached
        return Cyc(1, (q,), _canonical=True)

    @staticmethod
    def zero():
        return _CYC_ZERO

    @staticmethod
    def one():
        return _CYC_ONE

    @staticmethod
    def root_of_unity(n, k):
        """zeta_n^k, canonically reduced."""
        if n < 1:
            raise ValueError("order must be positive")
        k %= n
        phi = euler_phi(n)
        coeffs = _power_table(n)[k]
        order, coeffs = _canonical_form(n, tuple(coeffs[:phi]))
        return Cyc(order, coeffs, _canonical=True)

    @staticmethod
    def from_root_powers(n, weights):
        """Sum of weights[k] * zeta_n^k over the mapping {k: weight}."""
        poly = [_F0] * n
        for k, w in weights.items():
            poly[k % n] = poly[k % n] + Fraction(w)
        reduced = _reduce_mod(n, poly)
        order, coeffs = _canonical_form(n, tuple(reduced))
        return Cyc(order, coeffs, _canonical=True)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc.rational(x)
        return None

    def _lift(self, m):
        """Coefficients of self inside Q(zeta_m) (order | m)."""
        if self.order == m:
            return list(self.coeffs)
        table = _power_table(m)
        step = m // self.order
        phi_m = euler_phi(m)
        out = [_F0] * phi_m
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            row = table[j * step]
            for t in range(phi_m):
                rt = row[t]
                if rt:
                    out[t] = out[t] + c * rt
        return out

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.order, other.order
        if a == 1 and b == 1:
            return Cyc.rational(self.coeffs[0] + other.coeffs[0])
        if b == 1:
            # adding a rational never changes the conductor
            c = list(self.coeffs)
            c[0] = c[0] + other.coeffs[0]
            return Cyc(a, tuple(c), _canonical=True)
        if a == 1:
            c = list(other.coeffs)
            c[0] = c[0] + self.coeffs[0]
            return Cyc(b, tuple(c), _canonical=True)
        m = a * b // gcd(a, b)
        va = self._lift(m)
        vb = other._lift(m)
        order, coeffs = _canonical_form(m, tuple(x + y for x, y in zip(va, vb)))
        return Cyc(order, coeffs, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, tuple(-c for c in self.coeffs), _canonical=True)

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.order, other.order
        if a == 1 and b == 1:
            return Cyc.rational(self.coeffs[0] * other.coeffs[0])
        if b == 1:
            q = other.coeffs[0]
            if not q:
                return _CYC_ZERO
            return Cyc(a, tuple(c * q for c in self.coeffs), _canonical=True)
        if a == 1:
            q = self.coeffs[0]
            if not q:
                return _CYC_ZERO
            return Cyc(b, tuple(c * q for c in other.coeffs), _canonical=True)
        m = a * b // gcd(a, b)
        va = self._lift(m)
        vb = other._lift(m)
        phi = euler_phi(m)
        prod = [_F0] * (2 * phi - 1)
        for i, ci in enumerate(va):
            if not ci:
                continue
            for j, cj in enumerate(vb):
                if cj:
                    prod[i + j] = prod[i + j] + ci * cj
        reduced = _reduce_mod(m, prod)
        order, coeffs = _canonical_form(m, tuple(reduced))
        return Cyc(order, coeffs, _canonical=True)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.order == 1:
            return Cyc.rational(1 / self.coeffs[0])
        # extended Euclid of self against Phi_n over Q
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        u, g = _poly_half_xgcd(list(self.coeffs), mod)
        inv = [c / g for c in u]
        reduced = _reduce_mod(self.order, inv)
        order, coeffs = _canonical_form(self.order, tuple(reduced))
        return Cyc(order, coeffs, _canonical=True)

    def __truediv__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = _CYC_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and conversions ---------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = Cyc._coerce(other)
        if other is None:
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def is_rational(self):
        return self.order == 1

    def to_fraction(self):
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self):
        return self.order == 1 and self.coeffs[0].denominator == 1

    def to_integer(self):
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def complex_value(self):
        """Floating-point embedding sending zeta_n to exp(2*pi*i/n); debug only."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(c) * z**j for j, c in enumerate(self.coeffs))

    def sort_key(self):
        return (self.order, self.coeffs)

    # -- serialization -----------------------------------------------------

    def to_obj(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_obj(obj):
        order = int(obj["order"])
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        return Cyc(order, coeffs)

    def __repr__(self):
        return f"Cyc({self})"

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
                continue
            mon = f"z{self.order}" if j == 1 else f"z{self.order}^{j}"
            if c == 1:
                term = mon
            elif c == -1:
                term = f"-{mon}"
            else:
                term = f"{c}*{mon}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)


def _poly_half_xgcd(a, b):
    """Return (u, g) with u*a = g (mod b), g a nonzero constant, over Fraction."""

    def degree(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def step(num, den):
        # polynomial division: returns (quotient, remainder)
        num = list(num)
        dd = degree(den)
        q = [_F0] * (max(degree(num) - dd, 0) + 1)
        while degree(num) >= dd:
            shift = degree(num) - dd
            f = num[degree(num)] / den[dd]
            q[shift] = q[shift] + f
            for i in range(dd + 1):
                num[shift + i] = num[shift + i] - f * den[i]
        return q, num

    r0, r1 = list(b), list(a)
    u0, u1 = [_F0], [_F1]
    while degree(r1) > 0:
        q, r = step(r0, r1)
        # u_next = u0 - q*u1
        qu = [_F0] * (degree(q) + degree(u1) + 2)
        for i, qi in enumerate(q):
            if not qi:
                continue
            for j, uj in enumerate(u1):
                if uj:
                    qu[i + j] = qu[i + j] + qi * uj
        width = max(len(u0), len(qu))
        u_next = [(u0[i] if i < len(u0) else _F0) - (qu[i] if i < len(qu) else _F0) for i in range(width)]
        r0, r1 = r1, r
        u0, u1 = u1, u_next
    if degree(r1) != 0:
        raise ZeroDivisionError("input shares a factor with the cyclotomic modulus")
    return u1, r1[0]


_CYC_ZERO = Cyc(1, (_F0,), _canonical=True)
_CYC_ONE = Cyc(1, (_F1,), _canonical=True)
_RATIONAL_CACHE = {Fraction(k): Cyc(1, (Fraction(k),), _canonical=True) for k in range(-4, 5)}
_RATIONAL_CACHE[_F0] = _CYC_ZERO
_RATIONAL_CACHE[_F1] = _CYC_ONE

CYC_ZERO = _CYC_ZERO
CYC_ONE = _CYC_ONE


def cyc(x):
    """Coerce an int / Fraction / Cyc into a Cyc."""
    out = Cyc._coerce(x)
    if out is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyc")
    return out


# -- prime fields ----------------------------------------------------------


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeFieldElement:
    """Element of F_p for a prime p; plain modular arithmetic."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _check(self, other):
        if isinstance(other, int):
            return PrimeFieldElement(self.p, other)
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.v)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero mod p")
        return PrimeFieldElement(self.p, pow(self.v, self.p - 2, self.p))

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(self.p, pow(self.v, k, self.p))

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.v == o.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"PF{self.p}({self.v})"


def find_lifting_prime(exponent, group_order):
    """Smallest prime p with p = 1 (mod exponent) and p > 2*ceil(sqrt(group_order))."""
    if exponent < 1:
        raise ValueError("exponent must be positive")
    root = isqrt(group_order)
    if root * root < group_order:
        root += 1
    bound = 2 * root
    p = bound + 1
    while True:
        if (p - 1) % exponent == 0 and is_prime(p):
            return p
        p += 1


def primitive_root_mod(p):
    """Smallest primitive root modulo the prime p."""
    if p == 2:
        return 1
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError("no primitive root found (input not prime?)")


def root_of_unity_mod(p, e):
    """An element of order exactly e in F_p^* (requires e | p - 1)."""
    if (p - 1) % e:
        raise ValueError("e must divide p - 1")
    g = primitive_root_mod(p)
    return pow(g, (p - 1) // e, p)
