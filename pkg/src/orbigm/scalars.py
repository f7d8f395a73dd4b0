"""Exact scalar arithmetic: rationals and cyclotomic extensions.

Group eigenvalues live in Q(zeta_N).  For N <= 2 everything is rational and
plain `fractions.Fraction` is used throughout; larger N gets the `Cyclo`
field below.  Both types support +, -, *, /, ==, bool and hashing, so the
rest of the engine is agnostic about which one a model uses.
"""

from fractions import Fraction
from functools import lru_cache

ZERO = Fraction(0)
ONE = Fraction(1)


def _poly_trim(c):
    while c and not c[-1]:
        c = c[:-1]
    return c


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    # b must be nonzero; returns (q, r) with a = q*b + r, deg r < deg b
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] * inv_lead
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] -= f * bi
        a = a[:-1]
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial, exact."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_coeffs(d))
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


class Cyclo:
    """An element of Q(zeta_n), stored reduced mod the n-th cyclotomic polynomial."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        phi = cyclotomic_coeffs(n)
        deg = len(phi) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) >= len(phi):
            _, c = _poly_divmod(c, list(phi))
        c = c + [Fraction(0)] * (deg - len(c))
        self.n = n
        self.c = tuple(c[:deg])

    @staticmethod
    def zeta(n, k=1):
        k %= n
        return Cyclo(n, [Fraction(0)] * k + [Fraction(1)])

    @staticmethod
    def of(n, value):
        return Cyclo(n, [Fraction(value)])

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.n != self.n:
                raise TypeError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.of(self.n, other)
        return None

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.c == o.c

    def __hash__(self):
        return hash((self.n, self.c))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.n, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.n, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.n, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.n, _poly_mul(list(self.c), list(o.c)))

    __rmul__ = __mul__

    def inverse(self):
        # extended Euclid in Q[x] against the cyclotomic modulus
        phi = list(cyclotomic_coeffs(self.n))
        r0, r1 = phi, _poly_trim(list(self.c))
        if not r1:
            raise ZeroDivisionError("inverse of zero")
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        unit = r1[0]
        return Cyclo(self.n, [x / unit for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.of(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_rational(self):
        """The value as a Fraction if it lies in Q, else None."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                terms.append("%s*zeta%d^%d" % (a, self.n, i))
        return " + ".join(terms) if terms else "0"


def root_of_unity(n, k):
    """zeta_n^k as a Fraction when rational, else a Cyclo."""
    k %= n
    if n == 1:
        return ONE
    if n == 2:
        return ONE if k == 0 else -ONE
    if n == 4 and k % 2 == 0:
        return ONE if k == 0 else -ONE
    z = Cyclo.zeta(n, k)
    r = z.as_rational()
    return r if r is not None else z
