"""Truncated deformation coefficients: C[[tau, s]]((u)) with explicit caps.

A DefScalar is a finite sum  sum  c * tau^A * s^j * u^k  stored sparsely as
{(A, j, k): c}.  Two truncation rules apply during multiplication:

- joint (tau, s) total degree above `kmax` is dropped (formal neighbourhood
  of the base point, nothing above the working order is ever consulted);
- u-exponents outside [u_lo, u_hi]: in strict mode this raises CapsOverflow
  (the caller's window was too small for the requested computation), in
  window mode the term is dropped.  The perturbation engine runs in window
  mode with a widened window and re-checks its answers under a wider one.
"""

from fractions import Fraction


class CapsOverflow(Exception):
    pass


class DefCaps:
    __slots__ = ("ntau", "kmax", "u_lo", "u_hi", "strict")

    def __init__(self, ntau, kmax, u_lo, u_hi, strict=True):
        self.ntau = ntau
        self.kmax = kmax
        self.u_lo = u_lo
        self.u_hi = u_hi
        self.strict = strict

    def widened(self, extra_u=1, strict=None):
        return DefCaps(self.ntau, self.kmax, self.u_lo - extra_u, self.u_hi + extra_u,
                       self.strict if strict is None else strict)

    def window_mode(self):
        return DefCaps(self.ntau, self.kmax, self.u_lo, self.u_hi, strict=False)

    def __eq__(self, other):
        return (isinstance(other, DefCaps) and self.ntau == other.ntau
                and self.kmax == other.kmax and self.u_lo == other.u_lo
                and self.u_hi == other.u_hi and self.strict == other.strict)

    def __repr__(self):
        return "DefCaps(ntau=%d, kmax=%d, u=[%d,%d], %s)" % (
            self.ntau, self.kmax, self.u_lo, self.u_hi,
            "strict" if self.strict else "window")


class DefScalar:
    __slots__ = ("caps", "t")

    def __init__(self, caps, terms=None):
        self.caps = caps
        self.t = {} if terms is None else terms

    @staticmethod
    def const(caps, c):
        c = Fraction(c) if isinstance(c, int) else c
        if not c:
            return DefScalar(caps)
        return DefScalar(caps, {((0,) * caps.ntau, 0, 0): c})

    @staticmethod
    def tau(caps, j, c=1):
        ek = tuple(1 if i == j else 0 for i in range(caps.ntau))
        return DefScalar(caps, {(ek, 0, 0): Fraction(c)})

    @staticmethod
    def s(caps, c=1):
        return DefScalar(caps, {((0,) * caps.ntau, 1, 0): Fraction(c)})

    @staticmethod
    def u(caps, k=1, c=1):
        return DefScalar(caps, {((0,) * caps.ntau, 0, k): Fraction(c)})

    def copy(self):
        return DefScalar(self.caps, dict(self.t))

    def is_zero(self):
        return not self.t

    def __eq__(self, other):
        if not isinstance(other, DefScalar):
            return NotImplemented
        return self.t == other.t

    def __add__(self, other):
        out = dict(self.t)
        for key, c in other.t.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return DefScalar(self.caps, out)

    def __neg__(self):
        return DefScalar(self.caps, {k: -c for k, c in self.t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return DefScalar(self.caps)
        return DefScalar(self.caps, {k: c * v for k, v in self.t.items()})

    def _admit(self, A, j, k):
        caps = self.caps
        if sum(A) + j > caps.kmax:
            return False
        if k < caps.u_lo or k > caps.u_hi:
            if caps.strict:
                raise CapsOverflow("u^%d outside window [%d, %d]" % (k, caps.u_lo, caps.u_hi))
            return False
        return True

    def __mul__(self, other):
        caps = self.caps
        out = {}
        for (A1, j1, k1), c1 in self.t.items():
            for (A2, j2, k2), c2 in other.t.items():
                A = tuple(a + b for a, b in zip(A1, A2))
                j = j1 + j2
                k = k1 + k2
                if not self._admit(A, j, k):
                    continue
                key = (A, j, k)
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return DefScalar(caps, out)

    def u_shift(self, du):
        out = {}
        for (A, j, k), c in self.t.items():
            if not self._admit(A, j, k + du):
                continue
            out[(A, j, k + du)] = c
        return DefScalar(self.caps, out)

    def mul_param(self, A2=None, dj=0, c=1):
        """Multiply by c * tau^A2 * s^dj, with truncation."""
        caps = self.caps
        A2 = (0,) * caps.ntau if A2 is None else A2
        out = {}
        for (A, j, k), coeff in self.t.items():
            A3 = tuple(a + b for a, b in zip(A, A2))
            j3 = j + dj
            if sum(A3) + j3 > caps.kmax:
                continue
            key = (A3, j3, k)
            v = out.get(key, 0) + coeff * c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return DefScalar(caps, out)

    def diff_tau(self, i):
        out = {}
        for (A, j, k), c in self.t.items():
            if A[i]:
                A2 = tuple(a - 1 if idx == i else a for idx, a in enumerate(A))
                out[(A2, j, k)] = c * A[i]
        return DefScalar(self.caps, out)

    def diff_s(self):
        out = {}
        for (A, j, k), c in self.t.items():
            if j:
                out[(A, j - 1, k)] = c * j
        return DefScalar(self.caps, out)

    def at_origin(self):
        """Restrict to tau = s = 0; returns {u_exp: coeff}."""
        return {k: c for (A, j, k), c in self.t.items() if not any(A) and j == 0}

    def order_filter(self, max_order):
        """Drop terms of joint (tau, s) order above max_order."""
        return DefScalar(self.caps,
                         {key: c for key, c in self.t.items() if sum(key[0]) + key[1] <= max_order})

    def recap(self, caps):
        """Project onto a different cap set (out-of-range terms are dropped)."""
        out = {}
        for (A, j, k), c in self.t.items():
            if sum(A) + j > caps.kmax or k < caps.u_lo or k > caps.u_hi:
                continue
            out[(A, j, k)] = c
        return DefScalar(caps, out)

    def text(self):
        """Canonical textual form, deterministic across runs."""
        if not self.t:
            return "0"
        keys = sorted(self.t, key=lambda key: (sum(key[0]) + key[1], key[1], key[0], key[2]))
        parts = []
        for A, j, k in keys:
            c = self.t[(A, j, k)]
            factors = []
            cs = str(c)
            factors.append(cs if cs.isdigit() else "(%s)" % cs)
            for i, a in enumerate(A):
                if a:
                    factors.append("t%d" % i if a == 1 else "t%d^%d" % (i, a))
            if j:
                factors.append("s" if j == 1 else "s^%d" % j)
            if k:
                factors.append("u" if k == 1 else "u^%d" % k)
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return "DefScalar(%s)" % self.text()
