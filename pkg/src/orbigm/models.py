"""The two shipped model families and their sector geometry.

`aorb(n)`: C[x,y] curved by x^(2n) + y^2 with the sign involution, potential
deformed by tau_k x^(2k) and the product deformed in the twisted sector by
the dyadic bracket below.  `dmodel(n)`: C[z,w] curved by z^n + z w^2 with
trivial symmetry, all deformation carried by the potential
(tau_j z^j and -s w).  Both families use the same weight scheme, under which
every deformation parameter is weighted so the total structure stays
homogeneous: wt(tau_j) = 2n - 2j, wt(s) = n + 1, wt(u) = 2n.
"""

from fractions import Fraction

from .defring import DefScalar
from .groups import cyclic_two_group, trivial_group
from .poly import JacobianRing, poly_diff, mono_str


class SectorGeometry:
    """Fixed locus data for one group element: restricted potential and its Milnor basis.

    Monomials keep the ambient two-exponent format with zero entries at the
    sector's moved variables, so chains and forms share one monomial type.
    """

    def __init__(self, model, gi):
        self.gi = gi
        self.fixed = tuple(v for v in (0, 1) if model.group.fixes_var(gi, v))
        self.moved = tuple(v for v in (0, 1) if v not in self.fixed)
        pot = {}
        for m, c in model.potential.items():
            if all(m[v] == 0 for v in self.moved):
                pot[m] = c
        self.potential = pot
        preferred = [m for (_, sec, m) in model.labels() if sec == gi]
        if len(self.fixed) == 2:
            self._ring = JacobianRing(pot, model.wts, model.var_names, preferred)
            self.basis = list(self._ring.basis)
        elif len(self.fixed) == 0:
            self._ring = None
            self.basis = [(0, 0)]
        else:
            v = self.fixed[0]
            dpot = poly_diff(pot, v)
            if len(dpot) != 1:
                raise NotImplementedError("one-variable sectors need a monomial derivative")
            self._ring = None
            self._one_var = (v, next(iter(dpot))[v])
            self.basis = [tuple(e if idx == v else 0 for idx in (0, 1))
                          for e in range(self._one_var[1])]

    def restrict(self, p):
        """Restriction of a polynomial to the fixed locus."""
        return {m: c for m, c in p.items() if all(m[v] == 0 for v in self.moved)}

    def normal_form(self, p):
        p = self.restrict(p)
        if len(self.fixed) == 2:
            return self._ring.normal_form(p)
        if len(self.fixed) == 0:
            c = p.get((0, 0), 0)
            return {(0, 0): c} if c else {}
        v, d = self._one_var
        return {m: c for m, c in p.items() if m[v] < d and c}


class Model:
    def __init__(self, name, n, group, var_names, wts, potential, ntau):
        self.name = name
        self.n = n
        self.group = group
        self.var_names = var_names
        self.wts = wts
        self.potential = potential
        self.ntau = ntau
        self.sectors = [SectorGeometry(self, gi) for gi in range(len(group))]
        self.param_wts = {"s": n + 1, "u": 2 * n}
        for j in range(ntau):
            self.param_wts["t%d" % j] = 2 * n - 2 * j

    def term_weight(self, key):
        """Weight of one coefficient term (tau exponents, s order, u order)."""
        A, j, k = key
        out = j * (self.n + 1) + k * 2 * self.n
        for i, a in enumerate(A):
            if a:
                out += a * (2 * self.n - 2 * i)
        return out

    # -- deformed curvature ------------------------------------------------

    def curvature_terms(self, caps, include_base=True, include_deform=True):
        """b0(tau, s) = -W(tau, s) as [(DefScalar, monomial, sector)] with sector e."""
        raise NotImplementedError

    def has_dyad(self):
        return False

    def mono_text(self, m):
        return mono_str(m, self.var_names)

    def sector_names(self):
        return self.group.names()

    def labels(self):
        raise NotImplementedError

    def directions(self):
        raise NotImplementedError


class AOrbModel(Model):
    def __init__(self, n):
        if n < 2:
            raise ValueError("n must be at least 2")
        potential = {(2 * n, 0): Fraction(1), (0, 2): Fraction(1)}
        super().__init__("aorb", n, cyclic_two_group(), ("x", "y"), (1, n), potential, n)
        self.dyad_sector = 1

    def curvature_terms(self, caps, include_base=True, include_deform=True):
        out = []
        if include_base:
            out.append((DefScalar.const(caps, -1), (2 * self.n, 0), 0))
            out.append((DefScalar.const(caps, -1), (0, 2), 0))
        if include_deform:
            for k in range(self.ntau):
                out.append((DefScalar.tau(caps, k, -1), (2 * k, 0), 0))
        return out

    def has_dyad(self):
        return True

    def dyad(self, m1, m2):
        """The twisted-sector product deformation on a pair of monomials.

        Nonzero exactly when the first monomial has odd x-power and the second
        odd y-power; the value is a single monomial in the non-trivial sector
        with sign (-1)^(x-power of the second argument).
        """
        a1, b1 = m1
        a2, b2 = m2
        if a1 % 2 == 1 and b2 % 2 == 1:
            sign = -1 if a2 % 2 else 1
            return (Fraction(sign), (a1 + a2 - 1, b1 + b2 - 1))
        return None

    def labels(self):
        out = [("alpha%d" % (2 * k), 0, (2 * k, 0)) for k in range(self.n)]
        out.append(("beta", 1, (0, 0)))
        return out

    def directions(self, caps):
        out = []
        for j in range(self.ntau):
            out.append(("t%d" % j, "cochain0",
                        [(DefScalar.const(caps, -1), (2 * j, 0), 0)]))
        out.append(("s", "dyad", None))
        return out


class DModel(Model):
    def __init__(self, n):
        if n < 2:
            raise ValueError("n must be at least 2")
        potential = {(n, 0): Fraction(1), (1, 2): Fraction(1)}
        super().__init__("d", n, trivial_group(), ("z", "w"), (2, n - 1), potential, n)

    def curvature_terms(self, caps, include_base=True, include_deform=True):
        out = []
        if include_base:
            out.append((DefScalar.const(caps, -1), (self.n, 0), 0))
            out.append((DefScalar.const(caps, -1), (1, 2), 0))
        if include_deform:
            for j in range(self.ntau):
                out.append((DefScalar.tau(caps, j, -1), (j, 0), 0))
            out.append((DefScalar.s(caps, 1), (0, 1), 0))
        return out

    def labels(self):
        out = [("alpha%d" % (2 * k), 0, (k, 0)) for k in range(self.n)]
        out.append(("beta", 0, (0, 1)))
        return out

    def directions(self, caps):
        out = []
        for j in range(self.ntau):
            out.append(("t%d" % j, "cochain0",
                        [(DefScalar.const(caps, -1), (j, 0), 0)]))
        out.append(("s", "cochain0", [(DefScalar.const(caps, 1), (0, 1), 0)]))
        return out


def build_model(name, n):
    if name == "aorb":
        return AOrbModel(n)
    if name == "d":
        return DModel(n)
    raise ValueError("unknown model %r" % name)
