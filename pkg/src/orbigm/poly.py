"""Sparse exact polynomials in two variables, with weights and Jacobian quotients.

A polynomial is a dict {(a, b): coeff} over Fraction (or Cyclo) coefficients;
monomials are plain int pairs.  Everything here is purely functional: chains
and operators elsewhere store monomials directly and only fall back to these
helpers for products, derivatives and normal forms.
"""

from fractions import Fraction

MONO_ONE = (0, 0)


def mono_mul(m1, m2):
    return (m1[0] + m2[0], m1[1] + m2[1])


def mono_weight(m, wts):
    return m[0] * wts[0] + m[1] * wts[1]


def mono_str(m, names):
    a, b = m
    if a == 0 and b == 0:
        return "1"
    out = []
    if a:
        out.append(names[0] if a == 1 else "%s^%d" % (names[0], a))
    if b:
        out.append(names[1] if b == 1 else "%s^%d" % (names[1], b))
    return "".join(out)


def poly_add(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        elif m in out:
            del out[m]
    return out


def poly_scale(p, c):
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = (m1[0] + m2[0], m1[1] + m2[1])
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


def poly_diff(p, var):
    out = {}
    for (a, b), c in p.items():
        if var == 0 and a:
            out[(a - 1, b)] = c * a
        elif var == 1 and b:
            out[(a, b - 1)] = c * b
    return out


def poly_weights(p, wts):
    return sorted({mono_weight(m, wts) for m in p})


def monomials_of_weight(w, wts):
    """All (a, b) with a*wts[0] + b*wts[1] == w, ordered by grlex (x-power desc)."""
    out = []
    wa, wb = wts
    for b in range(w // wb + 1):
        rem = w - b * wb
        if rem % wa == 0:
            out.append((rem // wa, b))
    out.sort(key=lambda m: (-m[0], m[1]))
    return out


def grlex_key(m, wts):
    # graded lex: weight first, then higher x-power first
    return (mono_weight(m, wts), -m[0])


class JacobianRing:
    """The quotient of C[x,y] by the partials of a quasi-homogeneous potential.

    Normal forms are computed per weight piece by row reduction against the
    graded piece of the ideal, with graded-lex pivoting, so both the monomial
    basis and the normal-form coefficients are canonical.  The potential must
    have an isolated critical point at the origin; this is detected (and
    reported) by the quotient failing to vanish above the socle bound.
    """

    def __init__(self, potential, wts, names=("x", "y"), preferred=()):
        self.potential = dict(potential)
        self.wts = tuple(wts)
        self.names = tuple(names)
        self.preferred = frozenset(preferred)
        self.jx = poly_diff(potential, 0)
        self.jy = poly_diff(potential, 1)
        d = poly_weights(potential, wts)
        if len(d) != 1:
            raise ValueError("potential is not weight homogeneous: %s" % d)
        self.degree = d[0]
        # socle weight of the Milnor algebra of a quasi-homogeneous singularity
        self.socle = (self.degree - 2 * wts[0]) + (self.degree - 2 * wts[1])
        self._piece_cache = {}
        self.basis = []
        for w in range(0, self.socle + 1):
            _, free, _ = self._piece(w)
            self.basis.extend(free)
        for w in range(self.socle + 1, self.socle + 1 + max(wts)):
            _, free, _ = self._piece(w)
            if free:
                raise ValueError("critical point is not isolated (weight %d survives)" % w)

    def _piece(self, w):
        """Row-reduced ideal piece at weight w.

        Returns (pivot_rows, free_monomials, order) where pivot_rows maps a
        pivot monomial to its reduced row {mono: coeff} with coeff 1 at the
        pivot, and order lists the piece's monomials in grlex order.
        """
        if w in self._piece_cache:
            return self._piece_cache[w]
        order = monomials_of_weight(w, self.wts)
        # preferred monomials (the label classes) go last so pivoting avoids them
        order.sort(key=lambda m: (m in self.preferred, -m[0]))
        pos = {m: i for i, m in enumerate(order)}
        rows = []
        for gen in (self.jx, self.jy):
            gw = poly_weights(gen, self.wts)
            if not gw:
                continue
            shift = w - gw[0]
            if shift < 0:
                continue
            for u in monomials_of_weight(shift, self.wts):
                row = poly_mul({u: Fraction(1)}, gen)
                if row:
                    rows.append(row)
        pivots = {}
        for row in rows:
            row = dict(row)
            while row:
                lead = min(row, key=lambda m: pos[m])
                if lead in pivots:
                    c = row[lead]
                    prow = pivots[lead]
                    row = poly_add(row, poly_scale(prow, -c))
                else:
                    c = row[lead]
                    row = {m: v / c for m, v in row.items()}
                    pivots[lead] = row
                    break
        # back-substitute for fully reduced rows
        for lead in sorted(pivots, key=lambda m: -pos[m]):
            row = pivots[lead]
            for other_lead in list(pivots):
                if other_lead == lead:
                    continue
                orow = pivots[other_lead]
                if lead in orow:
                    pivots[other_lead] = poly_add(orow, poly_scale(row, -orow[lead]))
        free = [m for m in order if m not in pivots]
        self._piece_cache[w] = (pivots, free, order)
        return self._piece_cache[w]

    def normal_form(self, p):
        """Canonical representative of p mod the Jacobian ideal, supported on basis monomials."""
        out = {}
        for m, c in p.items():
            w = mono_weight(m, self.wts)
            if w > self.socle:
                continue
            pivots, _, _ = self._piece(w)
            if m in pivots:
                row = pivots[m]
                for m2, v in row.items():
                    if m2 == m:
                        continue
                    out = poly_add(out, {m2: -c * v})
            else:
                out = poly_add(out, {m: c})
        return out

    def dim(self):
        return len(self.basis)
