"""Connection matrices of a deformation family on its label basis.

The covariant derivative along a deformation direction acts on a chain as
the parameter derivative minus the braced product operation scaled by the
inverse circle parameter minus the braced cyclic operation, each braced
with the tangent cochain of the direction.  Applied to a transferred label
representative and pushed back down through the retraction, it lands in
the span of the labels again; reading off those coefficients direction by
direction gives the connection matrices.
"""

from .bar_ops import direction_cochain
from .chains import chain_accum, chain_u_shift
from .twisted import getzler_B_tilde, getzler_b_tilde


def chain_diff(vname, tchain):
    """Coefficientwise derivative along one parameter direction."""
    out = {}
    for w, c in tchain.items():
        dc = c.diff_s() if vname == "s" else c.diff_tau(int(vname[1:]))
        if not dc.is_zero():
            out[w] = dc
    return out


def scalar_diff(vname, c):
    return c.diff_s() if vname == "s" else c.diff_tau(int(vname[1:]))


class Connection:
    """Covariant derivatives on transferred representatives, as matrices.

    Matrix columns are indexed by source label, rows by target label; the
    entry is the coefficient of the row label in the reduction of the
    derivative of the column's representative.  Reductions that leave the
    label span signal a broken retraction and raise.
    """

    def __init__(self, pipeline):
        self.pipe = pipeline
        self.model = pipeline.model
        self.caps = pipeline.caps
        if self.caps.u_lo > -1:
            raise ValueError("window must reach u^-1 for connection entries")
        self.cochains = {
            name: direction_cochain(self.model, self.caps, kind, payload)
            for name, kind, payload in self.model.directions(self.caps)}
        self._mats = {}

    def direction_names(self):
        return list(self.cochains)

    def nabla(self, vname, tchain):
        m, c = self.model, self.caps
        co = (self.cochains[vname],)
        out = chain_diff(vname, tchain)
        for w, cc in chain_u_shift(
                getzler_b_tilde(m, c, co, tchain), -1).items():
            chain_accum(out, w, -cc)
        for w, cc in getzler_B_tilde(m, c, co, tchain).items():
            chain_accum(out, w, -cc)
        return out

    def label_coefficients(self, kchain):
        """Read a reduced chain as a vector over the labels."""
        out = {}
        for name in self.pipe.label_names():
            c = kchain.pop(self.pipe.label_word(name), None)
            if c is not None and not c.is_zero():
                out[name] = c
        left = {w: c for w, c in kchain.items() if not c.is_zero()}
        if left:
            raise RuntimeError("reduction left the label span: %r" % left)
        return out

    def matrix(self, vname):
        if vname not in self._mats:
            cols = {}
            for name in self.pipe.label_names():
                red = self.pipe.reduce(
                    self.nabla(vname, self.pipe.representative(name)))
                cols[name] = self.label_coefficients(red)
            self._mats[vname] = cols
        return self._mats[vname]

    def matrices(self):
        return {v: self.matrix(v) for v in self.direction_names()}

    def curvature(self, vname, wname):
        """Commutator of two covariant derivatives, entry by entry.

        Coordinate directions commute, so a flat family must return the
        zero matrix.  Entry products walk through u^-2, which the window
        must cover for the cancellation to be visible.
        """
        mv, mw = self.matrix(vname), self.matrix(wname)
        names = self.pipe.label_names()
        out = {}
        for col in names:
            ent = {}
            for row in names:
                term = None
                a = mw.get(col, {}).get(row)
                if a is not None:
                    term = scalar_diff(vname, a)
                b = mv.get(col, {}).get(row)
                if b is not None:
                    d = scalar_diff(wname, b)
                    term = d.scale(-1) if term is None else term - d
                for mid in names:
                    p = mv.get(mid, {}).get(row)
                    q = mw.get(col, {}).get(mid)
                    if p is not None and q is not None:
                        pq = p * q
                        term = pq if term is None else term + pq
                    p = mw.get(mid, {}).get(row)
                    q = mv.get(col, {}).get(mid)
                    if p is not None and q is not None:
                        pq = p * q
                        term = term - pq if term is not None else pq.scale(-1)
                if term is not None and not term.is_zero():
                    ent[row] = term
            if ent:
                out[col] = ent
        return out

    def is_flat(self):
        names = self.direction_names()
        for i, v in enumerate(names):
            for w in names[i + 1:]:
                if self.curvature(v, w):
                    return False
        return True
