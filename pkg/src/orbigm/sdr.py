"""Deformation-retract data and the standard perturbation machinery.

A retraction packages five callables between two chain spaces: the two
differentials, the inclusion and projection, and the homotopy on the
big side.  Retractions compose (inclusion-conjugated homotopies add)
and absorb a differential perturbation through the usual geometric
series; each series application runs to literal chain vanishing under
the active truncation, never to a fixed round count.
"""

from .chains import (chain_add, chain_is_zero, chain_neg, chain_sub)


class SDR:
    """Retraction of a big chain space onto a smaller one.

    All operators are chain-to-chain callables with coefficient caps
    already bound in.  `trunc` trims big-side chains after each series
    step; the identities hold on inputs whose whole orbit under the
    operators stays inside the truncation window.
    """

    def __init__(self, d_big, d_small, incl, proj, homo, trunc=None):
        self.d_big = d_big
        self.d_small = d_small
        self.incl = incl
        self.proj = proj
        self.homo = homo
        self.trunc = trunc or (lambda ch: ch)

    def compose(self, inner):
        """Stack a retraction of this one's small side onto this one."""
        outer = self

        def incl(ch):
            return outer.incl(inner.incl(ch))

        def proj(ch):
            return inner.proj(outer.proj(ch))

        def homo(ch):
            return chain_add(outer.homo(ch),
                            outer.incl(inner.homo(outer.proj(ch))))

        return SDR(outer.d_big, inner.d_small, incl, proj, homo,
                   trunc=outer.trunc)

    def perturb(self, delta, max_rounds=200, trunc=None):
        """Retraction for the differential shifted by `delta`.

        The homotopy-delta alternation must eventually leave the
        truncation window; `max_rounds` only guards against a wiring
        mistake making the series genuinely infinite.  A perturbation
        that moves words against this retraction's truncation grading
        must supply its own compatible `trunc`.
        """
        outer = self
        trunc = self.trunc if trunc is None else trunc

        def series_hd(ch):
            # trim between the two factors as well: the homotopy never
            # lowers the truncation grading, so words cut here could
            # only produce words the outer trim would cut anyway
            acc = dict(ch)
            term = ch
            for _ in range(max_rounds):
                term = trunc(chain_neg(outer.homo(trunc(delta(term)))))
                if chain_is_zero(term):
                    return acc
                acc = chain_add(acc, term)
            raise RuntimeError("perturbation series did not settle")

        def series_dh(ch):
            acc = dict(ch)
            term = ch
            for _ in range(max_rounds):
                term = trunc(chain_neg(delta(outer.homo(term))))
                if chain_is_zero(term):
                    return acc
                acc = chain_add(acc, term)
            raise RuntimeError("perturbation series did not settle")

        def d_big(ch):
            return trunc(chain_add(outer.d_big(ch), delta(ch)))

        def incl(ch):
            return series_hd(trunc(outer.incl(ch)))

        def proj(ch):
            return outer.proj(series_dh(trunc(ch)))

        def homo(ch):
            return series_hd(trunc(outer.homo(ch)))

        def d_small(ch):
            return chain_add(outer.d_small(ch),
                             outer.proj(trunc(delta(incl(ch)))))

        return SDR(d_big, d_small, incl, proj, homo, trunc=trunc)

    def check(self, big_samples, small_samples):
        """Residual-by-residual audit of the five retraction identities.

        Returns (name, ok) pairs; every perturbed or composed instance
        is expected to pass on samples clear of the truncation window.
        """
        out = []
        for ch in big_samples:
            lhs = chain_add(self.d_big(self.homo(ch)),
                            self.homo(self.d_big(ch)))
            rhs = chain_sub(ch, self.incl(self.proj(ch)))
            out.append(("homotopy-equation",
                        chain_is_zero(chain_sub(lhs, rhs))))
            out.append(("homotopy-squares", chain_is_zero(
                self.homo(self.homo(ch)))))
            out.append(("proj-kills-homotopy", chain_is_zero(
                self.proj(self.homo(ch)))))
            out.append(("proj-chain-map", chain_is_zero(chain_sub(
                self.proj(self.d_big(ch)), self.d_small(self.proj(ch))))))
        for ch in small_samples:
            out.append(("proj-incl-identity", chain_is_zero(
                chain_sub(self.proj(self.incl(ch)), ch))))
            out.append(("homotopy-kills-incl", chain_is_zero(
                self.homo(self.incl(ch)))))
            out.append(("incl-chain-map", chain_is_zero(chain_sub(
                self.d_big(self.incl(ch)), self.incl(self.d_small(ch))))))
        return out
