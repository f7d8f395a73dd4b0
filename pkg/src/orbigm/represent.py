"""Transfer of the label basis into the deformed orbit complex.

The pipeline glues the layered retractions into one: orbit bar chains
contract onto exterior words per sector, those onto restricted forms,
and the base curvature perturbation turns the transported differential
into wedging with dW, whose homology is spanned by the label monomials
in top exterior degree.  A second perturbation by the deformation terms
and the circle operator then yields representatives of each label in
the full deformed mixed complex, together with the matching projection
and homotopy.

Truncation discipline: stage one trims by total exponent weight (every
operator preserves or raises it) and by slot count; stage two trims by
slot count only, since the dyadic product deformation trades exponent
weight for a power of s.  Parameter caps bound the stage-two series on
their own, so the slot trim is a guard rail rather than the mechanism.
"""

from .chains import chain_slot_cap
from .defring import DefScalar
from .hc import BarHomotopy, chain_total_cap, chain_weight_cap
from .homega import dW_wedge, h_omega, incl_hom, proj_hom
from .koszul import E1, H_K, d_K, incl_forms, phi, proj_forms, upsilon
from .sdr import SDR
from .twisted import d_tilde_b0, d_tilde_b2, delta_def


def label_mask(model, gi):
    mask = 0
    for v in model.sectors[gi].fixed:
        mask |= E1 << v
    return mask


class Pipeline:
    """Both transfer stages of one model at fixed caps, built lazily.

    `weight_cap` bounds the exponent weight of stage-one chains and so
    decides how far the curvature series is followed; raise it together
    with `tensor_cap` to confirm a computed value has stabilized.  The
    default covers two curvature insertions over every label, the depth
    at which the connection matrices close up.
    """

    def __init__(self, model, caps, weight_cap=None, tensor_cap=12,
                 total_cap=None, hom=None):
        self.model = model
        if weight_cap is None:
            weight_cap = 4 * model.n
        # the circle operator walks terms across the u-window edge and
        # the window is the truncation there, not an error bound
        self.caps = caps = caps.window_mode()
        self.weight_cap = weight_cap
        self.tensor_cap = tensor_cap
        if total_cap is None:
            total_cap = weight_cap + 4 * model.n
        self.total_cap = total_cap
        self.hom = hom if hom is not None else BarHomotopy(model)
        self._reps = {}
        m, c = model, caps

        def trim(ch):
            return chain_slot_cap(chain_weight_cap(m, ch, weight_cap),
                                  tensor_cap)

        bar = SDR(lambda ch: d_tilde_b2(m, c, ch, mode="plain"),
                  lambda ch: d_K(m, c, ch),
                  lambda ch: phi(m, c, ch),
                  lambda ch: upsilon(m, c, ch),
                  lambda ch: self.hom.apply(c, ch),
                  trunc=trim)
        small = SDR(lambda ch: d_K(m, c, ch),
                    lambda ch: {},
                    lambda ch: incl_forms(m, c, ch),
                    lambda ch: proj_forms(m, c, ch),
                    lambda ch: H_K(m, c, ch))
        based = bar.compose(small).perturb(
            lambda ch: d_tilde_b0(m, c, ch,
                                  include_base=True, include_deform=False))
        forms = SDR(lambda ch: dW_wedge(m, c, ch),
                    lambda ch: {},
                    lambda ch: incl_hom(m, c, ch),
                    lambda ch: proj_hom(m, c, ch),
                    lambda ch: h_omega(m, c, ch))
        self.stage1 = based.compose(forms)
        # stage two is graded by the joint word-plus-parameter weight
        # (the dyadic deformation trades word weight for s weight, so
        # the bare word weight alone is no longer a chain grading); the
        # word cut is still applied, because the stage-one maps discard
        # words above it right after the weight-preserving homotopy and
        # cutting them before that solve costs nothing but the wait
        self.full = self.stage1.perturb(
            lambda ch: delta_def(m, c, ch),
            trunc=lambda ch: chain_slot_cap(
                chain_total_cap(m, chain_weight_cap(m, ch, weight_cap),
                                total_cap), tensor_cap))

    def label_names(self):
        return [nm for nm, _, _ in self.model.labels()]

    def label_word(self, name):
        for nm, sec, mono in self.model.labels():
            if nm == name:
                return (mono, sec, label_mask(self.model, sec))
        raise KeyError("unknown label %r" % name)

    def label_chain(self, name):
        return {self.label_word(name): DefScalar.const(self.caps, 1)}

    def representative(self, name):
        """Cycle representing the label in the deformed mixed complex."""
        hit = self._reps.get(name)
        if hit is None:
            hit = self.full.incl(self.label_chain(name))
            self._reps[name] = hit
        return hit

    def reduce(self, tchain):
        """Class of a chain in the label basis."""
        return self.full.proj(tchain)
