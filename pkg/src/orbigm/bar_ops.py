"""Operators on reduced chains of the crossed product algebra.

Words are (m0, g0, slots) with slots of (monomial, sector) pairs; the
differential splits as the product part (slot merges, including the
twisted-sector product deformation) and the curvature part (potential
insertions).  The higher operations take a tuple of cochains and follow a
single-block normal form: one product evaluation absorbs the coefficient,
every cochain value, a run of trailing slots and a run of leading slots,
with the parity prefactor depending on cut positions only.
"""

from .chains import chain_accum, sword_reduced
from .defring import DefScalar


def prod_def(model, caps, A, B, mode="full", s_weight=1):
    """Product of two crossed-product elements.

    mode selects the terms: "plain" is the crossed product alone, "dyad"
    only the twisted-sector deformation term (scaled by s unless s_weight
    is 0), "full" both.  Returns [(DefScalar, (mono, sector))].
    """
    (m1, g1), (m2, g2) = A, B
    G = model.group
    twist = G.act_mono(g1, m2)
    g12 = G.mul(g1, g2)
    out = []
    if mode != "dyad":
        out.append((DefScalar.const(caps, twist),
                    ((m1[0] + m2[0], m1[1] + m2[1]), g12)))
    if mode != "plain" and model.has_dyad():
        hit = model.dyad(m1, m2)
        if hit is not None:
            sign, mono = hit
            coeff = twist * sign
            ds = DefScalar.s(caps, coeff) if s_weight else DefScalar.const(caps, coeff)
            out.append((ds, (mono, G.mul(model.dyad_sector, g12))))
    return out


def d_b2_smash(model, caps, chain, mode="full"):
    """Product part of the differential on reduced crossed-product chains.

    Leading merge carries sign +1, the merge of slots (i, i+1) carries
    (-1)^i, and the wrap of the last slot onto the coefficient carries
    (-1)^p.  Terms whose merged slot is the unit are dropped.  mode is
    forwarded to the product.
    """
    out = {}
    ident = model.group.identity
    for (m0, g0, slots), c in chain.items():
        p = len(slots)
        if p == 0:
            continue
        for ds, A in prod_def(model, caps, (m0, g0), slots[0], mode):
            w = sword_reduced(A[0], A[1], slots[1:], ident)
            if w is not None:
                chain_accum(out, w, c * ds)
        for i in range(1, p):
            sgn = -1 if i % 2 else 1
            for ds, A in prod_def(model, caps, slots[i - 1], slots[i], mode):
                w = sword_reduced(m0, g0, slots[:i - 1] + (A,) + slots[i + 1:], ident)
                if w is not None:
                    chain_accum(out, w, (c * ds).scale(sgn))
        sgn = -1 if p % 2 else 1
        for ds, A in prod_def(model, caps, slots[p - 1], (m0, g0), mode):
            w = sword_reduced(A[0], A[1], slots[:p - 1], ident)
            if w is not None:
                chain_accum(out, w, (c * ds).scale(sgn))
    return out


def d_b0_smash(model, caps, chain, include_base=True, include_deform=True):
    """Curvature part: insert each curvature term into every gap.

    Insertion after slot k (k = 0 names the gap next to the coefficient)
    carries sign (-1)^(k+1) against the stored curvature values, which
    already include the minus sign of the curved structure.
    """
    out = {}
    ident = model.group.identity
    terms = model.curvature_terms(caps, include_base=include_base,
                                  include_deform=include_deform)
    for (m0, g0, slots), c in chain.items():
        p = len(slots)
        for k in range(p + 1):
            sgn = -1 if k % 2 == 0 else 1
            for ds, mono, sec in terms:
                w = sword_reduced(m0, g0,
                                  slots[:k] + (((mono), sec),) + slots[k:], ident)
                if w is not None:
                    chain_accum(out, w, (c * ds).scale(sgn))
    return out


def d_full_smash(model, caps, chain, deformed=True):
    """Full differential: product merges plus curvature insertions."""
    out = d_b2_smash(model, caps, chain, mode="full" if deformed else "plain")
    for w, c in d_b0_smash(model, caps, chain,
                           include_deform=deformed).items():
        chain_accum(out, w, c)
    return out


def connes_B_smash(model, chain):
    """Cyclic operator: rotate the word under a fresh unit coefficient.

    B(a0[a1|...|ap]) sums the rotations 1[ak|...|ap|a0|...|a(k-1)] with
    sign (-1)^(kp).  Terms with a unit entry among the new slots vanish
    in the reduced complex.
    """
    out = {}
    ident = model.group.identity
    for (m0, g0, slots), c in chain.items():
        p = len(slots)
        entries = ((m0, g0),) + slots
        for k in range(p + 1):
            sgn = -1 if (k * p) % 2 else 1
            rot = entries[k:] + entries[:k]
            w = sword_reduced((0, 0), ident, rot, ident)
            if w is not None:
                chain_accum(out, w, c.scale(sgn))
    return out


class Cochain:
    """Multilinear map on crossed-product slots with crossed-product values.

    degree is the number of slot arguments; eval returns a list of
    (DefScalar, (mono, sector)) terms.
    """

    __slots__ = ("degree", "_fn")

    def __init__(self, degree, fn):
        self.degree = degree
        self._fn = fn

    def eval(self, caps, args):
        return self._fn(caps, args)


def cochain_const(model, terms):
    """Degree-0 cochain with a fixed value, given as [(DefScalar, mono, sector)]."""
    def fn(caps, args):
        return [(ds, (mono, sec)) for ds, mono, sec in terms]
    return Cochain(0, fn)


def direction_cochain(model, caps, kind, payload):
    """Tangent cochain for one deformation direction, from the model's tag."""
    if kind == "cochain0":
        return cochain_const(model, payload)
    if kind == "dyad":
        return cochain_dyad(model)
    raise ValueError("unknown direction kind %r" % kind)


def cochain_dyad(model):
    """Degree-2 cochain: the s-tangent of the deformed product."""
    def fn(caps, args):
        A, B = args
        (m1, g1), (m2, g2) = A, B
        G = model.group
        hit = model.dyad(m1, m2)
        if hit is None:
            return []
        sign, mono = hit
        coeff = G.act_mono(g1, m2) * sign
        sec = G.mul(model.dyad_sector, G.mul(g1, g2))
        return [(DefScalar.const(caps, coeff), (mono, sec))]
    return Cochain(2, fn)


def _mult_chain(model, caps, elems, mode):
    """Left-to-right product of a list of weighted element lists."""
    acc = elems[0]
    for nxt in elems[1:]:
        step = []
        for c1, A in acc:
            for c2, B in nxt:
                for ds, C in prod_def(model, caps, A, B, mode):
                    step.append((c1 * c2 * ds, C))
        acc = step
    return acc


def getzler_b(model, caps, cochains, chain, deformed=True):
    """Higher product operation braced with a tuple of cochains.

    With no cochains this is the full differential.  Otherwise each term
    picks cut positions j0 <= j1 <= ... <= jn with the cochain windows
    disjoint and ordered, wraps the tail slots and the coefficient into a
    single two-argument product together with the cochain values, and
    keeps the middle run as the surviving slots.  Only the two-argument
    product contributes blocks; parity is (j0+1)m + sum (pk-1)(jk-j0).
    """
    n = len(cochains)
    if n == 0:
        return d_full_smash(model, caps, chain, deformed=deformed)
    mode = "full" if deformed else "plain"
    unitc = DefScalar.const(caps, 1)
    out = {}
    ident = model.group.identity
    for (m0, g0, slots), c in chain.items():
        m = len(slots)
        psum = sum(f.degree for f in cochains)
        lo = m - 1 - psum + n  # the binary product forces this j0 lower bound
        for j0 in range(max(lo, 0), m + 1):
            r = 1 - ((m - j0) - psum + n)
            if r < 0 or r > j0:
                continue
            for placement in _placements(cochains, j0, m):
                eta = ((j0 + 1) * m) % 2
                for (jk, f) in placement:
                    eta = (eta + (f.degree - 1) * (jk - j0)) % 2
                sgn = -1 if eta else 1
                # first factor: slots j0+1..m with cochain windows applied
                seq = _apply_windows(model, caps, slots, placement, j0, m)
                if seq is None:
                    continue
                # append coefficient and leading slots a1..ar
                seq = seq + [[(unitc, (m0, g0))]] + [[(unitc, s)] for s in slots[:r]]
                blocks = _mult_chain(model, caps, seq, mode)
                rest = slots[r:j0]
                for ds, A in blocks:
                    w = sword_reduced(A[0], A[1], rest, ident)
                    if w is not None:
                        chain_accum(out, w, (c * ds).scale(sgn))
    return out


def getzler_B(model, caps, cochains, chain):
    """Higher cyclic operation braced with a tuple of cochains.

    With no cochains this is the plain cyclic operator.  Otherwise every
    original entry survives: the word is rotated to start after the cut,
    cochain values become ordinary slots, and the coefficient becomes a
    slot ahead of the leading run.  Same index set and parity as the
    product operation, without the extra wrap.
    """
    n = len(cochains)
    if n == 0:
        return connes_B_smash(model, chain)
    out = {}
    ident = model.group.identity
    for (m0, g0, slots), c in chain.items():
        m = len(slots)
        for j0 in range(0, m + 1):
            for placement in _placements(cochains, j0, m):
                eta = ((j0 + 1) * m) % 2
                for (jk, f) in placement:
                    eta = (eta + (f.degree - 1) * (jk - j0)) % 2
                sgn = -1 if eta else 1
                seq = _apply_windows(model, caps, slots, placement, j0, m)
                if seq is None:
                    continue
                # every factor becomes one slot: expand the product of choices
                for picked, ds in _expand_choices(seq, caps):
                    new = picked + [(m0, g0)] + list(slots[:j0])
                    w = sword_reduced((0, 0), ident, tuple(new), ident)
                    if w is not None:
                        chain_accum(out, w, (c * ds).scale(sgn))
    return out


def _placements(cochains, j0, m):
    """All ordered disjoint window positions (jk) with j0 fixed.

    Yields tuples [(jk, cochain)] with j0 <= j1, jk + pk <= j(k+1),
    jn + pn <= m.  A window at jk consumes slots jk+1 .. jk+pk.
    """
    n = len(cochains)

    def rec(k, start):
        if k == n:
            yield []
            return
        f = cochains[k]
        for jk in range(start, m - f.degree + 1):
            for rest in rec(k + 1, jk + f.degree):
                yield [(jk, f)] + rest

    yield from rec(0, j0)


def _apply_windows(model, caps, slots, placement, j0, m):
    """Factor sequence for slots j0+1..m with each window replaced by its value.

    Returns a list of weighted-element lists, or None when a cochain value
    vanishes.
    """
    seq = []
    pos = j0
    for (jk, f) in placement:
        for i in range(pos, jk):
            seq.append([(DefScalar.const(caps, 1), slots[i])])
        vals = f.eval(caps, tuple(slots[jk:jk + f.degree]))
        if not vals:
            return None
        seq.append(vals)
        pos = jk + f.degree
    for i in range(pos, m):
        seq.append([(DefScalar.const(caps, 1), slots[i])])
    return seq


def _expand_choices(seq, caps):
    """Cartesian expansion of weighted-element lists into (slot list, scalar)."""
    acc = [([], DefScalar.const(caps, 1))]
    for choices in seq:
        step = []
        for picked, ds in acc:
            for c, A in choices:
                step.append((picked + [A], ds * c))
        acc = step
    return acc
