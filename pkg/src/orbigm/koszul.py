"""Small model of the orbit bar complex: exterior words over each sector.

A small word is (mono, sector, mask) with mask bits 1 and 2 marking the
two exterior generators in canonical order.  The complex computes the
same homology as the orbit bar complex of the undeformed product; the
four structure maps here are the inclusion/projection pair against the
bar side and the inclusion/projection pair against restricted forms on
the sector's fixed locus, with the sector-local homotopy in between.
Forms reuse the same word shape with the mask marking differentials.
"""

from fractions import Fraction

from .chains import chain_accum
from .defring import DefScalar

E1, E2 = 1, 2


def mask_vars(mask):
    return tuple(v for v in (0, 1) if mask & (E1 << v))


def wedge(var, mask):
    """(sign, mask) for e_var wedged in front, None if already present."""
    bit = E1 << var
    if mask & bit:
        return None
    below = bin(mask & (bit - 1)).count("1")
    return (-1 if below % 2 else 1, mask | bit)


def kword_invariant(model, w):
    G = model.group
    mono, gi, mask = w
    for g in range(1, len(G)):
        factor = G.act_mono(g, mono)
        for v in mask_vars(mask):
            factor = factor * G.eigen(g)[v]
        if factor != 1:
            return False
    return True


def koszul_weight(model, w):
    """Grading that the sector differential and homotopy both preserve.

    Counts exponents of moved variables plus exterior factors along moved
    directions; zero exactly on the image of the forms inclusion.
    """
    mono, gi, mask = w
    moved = model.group.unfixed_vars(gi)
    wt = sum(mono[v] for v in moved)
    wt += sum(1 for v in mask_vars(mask) if v in moved)
    return wt


def d_K(model, caps, kchain):
    """Sector differential: contract one exterior factor against (eig-1)x."""
    G = model.group
    out = {}
    for (mono, gi, mask), c in kchain.items():
        eig = G.eigen(gi)
        pos = 0
        for v in mask_vars(mask):
            lam = eig[v]
            sgn = -1 if pos % 2 else 1
            pos += 1
            if lam == 1:
                continue
            m2 = (mono[0] + (1 - v), mono[1] + v)
            coeff = (lam - 1) * sgn
            chain_accum(out, (m2, gi, mask & ~(E1 << v)), c.scale(coeff))
    return out


def H_K(model, caps, kchain):
    """Sector homotopy: spread the derivative along missing moved directions.

    Zero on weight-zero words; otherwise each moved variable absent from
    the mask contributes its derivative divided by the weight and by
    (eig-1).
    """
    G = model.group
    out = {}
    for w, c in kchain.items():
        mono, gi, mask = w
        wt = koszul_weight(model, w)
        if wt == 0:
            continue
        eig = G.eigen(gi)
        for v in G.unfixed_vars(gi):
            if mask & (E1 << v):
                continue
            if mono[v] == 0:
                continue
            dmono = (mono[0] - (1 - v), mono[1] - v)
            sgn, m2 = wedge(v, mask)
            coeff = Fraction(mono[v], wt) * sgn / (eig[v] - 1)
            chain_accum(out, (dmono, gi, m2), c.scale(coeff))
    return out


def proj_forms(model, caps, kchain):
    """Projection onto forms restricted to each sector's fixed locus.

    Kills words whose mask touches a moved direction or whose monomial
    involves a moved variable.
    """
    out = {}
    for (mono, gi, mask), c in kchain.items():
        moved = model.group.unfixed_vars(gi)
        if any(v in moved for v in mask_vars(mask)):
            continue
        if any(mono[v] for v in moved):
            continue
        chain_accum(out, (mono, gi, mask), c)
    return out


def incl_forms(model, caps, fchain):
    """Forms include into the small complex word-for-word."""
    out = {}
    for w, c in fchain.items():
        chain_accum(out, w, c)
    return out


def phi(model, caps, kchain):
    """Inclusion into orbit bar words: antisymmetrize the exterior part."""
    out = {}
    x, y = (1, 0), (0, 1)
    for (mono, gi, mask), c in kchain.items():
        if mask == 0:
            chain_accum(out, (mono, gi, ()), c)
        elif mask == E1:
            chain_accum(out, (mono, gi, (x,)), c)
        elif mask == E2:
            chain_accum(out, (mono, gi, (y,)), c)
        else:
            chain_accum(out, (mono, gi, (x, y)), c)
            chain_accum(out, (mono, gi, (y, x)), c.scale(-1))
    return out


def _geom(lam, m):
    """Partial geometric sum 1 + lam + ... + lam^(m-1)."""
    if m <= 0:
        return 0
    if lam == 1:
        return Fraction(m)
    total = 0
    power = 1
    for _ in range(m):
        total = total + power
        power = power * lam
    return total


def upsilon(model, caps, tchain):
    """Projection of orbit bar words onto the small complex.

    Words with more than two slots map to zero; one- and two-slot words
    contract to exterior words with partial geometric sums in the
    sector's eigenvalues.
    """
    G = model.group
    out = {}
    for (m0, gi, slots), c in tchain.items():
        lam, mu = G.eigen(gi)
        p = len(slots)
        if p == 0:
            chain_accum(out, (m0, gi, 0), c)
        elif p == 1:
            a, b = slots[0]
            if a >= 1:
                coeff = (mu ** b) * _geom(lam, a)
                mono = (m0[0] + a - 1, m0[1] + b)
                chain_accum(out, (mono, gi, E1), c.scale(coeff))
            if b >= 1:
                coeff = _geom(mu, b)
                mono = (m0[0] + a, m0[1] + b - 1)
                chain_accum(out, (mono, gi, E2), c.scale(coeff))
        elif p == 2:
            (a1, b1), (a2, b2) = slots
            if a1 >= 1 and b2 >= 1:
                coeff = (mu ** b1) * _geom(lam, a1) * _geom(mu, b2)
                mono = (m0[0] + a1 + a2 - 1, m0[1] + b1 + b2 - 1)
                chain_accum(out, (mono, gi, E1 | E2), c.scale(coeff))
    return out
