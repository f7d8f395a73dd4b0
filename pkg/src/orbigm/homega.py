"""Restricted forms on sector fixed loci and the potential contraction.

Form words reuse the small-complex shape (mono, sector, mask); the
differential wedges the restricted potential's exterior derivative in
front.  Its homology per sector is the Milnor basis in top mask degree,
and the homotopy inverting it comes in two builds: a closed formula for
potentials splitting as a pure power plus a square, and a per-weight
elimination that works for any sector; the two are compared in tests
where both apply.
"""

from fractions import Fraction

from .chains import chain_accum
from .koszul import E1, E2, mask_vars, wedge
from .linalg import LinSolver
from .poly import grlex_key, monomials_of_weight, poly_diff


def fweight(model, w):
    mono, gi, mask = w
    wt = mono[0] * model.wts[0] + mono[1] * model.wts[1]
    for v in mask_vars(mask):
        wt += model.wts[v]
    return wt


def dW_wedge(model, caps, fchain):
    out = {}
    for (mono, gi, mask), c in fchain.items():
        sec = model.sectors[gi]
        for v in sec.fixed:
            hit = wedge(v, mask)
            if hit is None:
                continue
            sgn, m2 = hit
            for dm, dc in poly_diff(sec.potential, v).items():
                mm = (mono[0] + dm[0], mono[1] + dm[1])
                chain_accum(out, (mm, gi, m2), c.scale(dc * sgn))
    return out


def proj_hom(model, caps, fchain):
    """Projection onto the homology basis: Milnor normal form in top mask."""
    out = {}
    for (mono, gi, mask), c in fchain.items():
        sec = model.sectors[gi]
        full = 0
        for v in sec.fixed:
            full |= E1 << v
        if mask != full:
            continue
        for bm, bc in sec.normal_form({mono: Fraction(1)}).items():
            chain_accum(out, (bm, gi, mask), c.scale(bc))
    return out


def incl_hom(model, caps, fchain):
    """Homology basis words include as themselves."""
    out = {}
    for w, c in fchain.items():
        chain_accum(out, w, c)
    return out


def h_omega(model, caps, fchain):
    """Homotopy with [dW^, h] = id - incl.proj, h^2 = 0, h.incl = 0, proj.h = 0."""
    out = {}
    for w, c in fchain.items():
        if model.name == "aorb":
            terms = _h_split_word(model, w)
        else:
            terms = _h_piece_word(model, w)
        for w2, coeff in terms:
            chain_accum(out, w2, c.scale(coeff))
    return out


def h_omega_piece(model, caps, fchain):
    """The elimination build regardless of model; the test-side dual route."""
    out = {}
    for w, c in fchain.items():
        for w2, coeff in _h_piece_word(model, w):
            chain_accum(out, w2, c.scale(coeff))
    return out


def _h_split_word(model, w):
    """Closed homotopy for a potential x^N + y^2 on a two-variable sector.

    Top forms with enough x-power pull back through the x-branch, the
    rest with positive y-power through the y-branch; the branches are
    exclusive, which forces the square of the homotopy to vanish.
    """
    mono, gi, mask = w
    sec = model.sectors[gi]
    if len(sec.fixed) != 2:
        return []
    N = 2 * model.n
    a, b = mono
    if mask == (E1 | E2):
        if a >= N - 1:
            return [(((a - N + 1, b), gi, E2), Fraction(1, N))]
        if b >= 1:
            return [(((a, b - 1), gi, E1), Fraction(-1, 2))]
        return []
    if mask == E1:
        if a >= N - 1:
            return [(((a - N + 1, b), gi, 0), Fraction(1, N))]
        return []
    return []


_piece_cache = {}


def _h_piece_word(model, w):
    mono, gi, mask = w
    sec = model.sectors[gi]
    if len(sec.fixed) != 2:
        return []
    deg = len(mask_vars(mask))
    if deg == 0:
        return []
    wt = fweight(model, w)
    key = (model.name, model.n, gi, wt, deg)
    table = _piece_cache.get(key)
    if table is None:
        table = _build_piece(model, gi, wt, deg)
        _piece_cache[key] = table
    return table.get(w, [])


def _mask_list(deg):
    if deg == 0:
        return [0]
    if deg == 1:
        return [E1, E2]
    return [E1 | E2]


def _words_of_weight(model, gi, wt, deg):
    out = []
    for mask in _mask_list(deg):
        rest = wt
        for v in mask_vars(mask):
            rest -= model.wts[v]
        if rest < 0:
            continue
        for m in monomials_of_weight(rest, model.wts):
            out.append((m, gi, mask))
    return out


def _word_sort_key(model, w):
    mono, gi, mask = w
    return (mask, grlex_key(mono, model.wts))


def _dw_word(model, w):
    """dW^ of a single word as {word: Fraction}."""
    mono, gi, mask = w
    sec = model.sectors[gi]
    out = {}
    for v in sec.fixed:
        hit = wedge(v, mask)
        if hit is None:
            continue
        sgn, m2 = hit
        for dm, dc in poly_diff(sec.potential, v).items():
            mm = (mono[0] + dm[0], mono[1] + dm[1])
            w2 = (mm, gi, m2)
            out[w2] = out.get(w2, 0) + dc * sgn
    return {k: v for k, v in out.items() if v}


def _build_piece(model, gi, wt, deg):
    """Homotopy table for all words of one sector, weight and mask degree.

    Degree-2 targets are solved (minus their homology part) through the
    columns of the degree-1 differential, ordered so pivots avoid the
    image of the lower differential; degree-1 words are split along that
    image.  The support discipline makes the square of the homotopy
    vanish identically.
    """
    sec = model.sectors[gi]
    rk = lambda w: _word_sort_key(model, w)
    if deg == 1:
        lower = sorted(_words_of_weight(model, gi, wt - 2 * model.n, 0),
                       key=rk)
        solver = LinSolver(row_key=rk)
        for w0 in lower:
            solver.add_column(w0, _dw_word(model, w0))
        table = {}
        for w1 in _words_of_weight(model, gi, wt, 1):
            combo, _ = solver.split({w1: Fraction(1)})
            terms = [(w0, cf) for w0, cf in combo.items() if cf]
            if terms:
                table[w1] = terms
        return table
    # deg == 2
    lower = sorted(_words_of_weight(model, gi, wt - 2 * model.n, 1), key=rk)
    sub = LinSolver(row_key=rk)
    for w0 in sorted(_words_of_weight(model, gi, wt - 4 * model.n, 0), key=rk):
        sub.add_column(w0, _dw_word(model, w0))
    image_rows = sub.pivot_rows()
    order = ([w for w in lower if w not in image_rows]
             + [w for w in lower if w in image_rows])
    solver = LinSolver(row_key=rk)
    for w1 in order:
        solver.add_column(w1, _dw_word(model, w1))
    table = {}
    for w2 in _words_of_weight(model, gi, wt, 2):
        target = {w2: Fraction(1)}
        for bm, bc in sec.normal_form({w2[0]: Fraction(1)}).items():
            bw = (bm, gi, w2[2])
            target[bw] = target.get(bw, 0) - bc
        combo = solver.solve({k: v for k, v in target.items() if v})
        if combo is None:
            raise ArithmeticError("contraction failed to invert a top form")
        terms = [(w1, cf) for w1, cf in combo.items() if cf]
        if terms:
            table[w2] = terms
    return table
