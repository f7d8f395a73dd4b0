"""Contracting homotopy for the orbit bar complex onto the small complex.

Values are constructed word by word: the defining equation
d(H w) = (id - incl.proj)(w) - H(d w) determines H w up to a cycle, and
the choice is pinned by solving over a canonically ordered candidate set
with free variables at zero (plus the kernel constraint of the small
projection on two-slot values).  Each word's value depends only on the
word itself, never on the order of requests, so reports and stability
re-runs see one fixed operator.  The published homotopy is H0 d H0 with
H0 the raw solution precomposed with (id - incl.proj); that composite
squares to zero and satisfies the remaining retraction identities.

All arithmetic here is over plain base scalars; the deformation-ring
linearity is restored at the boundary by scaling per word.
"""

from fractions import Fraction
from math import comb

from .chains import chain_accum, tword_invariant, tword_reduced
from .defring import DefScalar
from .koszul import E1, E2
from .linalg import CellLU, LinSolver
from .poly import grlex_key


def faccum(out, w, c):
    v = out.get(w, 0) + c
    if v:
        out[w] = v
    else:
        out.pop(w, None)


def d_plain_word(model, w):
    """Base product differential of one orbit word, over plain scalars."""
    G = model.group
    m0, g0, slots = w
    p = len(slots)
    out = {}
    if p == 0:
        return out
    chi = G.act_mono(g0, slots[0])
    w2 = tword_reduced((m0[0] + slots[0][0], m0[1] + slots[0][1]), g0, slots[1:])
    if w2 is not None:
        faccum(out, w2, chi)
    for i in range(1, p):
        sgn = Fraction(-1 if i % 2 else 1)
        merged = (slots[i - 1][0] + slots[i][0], slots[i - 1][1] + slots[i][1])
        w2 = tword_reduced(m0, g0, slots[:i - 1] + (merged,) + slots[i + 1:])
        if w2 is not None:
            faccum(out, w2, sgn)
    sgn = Fraction(-1 if p % 2 else 1)
    w2 = tword_reduced((slots[p - 1][0] + m0[0], slots[p - 1][1] + m0[1]),
                       g0, slots[:p - 1])
    if w2 is not None:
        faccum(out, w2, sgn)
    return out


def ups_word(model, w):
    """Small-complex projection of one orbit word, over plain scalars."""
    G = model.group
    m0, gi, slots = w
    lam, mu = G.eigen(gi)
    p = len(slots)
    out = {}
    if p == 0:
        out[(m0, gi, 0)] = Fraction(1)
    elif p == 1:
        a, b = slots[0]
        if a >= 1:
            c = (mu ** b) * _geom(lam, a)
            if c:
                faccum(out, ((m0[0] + a - 1, m0[1] + b), gi, E1), c)
        if b >= 1:
            c = _geom(mu, b)
            if c:
                faccum(out, ((m0[0] + a, m0[1] + b - 1), gi, E2), c)
    elif p == 2:
        (a1, b1), (a2, b2) = slots
        if a1 >= 1 and b2 >= 1:
            c = (mu ** b1) * _geom(lam, a1) * _geom(mu, b2)
            if c:
                faccum(out, ((m0[0] + a1 + a2 - 1, m0[1] + b1 + b2 - 1),
                             gi, E1 | E2), c)
    return out


def phi_word(model, kw):
    mono, gi, mask = kw
    x, y = (1, 0), (0, 1)
    if mask == 0:
        return {(mono, gi, ()): Fraction(1)}
    if mask == E1:
        return {(mono, gi, (x,)): Fraction(1)}
    if mask == E2:
        return {(mono, gi, (y,)): Fraction(1)}
    return {(mono, gi, (x, y)): Fraction(1), (mono, gi, (y, x)): Fraction(-1)}


def _geom(lam, m):
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


def tword_weight(model, w):
    m0, gi, slots = w
    wt = m0[0] * model.wts[0] + m0[1] * model.wts[1]
    for m in slots:
        wt += m[0] * model.wts[0] + m[1] * model.wts[1]
    return wt


def chain_weight_cap(model, chain, wmax):
    """Drop words whose total exponent weight exceeds wmax.

    Merges preserve the exponent vector and curvature insertions raise it,
    so the high-weight span is a subcomplex; killing it is a chain-level
    quotient, and perturbation series that raise weight become finite in it.
    """
    return {w: c for w, c in chain.items()
            if tword_weight(model, w) <= wmax}


def chain_total_cap(model, chain, tmax):
    """Drop coefficient terms whose word-plus-parameter weight exceeds tmax.

    The deformation parameters are weighted so that every structure operator
    preserves or raises this joint weight; the product trades nothing away
    and curvature, deformation and circle insertions each add one potential
    weight.  The high part is therefore a subcomplex and this per-term cut
    an honest quotient, one that stays finite even where the twisted-sector
    product deformation lowers the bare word weight.
    """
    out = {}
    for w, c in chain.items():
        base = tword_weight(model, w)
        kept = {key: v for key, v in c.t.items()
                if base + model.term_weight(key) <= tmax}
        if kept:
            out[w] = DefScalar(c.caps, kept)
    return out


def content_of(w):
    """Total exponent vector of a word; every operator here preserves it."""
    a, b = w[0]
    for m in w[2]:
        a += m[0]
        b += m[1]
    return (a, b)


def _mono_splits(m):
    """All ordered splits of a monomial into two non-unit factors."""
    out = []
    for a in range(m[0] + 1):
        for b in range(m[1] + 1):
            left = (a, b)
            right = (m[0] - a, m[1] - b)
            if left != (0, 0) and right != (0, 0):
                out.append((left, right))
    return out


def _preimage_moves(w):
    """Words one slot longer whose differential can reach w."""
    m0, g0, slots = w
    out = set()
    for i, m in enumerate(slots):
        for left, right in _mono_splits(m):
            out.add((m0, g0, slots[:i] + (left, right) + slots[i + 1:]))
    for front, rest in _mono_splits(m0):
        out.add((rest, g0, (front,) + slots))
        out.add((front, g0, slots + (rest,)))
    if m0 != (0, 0):
        out.add(((0, 0), g0, (m0,) + slots))
        out.add(((0, 0), g0, slots + (m0,)))
    return out


def _word_key(model, w):
    m0, g0, slots = w
    return (grlex_key(m0, model.wts), tuple(grlex_key(m, model.wts) for m in slots))


def _content_piece(model, g0, content, p):
    """Every word with the given sector, exponent content and slot count.

    Slots are filled recursively with non-unit monomials and the
    coefficient takes the remainder, so the walk never visits an
    assignment with a unit slot.
    """
    out = []
    slots = []

    def rec(i, ra, rb):
        if i == p:
            out.append(((ra, rb), g0, tuple(slots)))
            return
        need = p - i - 1
        for a in range(ra + 1):
            for b in range(rb + 1):
                if a == 0 and b == 0:
                    continue
                if (ra - a) + (rb - b) < need:
                    continue
                slots.append((a, b))
                rec(i + 1, ra - a, rb - b)
                slots.pop()

    rec(0, content[0], content[1])
    return out


def _piece_bound(content, p):
    """Exact word count of a cell, by inclusion-exclusion over unit slots."""
    A, B = content
    total = 0
    for j in range(p + 1):
        q = p - j
        term = comb(p, j) * comb(A + q, q) * comb(B + q, q)
        total += -term if j % 2 else term
    return total


class BarHomotopy:
    """Per-model cache of homotopy values on individual orbit words.

    Solves share one eliminated column basis per (sector, content,
    slot-count) cell, built over the whole cell in canonical order, so
    a value never depends on which words were requested before it.
    """

    def __init__(self, model, cell_limit=4000, grow_rounds=10,
                 piece_limit=60000):
        self.model = model
        self.cell_limit = cell_limit
        self.grow_rounds = grow_rounds
        self.piece_limit = piece_limit
        self._raw = {}
        self._hc = {}
        self._d = {}
        self._wk = {}
        self._cells = {}

    def d_word(self, w):
        hit = self._d.get(w)
        if hit is None:
            hit = d_plain_word(self.model, w)
            self._d[w] = hit
        return hit

    def wkey(self, w):
        hit = self._wk.get(w)
        if hit is None:
            hit = _word_key(self.model, w)
            self._wk[w] = hit
        return hit

    # -- raw recursion -----------------------------------------------------

    def h_raw(self, w):
        hit = self._raw.get(w)
        if hit is not None:
            return hit
        if len(w[2]) == 0:
            self._raw[w] = {}
            return {}
        rhs = self._defect(w)
        val = self._solve(w, rhs) if rhs else {}
        self._raw[w] = val
        return val

    def _defect(self, w):
        """(id - incl.proj)(w) - H(d w), the required boundary of the value."""
        rhs = {w: Fraction(1)}
        for kw, c in ups_word(self.model, w).items():
            for tw, c2 in phi_word(self.model, kw).items():
                faccum(rhs, tw, -c * c2)
        for v, c in self.d_word(w).items():
            for tw, c2 in self.h_raw(v).items():
                faccum(rhs, tw, -c * c2)
        return rhs

    def _col(self, c, want_kernel):
        model = self.model
        col = {(0, self.wkey(v)): cf for v, cf in self.d_word(c).items()}
        if want_kernel:
            for kw, cf in ups_word(model, c).items():
                col[(1, (grlex_key(kw[0], model.wts), kw[2]))] = cf
        return col

    def _cell(self, g0, content, p_out):
        key = (g0, content, p_out)
        hit = self._cells.get(key)
        if hit is None:
            piece = [v for v in _content_piece(self.model, g0, content, p_out)
                     if tword_invariant(self.model, v)]
            piece.sort(key=self.wkey)
            want_kernel = p_out == 2
            hit = CellLU([(c, self._col(c, want_kernel)) for c in piece])
            self._cells[key] = hit
        return hit

    def _solve(self, w, rhs):
        """Boundary preimage of the defect, canonical per word.

        Small cells are eliminated whole, once, and shared by every
        word with the same sector, content and slot count.  Oversized
        cells fall back to per-word candidate growth guided by the
        rows the current span misses.
        """
        model = self.model
        p_out = len(w[2]) + 1
        g0 = w[1]
        content = content_of(w)
        if _piece_bound(content, p_out) <= self.cell_limit:
            solver = self._cell(g0, content, p_out)
            target = {(0, self.wkey(v)): cf for v, cf in rhs.items()}
            combo, residual = solver.split(target)
            if residual:
                raise ArithmeticError("homotopy equation unsolvable; "
                                      "the defect is not a boundary")
            return {c: cf for c, cf in combo.items() if cf}
        want_kernel = p_out == 2
        solver = LinSolver()
        added = set()
        decode = {}
        target = {}
        for v, cf in rhs.items():
            k = (0, self.wkey(v))
            decode[k] = v
            target[k] = cf
        frontier = set(rhs)
        for _ in range(self.grow_rounds):
            grown = set()
            for v in frontier:
                grown |= _preimage_moves(v)
            grown = {c for c in grown if c not in added}
            added |= grown
            for c in sorted(grown, key=self.wkey):
                solver.add_column(c, self._col(c, want_kernel))
            for c in grown:
                for v in self.d_word(c):
                    decode.setdefault((0, self.wkey(v)), v)
            combo, residual = solver.split(target)
            if not residual:
                return {c: cf for c, cf in combo.items() if cf}
            frontier = {decode[r] for r in residual if r[0] == 0}
            if not frontier:
                break
        if _piece_bound(content, p_out) > self.piece_limit:
            raise ArithmeticError("homotopy cell too large: %r" % (content,))
        piece = {v for v in _content_piece(model, g0, content, p_out)
                 if tword_invariant(model, v)}
        for c in sorted(piece - added, key=self.wkey):
            solver.add_column(c, self._col(c, want_kernel))
        combo, residual = solver.split(target)
        if residual:
            raise ArithmeticError("homotopy equation unsolvable; "
                                  "the defect is not a boundary")
        return {c: cf for c, cf in combo.items() if cf}

    # -- published operator ------------------------------------------------

    def h0_word(self, w):
        out = {}
        for tw, c in self.h_raw(w).items():
            faccum(out, tw, c)
        sub = {}
        for kw, c in ups_word(self.model, w).items():
            for tw, c2 in phi_word(self.model, kw).items():
                faccum(sub, tw, c * c2)
        for v, c in sub.items():
            for tw, c2 in self.h_raw(v).items():
                faccum(out, tw, -c * c2)
        return out

    def hc_word(self, w):
        hit = self._hc.get(w)
        if hit is not None:
            return hit
        if not tword_invariant(self.model, w):
            raise ValueError("homotopy applied outside the coinvariant "
                             "complex: %r" % (w,))
        mid = {}
        for v, c in self.h0_word(w).items():
            for v2, c2 in self.d_word(v).items():
                faccum(mid, v2, c * c2)
        out = {}
        for v, c in mid.items():
            for v2, c2 in self.h0_word(v).items():
                faccum(out, v2, c * c2)
        self._hc[w] = out
        return out

    def apply(self, caps, tchain):
        """Deformation-linear extension of the homotopy to a chain."""
        out = {}
        for w, ds in tchain.items():
            for v, c in self.hc_word(w).items():
                chain_accum(out, v, ds.scale(c))
        return out
