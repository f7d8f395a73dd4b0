"""Chain containers and word plumbing for the two bar-type complexes.

Two word shapes appear throughout:

- smash words (m0, g0, ((m1, g1), ..., (mp, gp))): reduced chains of the
  crossed-product algebra; a slot is degenerate when it is the unit 1.e.
- orbit words (m0, g0, (m1, ..., mp)): reduced chains of the base algebra
  with crossed-product coefficients, taken modulo the group action; a slot
  is degenerate when the monomial is 1.

A chain is a plain dict {word: DefScalar}; all operators are functions that
merge term dicts.  The group acts diagonally, so each orbit word is an
eigenvector of the action and its coinvariant class either vanishes or is
the word itself; orbit chains therefore store invariant words only, and
equality of coinvariant classes is literal dict equality.
"""


def chain_add(a, b):
    out = dict(a)
    for w, c in b.items():
        if w in out:
            v = out[w] + c
            if v.is_zero():
                del out[w]
            else:
                out[w] = v
        elif not c.is_zero():
            out[w] = c
    return out


def chain_accum(out, w, c):
    """In-place single-term merge."""
    if w in out:
        v = out[w] + c
        if v.is_zero():
            del out[w]
        else:
            out[w] = v
    elif not c.is_zero():
        out[w] = c


def chain_neg(a):
    return {w: -c for w, c in a.items()}

def chain_sub(a, b):
    return chain_add(a, chain_neg(b))


def chain_scale(a, ds):
    out = {}
    for w, c in a.items():
        v = c * ds
        if not v.is_zero():
            out[w] = v
    return out


def chain_scale_base(a, c0):
    if not c0:
        return {}
    return {w: c.scale(c0) for w, c in a.items()}


def chain_u_shift(a, du):
    out = {}
    for w, c in a.items():
        v = c.u_shift(du)
        if not v.is_zero():
            out[w] = v
    return out


def chain_is_zero(a):
    return all(c.is_zero() for c in a.values())


def chain_slot_cap(a, pmax):
    return {w: c for w, c in a.items() if len(w[2]) <= pmax}


def chain_order_filter(a, max_order):
    out = {}
    for w, c in a.items():
        v = c.order_filter(max_order)
        if not v.is_zero():
            out[w] = v
    return out


def chain_recap(a, caps):
    out = {}
    for w, c in a.items():
        v = c.recap(caps)
        if not v.is_zero():
            out[w] = v
    return out


def sword_reduced(m0, g0, slots, identity):
    """None if any slot is the unit of the crossed product."""
    for m, g in slots:
        if m == (0, 0) and g == identity:
            return None
    return (m0, g0, tuple(slots))


def tword_reduced(m0, g0, slots):
    for m in slots:
        if m == (0, 0):
            return None
    return (m0, g0, tuple(slots))


def tword_invariant(model, w):
    """Whether the orbit word survives projection to coinvariants.

    The action is diagonal, so every word is an eigenvector: g sends the word
    to (eigenvalue factor) * itself.  In the coinvariant quotient a word with
    a non-trivial eigenvalue is identified with a multiple of itself and its
    class vanishes; invariant words pass through untouched.
    """
    G = model.group
    m0, g0, slots = w
    for gi in range(1, len(G)):
        factor = G.act_mono(gi, m0)
        for m in slots:
            factor = factor * G.act_mono(gi, m)
        if factor != 1:
            return False
    return True


def fold_tchain(model, chain):
    """Projection of an orbit chain to coinvariants (kill non-invariant words)."""
    return {w: c for w, c in chain.items() if tword_invariant(model, w)}
