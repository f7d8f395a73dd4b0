"""Exact incremental elimination over sparse column vectors.

Columns are dicts {row_key: Fraction-like}; row keys only need a total
order.  Elimination is deterministic: columns are consumed in the order
given, each new pivot is the least row key remaining in the reduced
column, and solving fixes all free variables to zero, so the returned
combination is a function of the column order and nothing else.
"""

import heapq
from fractions import Fraction


def _exact(v):
    # bare ints would fall into float division during elimination
    return Fraction(v) if isinstance(v, int) else v


def _div(a, b):
    """Exact division that never touches floats and keeps ints int."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 1:
            return a
        if b == -1:
            return -a
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return a / b


def _shrink(v):
    # integral Fractions as ints: the common case, and far cheaper
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class LinSolver:
    def __init__(self, row_key=None):
        # pivots: row -> (reduced column, combo dict)
        self.pivots = {}
        self.cols = []
        self._row_key = row_key or (lambda r: r)

    def _reduce(self, vec, combo):
        vec = {r: v for r, v in vec.items() if v}
        while True:
            cands = [r for r in vec if r in self.pivots]
            if not cands:
                return vec, combo
            r = min(cands, key=self._row_key)
            pvec, pcombo = self.pivots[r]
            f = vec[r] / pvec[r]
            for rr, vv in pvec.items():
                nv = vec.get(rr, 0) - f * vv
                if nv:
                    vec[rr] = nv
                else:
                    vec.pop(rr, None)
            for ck, cv in pcombo.items():
                nv = combo.get(ck, 0) - f * cv
                if nv:
                    combo[ck] = nv
                else:
                    combo.pop(ck, None)

    def add_column(self, key, vec):
        """Insert one column; returns True when it added a new pivot."""
        vec = {r: _exact(v) for r, v in vec.items() if v}
        vec, combo = self._reduce(vec, {key: Fraction(1)})
        self.cols.append(key)
        if not vec:
            return False
        r = min(vec, key=self._row_key)
        self.pivots[r] = (vec, combo)
        return True

    def pivot_rows(self):
        return set(self.pivots)

    def solve(self, target):
        """Combination of added columns hitting target, or None.

        Free variables are zero: the combination only involves columns
        that became pivots.
        """
        vec = {r: _exact(v) for r, v in target.items() if v}
        vec, combo = self._reduce(vec, {})
        if vec:
            return None
        return {k: -v for k, v in combo.items()}

    def split(self, target):
        """(combination, residual) with target = M*combination + residual.

        The residual is supported away from pivot rows; used to project
        onto the image along the complement spanned by non-pivot rows.
        """
        vec = {r: _exact(v) for r, v in target.items() if v}
        vec, combo = self._reduce(vec, {})
        return {k: -v for k, v in combo.items()}, vec


class CellLU:
    """One-shot sparse elimination of a fixed column family.

    Built for repeated solves against the same columns: pivot order is
    chosen by a fill-reducing heuristic (fewest entries first, canonical
    index on ties), which is a deterministic function of the input
    alone, and targets are then reduced by replaying the pivot sequence.
    """

    def __init__(self, columns):
        self.keys = [k for k, _ in columns]
        cols = [{r: _shrink(v) for r, v in vec.items() if v}
                for _, vec in columns]
        combos = [{i: 1} for i in range(len(cols))]
        rows = {}
        for ci, col in enumerate(cols):
            for r in col:
                rows.setdefault(r, set()).add(ci)
        heap = [(len(col), ci) for ci, col in enumerate(cols) if col]
        heapq.heapify(heap)
        alive = [bool(col) for col in cols]
        pivoted_rows = set()
        order = []
        while heap:
            nnz, ci = heapq.heappop(heap)
            if not alive[ci] or len(cols[ci]) != nnz:
                if alive[ci] and cols[ci]:
                    heapq.heappush(heap, (len(cols[ci]), ci))
                continue
            col = cols[ci]
            # unit pivots keep the update arithmetic integral
            r = min(col, key=lambda rr: (0 if col[rr] == 1 or col[rr] == -1
                                         else 1, len(rows[rr]), rr))
            alive[ci] = False
            pivoted_rows.add(r)
            order.append((r, ci))
            pv = col[r]
            for cj in list(rows[r]):
                if cj == ci or not alive[cj]:
                    continue
                other = cols[cj]
                f = _div(other[r], pv)
                for rr, vv in col.items():
                    nv = other.get(rr, 0) - f * vv
                    if nv:
                        if rr not in other:
                            rows.setdefault(rr, set()).add(cj)
                        other[rr] = nv
                    elif rr in other:
                        del other[rr]
                        rows[rr].discard(cj)
                oc = combos[cj]
                for ck, cv in combos[ci].items():
                    nv = oc.get(ck, 0) - f * cv
                    if nv:
                        oc[ck] = nv
                    else:
                        oc.pop(ck, None)
                if other:
                    heapq.heappush(heap, (len(other), cj))
            for rr in col:
                rows[rr].discard(ci)
        self._order = [(r, cols[ci], combos[ci]) for r, ci in order]
        self.pivot_rows = pivoted_rows

    def split(self, target):
        """(combination, residual), mirroring LinSolver.split."""
        vec = {r: _shrink(v) for r, v in target.items() if v}
        combo = {}
        for r, col, ccombo in self._order:
            f = vec.get(r)
            if not f:
                continue
            f = _div(f, col[r])
            for rr, vv in col.items():
                nv = vec.get(rr, 0) - f * vv
                if nv:
                    vec[rr] = nv
                else:
                    vec.pop(rr, None)
            for ck, cv in ccombo.items():
                nv = combo.get(ck, 0) - f * cv
                if nv:
                    combo[ck] = nv
                else:
                    combo.pop(ck, None)
        return {self.keys[k]: -v for k, v in combo.items()}, vec
