"""Dense exact linear algebra over any field-like scalar.

Works for Fraction, cyclotomic numbers and prime-field elements alike: the
scalar type only has to support +, -, *, /, == and truthiness (zero is
falsy).  Pivots are always taken at the first nonzero column, so echelon
bases, kernel bases and coordinates are deterministic in label order.
"""

from __future__ import annotations


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a span.

    With ``track=True`` every pivot row remembers its expansion over the
    pushed input rows, so membership tests double as coordinate
    computations.
    """

    def __init__(self, width, one, track=False):
        self.width = width
        self.one = one
        self.zero = one - one
        self.track = track
        self.rows = []
        self.pivots = []
        self.combos = []
        self.inputs = 0

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return (residual, combo) with vec = residual + sum combo[i] * input_i."""
        v = list(vec)
        combo = {}
        for r, p in enumerate(self.pivots):
            f = v[p]
            if not f:
                continue
            row = self.rows[r]
            for c in range(self.width):
                rc = row[c]
                if rc:
                    v[c] = v[c] - f * rc
            if self.track:
                for i, coef in self.combos[r].items():
                    combo[i] = combo.get(i, self.zero) + f * coef
        return v, combo

    def push(self, vec):
        """Add vec to the span; returns True iff the rank grew."""
        idx = self.inputs
        self.inputs += 1
        res, combo = self.reduce(vec)
        p = next((c for c in range(self.width) if res[c]), None)
        if p is None:
            return False
        lead = res[p]
        newrow = [x / lead for x in res]
        newcombo = {}
        if self.track:
            for i, c in combo.items():
                if c:
                    newcombo[i] = -(c / lead)
            newcombo[idx] = newcombo.get(idx, self.zero) + self.one / lead
        # keep earlier rows fully reduced against the new pivot
        for r, row in enumerate(self.rows):
            f = row[p]
            if not f:
                continue
            for c in range(self.width):
                nc = newrow[c]
                if nc:
                    row[c] = row[c] - f * nc
            if self.track:
                cmb = self.combos[r]
                for i, coef in newcombo.items():
                    cmb[i] = cmb.get(i, self.zero) - f * coef
        self.rows.append(newrow)
        self.pivots.append(p)
        if self.track:
            self.combos.append(newcombo)
        return True

    def contains(self, vec):
        res, _ = self.reduce(vec)
        return not any(res)

    def coordinates(self, vec):
        """Coefficients over the pushed inputs, or None if vec lies outside the span."""
        if not self.track:
            raise ValueError("echelon built without tracking")
        res, combo = self.reduce(vec)
        if any(res):
            return None
        out = [self.zero] * self.inputs
        for i, c in combo.items():
            out[i] = c
        return out

    def pivot_combos(self):
        """Pairs (pivot column, expansion over inputs) for each echelon row."""
        if not self.track:
            raise ValueError("echelon built without tracking")
        return list(zip(self.pivots, self.combos))

    def canonical(self):
        """Canonical RREF rows (sorted by pivot); equal spans give equal tuples."""
        order = sorted(range(len(self.rows)), key=lambda r: self.pivots[r])
        return tuple(tuple(self.rows[r]) for r in order)


def echelon_of(rows, width, one, track=False):
    ech = Echelon(width, one, track=track)
    for row in rows:
        ech.push(row)
    return ech


def span_rank(rows, width, one):
    return echelon_of(rows, width, one).rank


def spans_equal(rows_a, rows_b, width, one):
    ea = echelon_of(rows_a, width, one)
    eb = echelon_of(rows_b, width, one)
    return ea.canonical() == eb.canonical()


def matrix_kernel(rows, ncols, one):
    """Deterministic basis of {x : M x = 0} for the matrix M given as rows."""
    zero = one - one
    ech = []
    pivots = []
    for row in rows:
        v = list(row)
        for p, r in zip(pivots, ech):
            f = v[p]
            if f:
                for c in range(ncols):
                    rc = r[c]
                    if rc:
                        v[c] = v[c] - f * rc
        p = next((c for c in range(ncols) if v[c]), None)
        if p is None:
            continue
        lead = v[p]
        v = [x / lead for x in v]
        for q, r in zip(pivots, ech):
            f = r[p]
            if f:
                for c in range(ncols):
                    vc = v[c]
                    if vc:
                        r[c] = r[c] - f * vc
        ech.append(v)
        pivots.append(p)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        x = [zero] * ncols
        x[fc] = one
        for p, r in zip(pivots, ech):
            x[p] = zero - r[fc]
        basis.append(x)
    return basis
