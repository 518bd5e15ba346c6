"""Hopf algebras by structure constants, with exact axiom verification.

Multiplication and comultiplication tensors are stored sparsely (dicts of
nonzero cyclotomic coefficients); everything downstream of a verified
constructor treats the objects as immutable, so they are safe to share
between threads and to ship to worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AxiomError, IntegralError, NotNormalError, SubalgebraError
from .linalg import Echelon, matrix_kernel, spans_equal
from .scalars import CYC_ONE, CYC_ZERO, Cyc, cyc

AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult-algebra-map",
    "counit-algebra-map",
    "antipode-left",
    "antipode-right",
    "antipode-involutive",
)


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom pass/fail outcome of one verification run."""

    results: tuple

    @property
    def ok(self):
        return all(flag for _, flag in self.results)

    @property
    def failed(self):
        return tuple(name for name, flag in self.results if not flag)

    def as_dict(self):
        return dict(self.results)

    def __str__(self):
        return "\n".join(f"{name}: {'pass' if flag else 'FAIL'}" for name, flag in self.results)


def _clean(d):
    return {k: v for k, v in d.items() if v}


def _acc(store, key, val):
    cur = store.get(key)
    store[key] = val if cur is None else cur + val


def _dicts_equal(a, b):
    for k, v in a.items():
        if v != b.get(k, CYC_ZERO):
            return False
    for k, v in b.items():
        if k not in a and v:
            return False
    return True


class HopfAlgebra:
    """Finite-dimensional Hopf algebra over the cyclotomic scalars.

    mult[i][j] maps basis index k to the coefficient of b_k in b_i * b_j;
    comult[i] maps (j, k) to the coefficient of b_j (x) b_k in Delta(b_i);
    antipode[i] maps j to the coefficient of b_j in S(b_i).
    """

    def __init__(self, labels, mult, unit, comult, counit, antipode, *, name="H", kind="generic", group=None):
        d = len(labels)
        self.dim = d
        self.labels = tuple(labels)
        self.name = name
        self.kind = kind
        self.group = group
        if len(mult) != d or any(len(row) != d for row in mult):
            raise ValueError("mult tensor must be dim x dim")
        if len(comult) != d or len(counit) != d or len(unit) != d or len(antipode) != d:
            raise ValueError("comult/counit/unit/antipode must match the dimension")
        self.mult = tuple(tuple(_clean(cell) for cell in row) for row in mult)
        self.unit = tuple(unit)
        self.comult = tuple(_clean(c) for c in comult)
        self.counit = tuple(counit)
        self.antipode = tuple(_clean(row) for row in antipode)
        for row in self.mult:
            for cell in row:
                if any(k < 0 or k >= d for k in cell):
                    raise ValueError("mult tensor index out of range")
        for c in self.comult:
            if any(j < 0 or j >= d or k < 0 or k >= d for j, k in c):
                raise ValueError("comult tensor index out of range")
        self._integral = None
        self._irr = None

    # -- vector helpers ----------------------------------------------------

    def basis_vector(self, i):
        v = [CYC_ZERO] * self.dim
        v[i] = CYC_ONE
        return tuple(v)

    def multiply(self, u, v):
        out = [CYC_ZERO] * self.dim
        mult = self.mult
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = mult[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                for k, c in row[j].items():
                    out[k] = out[k] + f * c
        return tuple(out)

    def apply_antipode(self, v):
        out = [CYC_ZERO] * self.dim
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j, c in self.antipode[i].items():
                out[j] = out[j] + vi * c
        return tuple(out)

    def comult_vector(self, v):
        out = {}
        for i, vi in enumerate(v):
            if not vi:
                continue
            for jk, c in self.comult[i].items():
                _acc(out, jk, vi * c)
        return _clean(out)

    def counit_value(self, v):
        out = CYC_ZERO
        for vi, ci in zip(v, self.counit):
            if vi and ci:
                out = out + vi * ci
        return out

    def left_mult_trace(self, i):
        out = CYC_ZERO
        for j in range(self.dim):
            c = self.mult[i][j].get(j)
            if c:
                out = out + c
        return out

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i] for i in range(self.dim) for j in range(i))

    def is_cocommutative(self):
        for c in self.comult:
            flipped = {(k, j): v for (j, k), v in c.items()}
            if not _dicts_equal(flipped, c):
                return False
        return True

    def element(self, coords):
        return AlgebraElement(self, coords)

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"


class AlgebraElement:
    """An element of a HopfAlgebra, as a coordinate vector over the basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(cyc(c) for c in coords)
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length must equal the algebra dimension")
        self.algebra = algebra
        self.coords = coords

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            return NotImplemented
        return AlgebraElement(self.algebra, self.algebra.multiply(self.coords, other.coords))

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        terms = [f"{c}*{self.algebra.labels[i]}" for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


# -- axiom verification ------------------------------------------------------


def verify_hopf_axioms(H):
    """Exact check of every Hopf axiom; returns an AxiomReport (never raises)."""
    d = H.dim
    results = []

    ok = True
    for i in range(d):
        if not ok:
            break
        for j in range(d):
            if not ok:
                break
            left_ij = H.mult[i][j]
            for k in range(d):
                lhs = {}
                for l, c in left_ij.items():
                    for m, c2 in H.mult[l][k].items():
                        _acc(lhs, m, c * c2)
                rhs = {}
                for l, c in H.mult[j][k].items():
                    for m, c2 in H.mult[i][l].items():
                        _acc(rhs, m, c * c2)
                if not _dicts_equal(_clean(lhs), _clean(rhs)):
                    ok = False
                    break
    results.append(("associativity", ok))

    ok = True
    for j in range(d):
        ej = H.basis_vector(j)
        if H.multiply(H.unit, ej) != ej or H.multiply(ej, H.unit) != ej:
            ok = False
            break
    results.append(("unit", ok))

    ok = True
    for i in range(d):
        lhs, rhs = {}, {}
        for (j, k), c in H.comult[i].items():
            for (a, b), c2 in H.comult[j].items():
                _acc(lhs, (a, b, k), c * c2)
            for (a, b), c2 in H.comult[k].items():
                _acc(rhs, (j, a, b), c * c2)
        if not _dicts_equal(_clean(lhs), _clean(rhs)):
            ok = False
            break
    results.append(("coassociativity", ok))

    ok = True
    for i in range(d):
        left = [CYC_ZERO] * d
        right = [CYC_ZERO] * d
        for (j, k), c in H.comult[i].items():
            ej = H.counit[j]
            if ej:
                left[k] = left[k] + c * ej
            ek = H.counit[k]
            if ek:
                right[j] = right[j] + c * ek
        if tuple(left) != H.basis_vector(i) or tuple(right) != H.basis_vector(i):
            ok = False
            break
    results.append(("counit", ok))

    ok = True
    for i in range(d):
        if not ok:
            break
        for j in range(d):
            lhs = {}
            for l, c in H.mult[i][j].items():
                for jk, c2 in H.comult[l].items():
                    _acc(lhs, jk, c * c2)
            rhs = {}
            for (a, b), c1 in H.comult[i].items():
                for (cc, dd), c2 in H.comult[j].items():
                    f = c1 * c2
                    for x, cx in H.mult[a][cc].items():
                        fx = f * cx
                        for y, cy in H.mult[b][dd].items():
                            _acc(rhs, (x, y), fx * cy)
            if not _dicts_equal(_clean(lhs), _clean(rhs)):
                ok = False
                break
    if ok:
        lhs = H.comult_vector(H.unit)
        rhs = {}
        for j, uj in enumerate(H.unit):
            if not uj:
                continue
            for k, uk in enumerate(H.unit):
                if uk:
                    _acc(rhs, (j, k), uj * uk)
        ok = _dicts_equal(lhs, _clean(rhs))
    results.append(("comult-algebra-map", ok))

    ok = H.counit_value(H.unit) == CYC_ONE
    if ok:
        for i in range(d):
            if not ok:
                break
            for j in range(d):
                val = CYC_ZERO
                for k, c in H.mult[i][j].items():
                    ck = H.counit[k]
                    if ck:
                        val = val + c * ck
                if val != H.counit[i] * H.counit[j]:
                    ok = False
                    break
    results.append(("counit-algebra-map", ok))

    for side in ("left", "right"):
        ok = True
        for i in range(d):
            acc = [CYC_ZERO] * d
            for (j, k), c in H.comult[i].items():
                if side == "left":
                    for l, cl in H.antipode[j].items():
                        f = c * cl
                        for m, cm in H.mult[l][k].items():
                            acc[m] = acc[m] + f * cm
                else:
                    for l, cl in H.antipode[k].items():
                        f = c * cl
                        for m, cm in H.mult[j][l].items():
                            acc[m] = acc[m] + f * cm
            target = tuple(H.counit[i] * u for u in H.unit)
            if tuple(acc) != target:
                ok = False
                break
        results.append((f"antipode-{side}", ok))

    ok = True
    for i in range(d):
        acc = [CYC_ZERO] * d
        for j, c in H.antipode[i].items():
            for k, c2 in H.antipode[j].items():
                acc[k] = acc[k] + c * c2
        if tuple(acc) != H.basis_vector(i):
            ok = False
            break
    results.append(("antipode-involutive", ok))

    return AxiomReport(tuple(results))


def checked(H):
    """Verify H and return it; raises AxiomError on any failed axiom."""
    report = verify_hopf_axioms(H)
    if not report.ok:
        raise AxiomError(f"{H.name} fails Hopf axioms: {', '.join(report.failed)}", report)
    return H


# -- integrals and centrality --------------------------------------------------


def idempotent_integral(H):
    """The idempotent integral: b * L = counit(b) * L for all b, counit(L) = 1.

    Computed by intersecting the kernels of (left-mult by b_i) - counit(b_i);
    the intersection must be one-dimensional with nonvanishing counit.
    """
    if H._integral is not None:
        return H._integral
    d = H.dim
    basis = [list(H.basis_vector(t)) for t in range(d)]
    for i in range(d):
        if not basis:
            break
        eps_i = H.counit[i]
        e_i = H.basis_vector(i)
        images = []
        any_nonzero = False
        for v in basis:
            w = list(H.multiply(e_i, v))
            for r in range(d):
                if v[r]:
                    w[r] = w[r] - eps_i * v[r]
            if not any_nonzero and any(w):
                any_nonzero = True
            images.append(w)
        if not any_nonzero:
            continue
        rows = [[images[t][r] for t in range(len(basis))] for r in range(d)]
        kern = matrix_kernel(rows, len(basis), CYC_ONE)
        new_basis = []
        for x in kern:
            vec = [CYC_ZERO] * d
            for t, xt in enumerate(x):
                if xt:
                    bt = basis[t]
                    for r in range(d):
                        if bt[r]:
                            vec[r] = vec[r] + xt * bt[r]
            new_basis.append(vec)
        basis = new_basis
    if len(basis) != 1:
        raise IntegralError(f"{H.name}: integral space has dimension {len(basis)}, expected 1")
    lam = basis[0]
    s = H.counit_value(lam)
    if not s:
        raise IntegralError(f"{H.name}: counit vanishes on the integral space (not semisimple)")
    sinv = s.inverse()
    lam = tuple(c * sinv for c in lam)
    if H.multiply(lam, lam) != lam:
        raise IntegralError(f"{H.name}: normalized integral is not idempotent")
    elem = AlgebraElement(H, lam)
    H._integral = elem
    return elem


def is_central(x):
    """True iff x commutes with every basis element of its algebra (exactly)."""
    H = x.algebra
    v = x.coords
    for i in range(H.dim):
        e_i = H.basis_vector(i)
        if H.multiply(e_i, v) != H.multiply(v, e_i):
            return False
    return True


# -- subalgebras ----------------------------------------------------------------


class HopfSubalgebra:
    """A Hopf subalgebra given by explicit inclusion rows over the parent basis.

    Construction verifies full row rank, divisibility of dimensions, closure
    under multiplication, comultiplication and antipode, and that the induced
    structure passes every Hopf axiom; failures raise SubalgebraError.
    """

    def __init__(self, parent, rows, *, name=None, labels=None):
        self.parent = parent
        d = parent.dim
        rows = tuple(tuple(cyc(c) for c in row) for row in rows)
        if any(len(r) != d for r in rows):
            raise SubalgebraError("inclusion rows must have the ambient dimension")
        k = len(rows)
        if k == 0:
            raise SubalgebraError("a subalgebra needs at least one row")
        self.inclusion = rows
        self.dim = k
        self.name = name or f"sub({parent.name},dim={k})"
        ech = Echelon(d, CYC_ONE, track=True)
        for row in rows:
            if not ech.push(row):
                raise SubalgebraError(f"{self.name}: inclusion rows are linearly dependent")
        self._ech = ech
        if d % k:
            raise SubalgebraError(f"{self.name}: dimension {k} does not divide {d}")
        if labels is None:
            labels = tuple(f"x{j}" for j in range(k))

        unit_coords = ech.coordinates(parent.unit)
        if unit_coords is None:
            raise SubalgebraError(f"{self.name}: the unit is not in the row span")

        mult = [[None] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                prod = parent.multiply(rows[a], rows[b])
                co = ech.coordinates(prod)
                if co is None:
                    raise SubalgebraError(f"{self.name}: not closed under multiplication")
                mult[a][b] = {t: c for t, c in enumerate(co) if c}

        antipode = []
        for a in range(k):
            co = ech.coordinates(parent.apply_antipode(rows[a]))
            if co is None:
                raise SubalgebraError(f"{self.name}: not closed under the antipode")
            antipode.append({t: c for t, c in enumerate(co) if c})

        counit = tuple(parent.counit_value(row) for row in rows)

        # comultiplication closure: Delta(row) must land in the span (x) span
        pivot_contrib = {}
        for p, combo in ech.pivot_combos():
            pivot_contrib[p] = tuple(combo.items())
        comult = []
        for a in range(k):
            dmap = parent.comult_vector(rows[a])
            legs = [dict() for _ in range(k)]
            for (i, j), c in dmap.items():
                contrib = pivot_contrib.get(i)
                if contrib:
                    for t, coef in contrib:
                        _acc(legs[t], j, c * coef)
            recon = {}
            for t in range(k):
                row = rows[t]
                for j, cj in legs[t].items():
                    if not cj:
                        continue
                    for i, ri in enumerate(row):
                        if ri:
                            _acc(recon, (i, j), ri * cj)
            if not _dicts_equal(_clean(recon), dmap):
                raise SubalgebraError(f"{self.name}: not closed under comultiplication")
            cell = {}
            for t in range(k):
                leg = _clean(legs[t])
                if not leg:
                    continue
                vec = [CYC_ZERO] * d
                for j, cj in leg.items():
                    vec[j] = cj
                co = ech.coordinates(vec)
                if co is None:
                    raise SubalgebraError(f"{self.name}: not closed under comultiplication")
                for u, cu in enumerate(co):
                    if cu:
                        cell[(t, u)] = cu
            comult.append(cell)

        induced = HopfAlgebra(
            labels,
            mult,
            unit_coords,
            comult,
            counit,
            antipode,
            name=self.name,
            kind=f"sub-{parent.kind}",
        )
        report = verify_hopf_axioms(induced)
        if not report.ok:
            raise SubalgebraError(f"{self.name}: induced structure fails {', '.join(report.failed)}")
        self.induced = induced
        self._depth = None

    @property
    def index(self):
        return self.parent.dim // self.dim

    def contains(self, vec):
        return self._ech.contains(vec)

    def coordinates(self, vec):
        return self._ech.coordinates(vec)

    def to_parent(self, kcoords):
        out = [CYC_ZERO] * self.parent.dim
        for j, c in enumerate(kcoords):
            if c:
                row = self.inclusion[j]
                for i, ri in enumerate(row):
                    if ri:
                        out[i] = out[i] + c * ri
        return tuple(out)

    def integral(self):
        return idempotent_integral(self.induced)

    def integral_in_parent(self):
        lam = idempotent_integral(self.induced)
        return AlgebraElement(self.parent, self.to_parent(lam.coords))

    def __repr__(self):
        return f"HopfSubalgebra({self.name}, dim={self.dim} in {self.parent.dim})"


# -- normality criteria ----------------------------------------------------------


def adjoint_stability_test(K):
    """True iff sum h1 * x * S(h2) stays in the span of K for all basis h, x.

    The antipode is involutive on every verified algebra here, so the
    one-sided test settles normality.
    """
    H = K.parent
    d = H.dim
    srows = [H.apply_antipode(H.basis_vector(b)) for b in range(d)]
    for x in K.inclusion:
        sx = [H.multiply(x, srows[b]) for b in range(d)]
        for i in range(d):
            acc = [CYC_ZERO] * d
            for (a, b), c in H.comult[i].items():
                v = sx[b]
                rowa = H.mult[a]
                for j, vj in enumerate(v):
                    if not vj:
                        continue
                    f = c * vj
                    for m, cm in rowa[j].items():
                        acc[m] = acc[m] + f * cm
            if not K.contains(acc):
                return False
    return True


def augmentation_kernel_rows(K):
    """Basis of ker(counit) inside K, as vectors over the parent basis."""
    kern = matrix_kernel([list(K.induced.counit)], K.dim, CYC_ONE)
    return [K.to_parent(x) for x in kern]


def ideal_test(K):
    """True iff H * K+ and K+ * H agree as subspaces of the parent."""
    H = K.parent
    d = H.dim
    kplus = augmentation_kernel_rows(K)
    if not kplus:
        return True
    left, right = [], []
    for i in range(d):
        e_i = H.basis_vector(i)
        for x in kplus:
            left.append(H.multiply(e_i, x))
            right.append(H.multiply(x, e_i))
    return spans_equal(left, right, d, CYC_ONE)


@dataclass(frozen=True)
class Quotient:
    """A quotient Hopf algebra with the projection recorded column by column."""

    algebra: HopfAlgebra
    projection_columns: tuple  # projection_columns[i] = image of parent basis vector i
    complement: tuple  # parent basis indices whose images form the quotient basis


def quotient_hopf(K):
    """Quotient of the parent by the two-sided ideal generated by ker(counit) of K.

    Requires a normal K (ideal_test true).  The quotient basis is the
    lexicographically first subset of parent basis images that completes the
    ideal to the full space, so structure constants are reproducible.
    """
    H = K.parent
    d = H.dim
    if not ideal_test(K):
        raise NotNormalError(f"{K.name} is not normal in {H.name}; no quotient")
    kplus = augmentation_kernel_rows(K)
    ideal_rows = []
    if kplus:
        ide = Echelon(d, CYC_ONE)
        for i in range(d):
            e_i = H.basis_vector(i)
            for x in kplus:
                v = H.multiply(e_i, x)
                if ide.push(v):
                    ideal_rows.append(v)
    q = d - len(ideal_rows)
    if q != d // K.dim:
        raise SubalgebraError(f"ideal dimension {len(ideal_rows)} inconsistent with index {d // K.dim}")

    comb = Echelon(d, CYC_ONE, track=True)
    for v in ideal_rows:
        comb.push(v)
    complement = []
    comp_inputs = []
    for i in range(d):
        pos = comb.inputs
        if comb.push(H.basis_vector(i)):
            complement.append(i)
            comp_inputs.append(pos)
        if len(complement) == q:
            break

    def project(vec):
        co = comb.coordinates(vec)
        return tuple(co[p] for p in comp_inputs)

    pcols = tuple(project(H.basis_vector(i)) for i in range(d))
    labels = tuple(H.labels[i] for i in complement)
    mult = [[None] * q for _ in range(q)]
    for s in range(q):
        for t in range(q):
            prod = H.multiply(H.basis_vector(complement[s]), H.basis_vector(complement[t]))
            mult[s][t] = {u: c for u, c in enumerate(project(prod)) if c}
    comult = []
    for s in range(q):
        cell = {}
        for (a, b), c in H.comult[complement[s]].items():
            pa, pb = pcols[a], pcols[b]
            for xx, ca in enumerate(pa):
                if not ca:
                    continue
                f = c * ca
                for yy, cb in enumerate(pb):
                    if cb:
                        _acc(cell, (xx, yy), f * cb)
        comult.append(_clean(cell))
    counit = tuple(H.counit[i] for i in complement)
    unit = project(H.unit)
    antipode = [
        {u: c for u, c in enumerate(project(H.apply_antipode(H.basis_vector(i)))) if c}
        for i in complement
    ]
    quo = HopfAlgebra(
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=f"{H.name}//{K.name}",
        kind="quotient",
    )
    report = verify_hopf_axioms(quo)
    if not report.ok:
        raise AxiomError(f"quotient fails Hopf axioms: {', '.join(report.failed)}", report)

    # the canonical surjection must be an algebra and coalgebra map with
    # counit_Q . pi = counit
    for i in range(d):
        if quo.counit_value(pcols[i]) != H.counit[i]:
            raise AxiomError("counit does not factor through the quotient projection")
        for j in range(d):
            lhs = project(H.multiply(H.basis_vector(i), H.basis_vector(j)))
            if lhs != quo.multiply(pcols[i], pcols[j]):
                raise AxiomError("quotient projection is not an algebra map")
    for i in range(d):
        lhs = {}
        for (a, b), c in H.comult[i].items():
            for xx, ca in enumerate(pcols[a]):
                if not ca:
                    continue
                f = c * ca
                for yy, cb in enumerate(pcols[b]):
                    if cb:
                        _acc(lhs, (xx, yy), f * cb)
        if not _dicts_equal(_clean(lhs), quo.comult_vector(pcols[i])):
            raise AxiomError("quotient projection is not a coalgebra map")
    return Quotient(quo, pcols, tuple(complement))


# -- serialization -----------------------------------------------------------------


def algebra_to_dict(H):
    """Dense structure-constant dump; reloading reproduces the algebra bit for bit."""
    d = H.dim

    def sc(x):
        return x.to_obj()

    zero = CYC_ZERO
    return {
        "labels": list(H.labels),
        "mult": [
            [[sc(H.mult[i][j].get(k, zero)) for k in range(d)] for j in range(d)]
            for i in range(d)
        ],
        "comult": [
            [[sc(H.comult[i].get((j, k), zero)) for k in range(d)] for j in range(d)]
            for i in range(d)
        ],
        "counit": [sc(c) for c in H.counit],
        "unit": [sc(c) for c in H.unit],
        "antipode": [[sc(H.antipode[i].get(j, zero)) for j in range(d)] for i in range(d)],
        "name": H.name,
        "kind": H.kind,
    }


def algebra_from_dict(data, verify=True):
    """Rebuild an algebra from a dump; verifies the axioms unless told not to."""
    labels = list(data["labels"])
    d = len(labels)
    mult = [
        [
            {k: Cyc.from_obj(data["mult"][i][j][k]) for k in range(d)}
            for j in range(d)
        ]
        for i in range(d)
    ]
    comult = [
        {(j, k): Cyc.from_obj(data["comult"][i][j][k]) for j in range(d) for k in range(d)}
        for i in range(d)
    ]
    counit = [Cyc.from_obj(x) for x in data["counit"]]
    unit = [Cyc.from_obj(x) for x in data["unit"]]
    antipode = [
        {j: Cyc.from_obj(data["antipode"][i][j]) for j in range(d)} for i in range(d)
    ]
    H = HopfAlgebra(
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=data.get("name", "H"),
        kind=data.get("kind", "generic"),
    )
    if verify:
        checked(H)
    return H
