"""Restriction and induction of characters, and the depth-two / normality tests.

Everything is driven by the integer restriction matrix R with
R[c][a] = multiplicity of the a-th irreducible of K in the restriction of
the c-th irreducible of the parent.  Induction is its transpose action
(Frobenius reciprocity is the definition here), so the iterated
induce-restrict operators are small integer matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import Character, irreducible_characters, regular_character
from .errors import DecompositionError
from .hopf import adjoint_stability_test, idempotent_integral, ideal_test, is_central


@dataclass(frozen=True)
class Decomposition:
    """A character written as nonnegative integer multiplicities over an IrrSet."""

    irr: object
    mults: tuple

    def character(self):
        return self.irr.assemble(self.mults)

    def support(self):
        return tuple(i for i, m in enumerate(self.mults) if m)

    def total_degree(self):
        return sum(m * d for m, d in zip(self.mults, self.irr.degrees))

    def __eq__(self, other):
        return (
            isinstance(other, Decomposition)
            and other.irr is self.irr
            and other.mults == self.mults
        )


def constituents(dec):
    """Indices of the irreducibles that occur with positive multiplicity."""
    return dec.support()


@dataclass(frozen=True)
class DepthTwoResult:
    is_depth_two: bool
    minimal_n: int | None
    witnesses: tuple  # (alpha index, chi index) pairs breaking constituent equality


@dataclass(frozen=True)
class ClassPartition:
    """Index-aligned partition of the two character sets.

    classes_h[i] and classes_k[i] are the paired blocks; sizes_h[i] sums the
    squared degrees over classes_h[i], sizes_k[i] over classes_k[i].
    overlap lists any K-index claimed by two blocks (always empty when the
    irreducibles pass orthonormality; reported rather than repaired).
    """

    classes_h: tuple
    classes_k: tuple
    sizes_h: tuple
    sizes_k: tuple
    overlap: tuple

    @property
    def well_defined(self):
        return not self.overlap


@dataclass(frozen=True)
class FormulaReport:
    """Outcome of the per-class restriction/induction formula verification."""

    ok: bool
    restriction_failures: tuple  # chi indices violating the restriction formula
    induction_failures: tuple  # alpha indices violating the induction formula
    proportionality_failures: tuple  # chi indices with non-proportional restrictions


@dataclass(frozen=True)
class PairVerdict:
    """Everything the corpus survey records about one inclusion."""

    pair: str
    depth_two: bool
    lemma: bool
    integral_central: bool
    adjoint_stable: bool
    ideal_normal: bool
    minimal_n: int | None
    witnesses: tuple
    classes_h: tuple
    classes_k: tuple
    class_sizes_h: tuple
    class_sizes_k: tuple
    formulas_ok: bool | None
    verdict: str
    vanishing_zero: bool | None
    integral_values_ok: bool | None
    regular_induction_ok: bool
    dim_h: int
    dim_k: int
    index: int

    @property
    def booleans(self):
        return (
            self.depth_two,
            self.lemma,
            self.integral_central,
            self.adjoint_stable,
            self.ideal_normal,
        )

    def to_dict(self):
        return {
            "pair": self.pair,
            "depth_two": self.depth_two,
            "lemma": self.lemma,
            "integral_central": self.integral_central,
            "adjoint_stable": self.adjoint_stable,
            "ideal_normal": self.ideal_normal,
            "minimal_n": self.minimal_n,
            "witnesses": [list(w) for w in self.witnesses],
            "classes": {
                "parent": [list(c) for c in self.classes_h],
                "sub": [list(c) for c in self.classes_k],
                "sizes_parent": list(self.class_sizes_h),
                "sizes_sub": list(self.class_sizes_k),
            },
            "formulas_ok": self.formulas_ok,
            "verdict": self.verdict,
            "vanishing_zero": self.vanishing_zero,
            "integral_values_ok": self.integral_values_ok,
            "regular_induction_ok": self.regular_induction_ok,
            "dim_h": self.dim_h,
            "dim_k": self.dim_k,
            "index": self.index,
        }


class DepthPair:
    """Shared state for all depth computations on one inclusion K <= H."""

    def __init__(self, K):
        self.K = K
        self.H = K.parent
        self.irr_h = irreducible_characters(self.H)
        self.irr_k = irreducible_characters(K.induced)
        self.index = K.index
        self._rmatrix = None

    @property
    def rmatrix(self):
        if self._rmatrix is None:
            rows = []
            for chi in self.irr_h:
                rows.append(self.restrict(chi).mults)
            self._rmatrix = tuple(rows)
        return self._rmatrix

    def restrict(self, chi):
        """Restriction along the inclusion, decomposed over Irr(K)."""
        if chi.algebra is not self.H:
            raise ValueError("character does not live on the parent algebra")
        values = [chi.evaluate(row) for row in self.K.inclusion]
        restricted = Character(self.K.induced, values)
        return Decomposition(self.irr_k, self.irr_k.decompose(restricted))

    def induce(self, phi):
        """Induction, defined by Frobenius reciprocity against the restriction matrix."""
        if phi.algebra is not self.K.induced:
            raise ValueError("character does not live on the subalgebra")
        mk = self.irr_k.decompose(phi)
        out = self._induce_mults(mk)
        dec = Decomposition(self.irr_h, out)
        want = self.index * sum(m * d for m, d in zip(mk, self.irr_k.degrees))
        if dec.total_degree() != want:
            raise DecompositionError(
                f"{self.K.name}: induced degree {dec.total_degree()} != {want}"
            )
        return dec

    def _induce_mults(self, mk):
        R = self.rmatrix
        return tuple(sum(rc[a] * mk[a] for a in range(len(mk))) for rc in R)

    def _restrict_mults(self, mh):
        R = self.rmatrix
        nk = len(self.irr_k)
        return tuple(sum(mh[c] * R[c][a] for c in range(len(mh))) for a in range(nk))

    def up_down(self, alpha_index):
        """Multiplicities over Irr(K) of induce-then-restrict of one irreducible."""
        nk = len(self.irr_k)
        unit = tuple(1 if a == alpha_index else 0 for a in range(nk))
        return self._restrict_mults(self._induce_mults(unit))

    def depth_two(self):
        R = self.rmatrix
        nh, nk = len(self.irr_h), len(self.irr_k)
        rtr = [
            [sum(R[c][a] * R[c][b] for c in range(nh)) for b in range(nk)]
            for a in range(nk)
        ]
        witnesses = []
        worst = 1
        for a in range(nk):
            uud = [sum(rtr[a][b] * R[c][b] for b in range(nk)) for c in range(nh)]
            for c in range(nh):
                base = R[c][a]
                if base:
                    ratio = -(-uud[c] // base)  # ceil
                    if ratio > worst:
                        worst = ratio
                elif uud[c]:
                    witnesses.append((a, c))
        if witnesses:
            return DepthTwoResult(False, None, tuple(sorted(witnesses)))
        return DepthTwoResult(True, worst, ())

    def lemma_holds(self):
        """Induce-restrict of the trivial character of K equals index * trivial."""
        eps = self.irr_k.trivial_index
        got = self.up_down(eps)
        want = tuple(self.index if a == eps else 0 for a in range(len(self.irr_k)))
        return got == want

    def equivalence(self):
        """Blocks of the relation 'restrictions share a constituent', with sizes."""
        R = self.rmatrix
        nh, nk = len(self.irr_h), len(self.irr_k)
        adj = [[False] * nh for _ in range(nh)]
        for c in range(nh):
            for c2 in range(c, nh):
                if any(R[c][a] and R[c2][a] for a in range(nk)):
                    adj[c][c2] = adj[c2][c] = True
        seen = [False] * nh
        classes_h = []
        for c in range(nh):
            if seen[c]:
                continue
            stack, comp = [c], []
            seen[c] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in range(nh):
                    if adj[x][y] and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            classes_h.append(tuple(sorted(comp)))
        classes_k = []
        counts = [0] * nk
        for comp in classes_h:
            block = set()
            for c in comp:
                block.update(a for a in range(nk) if R[c][a])
            for a in block:
                counts[a] += 1
            classes_k.append(tuple(sorted(block)))
        overlap = tuple(a for a in range(nk) if counts[a] > 1)
        dh = self.irr_h.degrees
        dk = self.irr_k.degrees
        sizes_h = tuple(sum(dh[c] ** 2 for c in comp) for comp in classes_h)
        sizes_k = tuple(sum(dk[a] ** 2 for a in block) for block in classes_k)
        return ClassPartition(tuple(classes_h), tuple(classes_k), sizes_h, sizes_k, overlap)

    def class_formulas(self, partition=None):
        """Exact verification of the per-block restriction/induction formulas.

        Only meaningful for normal inclusions; on other pairs the report
        simply comes back negative.
        """
        part = partition if partition is not None else self.equivalence()
        R = self.rmatrix
        dh = self.irr_h.degrees
        dk = self.irr_k.degrees
        nk = len(self.irr_k)
        bad_restrict = []
        bad_induce = []
        bad_prop = []
        for comp, block, size_h, size_k in zip(
            part.classes_h, part.classes_k, part.sizes_h, part.sizes_k
        ):
            block_set = set(block)
            for c in comp:
                for a in range(nk):
                    if a in block_set:
                        expected = Fraction(dh[c] * dk[a], size_k)
                        if expected.denominator != 1 or R[c][a] != expected:
                            bad_restrict.append(c)
                            break
                    elif R[c][a]:
                        bad_restrict.append(c)
                        break
            for a in block:
                col = [R[c][a] for c in range(len(dh))]
                for c in range(len(dh)):
                    if c in comp:
                        expected = Fraction(dk[a] * self.index * dh[c], size_h)
                        if expected.denominator != 1 or col[c] != expected:
                            bad_induce.append(a)
                            break
                    elif col[c]:
                        bad_induce.append(a)
                        break
            base = None
            for c in comp:
                scaled = tuple(Fraction(R[c][a], dh[c]) for a in range(nk))
                if base is None:
                    base = scaled
                elif scaled != base:
                    bad_prop.append(c)
        ok = not (bad_restrict or bad_induce or bad_prop) and part.well_defined
        return FormulaReport(ok, tuple(bad_restrict), tuple(bad_induce), tuple(bad_prop))

    def regular_induction(self):
        """Induce-restrict of the regular character of K scales it by the index."""
        tk = self.irr_k.decompose(regular_character(self.K.induced))
        down = self._restrict_mults(self._induce_mults(tk))
        return down == tuple(self.index * m for m in tk)

    def theorem(self, pair_id=None):
        d2 = self.depth_two()
        lemma = self.lemma_holds()
        central = is_central(self.K.integral_in_parent())
        adjoint = adjoint_stability_test(self.K)
        ideal = ideal_test(self.K)
        five = (d2.is_depth_two, lemma, central, adjoint, ideal)
        verdict = "PASS" if len(set(five)) == 1 else "FAIL"
        part = self.equivalence()
        normal = all(five)
        formulas = self.class_formulas(part).ok if normal else None
        vanishing = None
        integral_values = None
        if d2.is_depth_two:
            eps = self.irr_k.trivial_index
            vanishing = all(
                self.up_down(a)[eps] == 0
                for a in range(len(self.irr_k))
                if a != eps
            )
            lam = self.K.integral_in_parent()
            integral_values = True
            for chi, deg in zip(self.irr_h, self.irr_h.degrees):
                val = chi.evaluate(lam.coords)
                if val != 0 and val != deg:
                    integral_values = False
                    break
        return PairVerdict(
            pair=pair_id or f"{self.H.name}:{self.K.name}",
            depth_two=d2.is_depth_two,
            lemma=lemma,
            integral_central=central,
            adjoint_stable=adjoint,
            ideal_normal=ideal,
            minimal_n=d2.minimal_n,
            witnesses=d2.witnesses,
            classes_h=part.classes_h,
            classes_k=part.classes_k,
            class_sizes_h=part.sizes_h,
            class_sizes_k=part.sizes_k,
            formulas_ok=formulas,
            verdict=verdict,
            vanishing_zero=vanishing,
            integral_values_ok=integral_values,
            regular_induction_ok=self.regular_induction(),
            dim_h=self.H.dim,
            dim_k=self.K.dim,
            index=self.index,
        )


def depth_pair(K):
    if K._depth is None:
        K._depth = DepthPair(K)
    return K._depth


def restrict(chi, K):
    """Restriction of a parent character to K, decomposed over Irr(K)."""
    return depth_pair(K).restrict(chi)


def induce(phi, K):
    """Induction of a K-character to the parent, via Frobenius reciprocity."""
    return depth_pair(K).induce(phi)


def depth_two_test(K):
    """Constituent-set comparison of induce-restrict-induce against induce."""
    return depth_pair(K).depth_two()


def lemma_test(K):
    return depth_pair(K).lemma_holds()


def equivalence_classes(K):
    return depth_pair(K).equivalence()


def verify_class_formulas(K, partition=None):
    return depth_pair(K).class_formulas(partition)


def regular_induction_check(K):
    return depth_pair(K).regular_induction()


def theorem_check(K, pair_id=None):
    """Evaluate all five depth/normality booleans plus the proof-side checks."""
    return depth_pair(K).theorem(pair_id)
