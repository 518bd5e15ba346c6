"""Concrete Hopf algebras: group algebras, their duals, and inclusions."""

from __future__ import annotations

from functools import lru_cache

from .groups import Subgroup, builtin_group, left_cosets, require_normal
from .hopf import HopfAlgebra, HopfSubalgebra, checked
from .scalars import CYC_ONE, CYC_ZERO


def group_algebra(G):
    """k[G]: basis the group elements, grouplike comultiplication, S(g) = g^-1."""
    n = G.order
    mult = [[{G.cayley[i][j]: CYC_ONE} for j in range(n)] for i in range(n)]
    comult = [{(i, i): CYC_ONE} for i in range(n)]
    counit = [CYC_ONE] * n
    unit = [CYC_ONE if i == 0 else CYC_ZERO for i in range(n)]
    antipode = [{G.inverse[i]: CYC_ONE} for i in range(n)]
    H = HopfAlgebra(
        G.labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=f"k[{G.name}]",
        kind="group",
        group=G,
    )
    return checked(H)


def dual_group_algebra(G):
    """k^G: basis the indicator functionals d_g, pointwise product, Delta dual to the group law."""
    n = G.order
    labels = [f"d{lbl}" for lbl in G.labels]
    mult = [[{i: CYC_ONE} if i == j else {} for j in range(n)] for i in range(n)]
    comult = [dict() for _ in range(n)]
    for a in range(n):
        for b in range(n):
            comult[G.cayley[a][b]][(a, b)] = CYC_ONE
    counit = [CYC_ONE if i == 0 else CYC_ZERO for i in range(n)]
    unit = [CYC_ONE] * n
    antipode = [{G.inverse[i]: CYC_ONE} for i in range(n)]
    H = HopfAlgebra(
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=f"k^{G.name}",
        kind="dual",
        group=G,
    )
    return checked(H)


def subgroup_subalgebra(G, sub, algebra=None):
    """k[S] inside k[G] for a subgroup S, rows selecting the subgroup elements."""
    H = algebra if algebra is not None else group_algebra(G)
    rows = []
    for s in sub.elements:
        row = [CYC_ZERO] * G.order
        row[s] = CYC_ONE
        rows.append(row)
    labels = tuple(G.labels[s] for s in sub.elements)
    return HopfSubalgebra(H, rows, name=f"k[{sub.describe()}]", labels=labels)


def dual_quotient_subalgebra(G, normal_sub, algebra=None):
    """The span of coset indicator sums inside k^G, for a normal subgroup N.

    This is the pullback of functionals on the quotient group along the
    canonical surjection; requires N normal so that the span is a Hopf
    subalgebra.
    """
    require_normal(G, normal_sub)
    H = algebra if algebra is not None else dual_group_algebra(G)
    cosets = left_cosets(G, normal_sub)
    rows = []
    labels = []
    for coset in cosets:
        row = [CYC_ZERO] * G.order
        for g in coset:
            row[g] = CYC_ONE
        rows.append(row)
        labels.append(f"c[{G.labels[coset[0]]}]")
    return HopfSubalgebra(H, rows, name=f"k^({G.name}/{normal_sub.describe()})", labels=labels)


def trivial_subalgebra(H):
    """The one-dimensional subalgebra spanned by the unit."""
    return HopfSubalgebra(H, (H.unit,), name="k1", labels=("1",))


@lru_cache(maxsize=None)
def builtin_group_algebra(name):
    return group_algebra(builtin_group(name))


@lru_cache(maxsize=None)
def builtin_dual_algebra(name):
    return dual_group_algebra(builtin_group(name))
