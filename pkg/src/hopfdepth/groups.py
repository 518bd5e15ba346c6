"""Finite permutation groups: closure, Cayley tables, subgroups, classes.

Elements are indexed 0..n-1 with the identity at index 0; every listing
(discovery order, subgroup enumeration, conjugacy classes, cosets) is
deterministic so that downstream reports are reproducible byte for byte.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from math import lcm
from pathlib import Path

from .errors import GroupError, NotNormalError

Perm = tuple


def perm_identity(degree):
    return tuple(range(degree))


def perm_compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def parse_permutation(text, degree):
    """Parse cycle notation like "(1 2 3)(4 5)" or compact "(123)" into a permutation.

    Points are 1-based in the notation.  An empty string or "()" is the identity.
    """
    text = text.strip()
    mapping = {}
    if text in ("", "()"):
        return perm_identity(degree)
    if not re.fullmatch(r"(\([^()]*\))+", text):
        raise GroupError(f"bad cycle notation: {text!r}")
    for cyc_body in re.findall(r"\(([^()]*)\)", text):
        body = cyc_body.strip()
        if not body:
            continue
        if re.search(r"[ ,]", body):
            points = [int(tok) for tok in re.split(r"[ ,]+", body)]
        else:
            if not body.isdigit():
                raise GroupError(f"bad cycle: ({body})")
            points = [int(ch) for ch in body]
        if len(points) < 2:
            continue
        if any(x < 1 or x > degree for x in points):
            raise GroupError(f"cycle point out of range 1..{degree}: ({body})")
        if len(set(points)) != len(points):
            raise GroupError(f"repeated point in cycle: ({body})")
        for a, b in zip(points, points[1:] + points[:1]):
            if a - 1 in mapping:
                raise GroupError(f"point {a} moved by two cycles in {text!r}")
            mapping[a - 1] = b - 1
    out = list(range(degree))
    for a, b in mapping.items():
        out[a] = b
    perm = tuple(out)
    if sorted(perm) != list(range(degree)):
        raise GroupError(f"not a permutation: {text!r}")
    return perm


def perm_to_cycles(p):
    """Cycle-notation string, 1-based, smallest point first; identity is "()"."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        cycles.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(cycles) if cycles else "()"


class FiniteGroup:
    """A finite group given by its Cayley table; identity is element 0."""

    def __init__(self, labels, cayley, *, name="G", perms=None, generator_indices=None, parent_edges=None):
        self.name = name
        self.labels = tuple(labels)
        self.order = len(labels)
        self.cayley = tuple(tuple(row) for row in cayley)
        self.perms = tuple(perms) if perms is not None else None
        self.generator_indices = tuple(generator_indices) if generator_indices is not None else None
        self.parent_edges = tuple(parent_edges) if parent_edges is not None else None
        self._validate()
        self.inverse = tuple(self._find_inverse(i) for i in range(self.order))
        self._classes = None

    def _validate(self):
        n = self.order
        if len(self.cayley) != n or any(len(row) != n for row in self.cayley):
            raise GroupError("Cayley table must be square and match the label count")
        for i in range(n):
            if sorted(self.cayley[i]) != list(range(n)):
                raise GroupError(f"Cayley row {i} is not a permutation of the indices")
            col = sorted(self.cayley[j][i] for j in range(n))
            if col != list(range(n)):
                raise GroupError(f"Cayley column {i} is not a permutation of the indices")
        for j in range(n):
            if self.cayley[0][j] != j or self.cayley[j][0] != j:
                raise GroupError("element 0 is not an identity")
        if n <= 64:
            c = self.cayley
            for a in range(n):
                for b in range(n):
                    ab = c[a][b]
                    for d in range(n):
                        if c[ab][d] != c[a][c[b][d]]:
                            raise GroupError("Cayley table is not associative")

    def _find_inverse(self, i):
        for j in range(self.order):
            if self.cayley[i][j] == 0 and self.cayley[j][i] == 0:
                return j
        raise GroupError(f"element {i} has no inverse")

    def mult(self, i, j):
        return self.cayley[i][j]

    def power(self, i, k):
        out = 0
        base = i
        if k < 0:
            base, k = self.inverse[i], -k
        while k:
            if k & 1:
                out = self.cayley[out][base]
            base = self.cayley[base][base]
            k >>= 1
        return out

    def element_order(self, i):
        k = 1
        x = i
        while x != 0:
            x = self.cayley[x][i]
            k += 1
        return k

    def exponent(self):
        return lcm(*(self.element_order(i) for i in range(self.order)))

    def is_abelian(self):
        c = self.cayley
        return all(c[i][j] == c[j][i] for i in range(self.order) for j in range(i))

    def conjugacy_classes(self):
        """Orbits of conjugation, each sorted; ordered by smallest member (identity first)."""
        if self._classes is not None:
            return self._classes
        n = self.order
        seen = [False] * n
        classes = []
        for x in range(n):
            if seen[x]:
                continue
            orbit = set()
            for g in range(n):
                y = self.cayley[self.cayley[g][x]][self.inverse[g]]
                orbit.add(y)
            orbit = tuple(sorted(orbit))
            for y in orbit:
                seen[y] = True
            classes.append(orbit)
        self._classes = tuple(classes)
        return self._classes

    def class_index_map(self):
        out = [0] * self.order
        for ci, cls in enumerate(self.conjugacy_classes()):
            for x in cls:
                out[x] = ci
        return tuple(out)

    def close(self, seed):
        """Closure of a set of element indices under multiplication."""
        elems = {0}
        frontier = [0]
        gens = sorted(set(seed))
        for g in gens:
            if g not in elems:
                elems.add(g)
                frontier.append(g)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.cayley[a][g]
                    if b not in elems:
                        elems.add(b)
                        nxt.append(b)
                    b = self.cayley[g][a]
                    if b not in elems:
                        elems.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(elems)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def group_from_generators(name, degree, generators, cap=1024):
    """BFS closure of permutation generators; identity first, discovery order after."""
    gens = []
    for g in generators:
        if isinstance(g, str):
            g = parse_permutation(g, degree)
        g = tuple(g)
        if sorted(g) != list(range(degree)):
            raise GroupError(f"generator is not a permutation of 0..{degree - 1}: {g}")
        gens.append(g)
    ident = perm_identity(degree)
    elems = [ident]
    index = {ident: 0}
    edges = [None]
    queue = [0]
    while queue:
        nxt = []
        for cur in queue:
            for gpos, g in enumerate(gens):
                new = perm_compose(elems[cur], g)
                if new not in index:
                    index[new] = len(elems)
                    elems.append(new)
                    edges.append((cur, gpos))
                    nxt.append(index[new])
                    if len(elems) > cap:
                        raise GroupError(f"closure exceeds the order cap {cap}")
        queue = nxt
    n = len(elems)
    cayley = [[index[perm_compose(elems[i], elems[j])] for j in range(n)] for i in range(n)]
    labels = [perm_to_cycles(p) for p in elems]
    gen_indices = [index[g] for g in gens]
    return FiniteGroup(
        labels,
        cayley,
        name=name,
        perms=elems,
        generator_indices=gen_indices,
        parent_edges=edges,
    )


class Subgroup:
    """A subgroup as a sorted tuple of element indices of the parent group."""

    def __init__(self, parent, elements):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        if 0 not in self.elements:
            raise GroupError("subgroup must contain the identity")
        eset = set(self.elements)
        for a in self.elements:
            if parent.inverse[a] not in eset:
                raise GroupError("subgroup not closed under inverses")
            for b in self.elements:
                if parent.cayley[a][b] not in eset:
                    raise GroupError("subgroup not closed under products")
        self.order = len(self.elements)

    def is_normal(self):
        G = self.parent
        eset = set(self.elements)
        for g in range(G.order):
            for s in self.elements:
                if G.cayley[G.cayley[g][s]][G.inverse[g]] not in eset:
                    return False
        return True

    def generating_set(self):
        """Greedy small generating set (first elements, ascending) for display."""
        G = self.parent
        target = set(self.elements)
        gens = []
        closure = {0}
        for e in self.elements:
            if e in closure:
                continue
            gens.append(e)
            closure = set(G.close(gens))
            if closure == target:
                break
        return tuple(gens)

    def describe(self):
        if self.order == 1:
            return "{e}"
        gens = self.generating_set()
        return "<" + ",".join(self.parent.labels[g] for g in gens) + ">"

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __repr__(self):
        return f"Subgroup({self.parent.name}, {self.describe()}, order={self.order})"


def trivial_subgroup(G):
    return Subgroup(G, (0,))


def full_subgroup(G):
    return Subgroup(G, range(G.order))


def subgroup_from_generators(G, gen_indices):
    return Subgroup(G, G.close(gen_indices))


def subgroup_from_permutations(G, perms):
    if G.perms is None:
        raise GroupError(f"{G.name} has no permutation realization; select subgroups by index")
    lookup = {p: i for i, p in enumerate(G.perms)}
    idxs = []
    for p in perms:
        if p not in lookup:
            raise GroupError(f"permutation {perm_to_cycles(p)} is not an element of {G.name}")
        idxs.append(lookup[p])
    return subgroup_from_generators(G, idxs)


def enumerate_subgroups(G, cap=24):
    """All subgroups by cyclic extension; sorted by (order, element tuple)."""
    if G.order > cap:
        raise GroupError(f"subgroup enumeration capped at order {cap} (|G| = {G.order})")
    found = {frozenset([0])}
    work = [frozenset([0])]
    for g in range(1, G.order):
        c = G.close([g])
        if c not in found:
            found.add(c)
            work.append(c)
    while work:
        cur = work.pop()
        for g in range(1, G.order):
            if g in cur:
                continue
            ext = G.close(sorted(cur) + [g])
            if ext not in found:
                found.add(ext)
                work.append(ext)
    subs = [Subgroup(G, sorted(s)) for s in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


def left_cosets(G, sub):
    """Left cosets of the subgroup, each sorted; ordered by smallest member."""
    eset = set(sub.elements)
    covered = set()
    cosets = []
    for g in range(G.order):
        if g in covered:
            continue
        coset = tuple(sorted(G.cayley[g][s] for s in eset))
        covered.update(coset)
        cosets.append(coset)
    return cosets


def normal_subgroups(G, cap=24):
    return [s for s in enumerate_subgroups(G, cap=cap) if s.is_normal()]


# -- built-in corpus groups --------------------------------------------------

BUILTIN_GROUPS = {
    "C2": (2, ["(1 2)"]),
    "C3": (3, ["(1 2 3)"]),
    "C4": (4, ["(1 2 3 4)"]),
    "C6": (6, ["(1 2 3 4 5 6)"]),
    "C2xC2": (4, ["(1 2)", "(3 4)"]),
    "S3": (3, ["(1 2)", "(1 2 3)"]),
    "D4": (4, ["(1 2 3 4)", "(1 3)"]),
    # left-regular action of the quaternion group on {1,i,j,k,-1,-i,-j,-k}
    "Q8": (8, ["(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"]),
    "A4": (4, ["(1 2 3)", "(1 2)(3 4)"]),
    "S4": (4, ["(1 2)", "(1 2 3 4)"]),
}

_ALIASES = {"C2×C2": "C2xC2", "V4": "C2xC2", "K4": "C2xC2"}


@lru_cache(maxsize=None)
def builtin_group(name):
    key = _ALIASES.get(name, name)
    if key not in BUILTIN_GROUPS:
        raise GroupError(f"unknown group {name!r}; built-ins: {', '.join(BUILTIN_GROUPS)}")
    degree, gens = BUILTIN_GROUPS[key]
    return group_from_generators(key, degree, gens)


def group_from_data(data):
    """Build a group from a loaded input file: generator form or Cayley form."""
    if not isinstance(data, dict):
        raise GroupError("group file must contain a JSON object")
    name = data.get("name", "G")
    if "generators" in data:
        degree = data.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise GroupError("generator form needs a positive integer 'degree'")
        gens = []
        for arr in data["generators"]:
            if isinstance(arr, str):
                gens.append(parse_permutation(arr, degree))
                continue
            if not isinstance(arr, list) or sorted(arr) != list(range(1, degree + 1)):
                raise GroupError(f"generator {arr!r} is not a 1-based image array of length {degree}")
            gens.append(tuple(x - 1 for x in arr))
        return group_from_generators(name, degree, gens)
    if "cayley" in data:
        table = data["cayley"]
        n = len(table)
        labels = data.get("labels", [f"g{i}" for i in range(n)])
        if len(labels) != n:
            raise GroupError("label count must match the Cayley table size")
        return FiniteGroup(labels, table, name=name)
    raise GroupError("group file needs either 'generators' or 'cayley'")


def load_group_file(path):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GroupError(f"cannot read group file {path}: {exc}") from exc
    return group_from_data(data)


def resolve_group(ref):
    """A built-in name, or a path to a group input file."""
    key = _ALIASES.get(ref, ref)
    if key in BUILTIN_GROUPS:
        return builtin_group(key)
    if Path(ref).exists():
        return load_group_file(ref)
    raise GroupError(f"unknown group {ref!r} (not a built-in, not a file)")


def require_normal(G, sub):
    if not sub.is_normal():
        raise NotNormalError(f"{sub.describe()} is not normal in {G.name}")
    return sub
