"""Characters of the corpus algebras and the exact multiplicity pairing.

Group algebras get their irreducible characters from the modular lifting
algorithm (simultaneous eigenvector splitting of the class-sum matrices
over a suitable prime field, then exact lifting into a cyclotomic field);
algebras whose basis consists of orthogonal idempotents get the dual-basis
functionals.  Both paths cover every algebra this package constructs,
including induced subalgebra and quotient structures.
"""

from __future__ import annotations

from .errors import DecompositionError, SplittingError, UnsupportedAlgebraError
from .groups import FiniteGroup
from .hopf import idempotent_integral
from .linalg import Echelon, matrix_kernel
from .scalars import (
    CYC_ONE,
    CYC_ZERO,
    Cyc,
    PrimeFieldElement,
    find_lifting_prime,
    root_of_unity_mod,
)


class Character:
    """A linear functional on a Hopf algebra, stored by its basis values.

    The product of two characters is the character of the tensor product
    module: (chi * psi)(b) sums chi (x) psi over the comultiplication of b.
    star() precomposes with the antipode (the dual character).
    """

    __slots__ = ("algebra", "values", "_hash")

    def __init__(self, algebra, values):
        values = tuple(values)
        if len(values) != algebra.dim:
            raise ValueError("value count must match the algebra dimension")
        self.algebra = algebra
        self.values = values
        self._hash = None

    def evaluate(self, coords):
        out = CYC_ZERO
        for c, v in zip(coords, self.values):
            if c and v:
                out = out + c * v
        return out

    @property
    def degree(self):
        return self.evaluate(self.algebra.unit)

    def degree_int(self):
        d = self.degree
        if not d.is_integer():
            raise DecompositionError(f"character degree {d} is not an integer")
        return d.to_integer()

    def __mul__(self, other):
        if not isinstance(other, Character) or other.algebra is not self.algebra:
            return NotImplemented
        H = self.algebra
        values = []
        for i in range(H.dim):
            acc = CYC_ZERO
            for (j, k), c in H.comult[i].items():
                a = self.values[j]
                if not a:
                    continue
                b = other.values[k]
                if b:
                    acc = acc + c * (a * b)
            values.append(acc)
        return Character(H, values)

    def __add__(self, other):
        if not isinstance(other, Character) or other.algebra is not self.algebra:
            return NotImplemented
        return Character(self.algebra, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if not isinstance(other, Character) or other.algebra is not self.algebra:
            return NotImplemented
        return Character(self.algebra, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, q):
        f = q if isinstance(q, Cyc) else Cyc.rational(q)
        return Character(self.algebra, tuple(f * v for v in self.values))

    def star(self):
        """The dual character: value at b is the value at S(b)."""
        H = self.algebra
        values = [CYC_ZERO] * H.dim
        for i in range(H.dim):
            acc = CYC_ZERO
            for j, c in H.antipode[i].items():
                vj = self.values[j]
                if vj:
                    acc = acc + c * vj
            values[i] = acc
        return Character(H, values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and other.algebra is self.algebra
            and other.values == self.values
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.algebra), self.values))
        return self._hash

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"Character({self.algebra.name}; {vals})"


def counit_character(H):
    return Character(H, H.counit)


def regular_character(H):
    """Trace of left multiplication; its value at the unit is the dimension."""
    return Character(H, tuple(H.left_mult_trace(i) for i in range(H.dim)))


def multiplicity(chi, psi, lam=None):
    """Exact multiplicity pairing (star(chi) * psi)(integral); a nonnegative integer.

    With psi the trivial character this is the value of chi at the
    idempotent integral.  Raises DecompositionError if the result is not a
    nonnegative rational integer (inconsistent inputs).
    """
    H = chi.algebra
    if psi.algebra is not H:
        raise ValueError("characters live on different algebras")
    if lam is None:
        lam = idempotent_integral(H)
    star_values = chi.star().values
    total = CYC_ZERO
    for i, li in enumerate(lam.coords):
        if not li:
            continue
        acc = CYC_ZERO
        for (j, k), c in H.comult[i].items():
            sv = star_values[j]
            if not sv:
                continue
            pv = psi.values[k]
            if pv:
                acc = acc + c * (sv * pv)
        if acc:
            total = total + li * acc
    if not total.is_rational():
        raise DecompositionError(f"multiplicity {total} is not rational")
    f = total.to_fraction()
    if f.denominator != 1 or f < 0:
        raise DecompositionError(f"multiplicity {f} is not a nonnegative integer")
    return int(f)


class IrrSet:
    """The full set of irreducible characters of one algebra, canonically ordered.

    Construction validates that degrees are positive integers, that the
    squared degrees sum to the dimension, and that the multiplicity pairing
    of the members is the identity matrix.
    """

    def __init__(self, algebra, characters, *, validate=True):
        self.algebra = algebra
        chars = sorted(characters, key=lambda c: (c.degree_int(), c.sort_key()))
        self.characters = tuple(chars)
        self.degrees = tuple(c.degree_int() for c in chars)
        self.integral = idempotent_integral(algebra)
        trivial = counit_character(algebra)
        try:
            self.trivial_index = self.characters.index(trivial)
        except ValueError:
            raise DecompositionError(f"{algebra.name}: trivial character missing from Irr") from None
        if validate:
            if any(d < 1 for d in self.degrees):
                raise DecompositionError(f"{algebra.name}: nonpositive character degree")
            if sum(d * d for d in self.degrees) != algebra.dim:
                raise DecompositionError(f"{algebra.name}: degree squares do not sum to the dimension")
            for i, ci in enumerate(self.characters):
                for j, cj in enumerate(self.characters):
                    m = multiplicity(ci, cj, self.integral)
                    if m != (1 if i == j else 0):
                        raise DecompositionError(
                            f"{algebra.name}: irreducibles not orthonormal at ({i},{j}): {m}"
                        )

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i):
        return self.characters[i]

    def index_of(self, char):
        return self.characters.index(char)

    def decompose(self, char):
        """Multiplicities over the irreducibles; verifies exact reconstruction."""
        if char.algebra is not self.algebra:
            raise ValueError("character lives on a different algebra")
        mults = tuple(multiplicity(char, c, self.integral) for c in self.characters)
        recon = [CYC_ZERO] * self.algebra.dim
        for m, c in zip(mults, self.characters):
            if not m:
                continue
            f = Cyc.rational(m)
            for i, v in enumerate(c.values):
                if v:
                    recon[i] = recon[i] + f * v
        if tuple(recon) != char.values:
            raise DecompositionError(
                f"{self.algebra.name}: functional does not decompose over the irreducibles"
            )
        return mults

    def assemble(self, mults):
        """The character with the given multiplicities."""
        values = [CYC_ZERO] * self.algebra.dim
        for m, c in zip(mults, self.characters):
            if not m:
                continue
            f = Cyc.rational(m)
            for i, v in enumerate(c.values):
                if v:
                    values[i] = values[i] + f * v
        return Character(self.algebra, values)


# -- the modular character-table algorithm -------------------------------------


def _class_matrices(G):
    """Class-sum structure constants a[i][j][k] with rows/columns over classes."""
    classes = G.conjugacy_classes()
    r = len(classes)
    class_of = G.class_index_map()
    reps = [cls[0] for cls in classes]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, zk in enumerate(reps):
        for i, cls in enumerate(classes):
            for x in cls:
                y = G.cayley[G.inverse[x]][zk]
                a[i][class_of[y]][k] += 1
    return classes, reps, class_of, a


def _split_eigenspaces(a, r, p):
    """Common one-dimensional eigenspaces of the class matrices over F_p."""
    one = PrimeFieldElement(p, 1)
    zero = PrimeFieldElement(p, 0)

    def basis_vec(t):
        v = [zero] * r
        v[t] = one
        return v

    spaces = [[basis_vec(t) for t in range(r)]]
    for i in range(r):
        if all(len(s) == 1 for s in spaces):
            break
        mat = [[PrimeFieldElement(p, a[i][j][k]) for k in range(r)] for j in range(r)]
        new_spaces = []
        for space in spaces:
            m = len(space)
            if m == 1:
                new_spaces.append(space)
                continue
            ech = Echelon(r, one, track=True)
            for v in space:
                ech.push(v)
            amat = []
            for t in range(m):
                vt = space[t]
                img = [zero] * r
                for j in range(r):
                    row = mat[j]
                    acc = zero
                    for k in range(r):
                        if row[k] and vt[k]:
                            acc = acc + row[k] * vt[k]
                    img[j] = acc
                co = ech.coordinates(img)
                if co is None:
                    raise SplittingError("class matrix does not preserve an eigenspace")
                amat.append(co)
            # amat[t][s]: coefficient of space[s] in M*space[t]; transpose acts on coords
            found = 0
            for lam in range(p):
                rows = []
                for s in range(m):
                    row = [amat[t][s] for t in range(m)]
                    row[s] = row[s] - PrimeFieldElement(p, lam)
                    rows.append(row)
                kern = matrix_kernel(rows, m, one)
                if not kern:
                    continue
                eigvecs = []
                for x in kern:
                    vec = [zero] * r
                    for t, xt in enumerate(x):
                        if xt:
                            for j in range(r):
                                if space[t][j]:
                                    vec[j] = vec[j] + xt * space[t][j]
                    eigvecs.append(vec)
                # one eigenvalue, one invariant subspace: later matrices refine it
                new_spaces.append(eigvecs)
                found += len(eigvecs)
                if found == m:
                    break
            if found != m:
                raise SplittingError("class matrix is not diagonalizable over the lifting prime")
        spaces = new_spaces
    if any(len(s) != 1 for s in spaces):
        raise SplittingError("common eigenspaces did not split to dimension one")
    if len(spaces) != r:
        raise SplittingError(f"expected {r} eigenvectors, found {len(spaces)}")
    return [s[0] for s in spaces]


def dixon_character_table(G):
    """Exact irreducible character values of k[G], one tuple per group element.

    The procedure: integer class-sum structure constants; a prime p with
    p = 1 mod exp(G), p > 2*ceil(sqrt(|G|)); simultaneous eigenvector
    splitting over F_p; degree recovery by the orthogonality relation; root
    multiplicity counts via the discrete Fourier sum over the power map,
    lifted to exact cyclotomic integers.
    """
    classes, reps, class_of, a = _class_matrices(G)
    r = len(classes)
    n = G.order
    e = G.exponent()
    p = find_lifting_prime(e, n)
    vectors = _split_eigenspaces(a, r, p)

    inv_class = [class_of[G.inverse[rep]] for rep in reps]
    class_sizes = [len(cls) for cls in classes]

    pm = [[0] * e for _ in range(r)]
    for k, rep in enumerate(reps):
        x = 0
        for t in range(e):
            pm[k][t] = class_of[x]
            x = G.cayley[x][rep]

    z = root_of_unity_mod(p, e)
    zinv = pow(z, p - 2, p)
    einv = pow(e, p - 2, p) if e > 1 else 1

    rows = []
    half = p // 2
    for vec in vectors:
        w = [x.v for x in vec]
        if w[0] == 0:
            raise SplittingError("eigenvector vanishes on the identity class")
        w0inv = pow(w[0], p - 2, p)
        w = [(x * w0inv) % p for x in w]
        s = 0
        for k in range(r):
            s = (s + w[k] * w[inv_class[k]] * pow(class_sizes[k], p - 2, p)) % p
        if s == 0:
            raise SplittingError("degree normalization degenerate")
        d2 = (n * pow(s, p - 2, p)) % p
        deg = None
        for t in range(1, half + 1):
            if (t * t) % p == d2:
                deg = t
                break
        if deg is None:
            raise SplittingError("character degree has no square root mod p")
        chibar = [(deg * w[k] * pow(class_sizes[k], p - 2, p)) % p for k in range(r)]
        values = []
        for k in range(r):
            weights = {}
            total = 0
            for j in range(e):
                mj = 0
                for t in range(e):
                    mj = (mj + chibar[pm[k][t]] * pow(zinv, j * t, p)) % p
                mj = (mj * einv) % p
                if mj > deg:
                    raise SplittingError("lifted root multiplicity out of range")
                total += mj
                if mj:
                    weights[j] = mj
            if total != deg:
                raise SplittingError("root multiplicities do not sum to the degree")
            values.append(Cyc.from_root_powers(e, weights) if weights else CYC_ZERO)
        if values[0] != Cyc.rational(deg):
            raise SplittingError("lifted degree mismatch on the identity class")
        rows.append(values)

    if sum(row[0].to_integer() ** 2 for row in rows) != n:
        raise SplittingError("degree squares do not sum to the group order")

    tables = []
    for row in rows:
        tables.append(tuple(row[class_of[g]] for g in range(n)))
    return tables


# -- dispatch over the supported basis shapes ----------------------------------


def _is_orthogonal_idempotent_basis(H):
    d = H.dim
    one = CYC_ONE
    for i in range(d):
        for j in range(d):
            cell = H.mult[i][j]
            if i == j:
                if cell != {i: one}:
                    return False
            elif cell:
                return False
    return all(u == one for u in H.unit)


def _extract_group_like(H):
    """Recover a FiniteGroup from a basis of grouplike elements, or None."""
    d = H.dim
    one = CYC_ONE
    for i in range(d):
        if H.comult[i] != {(i, i): one} or H.counit[i] != one:
            return None
    unit_idx = None
    for i, u in enumerate(H.unit):
        if u == one and unit_idx is None:
            unit_idx = i
        elif u:
            return None
    if unit_idx is None:
        return None
    cayley_raw = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            cell = H.mult[i][j]
            if len(cell) != 1:
                return None
            ((k, c),) = cell.items()
            if c != one:
                return None
            cayley_raw[i][j] = k
    order_map = [unit_idx] + [i for i in range(d) if i != unit_idx]
    pos = {old: new for new, old in enumerate(order_map)}
    cayley = [[pos[cayley_raw[order_map[i]][order_map[j]]] for j in range(d)] for i in range(d)]
    labels = [H.labels[i] for i in order_map]
    group = FiniteGroup(labels, cayley, name=f"basis({H.name})")
    return group, order_map


def irreducible_characters(H):
    """The IrrSet of a corpus algebra (grouplike basis or idempotent basis)."""
    if H._irr is not None:
        return H._irr
    if _is_orthogonal_idempotent_basis(H):
        chars = [Character(H, H.basis_vector(i)) for i in range(H.dim)]
    else:
        extracted = _extract_group_like(H)
        if extracted is None:
            raise UnsupportedAlgebraError(
                f"{H.name}: characters implemented only for grouplike or idempotent bases"
            )
        group, order_map = extracted
        chars = []
        for row in dixon_character_table(group):
            values = [CYC_ZERO] * H.dim
            for new_i, old_i in enumerate(order_map):
                values[old_i] = row[new_i]
            chars.append(Character(H, values))
    irr = IrrSet(H, chars)
    H._irr = irr
    return irr


def irr_group_algebra(G, algebra=None):
    """Irreducible characters of k[G]."""
    from .algebras import group_algebra

    H = algebra if algebra is not None else group_algebra(G)
    return irreducible_characters(H)


def irr_dual_group_algebra(G, algebra=None):
    """Irreducible characters of k^G: the dual-basis functionals."""
    from .algebras import dual_group_algebra

    H = algebra if algebra is not None else dual_group_algebra(G)
    return irreducible_characters(H)


def character_table_dict(irr):
    """Serializable exact character table, rows in the canonical order."""
    return {
        "algebra": irr.algebra.name,
        "labels": list(irr.algebra.labels),
        "characters": [
            {"degree": d, "values": [v.to_obj() for v in c.values]}
            for d, c in zip(irr.degrees, irr.characters)
        ],
    }
