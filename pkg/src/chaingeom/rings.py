"""Finite unital rings presented as explicit matrix subalgebras over a field.

A ring is stored as a K-basis of d x d matrices whose span is closed under
multiplication and contains the identity.  Elements are dense int indices
into the span, enumerated in lexicographic order of their coefficient
tuples; index 0 is always zero.  Addition and multiplication are table
lookups built at construction, which also serves as the exhaustive closure
check.  Units are exactly the elements invertible as K-matrices (the
inverse of an element of a finite subalgebra lies in the subalgebra; the
membership is checked anyway).
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import CapExceeded, ChainGeomError
from .fields import FiniteField, homomorphisms

DEFAULT_RING_CAP = 256


class FiniteRing:
    def __init__(self, K: FiniteField, d: int, basis, kind: str, descriptor: str,
                 cap: int = DEFAULT_RING_CAP):
        m = len(basis)
        size = K.q ** m
        if size > cap:
            raise CapExceeded(f"ring size {size} exceeds cap {cap}")
        flat = [tuple(itertools.chain.from_iterable(b)) for b in basis]
        if linalg.rank(K, flat) != m:
            raise ChainGeomError("ring basis is not linearly independent")
        self.K = K
        self.d = d
        self.dim = m
        self.basis = tuple(tuple(tuple(row) for row in b) for b in basis)
        self.kind = kind
        self.descriptor = descriptor
        self.size = size

        add, mul = K.add, K.mul
        elements = []
        for coeffs in itertools.product(range(K.q), repeat=m):
            mat = [[0] * d for _ in range(d)]
            for c, b in zip(coeffs, self.basis):
                if c:
                    for i in range(d):
                        brow = b[i]
                        mrow = mat[i]
                        for j in range(d):
                            if brow[j]:
                                mrow[j] = add(mrow[j], mul(c, brow[j]))
            elements.append(tuple(tuple(row) for row in mat))
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(elements)}
        if len(self.index) != size:
            raise ChainGeomError("ring basis span collapsed (dependent basis?)")

        ident = linalg.identity(d)
        if ident not in self.index:
            raise ChainGeomError("identity matrix does not lie in the ring")
        self.one = self.index[ident]
        self.zero = 0

        idx = self.index
        n = size
        addtab = [0] * (n * n)
        multab = [0] * (n * n)
        for a in range(n):
            ma = elements[a]
            arow = a * n
            for b in range(n):
                mb = elements[b]
                s = tuple(tuple(add(x, y) for x, y in zip(ra, rb))
                          for ra, rb in zip(ma, mb))
                p = linalg.mat_mul(K, ma, mb)
                if p not in idx:
                    raise ChainGeomError("ring basis span is not multiplicatively closed")
                addtab[arow + b] = idx[s]
                multab[arow + b] = idx[p]
        self._add = addtab
        self._mul = multab
        self._neg = tuple(idx[linalg.mat_neg(K, elements[a])] for a in range(n))

        units = []
        invtab = {}
        for a in range(n):
            inv_mat = linalg.inverse(K, elements[a])
            if inv_mat is not None and inv_mat in idx:
                units.append(a)
                invtab[a] = idx[inv_mat]
        self._units = tuple(units)
        self._inv = invtab

        one = self.one
        if any(self._mul[one * n + a] != a or self._mul[a * n + one] != a
               for a in range(n)):
            raise ChainGeomError("identity element is not two-sided")

    # -- element operations --------------------------------------------

    def mat(self, i):
        return self.elements[i]

    def add(self, a, b):
        return self._add[a * self.size + b]

    def mul(self, a, b):
        return self._mul[a * self.size + b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a * self.size + self._neg[b]]

    def is_unit(self, a):
        return a in self._inv

    def units(self):
        return self._units

    def inv(self, a):
        try:
            return self._inv[a]
        except KeyError:
            raise ZeroDivisionError(f"element {a} of {self.descriptor} is not a unit")

    def from_matrix(self, mat):
        return self.index[tuple(tuple(row) for row in mat)]

    def __repr__(self):
        return f"FiniteRing({self.descriptor})"


# -- constructors --------------------------------------------------------

_RING_CACHE = {}


def _cached(key, builder):
    ring = _RING_CACHE.get(key)
    if ring is None:
        ring = builder()
        _RING_CACHE[key] = ring
    return ring


def matrix_ring(n: int, K: FiniteField, cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """Full matrix ring M(n, K) with the matrix units as basis."""
    def build():
        basis = []
        for i in range(n):
            for j in range(n):
                b = [[0] * n for _ in range(n)]
                b[i][j] = 1
                basis.append(b)
        return FiniteRing(K, n, basis, "matrix_ring", f"m{n}:{K.name}", cap=cap)
    return _cached(("m", n, K.p, K.n, cap), build)


def dual_numbers(K: FiniteField, cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """K + K*eps with eps^2 = 0, realised as [[a, b], [0, a]]."""
    def build():
        basis = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
        return FiniteRing(K, 2, basis, "dual_numbers", f"dual:{K.name}", cap=cap)
    return _cached(("dual", K.p, K.n, cap), build)


def product_ring(K: FiniteField, m: int, cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """K^m with componentwise operations, realised as diagonal matrices."""
    if m < 1:
        raise ChainGeomError("product ring needs at least one factor")
    def build():
        basis = []
        for i in range(m):
            b = [[0] * m for _ in range(m)]
            b[i][i] = 1
            basis.append(b)
        return FiniteRing(K, m, basis, "product_ring", f"prod{m}:{K.name}", cap=cap)
    return _cached(("prod", m, K.p, K.n, cap), build)


def upper_triangular(K: FiniteField, cap: int = DEFAULT_RING_CAP) -> FiniteRing:
    """Upper triangular 2x2 matrices over K."""
    def build():
        basis = [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [0, 1]]]
        return FiniteRing(K, 2, basis, "upper_triangular", f"ut2:{K.name}", cap=cap)
    return _cached(("ut2", K.p, K.n, cap), build)


# -- subfield embeddings ---------------------------------------------------

class SubfieldEmbedding:
    """A verified ring monomorphism F -> R with image containing 1."""

    def __init__(self, F: FiniteField, ring: FiniteRing, mode: str, table):
        self.F = F
        self.ring = ring
        self.mode = mode
        self.table = tuple(table)
        self.image = frozenset(self.table)
        self._verify()

    def __call__(self, x):
        return self.table[x]

    def _verify(self):
        F, R, t = self.F, self.ring, self.table
        if len(set(t)) != F.q:
            raise ChainGeomError("embedding is not injective")
        if t[0] != R.zero or t[1] != R.one:
            raise ChainGeomError("embedding must send 0 to 0 and 1 to the identity")
        for a in F.elements():
            ia = t[a]
            for b in F.elements():
                if t[F.add(a, b)] != R.add(ia, t[b]):
                    raise ChainGeomError("embedding does not preserve addition")
                if t[F.mul(a, b)] != R.mul(ia, t[b]):
                    raise ChainGeomError("embedding does not preserve multiplication")

    @property
    def key(self):
        return (self.F.name, self.mode)

    def __repr__(self):
        return f"SubfieldEmbedding({self.F.name} -> {self.ring.descriptor}, {self.mode})"


def embed_subfield(F: FiniteField, ring: FiniteRing, mode: str) -> SubfieldEmbedding:
    """Scalar mode embeds F = K as scalar matrices; regular mode embeds an
    extension of degree d into M(d, K) through the companion matrix of the
    minimal polynomial of a generator."""
    key = ("emb", ring.descriptor, F.p, F.n, mode)
    cached = _RING_CACHE.get(key)
    if cached is not None:
        return cached

    K = ring.K
    if mode == "scalar":
        if F != K:
            raise ChainGeomError("scalar embedding requires the coefficient field itself")
        table = []
        for x in F.elements():
            mat = tuple(tuple(x if i == j else 0 for j in range(ring.d))
                        for i in range(ring.d))
            if mat not in ring.index:
                raise ChainGeomError("scalar matrices do not lie in the ring")
            table.append(ring.index[mat])
        emb = SubfieldEmbedding(F, ring, mode, table)
    elif mode == "regular":
        if ring.kind != "matrix_ring":
            raise ChainGeomError("regular embedding requires a full matrix ring")
        d = ring.d
        if F.p != K.p or F.n != K.n * d:
            raise ChainGeomError(
                f"regular embedding needs [F:K] = {d}; got {F.name} over {K.name}")
        emb = SubfieldEmbedding(F, ring, mode, _regular_table(F, ring))
    else:
        raise ChainGeomError(f"unknown embedding mode {mode!r}")
    _RING_CACHE[key] = emb
    return emb


def _regular_table(F, ring):
    """Companion-matrix embedding of F into M(d, K) for [F:K] = d."""
    K = ring.K
    d = ring.d
    incl = homomorphisms(K, F)[0]  # deterministic choice of K inside F
    g = F.generator
    # minimal polynomial of g over incl(K): find the first linear relation
    # among 1, g, g^2, ... with coefficients in incl(K)
    sub = [incl(c) for c in K.elements()]
    powers = [1]
    for _ in range(d):
        powers.append(F.mul(powers[-1], g))
    # solve powers[d] = -(c_0*1 + ... + c_{d-1} g^{d-1}) with c_i in incl(K):
    # brute force over K^d is exact and tiny at this scale
    minpoly = None
    for coeffs in itertools.product(range(K.q), repeat=d):
        acc = powers[d]
        for i, c in enumerate(coeffs):
            acc = F.add(acc, F.mul(sub[c], powers[i]))
        if acc == 0:
            minpoly = coeffs  # g^d + sum c_i g^i = 0
            break
    if minpoly is None:
        raise ChainGeomError("no degree-d relation for the field generator")

    # companion matrix acting on row vectors from the right: e_i -> e_{i+1}
    comp = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        comp[i][i + 1] = 1
    for j in range(d):
        comp[d - 1][j] = K.neg(minpoly[j])
    comp_idx = ring.from_matrix(comp)

    # coordinates of every element of F in the basis 1, g, ..., g^{d-1}
    # over incl(K); build by enumerating all combinations (a bijection)
    table = [None] * F.q
    ident = ring.one
    gpow_mats = [ident]
    for _ in range(d - 1):
        gpow_mats.append(ring.mul(gpow_mats[-1], comp_idx))
    for coeffs in itertools.product(range(K.q), repeat=d):
        val = 0
        mat_acc = ring.zero
        for i, c in enumerate(coeffs):
            if c:
                val = F.add(val, F.mul(sub[c], powers[i]))
                scal = ring.from_matrix(
                    tuple(tuple(c if r == s else 0 for s in range(d)) for r in range(d)))
                mat_acc = ring.add(mat_acc, ring.mul(scal, gpow_mats[i]))
        table[val] = mat_acc
    if any(t is None for t in table):
        raise ChainGeomError("powers of the generator do not span the field")
    return table


# -- group / centraliser machinery ----------------------------------------

def is_normal_subgroup(emb: SubfieldEmbedding) -> bool:
    """Whether the embedded F* is normal in R* (full conjugation sweep)."""
    ring = emb.ring
    image_units = [emb(x) for x in emb.F.elements() if x != 0]
    image_set = set(image_units)
    for r in ring.units():
        ri = ring.inv(r)
        for f in image_units:
            if ring.mul(ring.mul(r, f), ri) not in image_set:
                return False
    return True


def centralizer(elems, ring: FiniteRing):
    """All ring elements commuting with every element of ``elems``."""
    elems = tuple(elems)
    out = []
    for r in range(ring.size):
        if all(ring.mul(r, s) == ring.mul(s, r) for s in elems):
            out.append(r)
    return tuple(out)


def centre(ring: FiniteRing):
    return centralizer(range(ring.size), ring)


def has_centralizing_basis(emb: SubfieldEmbedding) -> bool:
    """Whether R has an F-basis (as a left F-space via the embedding) of
    elements commuting with the embedded field, equivalently whether the
    F-span of the centraliser of the image is all of R."""
    ring = emb.ring
    cent = centralizer([emb(x) for x in emb.F.elements()], ring)
    span = {ring.zero}
    for z in cent:
        if z in span:
            continue
        new = set()
        for s in span:
            for f in emb.F.elements():
                new.add(ring.add(s, ring.mul(emb(f), z)))
        span = new
        if len(span) == ring.size:
            return True
    return len(span) == ring.size


# -- 2x2 matrices over a ring ----------------------------------------------

def rmat_identity(ring):
    return ((ring.one, ring.zero), (ring.zero, ring.one))


def rmat_mul(ring, G, H):
    add, mul = ring.add, ring.mul
    return tuple(
        tuple(add(mul(G[i][0], H[0][j]), mul(G[i][1], H[1][j])) for j in range(2))
        for i in range(2))


def rmat_flatten(ring, G):
    """Flatten a 2x2 matrix over the ring to a 2d x 2d matrix over K."""
    d = ring.d
    rows = []
    for bi in range(2):
        a = ring.mat(G[bi][0])
        b = ring.mat(G[bi][1])
        for r in range(d):
            rows.append(a[r] + b[r])
    return tuple(rows)


def rmat_unflatten(ring, M):
    d = ring.d
    out = []
    for bi in range(2):
        row = []
        for bj in range(2):
            block = tuple(tuple(M[bi * d + r][bj * d + c] for c in range(d))
                          for r in range(d))
            if block not in ring.index:
                return None
            row.append(ring.index[block])
        out.append(tuple(row))
    return tuple(out)


def rmat_is_invertible(ring, G):
    return linalg.rank(ring.K, rmat_flatten(ring, G)) == 2 * ring.d


def rmat_inverse(ring, G):
    inv = linalg.inverse(ring.K, rmat_flatten(ring, G))
    if inv is None:
        raise ChainGeomError("ring matrix is not invertible")
    out = rmat_unflatten(ring, inv)
    if out is None:
        raise ChainGeomError("inverse left the ring (broken subalgebra)")
    return out


def gl2_generators(ring: FiniteRing):
    """Elementary transvections for every ring element plus one-sided
    diagonal unit matrices: a generating set for GL2 over a finite ring.
    Contains the identity (transvection at 0)."""
    one, zero = ring.one, ring.zero
    gens = []
    for r in range(ring.size):
        gens.append(((one, r), (zero, one)))
    for r in range(ring.size):
        gens.append(((one, zero), (r, one)))
    for u in ring.units():
        gens.append(((u, zero), (zero, one)))
    for u in ring.units():
        gens.append(((one, zero), (zero, u)))
    return tuple(gens)


def gl2_closure_size(ring: FiniteRing, limit: int = 10 ** 6) -> int:
    """Size of the group generated by gl2_generators, by breadth-first
    closure.  Exists as an explicit cross-check for small rings."""
    gens = gl2_generators(ring)
    seen = {rmat_identity(ring)}
    frontier = [rmat_identity(ring)]
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                gh = rmat_mul(ring, g, h)
                if gh not in seen:
                    seen.add(gh)
                    new.append(gh)
                    if len(seen) > limit:
                        raise CapExceeded("GL2 closure exceeded limit")
        frontier = new
    return len(seen)


def count_invertible_rmats(ring: FiniteRing) -> int:
    """Direct enumeration of invertible 2x2 matrices over the ring."""
    count = 0
    n = ring.size
    for g00 in range(n):
        for g01 in range(n):
            for g10 in range(n):
                for g11 in range(n):
                    if rmat_is_invertible(ring, ((g00, g01), (g10, g11))):
                        count += 1
    return count
