"""Exact arithmetic for small finite fields GF(p^n).

Field elements are plain ints in ``range(p**n)``.  The int encodes the
coefficient vector of the polynomial representation in base p,
little-endian: ``e = sum(c[i] * p**i)``, so the prime subfield is just
``0..p-1``.  All arithmetic is table lookup; the tables are built once at
construction from polynomial arithmetic modulo a deterministically chosen
irreducible polynomial (the lexicographically least irreducible monic,
compared on the coefficient vector in descending-power order).
"""

from __future__ import annotations

import functools
import itertools

from .errors import CapExceeded, ChainGeomError

DEFAULT_FIELD_CAP = 256


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


# -- polynomial helpers over GF(p); coefficient tuples are little-endian --

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _poly_trim(a)


def _monic_polys(degree, p):
    """All monic polynomials of the given degree, lexicographic order on
    the (descending-power) coefficient vector."""
    for tail in itertools.product(range(p), repeat=degree):
        # tail = (c_{d-1}, ..., c_0)
        yield tuple(reversed(tail)) + (1,)


def _poly_is_irreducible(f, p):
    degree = len(f) - 1
    if degree == 1:
        return True
    for d in range(1, degree):
        for g in _monic_polys(d, p):
            rem = _poly_mod(f, g, p)
            # need remainder of f mod g; _poly_mod reduces by monic g
            if not rem:
                return False
    return True


def least_irreducible_monic(p: int, n: int) -> tuple:
    """Lexicographically least irreducible monic of degree n over GF(p)."""
    if n == 1:
        return (0, 1)  # X itself; GF(p) needs no extension structure
    for f in _monic_polys(n, p):
        if _poly_is_irreducible(f, p):
            return f
    raise ChainGeomError(f"no irreducible monic of degree {n} over GF({p})")


class FiniteField:
    """GF(p^n) with int-encoded elements and precomputed operation tables."""

    def __init__(self, p: int, n: int, cap: int = DEFAULT_FIELD_CAP):
        if not is_prime(p):
            raise ChainGeomError(f"{p} is not prime")
        if n < 1:
            raise ChainGeomError("extension degree must be >= 1")
        q = p ** n
        if q > cap:
            raise CapExceeded(f"field size {q} exceeds cap {cap}")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = least_irreducible_monic(p, n)
        self.name = f"gf({q})"

        coeffs = []
        for e in range(q):
            v, c = e, []
            for _ in range(n):
                c.append(v % p)
                v //= p
            coeffs.append(tuple(c))
        self._coeffs = coeffs
        self._index = {c: e for e, c in enumerate(coeffs)}

        def enc(poly):
            poly = _poly_trim(poly)
            return self._index[tuple(poly) + (0,) * (n - len(poly))]

        self._neg = tuple(enc([(-c) % p for c in coeffs[e]]) for e in range(q))
        add = []
        for a in range(q):
            ca = coeffs[a]
            row = [enc([(ca[i] + coeffs[b][i]) % p for i in range(n)]) for b in range(q)]
            add.extend(row)
        self._add = add

        # Multiplication through exp/log tables of a primitive element;
        # also certifies that the nonzero elements form a cyclic group.
        gen = self._find_generator(enc)
        exp = [1]
        cur = 1
        for _ in range(q - 2):
            cur = enc(_poly_mod(_poly_mul(coeffs[cur], coeffs[gen], p), self.modulus, p))
            exp.append(cur)
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        mul = [0] * (q * q)
        for a in range(1, q):
            la = log[a]
            base = a * q
            for b in range(1, q):
                mul[base + b] = exp[(la + log[b]) % (q - 1)]
        self._mul = mul
        self._exp = exp
        self._log = log
        self.generator = gen
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = exp[(q - 1 - log[a]) % (q - 1)]

    def _find_generator(self, enc):
        p, q = self.p, self.q
        for g in range(1, q):
            cur, order = g, 1
            while cur != 1:
                cur = enc(_poly_mod(_poly_mul(self._coeffs[cur], self._coeffs[g], p),
                                    self.modulus, p))
                order += 1
                if order > q - 1:
                    break
            if order == q - 1:
                return g
        raise ChainGeomError("multiplicative group is not cyclic (broken modulus?)")

    # -- element operations ------------------------------------------------

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self._add[a * self.q + b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a * self.q + self._neg[b]]

    def mul(self, a, b):
        return self._mul[a * self.q + b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_int(self, a, k):
        if a == 0:
            return 0 if k else 1
        k %= (self.q - 1)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def coeffs(self, a):
        return self._coeffs[a]

    def from_coeffs(self, c):
        c = tuple(c) + (0,) * (self.n - len(c))
        return self._index[c]

    # -- automorphisms -----------------------------------------------------

    def frobenius(self, power: int = 1) -> "FieldAut":
        return FieldAut(self, power % self.n)

    def automorphisms(self):
        return tuple(FieldAut(self, i) for i in range(self.n))

    def __repr__(self):
        return f"FiniteField({self.p}, {self.n})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus))

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))


@functools.lru_cache(maxsize=None)
def make_field(p: int, n: int, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    return FiniteField(p, n, cap=cap)


class FieldHom:
    """A unital ring homomorphism between finite fields, stored as a table."""

    def __init__(self, source: FiniteField, target: FiniteField, table):
        self.source = source
        self.target = target
        self.table = tuple(table)

    def __call__(self, a):
        return self.table[a]

    def is_injective(self):
        return len(set(self.table)) == len(self.table)

    def is_surjective(self):
        return len(set(self.table)) == self.target.q

    def then(self, other: "FieldHom") -> "FieldHom":
        if self.target != other.source:
            raise ChainGeomError("homomorphisms do not compose")
        return FieldHom(self.source, other.target,
                        tuple(other.table[t] for t in self.table))

    def inverse(self) -> "FieldHom":
        if not (self.is_injective() and self.is_surjective()):
            raise ChainGeomError("homomorphism is not bijective")
        inv = [0] * self.target.q
        for a, b in enumerate(self.table):
            inv[b] = a
        return FieldHom(self.target, self.source, inv)

    def __eq__(self, other):
        return (isinstance(other, FieldHom)
                and self.source == other.source
                and self.target == other.target
                and self.table == other.table)

    def __hash__(self):
        return hash((self.source, self.target, self.table))

    def __repr__(self):
        return f"FieldHom({self.source.name}->{self.target.name})"


class FieldAut(FieldHom):
    """x -> x^(p^power) on a single field; composition adds powers mod n."""

    def __init__(self, owner: FiniteField, power: int):
        power %= owner.n
        pk = owner.p ** power
        super().__init__(owner, owner, tuple(owner.pow_int(a, pk) for a in owner.elements()))
        self.owner = owner
        self.power = power

    @property
    def name(self):
        return f"frob^{self.power}"

    def __repr__(self):
        return f"FieldAut({self.owner.name}, {self.name})"


def homomorphisms(F: FiniteField, K: FiniteField):
    """All unital ring homomorphisms F -> K, ordered by the image of F's
    canonical generator.  Empty unless char matches and deg F | deg K."""
    if F.p != K.p:
        return ()
    if F.n == 1:
        # prime field: unique inclusion c -> c (same encoding on both sides)
        return (FieldHom(F, K, tuple(range(F.p))),)
    # roots in K of F's modulus determine the homomorphism
    homs = []
    for r in K.elements():
        acc = 0
        rp = 1
        for c in F.modulus:
            if c:
                acc = K.add(acc, K.mul(c % K.p, rp))
            rp = K.mul(rp, r)
        if acc == 0:
            table = []
            for a in F.elements():
                img = 0
                rp = 1
                for c in F.coeffs(a):
                    if c:
                        img = K.add(img, K.mul(c, rp))
                    rp = K.mul(rp, r)
                table.append(img)
            homs.append(FieldHom(F, K, tuple(table)))
    return tuple(homs)


def is_surjective(h: FieldHom) -> bool:
    return h.is_surjective()
