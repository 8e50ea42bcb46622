"""Exact linear algebra over a FiniteField.

Matrices are tuples of row tuples of int-encoded field elements; vectors
are row tuples.  Scalars act on the left but the field is commutative, so
no side bookkeeping is needed.  The canonical form used everywhere for
subspace identity is the reduced row echelon form with zero rows dropped:
it is the unique representative of a row space and therefore hashable.
"""

from __future__ import annotations


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def mat_add(K, A, B):
    add = K.add
    return tuple(tuple(add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(K, A):
    neg = K.neg
    return tuple(tuple(neg(a) for a in row) for row in A)


def mat_scale(K, c, A):
    mul = K.mul
    return tuple(tuple(mul(c, a) for a in row) for row in A)


def mat_mul(K, A, B):
    add, mul = K.add, K.mul
    cols = len(B[0])
    n = len(B)
    out = []
    for row in A:
        orow = [0] * cols
        for k in range(n):
            a = row[k]
            if a:
                brow = B[k]
                for j in range(cols):
                    b = brow[j]
                    if b:
                        orow[j] = add(orow[j], mul(a, b))
        out.append(tuple(orow))
    return tuple(out)


def vec_mat(K, v, M):
    return mat_mul(K, (tuple(v),), M)[0]


def mat_eq_identity(A):
    n = len(A)
    return all(len(r) == n and all((1 if i == j else 0) == r[j] for j in range(n))
               for i, r in enumerate(A))


def rref(K, rows):
    """Reduced row echelon form, zero rows dropped: the canonical
    representative of the row space."""
    add, mul, neg, inv = K.add, K.mul, K.neg, K.inv
    mat = [list(r) for r in rows]
    m = len(mat)
    if m == 0:
        return ()
    n = len(mat[0])
    pivot_row = 0
    for col in range(n):
        sel = None
        for r in range(pivot_row, m):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        row = mat[pivot_row]
        piv = row[col]
        if piv != 1:
            c = inv(piv)
            for j in range(col, n):
                row[j] = mul(c, row[j])
        for r in range(m):
            if r != pivot_row and mat[r][col]:
                c = neg(mat[r][col])
                other = mat[r]
                for j in range(col, n):
                    if row[j]:
                        other[j] = add(other[j], mul(c, row[j]))
        pivot_row += 1
        if pivot_row == m:
            break
    return tuple(tuple(r) for r in mat[:pivot_row] if any(r))


def rank(K, rows):
    return len(rref(K, rows))


def inverse(K, A):
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    aug = rref(K, tuple(tuple(A[i]) + identity(n)[i] for i in range(n)))
    if len(aug) < n or any(aug[i][:n] != identity(n)[i] for i in range(n)):
        return None
    return tuple(row[n:] for row in aug)


def left_kernel(K, M):
    """Canonical basis of {x : x . M = 0} for an m x n matrix M."""
    m = len(M)
    if m == 0:
        return ()
    ident = identity(m)
    aug = rref(K, tuple(tuple(M[i]) + ident[i] for i in range(m)))
    n = len(M[0])
    kern = [row[n:] for row in aug if not any(row[:n])]
    # rows with zero left part may be absent from rref output (dropped as
    # zero rows only if the right part is zero too, which cannot happen)
    return rref(K, kern)


def solve_left(K, M, target):
    """Some x with x . M = target, or None."""
    m = len(M)
    n = len(M[0]) if m else len(target)
    ident = identity(m) if m else ()
    aug = rref(K, tuple(tuple(M[i]) + ident[i] for i in range(m)))
    add, mul, neg = K.add, K.mul, K.neg
    t = list(target)
    x = [0] * m
    for row in aug:
        lead = None
        for j in range(n):
            if row[j]:
                lead = j
                break
        if lead is None:
            continue
        c = t[lead]
        if c:
            for j in range(n):
                if row[j]:
                    t[j] = add(t[j], neg(mul(c, row[j])))
            for j in range(m):
                if row[n + j]:
                    x[j] = add(x[j], mul(c, row[n + j]))
    if any(t):
        return None
    return tuple(x)


def rowspace_contains(K, R, v):
    """Membership test against a matrix already in rref form."""
    add, mul, neg = K.add, K.mul, K.neg
    t = list(v)
    n = len(t)
    for row in R:
        lead = None
        for j in range(n):
            if row[j]:
                lead = j
                break
        if lead is None or not t[lead]:
            continue
        c = t[lead]
        for j in range(n):
            if row[j]:
                t[j] = add(t[j], neg(mul(c, row[j])))
    return not any(t)


def rowspace_intersection(K, A, B):
    """Canonical basis of rowspace(A) & rowspace(B)."""
    if not A or not B:
        return ()
    stacked = tuple(A) + tuple(B)
    out = []
    for combo in left_kernel(K, stacked):
        x = combo[:len(A)]
        out.append(vec_mat(K, x, A))
    return rref(K, out)


def canon_vec(K, v):
    """Projective normalisation: scale so the first nonzero entry is 1.
    Returns None for the zero vector."""
    for c in v:
        if c:
            if c == 1:
                return tuple(v)
            ic = K.inv(c)
            mul = K.mul
            return tuple(mul(ic, x) for x in v)
    return None


def projective_vectors(K, n):
    """All canonical projective representatives of K^n, deterministic order:
    by position of the leading 1, then lexicographically."""
    import itertools
    q = K.q
    for lead in range(n):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=n - lead - 1):
            yield prefix + tail


def subspace_points(K, S):
    """Canonical projective points of the row space of S (S in rref)."""
    pts = set()
    k = len(S)
    import itertools
    for combo in itertools.product(range(K.q), repeat=k):
        if not any(combo):
            continue
        v = [0] * len(S[0])
        add, mul = K.add, K.mul
        for c, row in zip(combo, S):
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        v[j] = add(v[j], mul(c, rj))
        pts.add(canon_vec(K, v))
    return sorted(pts)
