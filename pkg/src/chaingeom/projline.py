"""The projective line over a finite ring, its distant relation, and chains.

A point is the left submodule generated by an admissible pair (a, b); we
store one canonical representative per point, the lexicographically least
pair in the unit orbit {(ua, ub)}.  Admissibility of (a, b) means the pair
extends to an invertible 2x2 matrix over the ring, which for a finite ring
is equivalent to solvability of a*x + b*y = 1; that is a K-linear system
and is solved exactly.  For full matrix rings the cheaper full-row-rank
test of the flattened pair is used instead (equivalent there).

Chains are the orbit of the standard chain under GL2, enumerated by
breadth-first search over the generator set from rings.gl2_generators,
acting on points by (a, b) -> (a, b) . gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import CapExceeded, ChainGeomError
from .rings import (FiniteRing, SubfieldEmbedding, gl2_generators, rmat_identity,
                    rmat_mul)

DEFAULT_PAIR_CAP = 10 ** 6
DEFAULT_CHAIN_CAP = 10 ** 5


@dataclass(frozen=True)
class Point:
    id: int
    rep: tuple  # canonical (a, b) pair of ring element indices


class ProjectiveLine:
    """All points of P(R), with canonical pair lookup and distant tests."""

    def __init__(self, ring: FiniteRing, pair_cap: int = DEFAULT_PAIR_CAP):
        n = ring.size
        if n * n > pair_cap:
            raise CapExceeded(f"{n * n} pairs exceed enumeration cap {pair_cap}")
        self.ring = ring
        admissible = self._admissible_tester()
        pair_to_id = {}
        points = []
        units = ring.units()
        mul = ring.mul
        for a in range(n):
            for b in range(n):
                if (a, b) in pair_to_id:
                    continue
                if not admissible(a, b):
                    continue
                pid = len(points)
                points.append((a, b))
                for u in units:
                    pair_to_id[(mul(u, a), mul(u, b))] = pid
        self.points = tuple(points)
        self.pair_to_id = pair_to_id
        self._distant = {}
        self.id_10 = pair_to_id[(ring.one, ring.zero)]
        self.id_01 = pair_to_id[(ring.zero, ring.one)]
        self.id_11 = pair_to_id[(ring.one, ring.one)]

    def __len__(self):
        return len(self.points)

    def base_triple(self):
        """Ids of R(1,0), R(0,1), R(1,1)."""
        return (self.id_10, self.id_01, self.id_11)

    def _admissible_tester(self):
        ring = self.ring
        K = ring.K
        if ring.kind == "matrix_ring":
            d = ring.d
            def test(a, b):
                ma, mb = ring.mat(a), ring.mat(b)
                rows = tuple(ma[i] + mb[i] for i in range(d))
                return linalg.rank(K, rows) == d
            return test

        # generic ring: a*x + b*y = 1 solvable, as a K-linear system in the
        # coordinates of (x, y)
        basis_idx = [ring.index[bmat] for bmat in ring.basis]
        one_flat = tuple(c for row in ring.mat(ring.one) for c in row)

        def test(a, b):
            rows = []
            for bj in basis_idx:
                m = ring.mat(ring.mul(a, bj))
                rows.append(tuple(c for row in m for c in row))
            for bj in basis_idx:
                m = ring.mat(ring.mul(b, bj))
                rows.append(tuple(c for row in m for c in row))
            return linalg.solve_left(K, rows, one_flat) is not None
        return test

    def is_admissible(self, a, b):
        if (a, b) in self.pair_to_id:
            return True
        return self._admissible_tester()(a, b)

    def point_id(self, a, b):
        """Canonical id of the point generated by an admissible pair."""
        try:
            return self.pair_to_id[(a, b)]
        except KeyError:
            raise ChainGeomError(f"pair {(a, b)} is not admissible")

    def submodule(self, pid):
        """The full point set {(ra, rb)} - used by cross-checks."""
        ring = self.ring
        a, b = self.points[pid]
        return frozenset((ring.mul(r, a), ring.mul(r, b)) for r in range(ring.size))

    def is_distant(self, p: int, q: int) -> bool:
        """Distant iff stacking canonical representatives gives an
        invertible 2x2 matrix over the ring."""
        if p == q:
            return False
        key = (p, q) if p < q else (q, p)
        cached = self._distant.get(key)
        if cached is None:
            ring = self.ring
            a, b = self.points[p]
            c, d = self.points[q]
            K = ring.K
            dd = ring.d
            ma, mb, mc, md = ring.mat(a), ring.mat(b), ring.mat(c), ring.mat(d)
            rows = tuple(ma[i] + mb[i] for i in range(dd)) + \
                   tuple(mc[i] + md[i] for i in range(dd))
            cached = linalg.rank(K, rows) == 2 * dd
            self._distant[key] = cached
        return cached

    def apply(self, gamma, pid):
        """Image of a point under gamma in GL2(R): (a,b) -> (a,b) . gamma."""
        ring = self.ring
        a, b = self.points[pid]
        na = ring.add(ring.mul(a, gamma[0][0]), ring.mul(b, gamma[1][0]))
        nb = ring.add(ring.mul(a, gamma[0][1]), ring.mul(b, gamma[1][1]))
        return self.point_id(na, nb)

    def transform_table(self, gamma):
        return tuple(self.apply(gamma, pid) for pid in range(len(self.points)))

    def normal_form_pairs(self):
        """The point set produced by the stable-rank normal form
        {R(A, 1 + A*B)}; must coincide with the enumerated points."""
        ring = self.ring
        ids = set()
        for a in range(ring.size):
            for b in range(ring.size):
                second = ring.add(ring.one, ring.mul(a, b))
                key = (a, second)
                pid = self.pair_to_id.get(key)
                if pid is None:
                    raise ChainGeomError(
                        f"normal-form pair {key} is not an enumerated point")
                ids.add(pid)
        return ids


_LINE_CACHE = {}


def projective_line(ring: FiniteRing, pair_cap: int = DEFAULT_PAIR_CAP) -> ProjectiveLine:
    line = _LINE_CACHE.get(ring.descriptor)
    if line is None:
        line = ProjectiveLine(ring, pair_cap=pair_cap)
        _LINE_CACHE[ring.descriptor] = line
    return line


def enumerate_points(ring: FiniteRing, pair_cap: int = DEFAULT_PAIR_CAP):
    line = projective_line(ring, pair_cap)
    return tuple(Point(i, rep) for i, rep in enumerate(line.points))


@dataclass(frozen=True)
class Chain:
    point_ids: tuple  # sorted point ids
    witness: tuple    # 2x2 ring matrix mapping the standard chain here

    def __contains__(self, pid):
        return pid in self.point_ids


@dataclass
class ChainOrbit:
    chains: list
    complete: bool
    emb_key: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def containing(self, pids):
        pids = set(pids)
        return [c for c in self.chains if pids.issubset(c.point_ids)]


def standard_chain(line: ProjectiveLine, emb: SubfieldEmbedding) -> Chain:
    """The embedded P(F): {R(1,0)} + {R(x,1) : x in F}, canonicalised."""
    ring = line.ring
    if emb.ring is not ring:
        raise ChainGeomError("embedding belongs to a different ring")
    ids = {line.point_id(ring.one, ring.zero)}
    for x in emb.F.elements():
        ids.add(line.point_id(emb(x), ring.one))
    return Chain(tuple(sorted(ids)), rmat_identity(ring))


def enumerate_chains(line: ProjectiveLine, emb: SubfieldEmbedding,
                     cap: int = DEFAULT_CHAIN_CAP,
                     allow_partial: bool = False) -> ChainOrbit:
    """Breadth-first GL2-orbit of the standard chain.  Deterministic order;
    the standard chain is first.  With allow_partial the orbit is cut off
    at the cap and flagged incomplete instead of raising."""
    ring = line.ring
    start = standard_chain(line, emb)
    gens = gl2_generators(ring)
    perms = [line.transform_table(g) for g in gens]

    seen = {start.point_ids: 0}
    order = [start.point_ids]
    parents = [(-1, -1)]  # (parent index, generator index)
    frontier = [0]
    complete = True
    while frontier and complete:
        next_frontier = []
        for ci in frontier:
            pts = order[ci]
            for gi, perm in enumerate(perms):
                img = tuple(sorted(perm[p] for p in pts))
                if img not in seen:
                    if len(order) >= cap:
                        complete = False
                        break
                    seen[img] = len(order)
                    order.append(img)
                    parents.append((ci, gi))
                    next_frontier.append(len(order) - 1)
            if not complete:
                break
        frontier = next_frontier

    if not complete and not allow_partial:
        raise CapExceeded(
            f"chain orbit exceeded cap {cap}; partial orbit attached",
            partial=order)

    witnesses = [start.witness]
    for i in range(1, len(order)):
        pi, gi = parents[i]
        witnesses.append(rmat_mul(ring, witnesses[pi], gens[gi]))
    chains = [Chain(pts, w) for pts, w in zip(order, witnesses)]
    return ChainOrbit(chains, complete, emb_key=emb.key)


def chains_through(line: ProjectiveLine, pids, orbit: ChainOrbit):
    """All enumerated chains containing three pairwise distant points."""
    pids = tuple(pids)
    if len(pids) != 3 or len(set(pids)) != 3:
        raise ChainGeomError("expected three distinct point ids")
    for i in range(3):
        for j in range(i + 1, 3):
            if not line.is_distant(pids[i], pids[j]):
                raise ChainGeomError("points are not pairwise distant")
    return orbit.containing(pids)
