"""Point enumeration and canonicalisation, the distant relation, and chain
orbits, cross-checked against submodule comparison and completion search."""

import itertools

import pytest

from chaingeom import linalg, projline, rings
from chaingeom.errors import CapExceeded, ChainGeomError
from chaingeom.fields import make_field


def test_point_counts(line_m2_gf2, line_m2_gf3, gf2, gf3, gf4):
    assert len(line_m2_gf2) == 35
    assert len(line_m2_gf3) == 130 == (9 + 1) * (9 + 3 + 1)
    assert len(projline.projective_line(rings.dual_numbers(gf2))) == 6
    assert len(projline.projective_line(rings.dual_numbers(gf3))) == 12
    for K in (gf2, gf3, gf4):
        assert len(projline.projective_line(rings.matrix_ring(1, K))) == K.q + 1


def test_enumerate_points_api(m2_gf2):
    pts = projline.enumerate_points(m2_gf2)
    assert len(pts) == 35
    assert pts[0].id == 0
    assert all(p.id == i for i, p in enumerate(pts))


def test_admissibility_matches_completion_search(gf2):
    """Oracle: (a,b) is admissible iff some completion to a 2x2 matrix is
    invertible (brute force over all completions, small rings)."""
    for ring in [rings.dual_numbers(gf2), rings.upper_triangular(gf2),
                 rings.product_ring(gf2, 2)]:
        line = projline.projective_line(ring)
        admissible = set()
        for a in range(ring.size):
            for b in range(ring.size):
                if any(rings.rmat_is_invertible(ring, ((a, b), (c, d)))
                       for c in range(ring.size) for d in range(ring.size)):
                    admissible.add((a, b))
        assert admissible == set(line.pair_to_id)


def test_point_canonicalization_is_submodule_equality(gf2):
    """Same unit orbit iff same generated submodule, |R| <= 16."""
    for ring in [rings.matrix_ring(2, gf2), rings.dual_numbers(gf2),
                 rings.upper_triangular(gf2)]:
        line = projline.projective_line(ring)
        modules = {}
        for (a, b), pid in line.pair_to_id.items():
            mod = frozenset((ring.mul(r, a), ring.mul(r, b))
                            for r in range(ring.size))
            modules.setdefault(mod, set()).add(pid)
        assert all(len(v) == 1 for v in modules.values())
        assert len(modules) == len(line)


def test_canonical_rep_is_orbit_minimum(line_m2_gf2, m2_gf2):
    for pid, (a, b) in enumerate(line_m2_gf2.points):
        orbit = [(m2_gf2.mul(u, a), m2_gf2.mul(u, b)) for u in m2_gf2.units()]
        assert (a, b) == min(orbit)


def test_distant_basics(line_m2_gf2):
    line = line_m2_gf2
    assert line.is_distant(line.id_10, line.id_01)
    assert not line.is_distant(line.id_10, line.id_10)
    for p in range(len(line)):
        for q in range(p + 1, len(line)):
            assert line.is_distant(p, q) == line.is_distant(q, p)


def test_distant_dual_numbers(gf2):
    D = rings.dual_numbers(gf2)
    line = projline.projective_line(D)
    eps = D.from_matrix([[0, 1], [0, 0]])
    p = line.point_id(D.one, D.zero)
    q = line.point_id(D.one, eps)
    assert not line.is_distant(p, q)
    assert line.is_distant(line.id_10, line.id_01)


def test_distant_invariant_under_group(line_m2_gf2, m2_gf2):
    gens = rings.gl2_generators(m2_gf2)
    n = len(line_m2_gf2)
    for g in gens:
        perm = line_m2_gf2.transform_table(g)
        assert sorted(perm) == list(range(n))
        for p in range(n):
            for q in range(p + 1, n):
                assert line_m2_gf2.is_distant(p, q) == \
                    line_m2_gf2.is_distant(perm[p], perm[q])


def test_distant_equals_orbit_definition(gf2):
    """Equivalence with the orbit form: p, q distant iff some group element
    maps (p, q) to (R(1,0), R(0,1)).  Exhaustive on the dual numbers."""
    D = rings.dual_numbers(gf2)
    line = projline.projective_line(D)
    group = set()
    frontier = {rings.rmat_identity(D)}
    gens = rings.gl2_generators(D)
    while frontier:
        group |= frontier
        frontier = {rings.rmat_mul(D, g, h) for g in frontier for h in gens} - group
    reachable = set()
    for g in group:
        perm = line.transform_table(g)
        reachable.add((perm[line.id_10], perm[line.id_01]))
    for p in range(len(line)):
        for q in range(len(line)):
            if p == q:
                continue
            assert line.is_distant(p, q) == ((p, q) in reachable)


def test_standard_chain(line_m2_gf2, emb_gf4_regular, emb_gf2_scalar):
    sc = projline.standard_chain(line_m2_gf2, emb_gf4_regular)
    assert len(sc.point_ids) == 5
    for b in line_m2_gf2.base_triple():
        assert b in sc.point_ids
    sc2 = projline.standard_chain(line_m2_gf2, emb_gf2_scalar)
    assert len(sc2.point_ids) == 3
    assert set(sc2.point_ids) == set(line_m2_gf2.base_triple())


def test_whole_line_is_the_only_chain_over_a_field(gf2):
    R = rings.matrix_ring(1, gf2)
    line = projline.projective_line(R)
    emb = rings.embed_subfield(gf2, R, "scalar")
    orbit = projline.enumerate_chains(line, emb)
    assert len(orbit.chains) == 1
    assert orbit.chains[0].point_ids == tuple(range(3))


def test_chain_orbit_counts(orbit_gf4, orbit_scalar_gf2, orbit_gf9):
    # 20160 / (180 * 2) group elements per chain stabiliser
    assert len(orbit_gf4.chains) == 56
    assert orbit_gf4.complete
    # chains of the scalar geometry = reguli of the line model
    assert len(orbit_scalar_gf2.chains) == 560
    assert len(orbit_gf9.chains) == 2106
    assert orbit_gf9.complete


def test_chain_count_matches_image_spread_count(line_m2_gf2, orbit_gf4,
                                                nat_m2_gf2):
    """Cross-check of the orbit count: the images of distinct chains are
    distinct line sets, so spreads are counted by chains."""
    from chaingeom import representations as reps
    images = {frozenset(reps.point_image(nat_m2_gf2, line_m2_gf2.points[p])
                        for p in c.point_ids)
              for c in orbit_gf4.chains}
    assert len(images) == len(orbit_gf4.chains) == 56


def test_chains_have_pairwise_distant_points(line_m2_gf2, orbit_gf4, emb_gf4_regular):
    for chain in orbit_gf4.chains:
        assert len(chain.point_ids) == emb_gf4_regular.F.q + 1
        for p, q in itertools.combinations(chain.point_ids, 2):
            assert line_m2_gf2.is_distant(p, q)


def test_chain_witnesses_map_standard_chain(line_m2_gf2, orbit_gf4, emb_gf4_regular):
    sc = projline.standard_chain(line_m2_gf2, emb_gf4_regular)
    for chain in orbit_gf4.chains[:80]:
        perm = line_m2_gf2.transform_table(chain.witness)
        assert tuple(sorted(perm[p] for p in sc.point_ids)) == chain.point_ids


def test_distant_iff_joined_by_chain(line_m2_gf2, orbit_gf4):
    joined = set()
    for c in orbit_gf4.chains:
        for p, q in itertools.combinations(c.point_ids, 2):
            joined.add(frozenset((p, q)))
    n = len(line_m2_gf2)
    for p in range(n):
        for q in range(p + 1, n):
            assert line_m2_gf2.is_distant(p, q) == (frozenset((p, q)) in joined)


def test_chains_through(line_m2_gf3, orbit_gf9):
    triple = line_m2_gf3.base_triple()
    through = projline.chains_through(line_m2_gf3, triple, orbit_gf9)
    assert len(through) > 1
    with pytest.raises(ChainGeomError):
        projline.chains_through(line_m2_gf3, (0, 0, 1), orbit_gf9)
    p, q = triple[0], triple[1]
    nd = next(r for r in range(len(line_m2_gf3))
              if r not in (p, q) and not line_m2_gf3.is_distant(p, r))
    with pytest.raises(ChainGeomError):
        projline.chains_through(line_m2_gf3, (p, q, nd), orbit_gf9)


def test_chains_through_includes_standard_chain(line_m2_gf2, orbit_gf4):
    sc = orbit_gf4.chains[0].point_ids
    through = projline.chains_through(line_m2_gf2, sc[:3], orbit_gf4)
    assert orbit_gf4.chains[0] in through


def test_scalar_triple_joined(line_m2_gf2, orbit_scalar_gf2):
    through = projline.chains_through(
        line_m2_gf2, line_m2_gf2.base_triple(), orbit_scalar_gf2)
    assert len(through) >= 1


def test_normal_form_reproduces_points(gf2, gf3, line_m2_gf2, line_m2_gf3):
    assert line_m2_gf2.normal_form_pairs() == set(range(35))
    assert line_m2_gf3.normal_form_pairs() == set(range(130))
    lineD = projline.projective_line(rings.dual_numbers(gf2))
    assert lineD.normal_form_pairs() == set(range(6))


def test_chain_cap(line_m2_gf3, emb_gf9_regular):
    with pytest.raises(CapExceeded) as exc:
        projline.enumerate_chains(line_m2_gf3, emb_gf9_regular, cap=10)
    assert exc.value.partial is not None
    partial = projline.enumerate_chains(line_m2_gf3, emb_gf9_regular, cap=10,
                                        allow_partial=True)
    assert len(partial.chains) == 10
    assert not partial.complete


def test_point_id_rejects_inadmissible(gf2):
    D = rings.dual_numbers(gf2)
    line = projline.projective_line(D)
    eps = D.from_matrix([[0, 1], [0, 0]])
    with pytest.raises(ChainGeomError):
        line.point_id(eps, D.zero)
