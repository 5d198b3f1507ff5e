#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homalg/balanced.hpp"
#include "homalg/equiv.hpp"

using namespace homalg;

namespace {

AlgebraRef a2(std::uint32_t p) {
    AlgebraPresentation pres;
    pres.field = Field(p);
    pres.quiver = {2, {{0, 1, "a"}}};
    pres.nilpotency_bound = 2;
    return build_algebra(pres);
}

AlgebraRef op_of(AlgebraRef alg) {
    return build_algebra(opposite_presentation(alg->presentation()));
}

SubcatSpec projectives_of(AlgebraRef alg) {
    SubcatSpec s{"proj", {}};
    for (int v = 0; v < alg->vertex_count(); ++v)
        s.gens.push_back(indec_projective(alg, v));
    return s;
}

SubcatSpec injectives_of(AlgebraRef alg, AlgebraRef op_alg) {
    SubcatSpec s{"inj", {}};
    for (int v = 0; v < alg->vertex_count(); ++v)
        s.gens.push_back(indec_injective(alg, op_alg, v));
    return s;
}

/// P2 -> P1 via the socle, the standard two-term complex of projectives.
Complex proj_pair(AlgebraRef alg) {
    Module p1 = indec_projective(alg, 0);
    Module p2 = indec_projective(alg, 1);
    Complex m;
    m.alg = alg;
    m.lo = 0;
    m.terms = {p2, p1};
    m.diffs = {hom_basis(p2, p1).at(0)};
    validate_complex(m);
    return m;
}

/// I2 -> I1, the mirror two-term complex of injectives.
Complex inj_pair(AlgebraRef alg, AlgebraRef op) {
    Module i1 = indec_injective(alg, op, 0);
    Module i2 = indec_injective(alg, op, 1);
    Complex m;
    m.alg = alg;
    m.lo = 0;
    m.terms = {i2, i1};
    m.diffs = {hom_basis(i2, i1).at(0)};
    validate_complex(m);
    return m;
}

}  // namespace

TEST_CASE("homotopy inverses come out of cone contractions") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        Module p1 = indec_projective(alg, 0);
        Module p2 = indec_projective(alg, 1);
        Complex m = proj_pair(alg);

        // The identity inverts to something homotopic to the identity,
        // with both witnesses exact equalities.
        auto hid = homotopy_inverse(identity_chain_map(m));
        REQUIRE(hid.has_value());
        CHECK(chain_map_equal(
            homotopy_boundary(hid->to_src),
            sub_chain_maps(compose(hid->inv, identity_chain_map(m)), identity_chain_map(m))));
        CHECK(chain_map_equal(
            homotopy_boundary(hid->to_tgt),
            sub_chain_maps(compose(identity_chain_map(m), hid->inv), identity_chain_map(m))));

        // Inclusion into a direct sum with a contractible strand is an
        // equivalence without being an isomorphism.
        SumDecomposition top = direct_sum(alg, {p1, p2});
        Complex fat;
        fat.alg = alg;
        fat.lo = 0;
        fat.terms = {top.total, p2};
        fat.diffs = {top.projections[1]};
        validate_complex(fat);
        ChainMap incl;
        incl.src = complex_from_module(p1, 0);
        incl.tgt = fat;
        incl.lo = 0;
        incl.comps = {top.inclusions[0]};
        validate_chain_map(incl);
        auto hfat = homotopy_inverse(incl);
        REQUIRE(hfat.has_value());
        CHECK(map_equal(compose(hfat->inv.comp(0), incl.comp(0)), identity_map(p1)));

        // The socle inclusion of stalks has cohomology in its cone.
        ChainMap socle = chain_map_from_map(hom_basis(p2, p1).at(0), 0);
        CHECK_FALSE(homotopy_inverse(socle).has_value());

        // Degenerate case: everything empty.
        ChainMap nothing = zero_chain_map(zero_complex(alg), zero_complex(alg));
        CHECK(homotopy_inverse(nothing).has_value());
    }
}

TEST_CASE("coresolving moves complexes of projectives to injectives") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        EquivSession s = make_equiv_session(proj, inj, 3);
        Module p1 = indec_projective(alg, 0);
        Module p2 = indec_projective(alg, 1);
        Module s1 = simple_module(alg, 0);

        // The non-injective projective coresolves to a two-term complex.
        Complex c = complex_from_module(p2, 0);
        CoresolvedComplex e = coresolve(s, c);
        CHECK(e.image.term(0).total_dim() == 2);
        CHECK(e.image.term(1).total_dim() == 1);
        CHECK(e.image.term(2).is_zero());
        CHECK(e.image.term(-1).is_zero());
        for (int n = e.image.lo; n <= e.image.hi(); ++n)
            if (!e.image.term(n).is_zero()) CHECK(membership(inj, e.image.term(n)));
        CHECK(map_rank(e.into_image.comp(0)) == 1);
        CHECK(is_left_acyclic(inj, mapping_cone(e.into_image).cone));

        // Deterministic: a second pass reproduces the same choice.
        CoresolvedComplex e2 = coresolve(s, c);
        CHECK(complex_equal(e.image, e2.image));
        CHECK(chain_map_equal(e.into_image, e2.into_image));

        // A projective-injective stays put with the identity comparison.
        Complex cp = complex_from_module(p1, 0);
        CoresolvedComplex ep = coresolve(s, cp);
        CHECK(complex_equal(ep.image, cp));
        CHECK(chain_map_equal(ep.into_image, identity_chain_map(cp)));

        // Two-term complex of projectives: dimensions are pinned down.
        Complex m = proj_pair(alg);
        CoresolvedComplex em = coresolve(s, m);
        CHECK(em.image.term(0).total_dim() == 2);
        CHECK(em.image.term(1).total_dim() == 3);
        CHECK(em.image.term(2).is_zero());
        CHECK(is_left_acyclic(inj, mapping_cone(em.into_image).cone));

        // The zero complex does nothing.
        CHECK(coresolve(s, zero_complex(alg)).image.terms.empty());

        // Non-members are refused; too narrow a width is reported.
        CHECK_THROWS_AS(coresolve(s, complex_from_module(s1, 0)), bad_input);
        EquivSession tight = make_equiv_session(proj, inj, 0);
        CHECK_THROWS_AS(coresolve(tight, c), check_failure);
    }
}

TEST_CASE("each term's coresolution matches the direct one") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        SubcatSpec all{"all", {indec_projective(alg, 0), indec_projective(alg, 1),
                               simple_module(alg, 0)}};
        EquivSession s = make_equiv_session(all, inj, 4);

        for (const Module& m : all.gens) {
            ResolutionResult direct = coresolution(inj, m, 4);
            REQUIRE(direct.closed);
            CoresolvedComplex via = coresolve(s, complex_from_module(m, 0));
            for (int n = 0; n <= 4; ++n)
                CHECK(via.image.term(n).total_dim() == direct.cx.term(n).total_dim());
        }
    }
}

TEST_CASE("transported maps respect identities, composites, and homotopy") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        EquivSession s = make_equiv_session(proj, inj, 3);
        Module p1 = indec_projective(alg, 0);
        Module p2 = indec_projective(alg, 1);
        Complex m = proj_pair(alg);

        // Identity transports to the identity up to homotopy.
        CoresolvedComplex em = coresolve(s, m);
        TransportedMap tid = transport_map(s, identity_chain_map(m));
        CHECK(null_homotopy(sub_chain_maps(tid.map, identity_chain_map(em.image))).has_value());

        // The defining square is exact and the witness is honest zero.
        ChainMap f = chain_map_from_map(hom_basis(p2, p1).at(0), 0);
        CoresolvedComplex es = coresolve(s, f.src);
        CoresolvedComplex et = coresolve(s, f.tgt);
        TransportedMap tf = transport_map(s, f);
        CHECK(chain_map_equal(compose(tf.map, es.into_image), compose(et.into_image, f)));
        CHECK(chain_map_is_zero(homotopy_boundary(tf.witness)));

        // Composites transport to composites up to homotopy.
        ChainMap g;
        g.src = f.tgt;
        g.tgt = f.tgt;
        g.lo = 0;
        g.comps = {scale_map(identity_map(p1), p - 1)};
        validate_chain_map(g);
        TransportedMap tg = transport_map(s, g);
        TransportedMap tgf = transport_map(s, compose(g, f));
        CHECK(null_homotopy(sub_chain_maps(tgf.map, compose(tg.map, tf.map))).has_value());

        // Homotopic inputs give homotopic outputs.
        Complex loop;
        loop.alg = alg;
        loop.lo = 0;
        loop.terms = {p1, p1};
        loop.diffs = {identity_map(p1)};
        Homotopy h;
        h.src = loop;
        h.tgt = loop;
        h.lo = 1;
        h.comps = {identity_map(p1)};
        ChainMap f1 = identity_chain_map(loop);
        ChainMap f2 = add_chain_maps(f1, homotopy_boundary(h));
        TransportedMap t1 = transport_map(s, f1);
        TransportedMap t2 = transport_map(s, f2);
        CHECK(homotopy_between(t1.map, t2.map).has_value());
    }
}

TEST_CASE("coresolving commutes with shift up to equivalence") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        EquivSession s = make_equiv_session(projectives_of(alg), injectives_of(alg, op), 3);
        Complex m = proj_pair(alg);

        CoresolvedComplex e = coresolve(s, m);
        ChainMap shifted = shift_chain_map(e.into_image, 1);
        ChainMap cmp = factor_through_coresolution(s, shifted);
        REQUIRE(homotopy_inverse(cmp).has_value());
    }
}

TEST_CASE("cones transport to cones up to equivalence") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        EquivSession s = make_equiv_session(projectives_of(alg), injectives_of(alg, op), 3);
        Module p1 = indec_projective(alg, 0);
        Module p2 = indec_projective(alg, 1);

        ChainMap f = chain_map_from_map(hom_basis(p2, p1).at(0), 0);
        CoresolvedComplex es = coresolve(s, f.src);
        CoresolvedComplex et = coresolve(s, f.tgt);
        TransportedMap tf = transport_map(s, f);
        ConeResult ka = mapping_cone(f);
        ConeResult kb = mapping_cone(tf.map);

        // Both squares of the transport are exact, so the blockwise map of
        // cones is a chain map on the nose.
        ChainMap theta;
        theta.src = ka.cone;
        theta.tgt = kb.cone;
        theta.lo = ka.cone.lo;
        for (int n = ka.cone.lo; n <= ka.cone.hi(); ++n) {
            SumDecomposition sa = direct_sum(alg, {f.src.term(n + 1), f.tgt.term(n)});
            SumDecomposition sb =
                direct_sum(alg, {tf.map.src.term(n + 1), tf.map.tgt.term(n)});
            theta.comps.push_back(add_maps(
                compose(sb.inclusions[0],
                        compose(es.into_image.comp(n + 1), sa.projections[0])),
                compose(sb.inclusions[1],
                        compose(et.into_image.comp(n), sa.projections[1]))));
        }
        validate_chain_map(theta);

        ChainMap cmp = factor_through_coresolution(s, theta);
        REQUIRE(homotopy_inverse(cmp).has_value());
    }
}

TEST_CASE("round trips certify the equivalence on a corpus") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        EquivSession s = make_equiv_session(proj, inj, 3);

        std::vector<Complex> x_side = {
            complex_from_module(indec_projective(alg, 0), 0),
            complex_from_module(indec_projective(alg, 1), 0),
            proj_pair(alg),
            zero_complex(alg),
        };
        std::vector<Complex> y_side = {
            complex_from_module(indec_injective(alg, op, 0), 0),
            complex_from_module(indec_injective(alg, op, 1), 0),
            inj_pair(alg, op),
        };

        EquivReport rep = verify_equivalence(s, x_side, y_side);
        CHECK(rep.all_ok);
        REQUIRE(rep.units.size() == 4);
        REQUIRE(rep.counits.size() == 3);
        for (const EquivWitness& w : rep.units) {
            CHECK(w.quasi_iso_ok);
            CHECK(w.inverse_ok);
        }
        for (const EquivWitness& w : rep.counits) {
            CHECK(w.quasi_iso_ok);
            CHECK(w.inverse_ok);
        }

        // Break every memoized comparison map: the report notices and
        // nothing throws; clearing the memo restores the session.
        for (auto& entry : s.forward.memo)
            for (ModuleMap& cmp : entry.second.eps.comps) cmp = zero_map(cmp.src, cmp.tgt);
        EquivReport broken =
            verify_equivalence(s, {complex_from_module(indec_projective(alg, 1), 0)}, {});
        CHECK_FALSE(broken.all_ok);
        CHECK_FALSE(broken.units.at(0).quasi_iso_ok);
        CHECK_FALSE(broken.units.at(0).inverse_ok);
        s.forward.memo.clear();
        EquivReport fixed =
            verify_equivalence(s, {complex_from_module(indec_projective(alg, 1), 0)}, {});
        CHECK(fixed.all_ok);

        // An empty corpus passes vacuously.
        EquivReport empty = verify_equivalence(s, {}, {});
        CHECK(empty.all_ok);
        CHECK(empty.units.empty());
    }
}
