#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homalg/balanced.hpp"

using namespace homalg;

namespace {

AlgebraRef dual_numbers(std::uint32_t p) {
    AlgebraPresentation pres;
    pres.field = Field(p);
    pres.quiver = {1, {{0, 0, "x"}}};
    pres.relations = {{{{1, {0, 0}}}}};
    pres.nilpotency_bound = 2;
    return build_algebra(pres);
}

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

// P1, P2 = S2, S1 exhaust the indecomposables of the two-vertex path algebra.
SubcatSpec all_indecomposables_a2(AlgebraRef alg) {
    return {"all", {indec_projective(alg, 0), indec_projective(alg, 1), simple_module(alg, 0)}};
}

Complex exact_augmented(const SubcatSpec& x, const Module& m, int bound) {
    ResolutionResult r = resolution(x, m, bound);
    REQUIRE(r.closed);
    return augmented_complex(r, m);
}

void check_degreewise_exact(const HorseshoeResult& hs) {
    for (int n = hs.middle.cx.lo; n <= hs.middle.cx.hi(); ++n) {
        const ModuleMap i = hs.incl.comp(n);
        const ModuleMap p = hs.proj.comp(n);
        CHECK(map_rank(i) == i.src.total_dim());
        CHECK(map_rank(p) == p.tgt.total_dim());
        CHECK(map_is_zero(compose(p, i)));
        CHECK(i.tgt.total_dim() == i.src.total_dim() + p.tgt.total_dim());
    }
}

}  // namespace

TEST_CASE("hom acyclicity of a complex against generator lists") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        Module s1 = simple_module(alg, 0);

        // A contractible cone is hom-acyclic from both sides.
        Complex base = complex_from_module(indec_projective(alg, 0), 0);
        Complex cone = mapping_cone(identity_chain_map(base)).cone;
        CHECK(is_right_acyclic(proj, cone));
        CHECK(is_left_acyclic(inj, cone));

        // An exact augmented resolution stays exact under Hom(proj, -) and
        // Hom(-, inj).
        Complex aug = exact_augmented(proj, s1, 4);
        CHECK(is_right_acyclic(proj, aug));
        CHECK(is_left_acyclic(inj, aug));

        // A single module in degree 0 has visible degree-zero hom cohomology.
        Complex one = complex_from_module(s1, 0);
        CHECK_FALSE(is_right_acyclic(proj, one));
        CHECK_FALSE(is_left_acyclic(inj, one));
    }
}

TEST_CASE("projectives and injectives form a balanced pair") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        std::vector<Module> probes{simple_module(alg, 0), simple_module(alg, 1)};

        Complex base = complex_from_module(indec_projective(alg, 0), 0);
        std::vector<Complex> cxs{mapping_cone(identity_chain_map(base)).cone,
                                 exact_augmented(proj, probes[0], 4),
                                 complex_from_module(probes[0], 0)};

        BalancedReport rep = check_balanced(proj, inj, alg, op, probes, cxs, 4);
        CHECK(rep.pass);
        CHECK(rep.bp0);
        REQUIRE(rep.bp1.size() == 2);
        REQUIRE(rep.bp2.size() == 2);
        for (const ProbeCheck& pc : rep.bp1) {
            CHECK(pc.built);
            CHECK(pc.acyclic);
        }
        for (const ProbeCheck& pc : rep.bp2) {
            CHECK(pc.built);
            CHECK(pc.acyclic);
        }
        CHECK(rep.x_admissible);
        CHECK(rep.y_admissible);
        REQUIRE(rep.agreement.size() == 3);
        CHECK(rep.agreement[0].right);
        CHECK(rep.agreement[0].left);
        CHECK(rep.agreement[1].right);
        CHECK(rep.agreement[1].left);
        CHECK_FALSE(rep.agreement[2].right);
        CHECK_FALSE(rep.agreement[2].left);
        // Finite resolution dimensions agree across the pair.
        CHECK(rep.x_res_dim == 1);
        CHECK(rep.y_cores_dim == 1);

        // No supplied complexes: the agreement check is vacuous, still a pass.
        BalancedReport vac = check_balanced(proj, inj, alg, op, probes, {}, 4);
        CHECK(vac.pass);
        CHECK(vac.agreement.empty());
    }
}

TEST_CASE("projectives against projectives fail on the coresolution side") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        std::vector<Module> probes{simple_module(alg, 0)};
        BalancedReport rep = check_balanced(proj, proj, alg, op, probes, {}, 4);
        CHECK_FALSE(rep.pass);
        CHECK(rep.bp1[0].built);
        // Hom(-, P2) does not keep the augmented resolution exact: the socle
        // inclusion S2 -> P1 admits no extension of the identity on S2.
        CHECK_FALSE(rep.bp1[0].acyclic);
        CHECK_FALSE(rep.bp2[0].built);
        CHECK(rep.x_admissible);
        CHECK_FALSE(rep.y_admissible);
        CHECK(rep.x_res_dim == 1);
        CHECK_FALSE(rep.y_cores_dim.has_value());
    }
}

TEST_CASE("relative ext dimensions agree from both sides") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        Module s1 = simple_module(alg, 0);
        Module s2 = simple_module(alg, 1);

        auto rows = balanced_hom_iso(proj, inj, s1, s2, 3, 4);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == std::pair<int, int>{0, 0});
        CHECK(rows[1] == std::pair<int, int>{1, 1});
        CHECK(rows[2] == std::pair<int, int>{0, 0});
        CHECK(rows[3] == std::pair<int, int>{0, 0});

        // Both sides match on every pair drawn from the indecomposables, and
        // generator arguments kill all higher degrees.
        std::vector<Module> pool{s1, s2, indec_projective(alg, 0), indec_injective(alg, op, 1)};
        for (const Module& m : pool)
            for (const Module& n : pool)
                for (auto [l, r] : balanced_hom_iso(proj, inj, m, n, 3, 4)) CHECK(l == r);
        for (const Module& n : pool) {
            auto pr = balanced_hom_iso(proj, inj, indec_projective(alg, 0), n, 3, 4);
            for (size_t d = 1; d < pr.size(); ++d) CHECK(pr[d] == std::pair<int, int>{0, 0});
        }

        // Unresolvable module: the bound is hit and reported.
        AlgebraRef dn = dual_numbers(p);
        SubcatSpec reg{"free", {regular_module(dn)}};
        CHECK_THROWS_AS(balanced_hom_iso(reg, reg, simple_module(dn, 0), simple_module(dn, 0), 2, 5),
                        check_failure);
    }
}

TEST_CASE("horseshoe fills the middle resolution of an extension") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        SubcatSpec proj = projectives_of(alg);
        Module p1 = indec_projective(alg, 0);
        Module p2 = indec_projective(alg, 1);
        Module s1 = simple_module(alg, 0);
        // The one-dimensional hom space is spanned by the socle inclusion.
        ModuleMap mono = hom_basis(p2, p1).at(0);
        REQUIRE(map_rank(mono) == p2.total_dim());
        ModuleMap epi = projective_cover(s1).onto;
        REQUIRE(map_is_zero(compose(epi, mono)));

        HorseshoeResult hs = horseshoe(proj, mono, epi, 4);
        CHECK(hs.middle.closed);
        CHECK(hs.middle.cx.lo == -1);
        CHECK(hs.middle.cx.term(0).dims == std::vector<int>{1, 2});
        CHECK(hs.middle.cx.term(-1).dims == std::vector<int>{0, 1});
        check_degreewise_exact(hs);
        CHECK(chain_map_is_zero(compose(hs.proj, hs.incl)));
        // The middle really resolves the middle module.
        CHECK(cohomology_dims(augmented_complex(hs.middle, p1)).empty());
    }
}

TEST_CASE("horseshoe with a zero end reproduces the other resolution") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        SubcatSpec proj = projectives_of(alg);
        Module s1 = simple_module(alg, 0);
        ModuleMap mono = zero_map(zero_module(alg), s1);
        ModuleMap epi = identity_map(s1);
        HorseshoeResult hs = horseshoe(proj, mono, epi, 4);
        ResolutionResult direct = resolution(proj, s1, 4);
        CHECK(complex_equal(hs.middle.cx, direct.cx));
        CHECK(map_equal(hs.middle.aug, direct.aug));
    }
}

TEST_CASE("horseshoe on a split sequence is the degreewise direct sum") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        SubcatSpec proj = projectives_of(alg);
        Module p1 = indec_projective(alg, 0);
        Module s1 = simple_module(alg, 0);
        SumDecomposition sum = direct_sum(alg, {p1, s1});
        HorseshoeResult hs = horseshoe(proj, sum.inclusions[0], sum.projections[1], 4);

        ResolutionResult r1 = resolution(proj, p1, 4);
        ResolutionResult r3 = resolution(proj, s1, 4);
        Complex expect;
        expect.alg = alg;
        expect.lo = std::min(r1.cx.lo, r3.cx.lo);
        std::vector<SumDecomposition> layers;
        for (int n = expect.lo; n <= 0; ++n) {
            layers.push_back(direct_sum(alg, {r1.cx.term(n), r3.cx.term(n)}));
            expect.terms.push_back(layers.back().total);
        }
        for (int n = expect.lo; n < 0; ++n) {
            const SumDecomposition& a = layers[n - expect.lo];
            const SumDecomposition& b = layers[n - expect.lo + 1];
            ModuleMap d = add_maps(compose(b.inclusions[0], compose(r1.cx.diff(n), a.projections[0])),
                                   compose(b.inclusions[1], compose(r3.cx.diff(n), a.projections[1])));
            expect.diffs.push_back(d);
        }
        // The canonical solver zeroes the free cross term, so the middle is
        // block diagonal on the nose, not just up to iso.
        CHECK(complex_equal(hs.middle.cx, expect));
        ModuleMap exp_aug = add_maps(compose(sum.inclusions[0], compose(r1.aug, layers.back().projections[0])),
                                     compose(sum.inclusions[1], compose(r3.aug, layers.back().projections[1])));
        CHECK(map_equal(hs.middle.aug, exp_aug));
    }
}

TEST_CASE("horseshoe rejects bad sequences") {
    AlgebraRef alg = a2(2);
    SubcatSpec proj = projectives_of(alg);
    Module p1 = indec_projective(alg, 0);
    Module p2 = indec_projective(alg, 1);
    Module s1 = simple_module(alg, 0);
    ModuleMap mono = hom_basis(p2, p1).at(0);

    // Composite is zero but the quotient map is not onto: not exact.
    CHECK_THROWS_AS(horseshoe(proj, mono, zero_map(p1, s1), 4), bad_input);

    // Exact, but the quotient lies in the subcategory while the sequence does
    // not split: the lift through the epi cannot exist.
    SubcatSpec wide = all_indecomposables_a2(alg);
    CHECK_THROWS_AS(horseshoe(wide, mono, projective_cover(s1).onto, 4), check_failure);

    // Ends that the subcategory cannot resolve within the bound.
    AlgebraRef dn = dual_numbers(2);
    SubcatSpec reg{"free", {regular_module(dn)}};
    Module s = simple_module(dn, 0);
    auto cov = projective_cover(s);
    ModuleMap socle = kernel_module(cov.onto).map;
    CHECK_THROWS_AS(horseshoe(reg, socle, cov.onto, 3), check_failure);
}

TEST_CASE("cotorsion triple over the two-vertex path algebra") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = a2(p);
        AlgebraRef op = op_of(alg);
        SubcatSpec proj = projectives_of(alg);
        SubcatSpec inj = injectives_of(alg, op);
        SubcatSpec mid = all_indecomposables_a2(alg);
        std::vector<Module> probes{simple_module(alg, 0), simple_module(alg, 1),
                                   indec_projective(alg, 0)};
        CotorsionReport rep = check_cotorsion_triple(proj, mid, inj, alg, op, probes, 3, 4);
        CHECK(rep.orthogonal);
        CHECK(rep.hereditary);
        REQUIRE(rep.completeness.size() == 3);
        for (const SpecialSequenceEvidence& ev : rep.completeness) {
            CHECK(ev.x_precover);
            CHECK(ev.z_preenvelope);
            CHECK(ev.z_precover);
            CHECK(ev.y_preenvelope);
        }
        CHECK(rep.balanced.pass);
        CHECK(rep.pass);
    }
}

TEST_CASE("cotorsion triple over the dual numbers") {
    for (std::uint32_t p : {2u, 3u}) {
        AlgebraRef alg = dual_numbers(p);
        AlgebraRef op = op_of(alg);
        Module r = regular_module(alg);
        Module s = simple_module(alg, 0);
        SubcatSpec all{"all", {r, s}};
        SubcatSpec proj{"proj", {r}};
        std::vector<Module> probes{s, r};
        CotorsionReport rep = check_cotorsion_triple(all, proj, all, alg, op, probes, 3, 4);
        CHECK(rep.orthogonal);
        CHECK(rep.hereditary);
        for (const SpecialSequenceEvidence& ev : rep.completeness) {
            CHECK(ev.x_precover);
            CHECK(ev.z_preenvelope);
            CHECK(ev.z_precover);
            CHECK(ev.y_preenvelope);
        }
        CHECK(rep.pass);
    }
}

TEST_CASE("a missing projective breaks completeness evidence") {
    AlgebraRef alg = a2(2);
    AlgebraRef op = op_of(alg);
    SubcatSpec thin{"thin", {indec_projective(alg, 0)}};
    SubcatSpec mid = all_indecomposables_a2(alg);
    SubcatSpec inj = injectives_of(alg, op);
    std::vector<Module> probes{simple_module(alg, 1)};
    CotorsionReport rep = check_cotorsion_triple(thin, mid, inj, alg, op, probes, 2, 4);
    CHECK(rep.orthogonal);
    CHECK_FALSE(rep.completeness[0].x_precover);
    CHECK_FALSE(rep.pass);
}
