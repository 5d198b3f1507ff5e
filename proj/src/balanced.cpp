#include "homalg/balanced.hpp"

#include <algorithm>

namespace homalg {

namespace {

/// mono : A -> B and epi : B -> C form a short exact sequence.
bool is_short_exact(const ModuleMap& mono, const ModuleMap& epi) {
    return module_equal(mono.tgt, epi.src) &&
           map_rank(mono) == mono.src.total_dim() &&
           map_rank(epi) == epi.tgt.total_dim() &&
           map_is_zero(compose(epi, mono)) &&
           epi.src.total_dim() == mono.src.total_dim() + epi.tgt.total_dim();
}

/// Unique factorization u with incl o u = f through a mono incl; the image of
/// f must land inside the subobject, or the construction that called this is
/// broken.
ModuleMap factor_through_mono(const ModuleMap& incl, const ModuleMap& f) {
    MapSystem sys;
    int u = sys.add_unknown(f.src, incl.src);
    MapEquation eq;
    eq.terms.push_back({u, 1, incl, std::nullopt});
    eq.rhs = f;
    sys.equations.push_back(std::move(eq));
    auto sol = sys.solve();
    if (!sol) throw invariant_violation("map does not factor through the subobject");
    return (*sol)[0];
}

}  // namespace

bool is_right_acyclic(const SubcatSpec& x, const Complex& z) {
    for (const Module& g : x.gens)
        if (!is_acyclic(hom_from(g, z))) return false;
    return true;
}

bool is_left_acyclic(const SubcatSpec& y, const Complex& z) {
    for (const Module& g : y.gens)
        if (!is_acyclic(hom_into(z, g))) return false;
    return true;
}

BalancedReport check_balanced(const SubcatSpec& x, const SubcatSpec& y,
                              AlgebraRef alg, AlgebraRef op_alg,
                              const std::vector<Module>& probes,
                              const std::vector<Complex>& complexes, int bound) {
    validate_subcat(x);
    validate_subcat(y);
    if (bound < 0) throw bad_input("negative resolution bound");
    BalancedReport rep;
    std::optional<int> xmax = 0, ymax = 0;
    for (size_t i = 0; i < probes.size(); ++i) {
        const Module& m = probes[i];
        const std::string label = "probe-" + std::to_string(i);
        right_approximation(x, m);  // BP0 evidence; certificates run inside
        left_approximation(y, m);
        ProbeCheck p1{label, false, false};
        try {
            ResolutionResult r = resolution(x, m, bound);
            if (r.closed) {
                p1.built = true;
                p1.acyclic = is_left_acyclic(y, augmented_complex(r, m));
                if (xmax) xmax = std::max(*xmax, -r.cx.lo);
            } else {
                xmax = std::nullopt;
            }
        } catch (const check_failure&) {
            xmax = std::nullopt;
        }
        rep.bp1.push_back(p1);
        ProbeCheck p2{label, false, false};
        try {
            ResolutionResult r = coresolution(y, m, bound);
            if (r.closed) {
                p2.built = true;
                p2.acyclic = is_right_acyclic(x, augmented_complex(r, m));
                if (ymax) ymax = std::max(*ymax, r.cx.hi());
            } else {
                ymax = std::nullopt;
            }
        } catch (const check_failure&) {
            ymax = std::nullopt;
        }
        rep.bp2.push_back(p2);
    }
    rep.bp0 = true;
    rep.x_admissible = contains_projectives(x, alg);
    rep.y_admissible = contains_injectives(y, alg, op_alg);
    for (const Complex& z : complexes) {
        if (!same_algebra(*z.alg, *alg)) throw bad_input("complex lives over a different algebra");
        validate_complex(z);
        rep.agreement.push_back({is_right_acyclic(x, z), is_left_acyclic(y, z)});
    }
    rep.x_res_dim = xmax;
    rep.y_cores_dim = ymax;
    rep.pass = rep.bp0 && rep.x_admissible == rep.y_admissible;
    for (const ProbeCheck& p : rep.bp1) rep.pass = rep.pass && p.built && p.acyclic;
    for (const ProbeCheck& p : rep.bp2) rep.pass = rep.pass && p.built && p.acyclic;
    for (const AcyclicAgreement& a : rep.agreement) rep.pass = rep.pass && a.right == a.left;
    return rep;
}

std::vector<std::pair<int, int>> balanced_hom_iso(const SubcatSpec& x, const SubcatSpec& y,
                                                  const Module& m, const Module& n,
                                                  int max_degree, int bound) {
    if (max_degree < 0) throw bad_input("negative degree bound");
    ResolutionResult rx = resolution(x, m, bound);
    if (!rx.closed) throw check_failure("resolution bound exceeded");
    ResolutionResult ry = coresolution(y, n, bound);
    if (!ry.closed) throw check_failure("coresolution bound exceeded");
    auto left = vec_cohomology_dims(hom_into(rx.cx, n));
    auto right = vec_cohomology_dims(hom_from(m, ry.cx));
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= max_degree; ++d) {
        int l = left.count(d) ? left.at(d) : 0;
        int r = right.count(d) ? right.at(d) : 0;
        out.emplace_back(l, r);
    }
    return out;
}

HorseshoeResult horseshoe(const SubcatSpec& x, const ModuleMap& mono,
                          const ModuleMap& epi, int bound) {
    validate_subcat(x);
    validate_map(mono);
    validate_map(epi);
    if (!is_short_exact(mono, epi)) throw bad_input("maps do not form a short exact sequence");

    HorseshoeResult out;
    out.sub = resolution(x, mono.src, bound);
    out.quot = resolution(x, epi.tgt, bound);
    if (!out.sub.closed || !out.quot.closed)
        throw check_failure("resolution bound exceeded");
    AlgebraRef alg = epi.src.alg;
    const int len = static_cast<int>(std::max(out.sub.cx.terms.size(), out.quot.cx.terms.size()));

    // Level state: the short exact sequence of kernels entering step t, with
    // the inclusions of the outer kernels into the step t-1 terms.
    ModuleMap ka = mono;  // kernel of sub side -> kernel of middle
    ModuleMap kb = epi;   // kernel of middle -> kernel of quot side
    ModuleMap isub, imid, iquot;  // kernel inclusions, unused at t = 0
    std::vector<Module> terms;
    std::vector<ModuleMap> diffs, incls, projs;  // step order, deepest last
    for (int t = 0; t < len; ++t) {
        Module xs = out.sub.cx.term(-t);
        Module xq = out.quot.cx.term(-t);
        ModuleMap tsub = t == 0 ? out.sub.aug : factor_through_mono(isub, out.sub.cx.diff(-t));
        ModuleMap tquot = t == 0 ? out.quot.aug : factor_through_mono(iquot, out.quot.cx.diff(-t));
        SumDecomposition sum = direct_sum(alg, {xs, xq});
        // Lift the quot-side approximation through the level epi; this is the
        // one step that needs the sequence to be right-x-acyclic.
        MapSystem sys;
        int uu = sys.add_unknown(xq, kb.src);
        MapEquation eq;
        eq.terms.push_back({uu, 1, kb, std::nullopt});
        eq.rhs = tquot;
        sys.equations.push_back(std::move(eq));
        auto lift = sys.solve();
        if (!lift)
            throw check_failure("cannot lift the quotient approximation; the sequence is not right-acyclic for the subcategory");
        ModuleMap theta = add_maps(compose(compose(ka, tsub), sum.projections[0]),
                                   compose((*lift)[0], sum.projections[1]));
        if (map_rank(theta) != theta.tgt.total_dim())
            throw invariant_violation("horseshoe approximation is not onto");
        if (t == 0)
            out.middle.aug = theta;
        else
            diffs.push_back(compose(imid, theta));
        terms.push_back(sum.total);
        incls.push_back(sum.inclusions[0]);
        projs.push_back(sum.projections[1]);
        SubQuotient ks = kernel_module(tsub);
        SubQuotient km = kernel_module(theta);
        SubQuotient kq = kernel_module(tquot);
        if (km.mod.total_dim() != ks.mod.total_dim() + kq.mod.total_dim())
            throw invariant_violation("horseshoe kernel dimensions drift");
        ka = factor_through_mono(km.map, compose(sum.inclusions[0], ks.map));
        kb = factor_through_mono(kq.map, compose(sum.projections[1], km.map));
        isub = ks.map;
        imid = km.map;
        iquot = kq.map;
    }
    if (!ka.tgt.is_zero()) throw invariant_violation("horseshoe kernel did not close");

    out.middle.cx.alg = alg;
    out.middle.cx.lo = -len + 1;
    out.middle.cx.terms.assign(terms.rbegin(), terms.rend());
    out.middle.cx.diffs.assign(diffs.rbegin(), diffs.rend());
    out.middle.closed = true;
    validate_complex(out.middle.cx);
    out.incl = {out.sub.cx, out.middle.cx, out.middle.cx.lo, {incls.rbegin(), incls.rend()}};
    out.proj = {out.middle.cx, out.quot.cx, out.middle.cx.lo, {projs.rbegin(), projs.rend()}};
    validate_chain_map(out.incl);
    validate_chain_map(out.proj);
    return out;
}

namespace {

struct Ses {
    ModuleMap mono, epi;
};

/// Mutual recursion that turns a one-step approximation plus the partner
/// sequence of its (co)kernel into a special sequence, via pushout or
/// pullback. Returns nothing when an approximation fails to be onto or
/// one-to-one, or when the recursion runs past the depth limit.
struct SpecialBuilder {
    const SubcatSpec& x;
    const SubcatSpec& z;
    const SubcatSpec& y;
    AlgebraRef alg;
    AlgebraRef op_alg;
    int limit;

    std::optional<Ses> precover1(const Module& m, int depth) const {
        if (depth > limit) return std::nullopt;
        if (membership(x, m)) return Ses{zero_map(zero_module(alg), m), identity_map(m)};
        ApproxResult ar = right_approximation(x, m);
        if (map_rank(ar.map) != m.total_dim()) return std::nullopt;
        SubQuotient ker = kernel_module(ar.map);
        auto env = preenvelope1(ker.mod, depth + 1);
        if (!env) return std::nullopt;
        Pushout po = pushout(ker.map, env->mono);
        return Ses{po.from_c, corner_epi(po, ar.map, env->mono.tgt)};
    }

    // 0 -> n -> Z -> X -> 0, built from the injective envelope of n.
    std::optional<Ses> preenvelope1(const Module& n, int depth) const {
        if (depth > limit) return std::nullopt;
        if (membership(z, n)) return Ses{identity_map(n), zero_map(n, zero_module(alg))};
        EnvelopeResult env = injective_envelope(n, op_alg);
        SubQuotient cok = cokernel_module(env.into);
        auto pc = precover1(cok.mod, depth + 1);
        if (!pc) return std::nullopt;
        Pullback pb = pullback(cok.map, pc->epi);
        return Ses{corner_mono(pb, env.into, pc->epi.src), pb.to_c};
    }

    // 0 -> Y -> Z -> m -> 0, built from the projective cover of m.
    std::optional<Ses> precover2(const Module& m, int depth) const {
        if (depth > limit) return std::nullopt;
        if (membership(z, m)) return Ses{zero_map(zero_module(alg), m), identity_map(m)};
        CoverResult cov = projective_cover(m);
        SubQuotient ker = kernel_module(cov.onto);
        auto env = preenvelope2(ker.mod, depth + 1);
        if (!env) return std::nullopt;
        Pushout po = pushout(ker.map, env->mono);
        return Ses{po.from_c, corner_epi(po, cov.onto, env->mono.tgt)};
    }

    std::optional<Ses> preenvelope2(const Module& n, int depth) const {
        if (depth > limit) return std::nullopt;
        if (membership(y, n)) return Ses{identity_map(n), zero_map(n, zero_module(alg))};
        ApproxResult ar = left_approximation(y, n);
        if (map_rank(ar.map) != n.total_dim()) return std::nullopt;
        SubQuotient cok = cokernel_module(ar.map);
        auto pc = precover2(cok.mod, depth + 1);
        if (!pc) return std::nullopt;
        Pullback pb = pullback(cok.map, pc->epi);
        return Ses{corner_mono(pb, ar.map, pc->epi.src), pb.to_c};
    }

    /// Map out of the pushout corner killing the from_c leg, agreeing with
    /// theta on the from_b leg.
    static ModuleMap corner_epi(const Pushout& po, const ModuleMap& theta, const Module& c) {
        MapSystem sys;
        int u = sys.add_unknown(po.mod, theta.tgt);
        MapEquation on_b;
        on_b.terms.push_back({u, 1, std::nullopt, po.from_b});
        on_b.rhs = theta;
        sys.equations.push_back(std::move(on_b));
        MapEquation on_c;
        on_c.terms.push_back({u, 1, std::nullopt, po.from_c});
        on_c.rhs = zero_map(c, theta.tgt);
        sys.equations.push_back(std::move(on_c));
        auto sol = sys.solve();
        if (!sol) throw invariant_violation("pushout corner map missing");
        return (*sol)[0];
    }

    /// Map into the pullback corner with legs (into, 0).
    static ModuleMap corner_mono(const Pullback& pb, const ModuleMap& into, const Module& c) {
        MapSystem sys;
        int u = sys.add_unknown(into.src, pb.mod);
        MapEquation on_b;
        on_b.terms.push_back({u, 1, pb.to_b, std::nullopt});
        on_b.rhs = into;
        sys.equations.push_back(std::move(on_b));
        MapEquation on_c;
        on_c.terms.push_back({u, 1, pb.to_c, std::nullopt});
        on_c.rhs = zero_map(into.src, c);
        sys.equations.push_back(std::move(on_c));
        auto sol = sys.solve();
        if (!sol) throw invariant_violation("pullback corner map missing");
        return (*sol)[0];
    }
};

bool left_orthogonal(const Module& cand, const std::vector<Module>& gens) {
    for (const Module& g : gens)
        if (ext_dim(cand, g, 1) != 0) return false;
    return true;
}

bool right_orthogonal(const std::vector<Module>& gens, const Module& cand) {
    for (const Module& g : gens)
        if (ext_dim(g, cand, 1) != 0) return false;
    return true;
}

}  // namespace

CotorsionReport check_cotorsion_triple(const SubcatSpec& x, const SubcatSpec& z,
                                       const SubcatSpec& y, AlgebraRef alg,
                                       AlgebraRef op_alg,
                                       const std::vector<Module>& probes,
                                       int ext_bound, int bound) {
    validate_subcat(x);
    validate_subcat(z);
    validate_subcat(y);
    if (ext_bound < 1) throw bad_input("ext bound must be positive");
    CotorsionReport rep;
    rep.orthogonal = true;
    rep.hereditary = true;
    for (int i = 1; i <= ext_bound; ++i) {
        bool level = true;
        for (const Module& gx : x.gens)
            for (const Module& gz : z.gens) level = level && ext_dim(gx, gz, i) == 0;
        for (const Module& gz : z.gens)
            for (const Module& gy : y.gens) level = level && ext_dim(gz, gy, i) == 0;
        if (i == 1) rep.orthogonal = level;
        rep.hereditary = rep.hereditary && level;
    }
    SpecialBuilder build{x, z, y, alg, op_alg, 2 * bound + 6};
    for (size_t i = 0; i < probes.size(); ++i) {
        const Module& m = probes[i];
        SpecialSequenceEvidence ev;
        ev.label = "probe-" + std::to_string(i);
        if (auto s = build.precover1(m, 0))
            ev.x_precover = is_short_exact(s->mono, s->epi) && module_equal(s->epi.tgt, m) &&
                            left_orthogonal(s->epi.src, z.gens) &&
                            right_orthogonal(x.gens, s->mono.src);
        if (auto s = build.preenvelope1(m, 0))
            ev.z_preenvelope = is_short_exact(s->mono, s->epi) && module_equal(s->mono.src, m) &&
                               right_orthogonal(x.gens, s->mono.tgt) &&
                               left_orthogonal(s->epi.tgt, z.gens);
        if (auto s = build.precover2(m, 0))
            ev.z_precover = is_short_exact(s->mono, s->epi) && module_equal(s->epi.tgt, m) &&
                            left_orthogonal(s->epi.src, y.gens) &&
                            right_orthogonal(z.gens, s->mono.src);
        if (auto s = build.preenvelope2(m, 0))
            ev.y_preenvelope = is_short_exact(s->mono, s->epi) && module_equal(s->mono.src, m) &&
                               right_orthogonal(z.gens, s->mono.tgt) &&
                               left_orthogonal(s->epi.tgt, y.gens);
        rep.completeness.push_back(ev);
    }
    rep.balanced = check_balanced(x, y, alg, op_alg, probes, {}, bound);
    rep.pass = rep.orthogonal && rep.hereditary && rep.balanced.pass;
    for (const SpecialSequenceEvidence& ev : rep.completeness)
        rep.pass = rep.pass && ev.x_precover && ev.z_preenvelope && ev.z_precover &&
                   ev.y_preenvelope;
    return rep;
}

}  // namespace homalg
