#include "homalg/approx.hpp"

namespace homalg {

namespace {

void require_compatible(const SubcatSpec& spec, const Module& m) {
    if (spec.gens.empty()) throw bad_input("subcategory needs at least one generator");
    for (const Module& g : spec.gens)
        if (g.alg != m.alg && !same_algebra(*g.alg, *m.alg))
            throw bad_input("subcategory generators live over a different algebra");
}

/// Rank certificate: postcomposition Hom(g, mid) -> Hom(g, m) is onto when
/// right = true, precomposition Hom(mid, g) -> Hom(m, g) is onto otherwise.
void check_factors_through(const Module& g, const Module& mid, const ModuleMap& map,
                           const Module& m, bool right) {
    const Field fld = m.alg->field();
    auto src = right ? hom_basis(g, mid) : hom_basis(mid, g);
    auto tgt = right ? hom_basis(g, m) : hom_basis(m, g);
    Matrix mat(fld, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        ModuleMap through = right ? compose(map, src[j]) : compose(src[j], map);
        Matrix col = hom_coords(through, tgt);
        for (int r = 0; r < mat.rows(); ++r) mat.set(r, static_cast<int>(j), col.at(r, 0));
    }
    if (rank(mat) != static_cast<int>(tgt.size()))
        throw invariant_violation("approximation misses a map through a generator");
}

}  // namespace

void validate_subcat(const SubcatSpec& spec) {
    if (spec.gens.empty()) throw bad_input("subcategory needs at least one generator");
    for (const Module& g : spec.gens) {
        validate_module(g);
        if (!same_algebra(*g.alg, *spec.gens[0].alg))
            throw bad_input("subcategory generators live over different algebras");
    }
}

ApproxResult right_approximation(const SubcatSpec& spec, const Module& m) {
    require_compatible(spec, m);
    std::vector<Module> parts;
    std::vector<ModuleMap> comps;
    std::vector<int> mult;
    for (const Module& g : spec.gens) {
        auto basis = hom_basis(g, m);
        mult.push_back(static_cast<int>(basis.size()));
        for (ModuleMap& b : basis) {
            parts.push_back(g);
            comps.push_back(std::move(b));
        }
    }
    SumDecomposition sum = direct_sum(m.alg, parts);
    ModuleMap theta = zero_map(sum.total, m);
    for (size_t k = 0; k < comps.size(); ++k)
        theta = add_maps(theta, compose(comps[k], sum.projections[k]));
    for (const Module& g : spec.gens) check_factors_through(g, sum.total, theta, m, true);
    return {sum.total, theta, mult};
}

ApproxResult left_approximation(const SubcatSpec& spec, const Module& m) {
    require_compatible(spec, m);
    std::vector<Module> parts;
    std::vector<ModuleMap> comps;
    std::vector<int> mult;
    for (const Module& g : spec.gens) {
        auto basis = hom_basis(m, g);
        mult.push_back(static_cast<int>(basis.size()));
        for (ModuleMap& b : basis) {
            parts.push_back(g);
            comps.push_back(std::move(b));
        }
    }
    SumDecomposition sum = direct_sum(m.alg, parts);
    ModuleMap lambda = zero_map(m, sum.total);
    for (size_t k = 0; k < comps.size(); ++k)
        lambda = add_maps(lambda, compose(sum.inclusions[k], comps[k]));
    for (const Module& g : spec.gens) check_factors_through(g, sum.total, lambda, m, false);
    return {sum.total, lambda, mult};
}

bool membership(const SubcatSpec& spec, const Module& m) {
    if (m.is_zero()) return true;
    ApproxResult ar = right_approximation(spec, m);
    MapSystem sys;
    int s = sys.add_unknown(m, ar.obj);
    MapEquation eq;
    eq.terms.push_back({s, 1, ar.map, std::nullopt});
    eq.rhs = identity_map(m);
    sys.equations.push_back(std::move(eq));
    return sys.solve().has_value();
}

bool contains_projectives(const SubcatSpec& spec, AlgebraRef alg) {
    for (int v = 0; v < alg->vertex_count(); ++v)
        if (!membership(spec, indec_projective(alg, v))) return false;
    return true;
}

bool contains_injectives(const SubcatSpec& spec, AlgebraRef alg, AlgebraRef op_alg) {
    for (int v = 0; v < alg->vertex_count(); ++v)
        if (!membership(spec, indec_injective(alg, op_alg, v))) return false;
    return true;
}

ResolutionResult resolution(const SubcatSpec& spec, const Module& m, int max_len) {
    if (max_len < 0) throw bad_input("negative resolution bound");
    ResolutionResult out;
    if (membership(spec, m)) {
        out.cx = complex_from_module(m, 0);
        out.aug = identity_map(m);
        out.closed = true;
        return out;
    }
    std::vector<Module> terms;      // X_0, X_1, ...
    std::vector<ModuleMap> diffs;   // X_t -> X_{t-1}, in step order
    Module cur = m;
    ModuleMap incl = identity_map(m);  // kernel inclusion into the last term
    while (true) {
        int t = static_cast<int>(terms.size());
        bool can_place = t <= max_len;
        if (t > 0 && can_place && membership(spec, cur)) {
            terms.push_back(cur);
            diffs.push_back(incl);
            out.closed = true;
            break;
        }
        if (!can_place) break;
        ApproxResult ar = right_approximation(spec, cur);
        if (map_rank(ar.map) != cur.total_dim())
            throw check_failure("approximation is not onto; the subcategory cannot resolve this module");
        if (t == 0)
            out.aug = ar.map;
        else
            diffs.push_back(compose(incl, ar.map));
        terms.push_back(ar.obj);
        auto ker = kernel_module(ar.map);
        cur = ker.mod;
        incl = ker.map;
        if (cur.is_zero()) {
            out.closed = true;
            break;
        }
    }
    out.cx.alg = m.alg;
    out.cx.lo = -static_cast<int>(terms.size()) + 1;
    out.cx.terms.assign(terms.rbegin(), terms.rend());
    out.cx.diffs.assign(diffs.rbegin(), diffs.rend());
    return out;
}

ResolutionResult coresolution(const SubcatSpec& spec, const Module& m, int max_len) {
    if (max_len < 0) throw bad_input("negative coresolution bound");
    ResolutionResult out;
    if (membership(spec, m)) {
        out.cx = complex_from_module(m, 0);
        out.aug = identity_map(m);
        out.closed = true;
        return out;
    }
    std::vector<Module> terms;
    std::vector<ModuleMap> diffs;
    Module cur = m;
    ModuleMap proj = identity_map(m);  // projection of the last term onto cur
    while (true) {
        int t = static_cast<int>(terms.size());
        bool can_place = t <= max_len;
        if (t > 0 && can_place && membership(spec, cur)) {
            terms.push_back(cur);
            diffs.push_back(proj);
            out.closed = true;
            break;
        }
        if (!can_place) break;
        ApproxResult ar = left_approximation(spec, cur);
        if (map_rank(ar.map) != cur.total_dim())
            throw check_failure("approximation is not one-to-one; the subcategory cannot coresolve this module");
        if (t == 0)
            out.aug = ar.map;
        else
            diffs.push_back(compose(ar.map, proj));
        terms.push_back(ar.obj);
        auto cok = cokernel_module(ar.map);
        cur = cok.mod;
        proj = cok.map;
        if (cur.is_zero()) {
            out.closed = true;
            break;
        }
    }
    out.cx.alg = m.alg;
    out.cx.lo = 0;
    out.cx.terms = std::move(terms);
    out.cx.diffs = std::move(diffs);
    return out;
}

Complex augmented_complex(const ResolutionResult& r, const Module& m) {
    Complex out = r.cx;
    if (module_equal(r.aug.src, out.term(0)) && module_equal(r.aug.tgt, m) &&
        out.hi() == 0) {
        out.terms.push_back(m);
        out.diffs.push_back(r.aug);
        return out;
    }
    if (module_equal(r.aug.src, m) && module_equal(r.aug.tgt, out.term(0)) &&
        out.lo == 0) {
        out.lo = -1;
        out.terms.insert(out.terms.begin(), m);
        out.diffs.insert(out.diffs.begin(), r.aug);
        return out;
    }
    throw invariant_violation("augmentation does not match the complex or the module");
}

std::optional<int> resolution_dim(const SubcatSpec& spec, const Module& m, int bound) {
    ResolutionResult r = resolution(spec, m, bound);
    if (!r.closed) return std::nullopt;
    return static_cast<int>(r.cx.terms.size()) - 1;
}

std::optional<int> coresolution_dim(const SubcatSpec& spec, const Module& m, int bound) {
    ResolutionResult r = coresolution(spec, m, bound);
    if (!r.closed) return std::nullopt;
    return static_cast<int>(r.cx.terms.size()) - 1;
}

}  // namespace homalg
