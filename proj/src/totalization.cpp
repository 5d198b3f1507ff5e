#include "homalg/totalization.hpp"

#include "homalg/balanced.hpp"

#include <algorithm>
#include <string>

namespace homalg {

namespace {

std::uint32_t minus_one(const AlgebraRef& a) { return a->field().p - 1; }

}  // namespace

Module QuasiBicomplex::term(int i, int j) const {
    if (i < lo || i > hi()) return zero_module(alg);
    return columns[i - lo].cx.term(j);
}

ModuleMap QuasiBicomplex::d(int l, int i, int j) const {
    if (l == 0) {
        if (i < lo || i > hi()) return zero_map(term(i, j), term(i, j + 1));
        return columns[i - lo].cx.diff(j);
    }
    auto it = corrections.find(std::make_tuple(l, i, j));
    if (it != corrections.end()) return it->second;
    return zero_map(term(i, j), term(i + l, j - l + 1));
}

void validate_quasi_bicomplex(const QuasiBicomplex& qb) {
    for (const ResolutionResult& r : qb.columns) validate_complex(r.cx);
    // Every d_l vanishes above level w + 1, so sums past 2(w + 1) are empty.
    for (int n = 0; n <= 2 * (qb.w + 1); ++n) {
        for (int i = qb.lo; i <= qb.hi(); ++i) {
            for (int j = -qb.w; j <= 0; ++j) {
                ModuleMap acc = zero_map(qb.term(i, j), qb.term(i + n, j - n + 2));
                for (int l = 0; l <= n; ++l)
                    acc = add_maps(acc, compose(qb.d(l, i + n - l, j - (n - l) + 1),
                                                qb.d(n - l, i, j)));
                if (!map_is_zero(acc))
                    throw check_failure("quasi-bicomplex identity fails at column " +
                                        std::to_string(i) + ", row " + std::to_string(j) +
                                        ", level " + std::to_string(n));
            }
        }
    }
}

ChainMap lift_to_chain_map(const ResolutionResult& res_src,
                           const ResolutionResult& res_tgt,
                           const ModuleMap& f) {
    if (!module_equal(f.src, res_src.aug.tgt) || !module_equal(f.tgt, res_tgt.aug.tgt))
        throw bad_input("map endpoints do not match the resolved modules");
    if (!res_tgt.closed)
        throw bad_input("target resolution is only a truncation; the lift needs a closed one");

    ChainMap g;
    g.src = res_src.cx;
    g.tgt = res_tgt.cx;
    g.lo = res_src.cx.lo;
    g.comps.assign(res_src.cx.terms.size(), ModuleMap{});

    // Top degree first: each component factors the square below it through
    // the target's augmentation or differential, one canonical solve each.
    ModuleMap above;
    for (int n = 0; n >= g.lo; --n) {
        MapSystem sys;
        int u = sys.add_unknown(res_src.cx.term(n), res_tgt.cx.term(n));
        MapEquation eq;
        if (n == 0) {
            eq.terms.push_back({u, 1, res_tgt.aug, std::nullopt});
            eq.rhs = compose(f, res_src.aug);
        } else {
            eq.terms.push_back({u, 1, res_tgt.cx.diff(n), std::nullopt});
            eq.rhs = compose(above, res_src.cx.diff(n));
        }
        sys.equations.push_back(std::move(eq));
        auto sol = sys.solve();
        if (!sol)
            throw invariant_violation("resolution lift does not factor; the target certificates are broken");
        above = (*sol)[0];
        g.comps[n - g.lo] = above;
    }
    validate_chain_map(g);
    return g;
}

QuasiBicomplex build_quasi_bicomplex(const SubcatSpec& x, const Complex& m, int w) {
    validate_subcat(x);
    validate_complex(m);
    if (w < 0) throw bad_input("width bound must be nonnegative");
    if (!x.gens.empty() && !same_algebra(*x.gens.front().alg, *m.alg))
        throw bad_input("complex and subcategory live over different algebras");

    QuasiBicomplex qb;
    qb.alg = m.alg;
    qb.x = x;
    qb.lo = m.lo;
    for (int idx = 0; idx < static_cast<int>(m.terms.size()); ++idx) {
        ResolutionResult r = resolution(x, m.terms[idx], w);
        if (!r.closed)
            throw check_failure("resolution bound exceeded: the degree " +
                                std::to_string(m.lo + idx) +
                                " term does not resolve within width " + std::to_string(w));
        qb.columns.push_back(std::move(r));
    }
    qb.w = 0;
    for (const ResolutionResult& r : qb.columns)
        qb.w = std::max(qb.w, static_cast<int>(r.cx.terms.size()) - 1);

    // Vertical lifts of the complex differential, sign-twisted per row.
    for (int idx = 0; idx + 1 < static_cast<int>(qb.columns.size()); ++idx) {
        ChainMap dv = lift_to_chain_map(qb.columns[idx], qb.columns[idx + 1], m.diffs[idx]);
        for (int j = dv.lo; j <= 0; ++j) {
            ModuleMap c = dv.comp(j);
            if (c.src.is_zero() || c.tgt.is_zero()) continue;
            if (j % 2 != 0) c = scale_map(c, minus_one(qb.alg));
            qb.corrections.emplace(std::make_tuple(1, qb.lo + idx, j), std::move(c));
        }
    }

    // Correction families level by level: d_k cancels the residue of the
    // lower families, one homotopy-style solve per column pair.
    const int cols = static_cast<int>(qb.columns.size());
    for (int k = 2; k <= std::min(qb.w + 1, cols - 1); ++k) {
        for (int n = qb.lo; n + k <= qb.hi(); ++n) {
            MapSystem sys;
            std::map<int, int> uid;
            for (int j = k - 1 - qb.w; j <= 0; ++j) {
                Module s = qb.term(n, j);
                Module t = qb.term(n + k, j - k + 1);
                if (s.is_zero() || t.is_zero()) continue;
                uid[j] = sys.add_unknown(s, t);
            }
            for (int j = k - 2 - qb.w; j <= 0; ++j) {
                MapEquation eq;
                auto itj = uid.find(j);
                if (itj != uid.end())
                    eq.terms.push_back({itj->second, 1, qb.d(0, n + k, j - k + 1), std::nullopt});
                auto itj1 = uid.find(j + 1);
                if (itj1 != uid.end())
                    eq.terms.push_back({itj1->second, 1, std::nullopt, qb.d(0, n, j)});
                ModuleMap s = zero_map(qb.term(n, j), qb.term(n + k, j - k + 2));
                for (int l = 1; l < k; ++l)
                    s = add_maps(s, compose(qb.d(l, n + k - l, j - (k - l) + 1),
                                            qb.d(k - l, n, j)));
                if (eq.terms.empty() && map_is_zero(s)) continue;
                eq.rhs = scale_map(s, minus_one(qb.alg));
                sys.equations.push_back(std::move(eq));
            }
            auto sol = sys.solve();
            if (!sol)
                throw invariant_violation("correction solve is inconsistent; a vertical lift failed to be a chain map");
            for (const auto& [row, id] : uid)
                qb.corrections.emplace(std::make_tuple(k, n, row), (*sol)[id]);
        }
    }
    validate_quasi_bicomplex(qb);
    return qb;
}

AugmentedTotal totalize(const QuasiBicomplex& qb, const Complex& m) {
    if (qb.lo != m.lo || qb.columns.size() != m.terms.size())
        throw bad_input("quasi-bicomplex columns do not line up with the complex");
    for (int i = 0; i < static_cast<int>(qb.columns.size()); ++i)
        if (!module_equal(qb.columns[i].aug.tgt, m.terms[i]))
            throw bad_input("column " + std::to_string(qb.lo + i) +
                            " does not resolve the matching term");

    AugmentedTotal at;
    at.qb = qb;
    if (qb.columns.empty()) {
        at.total = zero_complex(m.alg);
        at.eps = zero_chain_map(at.total, m);
        return at;
    }

    const int tlo = qb.lo - qb.w;
    const int thi = qb.hi();
    for (int n = tlo; n <= thi; ++n) {
        std::vector<Module> parts;
        for (int i = std::max(qb.lo, n); i <= std::min(thi, n + qb.w); ++i)
            parts.push_back(qb.term(i, n - i));
        at.layers.push_back(direct_sum(qb.alg, parts));
    }

    Complex total;
    total.alg = qb.alg;
    total.lo = tlo;
    for (const SumDecomposition& layer : at.layers) total.terms.push_back(layer.total);
    for (int n = tlo; n < thi; ++n) {
        const SumDecomposition& here = at.layers[n - tlo];
        const SumDecomposition& next = at.layers[n + 1 - tlo];
        const int first_here = std::max(qb.lo, n);
        const int first_next = std::max(qb.lo, n + 1);
        ModuleMap dd = zero_map(here.total, next.total);
        for (int a = 0; a < static_cast<int>(here.inclusions.size()); ++a) {
            const int i = first_here + a;
            const int j = n - i;
            for (int l = 0; l <= qb.w + 1; ++l) {
                const int b = i + l - first_next;
                if (b < 0 || b >= static_cast<int>(next.inclusions.size())) continue;
                ModuleMap comp = qb.d(l, i, j);
                if (comp.src.is_zero() || comp.tgt.is_zero()) continue;
                dd = add_maps(dd, compose(next.inclusions[b],
                                          compose(comp, here.projections[a])));
            }
        }
        total.diffs.push_back(dd);
    }
    validate_complex(total);

    ChainMap eps;
    eps.src = total;
    eps.tgt = m;
    eps.lo = tlo;
    for (int n = tlo; n <= thi; ++n) {
        if (n >= qb.lo) {
            // row zero is the first summand of its layer
            eps.comps.push_back(compose(qb.columns[n - qb.lo].aug,
                                        at.layers[n - tlo].projections[0]));
        } else {
            eps.comps.push_back(zero_map(at.layers[n - tlo].total, m.term(n)));
        }
    }
    validate_chain_map(eps);

    at.total = std::move(total);
    at.eps = std::move(eps);
    return at;
}

bool is_right_quasi_iso(const SubcatSpec& x, const ChainMap& f) {
    return is_right_acyclic(x, mapping_cone(f).cone);
}

ChainMap lift_through_epsilon(const AugmentedTotal& at, const ChainMap& f) {
    if (!complex_equal(f.tgt, at.eps.tgt))
        throw bad_input("the lift target must be the complex the total resolves");
    const Complex& c = f.src;
    for (const Module& t : c.terms)
        if (!t.is_zero() && !membership(at.qb.x, t))
            throw bad_input("a source term is not a member of the subcategory");

    const QuasiBicomplex& qb = at.qb;
    std::map<std::pair<int, int>, ModuleMap> fl;  // (level, degree) -> component
    auto fl_at = [&](int l, int n) {
        auto it = fl.find({l, n});
        if (it != fl.end()) return it->second;
        return zero_map(c.term(n), qb.term(n + l, -l));
    };
    for (int l = 0; l <= qb.w; ++l) {
        for (int n = c.lo; n <= c.hi(); ++n) {
            Module src = c.term(n);
            Module tgt = qb.term(n + l, -l);
            if (src.is_zero()) continue;
            ModuleMap rhs;
            if (l == 0) {
                rhs = f.comp(n);
            } else {
                rhs = compose(fl_at(l - 1, n + 1), c.diff(n));
                for (int i = 1; i <= l; ++i)
                    rhs = sub_maps(rhs, compose(qb.d(i, n + l - i, -(l - i)), fl_at(l - i, n)));
            }
            if (tgt.is_zero()) {
                // the defining equation has no unknown left, so the residue
                // must already be gone
                if (!map_is_zero(rhs))
                    throw invariant_violation("lift residue survives past the column bottom");
                continue;
            }
            MapSystem sys;
            int u = sys.add_unknown(src, tgt);
            MapEquation eq;
            if (l == 0)
                eq.terms.push_back({u, 1, qb.columns[n - qb.lo].aug, std::nullopt});
            else
                eq.terms.push_back({u, 1, qb.d(0, n + l, -l), std::nullopt});
            eq.rhs = rhs;
            sys.equations.push_back(std::move(eq));
            auto sol = sys.solve();
            if (!sol)
                throw invariant_violation("lift through the augmentation is stuck; the tower certificates are broken");
            fl.emplace(std::make_pair(l, n), (*sol)[0]);
        }
    }

    ChainMap g;
    g.src = c;
    g.tgt = at.total;
    g.lo = c.lo;
    for (int n = c.lo; n <= c.hi(); ++n) {
        if (n < at.total.lo || n > at.total.hi()) {
            g.comps.push_back(zero_map(c.term(n), at.total.term(n)));
            continue;
        }
        const SumDecomposition& layer = at.layers[n - at.total.lo];
        const int first = std::max(qb.lo, n);
        ModuleMap acc = zero_map(c.term(n), layer.total);
        for (int b = 0; b < static_cast<int>(layer.inclusions.size()); ++b) {
            const int l = first + b - n;
            if (l > qb.w) continue;
            ModuleMap comp = fl_at(l, n);
            if (comp.src.is_zero() || comp.tgt.is_zero()) continue;
            acc = add_maps(acc, compose(layer.inclusions[b], comp));
        }
        g.comps.push_back(acc);
    }
    validate_chain_map(g);
    if (!chain_map_equal(compose(at.eps, g), f))
        throw invariant_violation("lift through the augmentation missed its defining square");
    return g;
}

const AugmentedTotal& resolve_complex(ResolveSession& s, const Complex& m) {
    for (const auto& e : s.memo)
        if (complex_equal(e.first, m)) return e.second;
    QuasiBicomplex qb = build_quasi_bicomplex(s.x, m, s.w);
    s.memo.emplace_back(m, totalize(qb, m));
    return s.memo.back().second;
}

ResolvedMap resolve_map(ResolveSession& s, const ChainMap& f) {
    const AugmentedTotal& src = resolve_complex(s, f.src);
    const AugmentedTotal& tgt = resolve_complex(s, f.tgt);
    ResolvedMap out;
    out.map = lift_through_epsilon(tgt, compose(f, src.eps));
    // eps' o map = f o eps holds exactly, so the square's homotopy witness
    // is zero in every degree.
    out.witness.src = src.total;
    out.witness.tgt = f.tgt;
    out.witness.lo = src.total.lo;
    for (int n = src.total.lo; n <= src.total.hi(); ++n)
        out.witness.comps.push_back(zero_map(src.total.term(n), f.tgt.term(n - 1)));
    return out;
}

}  // namespace homalg
