#include "homalg/complex.hpp"

#include <algorithm>

namespace homalg {

namespace {

void require_alg(const AlgebraRef& a) {
    if (!a) throw invariant_violation("complex without an algebra");
}

std::uint32_t minus_one(const AlgebraRef& a) { return a->field().p - 1; }

}  // namespace

Module Complex::term(int n) const {
    require_alg(alg);
    if (n >= lo && n <= hi()) return terms[n - lo];
    return zero_module(alg);
}

ModuleMap Complex::diff(int n) const {
    require_alg(alg);
    if (n >= lo && n < hi()) return diffs[n - lo];
    return zero_map(term(n), term(n + 1));
}

ModuleMap ChainMap::comp(int n) const {
    if (n >= lo && n < lo + static_cast<int>(comps.size())) return comps[n - lo];
    return zero_map(src.term(n), tgt.term(n));
}

ModuleMap Homotopy::comp(int n) const {
    if (n >= lo && n < lo + static_cast<int>(comps.size())) return comps[n - lo];
    return zero_map(src.term(n), tgt.term(n - 1));
}

void validate_complex(const Complex& c) {
    require_alg(c.alg);
    size_t want = c.terms.empty() ? 0 : c.terms.size() - 1;
    if (c.diffs.size() != want)
        throw bad_input("complex needs one differential per adjacent pair of terms");
    for (const Module& m : c.terms) {
        if (m.alg != c.alg && !same_algebra(*m.alg, *c.alg))
            throw bad_input("complex term over a different algebra");
        validate_module(m);
    }
    for (size_t i = 0; i < c.diffs.size(); ++i) {
        if (!module_equal(c.diffs[i].src, c.terms[i]) ||
            !module_equal(c.diffs[i].tgt, c.terms[i + 1]))
            throw bad_input("differential endpoints disagree with complex terms");
        validate_map(c.diffs[i]);
    }
    for (size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!map_is_zero(compose(c.diffs[i + 1], c.diffs[i])))
            throw check_failure("differential does not square to zero");
}

void validate_chain_map(const ChainMap& f) {
    for (size_t i = 0; i < f.comps.size(); ++i) {
        int n = f.lo + static_cast<int>(i);
        if (!module_equal(f.comps[i].src, f.src.term(n)) ||
            !module_equal(f.comps[i].tgt, f.tgt.term(n)))
            throw bad_input("chain map component endpoints disagree with its complexes");
        validate_map(f.comps[i]);
    }
    int a = std::min(f.src.lo, f.tgt.lo) - 1;
    int b = std::max(f.src.hi(), f.tgt.hi());
    for (int n = a; n <= b; ++n)
        if (!map_equal(compose(f.tgt.diff(n), f.comp(n)),
                       compose(f.comp(n + 1), f.src.diff(n))))
            throw check_failure("chain map does not commute with the differentials");
}

bool complex_is_zero(const Complex& c) {
    for (const Module& m : c.terms)
        if (!m.is_zero()) return false;
    return true;
}

bool complex_equal(const Complex& a, const Complex& b) {
    if (a.alg != b.alg && !same_algebra(*a.alg, *b.alg)) return false;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
    for (int n = lo; n <= hi; ++n) {
        if (!module_equal(a.term(n), b.term(n))) return false;
        if (n < hi && !map_equal(a.diff(n), b.diff(n))) return false;
    }
    return true;
}

bool chain_map_equal(const ChainMap& f, const ChainMap& g) {
    if (!complex_equal(f.src, g.src) || !complex_equal(f.tgt, g.tgt)) return false;
    int lo = std::min(f.lo, g.lo);
    int hi = std::max(f.lo + static_cast<int>(f.comps.size()),
                      g.lo + static_cast<int>(g.comps.size()));
    for (int n = lo; n < hi; ++n)
        if (!map_equal(f.comp(n), g.comp(n))) return false;
    return true;
}

bool chain_map_is_zero(const ChainMap& f) {
    for (const ModuleMap& c : f.comps)
        if (!map_is_zero(c)) return false;
    return true;
}

Complex zero_complex(AlgebraRef alg) {
    Complex c;
    c.alg = std::move(alg);
    return c;
}

Complex complex_from_module(const Module& m, int degree) {
    Complex c;
    c.alg = m.alg;
    c.lo = degree;
    c.terms = {m};
    return c;
}

Complex trim(const Complex& c) {
    int a = c.lo, b = c.hi();
    while (a <= b && c.term(a).is_zero()) ++a;
    while (b >= a && c.term(b).is_zero()) --b;
    Complex out = zero_complex(c.alg);
    if (a > b) return out;
    out.lo = a;
    for (int n = a; n <= b; ++n) out.terms.push_back(c.term(n));
    for (int n = a; n < b; ++n) out.diffs.push_back(c.diff(n));
    return out;
}

ChainMap zero_chain_map(const Complex& src, const Complex& tgt) {
    ChainMap f;
    f.src = src;
    f.tgt = tgt;
    return f;
}

ChainMap identity_chain_map(const Complex& c) {
    ChainMap f;
    f.src = c;
    f.tgt = c;
    f.lo = c.lo;
    for (const Module& m : c.terms) f.comps.push_back(identity_map(m));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!complex_equal(g.src, f.tgt))
        throw invariant_violation("chain map composition endpoints disagree");
    ChainMap out = zero_chain_map(f.src, g.tgt);
    out.lo = f.src.lo;
    for (int n = f.src.lo; n <= f.src.hi(); ++n)
        out.comps.push_back(compose(g.comp(n), f.comp(n)));
    return out;
}

ChainMap add_chain_maps(const ChainMap& f, const ChainMap& g) {
    if (!complex_equal(f.src, g.src) || !complex_equal(f.tgt, g.tgt))
        throw invariant_violation("chain map sum endpoints disagree");
    ChainMap out = zero_chain_map(f.src, f.tgt);
    out.lo = std::min(f.lo, g.lo);
    int hi = std::max(f.lo + static_cast<int>(f.comps.size()),
                      g.lo + static_cast<int>(g.comps.size()));
    for (int n = out.lo; n < hi; ++n)
        out.comps.push_back(add_maps(f.comp(n), g.comp(n)));
    return out;
}

ChainMap sub_chain_maps(const ChainMap& f, const ChainMap& g) {
    ChainMap neg = g;
    for (ModuleMap& c : neg.comps) c = scale_map(c, minus_one(g.src.alg));
    return add_chain_maps(f, neg);
}

ChainMap chain_map_from_map(const ModuleMap& f, int degree) {
    ChainMap out;
    out.src = complex_from_module(f.src, degree);
    out.tgt = complex_from_module(f.tgt, degree);
    out.lo = degree;
    out.comps = {f};
    return out;
}

Complex shift(const Complex& c, int k) {
    Complex out = c;
    out.lo = c.lo - k;
    if (k % 2 != 0)
        for (ModuleMap& d : out.diffs) d = scale_map(d, minus_one(c.alg));
    return out;
}

ChainMap shift_chain_map(const ChainMap& f, int k) {
    ChainMap out = f;
    out.src = shift(f.src, k);
    out.tgt = shift(f.tgt, k);
    out.lo = f.lo - k;
    return out;
}

ConeResult mapping_cone(const ChainMap& f) {
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    AlgebraRef alg = x.alg;
    int lo = std::min(x.lo - 1, y.lo), hi = std::max(x.hi() - 1, y.hi());

    std::vector<SumDecomposition> layers;
    for (int n = lo; n <= hi; ++n)
        layers.push_back(direct_sum(alg, {x.term(n + 1), y.term(n)}));

    ConeResult out;
    out.cone.alg = alg;
    out.cone.lo = lo;
    for (const auto& l : layers) out.cone.terms.push_back(l.total);
    for (int n = lo; n < hi; ++n) {
        const auto& cur = layers[n - lo];
        const auto& nxt = layers[n + 1 - lo];
        ModuleMap d = compose(nxt.inclusions[0],
                              compose(scale_map(x.diff(n + 1), minus_one(alg)),
                                      cur.projections[0]));
        d = add_maps(d, compose(nxt.inclusions[1],
                                compose(f.comp(n + 1), cur.projections[0])));
        d = add_maps(d, compose(nxt.inclusions[1],
                                compose(y.diff(n), cur.projections[1])));
        out.cone.diffs.push_back(d);
    }

    out.into = zero_chain_map(y, out.cone);
    out.into.lo = lo;
    out.onto = zero_chain_map(out.cone, shift(x, 1));
    out.onto.lo = lo;
    for (int n = lo; n <= hi; ++n) {
        out.into.comps.push_back(layers[n - lo].inclusions[1]);
        out.onto.comps.push_back(layers[n - lo].projections[0]);
    }
    return out;
}

ChainMap homotopy_boundary(const Homotopy& h) {
    ChainMap out = zero_chain_map(h.src, h.tgt);
    out.lo = std::min(h.src.lo, h.tgt.lo);
    int hi = std::max(h.src.hi(), h.tgt.hi());
    for (int n = out.lo; n <= hi; ++n)
        out.comps.push_back(add_maps(compose(h.tgt.diff(n - 1), h.comp(n)),
                                     compose(h.comp(n + 1), h.src.diff(n))));
    return out;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f) {
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    int ulo = std::max(x.lo, y.lo + 1), uhi = std::min(x.hi(), y.hi() + 1);
    int elo = std::max(x.lo, y.lo), ehi = std::min(x.hi(), y.hi());

    MapSystem sys;
    std::map<int, int> idx;
    for (int n = ulo; n <= uhi; ++n) idx[n] = sys.add_unknown(x.term(n), y.term(n - 1));
    for (int n = elo; n <= ehi; ++n) {
        MapEquation eq;
        if (idx.count(n)) eq.terms.push_back({idx[n], 1, y.diff(n - 1), std::nullopt});
        if (idx.count(n + 1)) eq.terms.push_back({idx[n + 1], 1, std::nullopt, x.diff(n)});
        eq.rhs = f.comp(n);
        sys.equations.push_back(std::move(eq));
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;

    Homotopy h;
    h.src = x;
    h.tgt = y;
    h.lo = ulo;
    for (int n = ulo; n <= uhi; ++n) h.comps.push_back(sol->at(idx[n]));
    return h;
}

std::optional<Homotopy> homotopy_between(const ChainMap& f, const ChainMap& g) {
    return null_homotopy(sub_chain_maps(f, g));
}

std::map<int, std::vector<int>> cohomology_dims(const Complex& c) {
    std::map<int, std::vector<int>> out;
    int vcount = c.alg->vertex_count();
    for (int n = c.lo; n <= c.hi(); ++n) {
        std::vector<int> h(vcount, 0);
        bool nonzero = false;
        ModuleMap dn = c.diff(n), dp = c.diff(n - 1);
        for (int v = 0; v < vcount; ++v) {
            h[v] = c.term(n).dims[v] - rank(dn.blocks[v]) - rank(dp.blocks[v]);
            if (h[v] < 0) throw invariant_violation("negative cohomology dimension");
            if (h[v] > 0) nonzero = true;
        }
        if (nonzero) out[n] = h;
    }
    return out;
}

int VecComplex::dim(int n) const {
    if (n >= lo && n <= hi()) return dims[n - lo];
    return 0;
}

Matrix VecComplex::diff(int n) const {
    if (n >= lo && n < hi()) return diffs[n - lo];
    return Matrix::zero(field, dim(n + 1), dim(n));
}

void validate_vec_complex(const VecComplex& c) {
    size_t want = c.dims.empty() ? 0 : c.dims.size() - 1;
    if (c.diffs.size() != want)
        throw bad_input("vector space complex needs one differential per adjacent pair");
    for (size_t i = 0; i < c.diffs.size(); ++i)
        if (c.diffs[i].rows() != c.dims[i + 1] || c.diffs[i].cols() != c.dims[i])
            throw bad_input("vector space differential has wrong shape");
    for (size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!(c.diffs[i + 1] * c.diffs[i]).is_zero())
            throw check_failure("vector space differential does not square to zero");
}

std::map<int, int> vec_cohomology_dims(const VecComplex& c) {
    std::map<int, int> out;
    for (int n = c.lo; n <= c.hi(); ++n) {
        int h = c.dim(n) - rank(c.diff(n)) - rank(c.diff(n - 1));
        if (h < 0) throw invariant_violation("negative cohomology dimension");
        if (h > 0) out[n] = h;
    }
    return out;
}

bool is_acyclic(const VecComplex& c) { return vec_cohomology_dims(c).empty(); }

Matrix hom_coords(const ModuleMap& f, const std::vector<ModuleMap>& basis) {
    const Field fld = f.src.alg->field();
    auto flatten = [&](const ModuleMap& m) {
        Matrix v(fld, 0, 1);
        for (const Matrix& b : m.blocks) v = v.vstack(b.vectorized());
        return v;
    };
    Matrix b = flatten(f);
    Matrix cols(fld, b.rows(), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        Matrix fj = flatten(basis[j]);
        for (int r = 0; r < b.rows(); ++r) cols.set(r, static_cast<int>(j), fj.at(r, 0));
    }
    auto sol = solve(cols, b);
    if (!sol) throw invariant_violation("map does not lie in the hom space it was expressed in");
    return *sol;
}

VecComplex hom_from(const Module& g, const Complex& c) {
    VecComplex out;
    out.field = c.alg->field();
    out.lo = c.lo;
    std::vector<std::vector<ModuleMap>> bases;
    for (int n = c.lo; n <= c.hi(); ++n) bases.push_back(hom_basis(g, c.term(n)));
    for (const auto& b : bases) out.dims.push_back(static_cast<int>(b.size()));
    for (int n = c.lo; n < c.hi(); ++n) {
        const auto& src = bases[n - c.lo];
        const auto& tgt = bases[n + 1 - c.lo];
        Matrix d = Matrix::zero(out.field, static_cast<int>(tgt.size()),
                                static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            Matrix col = hom_coords(compose(c.diff(n), src[j]), tgt);
            for (int r = 0; r < d.rows(); ++r) d.set(r, static_cast<int>(j), col.at(r, 0));
        }
        out.diffs.push_back(d);
    }
    return out;
}

VecComplex hom_into(const Complex& c, const Module& g) {
    VecComplex out;
    out.field = c.alg->field();
    out.lo = -c.hi();
    std::vector<std::vector<ModuleMap>> bases;  // bases[i] for degree out.lo + i
    for (int n = out.lo; n <= -c.lo; ++n) bases.push_back(hom_basis(c.term(-n), g));
    for (const auto& b : bases) out.dims.push_back(static_cast<int>(b.size()));
    for (int n = out.lo; n < -c.lo; ++n) {
        const auto& src = bases[n - out.lo];
        const auto& tgt = bases[n + 1 - out.lo];
        Matrix d = Matrix::zero(out.field, static_cast<int>(tgt.size()),
                                static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            Matrix col = hom_coords(compose(src[j], c.diff(-n - 1)), tgt);
            for (int r = 0; r < d.rows(); ++r) d.set(r, static_cast<int>(j), col.at(r, 0));
        }
        out.diffs.push_back(d);
    }
    return out;
}

Complex dualize_complex(const Complex& c, AlgebraRef op_alg) {
    Complex out = zero_complex(op_alg);
    out.lo = -c.hi();
    for (int n = out.lo; n <= -c.lo; ++n)
        out.terms.push_back(dual_module(c.term(-n), op_alg));
    for (int n = out.lo; n < -c.lo; ++n)
        out.diffs.push_back(dual_map(c.diff(-n - 1), op_alg));
    return out;
}

ChainMap dualize_chain_map(const ChainMap& f, AlgebraRef op_alg) {
    ChainMap out;
    out.src = dualize_complex(f.tgt, op_alg);
    out.tgt = dualize_complex(f.src, op_alg);
    int flo = f.lo, fhi = f.lo + static_cast<int>(f.comps.size()) - 1;
    out.lo = -fhi;
    for (int n = -fhi; n <= -flo; ++n) out.comps.push_back(dual_map(f.comp(-n), op_alg));
    return out;
}

Homotopy dualize_homotopy(const Homotopy& h, AlgebraRef op_alg) {
    Homotopy out;
    out.src = dualize_complex(h.tgt, op_alg);
    out.tgt = dualize_complex(h.src, op_alg);
    int hlo = h.lo, hhi = h.lo + static_cast<int>(h.comps.size()) - 1;
    out.lo = 1 - hhi;
    for (int n = 1 - hhi; n <= 1 - hlo; ++n)
        out.comps.push_back(dual_map(h.comp(1 - n), op_alg));
    return out;
}

}  // namespace homalg
