#include "homalg/equiv.hpp"

#include "homalg/balanced.hpp"

#include <string>

namespace homalg {

namespace {

void require_member_terms(const SubcatSpec& x, const Complex& c) {
    for (int n = c.lo; n <= c.hi(); ++n)
        if (!c.term(n).is_zero() && !membership(x, c.term(n)))
            throw bad_input("a term of the complex is not a member of the source side");
}

Homotopy zero_witness(const Complex& src, const Complex& tgt) {
    Homotopy h;
    h.src = src;
    h.tgt = tgt;
    h.lo = src.lo;
    for (int n = src.lo; n <= src.hi(); ++n)
        h.comps.push_back(zero_map(src.term(n), tgt.term(n - 1)));
    return h;
}

}  // namespace

std::optional<HomotopyInverse> homotopy_inverse(const ChainMap& f) {
    ConeResult k = mapping_cone(f);
    std::optional<Homotopy> contraction = null_homotopy(identity_chain_map(k.cone));
    if (!contraction) return std::nullopt;
    // Cone degree n splits as src^(n+1) (+) tgt^n with differential
    // [[-d_src, 0], [f, d_tgt]]. In that convention the contraction's
    // corner block tgt^n -> src^n is a chain map on the nose, and it is a
    // two-sided inverse up to the other blocks.
    ChainMap inv;
    inv.src = f.tgt;
    inv.tgt = f.src;
    inv.lo = f.tgt.lo;
    for (int n = f.tgt.lo; n <= f.tgt.hi(); ++n)
        inv.comps.push_back(compose(k.onto.comp(n - 1),
                                    compose(contraction->comp(n), k.into.comp(n))));
    validate_chain_map(inv);
    auto left = homotopy_between(compose(inv, f), identity_chain_map(f.src));
    auto right = homotopy_between(compose(f, inv), identity_chain_map(f.tgt));
    if (!left || !right)
        throw invariant_violation("cone contraction did not produce a two-sided inverse");
    return HomotopyInverse{inv, *left, *right};
}

EquivSession make_equiv_session(const SubcatSpec& x, const SubcatSpec& y, int w) {
    validate_subcat(x);
    validate_subcat(y);
    if (w < 0) throw bad_input("session width must be nonnegative");
    EquivSession s;
    s.x = x;
    s.y = y;
    s.alg = x.gens.front().alg;
    if (!same_algebra(*s.alg, *y.gens.front().alg))
        throw bad_input("the two sides of the pair live over different algebras");
    s.op = build_algebra(opposite_presentation(s.alg->presentation()));
    SubcatSpec dy{y.name, {}};
    for (const Module& g : y.gens) dy.gens.push_back(dual_module(g, s.op));
    s.forward = ResolveSession{dy, w, {}};
    s.back = ResolveSession{x, w, {}};
    return s;
}

CoresolvedComplex coresolve(EquivSession& s, const Complex& c) {
    validate_complex(c);
    if (!same_algebra(*c.alg, *s.alg))
        throw bad_input("complex is over a different algebra than the session");
    require_member_terms(s.x, c);
    Complex dc = dualize_complex(c, s.op);
    const AugmentedTotal& at = resolve_complex(s.forward, dc);
    CoresolvedComplex out;
    out.image = dualize_complex(at.total, s.alg);
    out.into_image = dualize_chain_map(at.eps, s.alg);
    if (!complex_equal(out.into_image.src, c))
        throw invariant_violation("dualizing twice did not return the original complex");
    return out;
}

ChainMap factor_through_coresolution(EquivSession& s, const ChainMap& r) {
    validate_chain_map(r);
    if (!same_algebra(*r.src.alg, *s.alg))
        throw bad_input("chain map is over a different algebra than the session");
    require_member_terms(s.x, r.src);
    Complex da = dualize_complex(r.src, s.op);
    const AugmentedTotal& at = resolve_complex(s.forward, da);
    ChainMap g = lift_through_epsilon(at, dualize_chain_map(r, s.op));
    ChainMap out = dualize_chain_map(g, s.alg);
    ChainMap into = dualize_chain_map(at.eps, s.alg);
    if (!chain_map_equal(compose(out, into), r))
        throw invariant_violation("factorization through the coresolution missed its square");
    return out;
}

TransportedMap transport_map(EquivSession& s, const ChainMap& f) {
    validate_chain_map(f);
    CoresolvedComplex tgt = coresolve(s, f.tgt);
    TransportedMap out;
    out.map = factor_through_coresolution(s, compose(tgt.into_image, f));
    out.witness = zero_witness(f.src, tgt.image);
    return out;
}

EquivReport verify_equivalence(EquivSession& s, const std::vector<Complex>& x_side,
                               const std::vector<Complex>& y_side) {
    EquivReport rep;
    rep.all_ok = true;
    for (size_t i = 0; i < x_side.size(); ++i) {
        const Complex& c = x_side[i];
        EquivWitness w;
        w.object = "x-complex " + std::to_string(i);
        CoresolvedComplex e = coresolve(s, c);
        w.quasi_iso_ok = is_left_acyclic(s.y, mapping_cone(e.into_image).cone);
        const AugmentedTotal& round = resolve_complex(s.back, e.image);
        ChainMap u = lift_through_epsilon(round, e.into_image);
        w.inverse_ok = homotopy_inverse(u).has_value();
        rep.all_ok = rep.all_ok && w.quasi_iso_ok && w.inverse_ok;
        rep.units.push_back(std::move(w));
    }
    for (size_t i = 0; i < y_side.size(); ++i) {
        const Complex& d = y_side[i];
        EquivWitness w;
        w.object = "y-complex " + std::to_string(i);
        const AugmentedTotal& at = resolve_complex(s.back, d);
        w.quasi_iso_ok = is_right_quasi_iso(s.x, at.eps);
        ChainMap back = factor_through_coresolution(s, at.eps);
        w.inverse_ok = homotopy_inverse(back).has_value();
        rep.all_ok = rep.all_ok && w.quasi_iso_ok && w.inverse_ok;
        rep.counits.push_back(std::move(w));
    }
    return rep;
}

}  // namespace homalg
