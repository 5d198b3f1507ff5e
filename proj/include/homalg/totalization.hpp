#pragma once

#include "homalg/approx.hpp"
#include "homalg/complex.hpp"

#include <list>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace homalg {

/// Chain map between resolutions extending f on the resolved modules:
/// res_tgt.aug o lift^0 = f o res_src.aug, and the lift commutes with the
/// differentials. One canonical solve per degree, top degree first, so the
/// output is deterministic; two lifts of the same f differ by a null homotopy.
/// res_tgt must be closed: the zero extension below its window relies on the
/// bottom differential being one-to-one.
ChainMap lift_to_chain_map(const ResolutionResult& res_src,
                           const ResolutionResult& res_tgt,
                           const ModuleMap& f);

/// Resolutions of the terms of a complex glued into one bigraded object.
/// Column i resolves the degree-i term in rows [-w, 0]. d(0,i,j) is the
/// column differential, d(1,i,j) the sign-twisted lift of the complex
/// differential, and the corrections d(l,i,j) for l >= 2 repair the failure
/// of d_1 o d_1 = 0, subject to
///     sum_{l=0..n} d(l) o d(n-l) = 0   for every n >= 0.
/// d(l,i,j) has bidegree (l, -l+1), so everything above l = w+1 vanishes.
struct QuasiBicomplex {
    AlgebraRef alg;
    SubcatSpec x;
    int w = 0;   // rows live in [-w, 0]; equals the longest column length
    int lo = 0;  // first column index
    std::vector<ResolutionResult> columns;
    /// Nonzero maps d_l^{i,j} : X^{i,j} -> X^{i+l, j-l+1} for l >= 1,
    /// keyed by (l, i, j).
    std::map<std::tuple<int, int, int>, ModuleMap> corrections;

    int hi() const { return lo + static_cast<int>(columns.size()) - 1; }
    Module term(int i, int j) const;         // zero outside the support
    ModuleMap d(int l, int i, int j) const;  // zero where nothing is stored
};

/// Recomputes sum_{l} d(l) o d(n-l) at every bidegree and every n; throws
/// check_failure on the first nonzero sum.
void validate_quasi_bicomplex(const QuasiBicomplex& qb);

/// Columns come from resolution(x, -, w); a term that does not resolve
/// within w raises check_failure. Vertical lifts and correction solves are
/// canonical, so the result is a function of (x, m, w) alone.
QuasiBicomplex build_quasi_bicomplex(const SubcatSpec& x, const Complex& m,
                                     int w);

/// Total complex T^n = (+)_{i+j=n} X^{i,j}, columns in ascending order, with
/// the augmentation eps : T -> m that is the column augmentation on row-zero
/// components and zero elsewhere. d_T restricted to X^{i,j} is the sum of all
/// d(l,i,j); the correction identities make d_T o d_T = 0 on the nose.
struct AugmentedTotal {
    QuasiBicomplex qb;
    Complex total;
    std::vector<SumDecomposition> layers;  // layers[n - total.lo] builds T^n
    ChainMap eps;
};

AugmentedTotal totalize(const QuasiBicomplex& qb, const Complex& m);

/// Cone of f is right x-acyclic: Hom(g, cone) stays exact for every
/// generator g of x. The augmentation of any AugmentedTotal passes this.
bool is_right_quasi_iso(const SubcatSpec& x, const ChainMap& f);

/// For f : c -> m with every term of c a member of x, produce g : c -> total
/// with eps o g = f exactly. The component of g into X^{n+l,-l} solves
///     sum_{i=0..l} d(i) o f_{l-i} = f_{l-1} o d_c,
/// one canonical solve per degree and level, so g is deterministic; two
/// lifts of the same f differ by a null homotopy.
ChainMap lift_through_epsilon(const AugmentedTotal& at, const ChainMap& f);

/// Resolves whole complexes against a fixed subcategory and width, keeping
/// one chosen AugmentedTotal per complex so repeated calls agree. A list
/// keeps the returned references stable while the memo grows.
struct ResolveSession {
    SubcatSpec x;
    int w = 0;
    std::list<std::pair<Complex, AugmentedTotal>> memo;
};

const AugmentedTotal& resolve_complex(ResolveSession& s, const Complex& m);

/// Image of f : m -> m2 between the memoized totals: a chain map g with
/// eps2 o g = f o eps. The construction lands on that square exactly, so the
/// witness homotopy is zero; it is kept explicit because callers compare
/// such lifts only up to homotopy.
struct ResolvedMap {
    ChainMap map;
    Homotopy witness;
};

ResolvedMap resolve_map(ResolveSession& s, const ChainMap& f);

}  // namespace homalg
