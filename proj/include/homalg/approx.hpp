#pragma once

#include "homalg/complex.hpp"

namespace homalg {

/// Additively closed subcategory presented by a finite generator list.
/// Generator order is part of the data: direct sums built from the list keep
/// it, which pins every constructed object byte for byte.
struct SubcatSpec {
    std::string name;
    std::vector<Module> gens;
};

void validate_subcat(const SubcatSpec& spec);

struct ApproxResult {
    Module obj;
    ModuleMap map;                    // right: obj -> m, left: m -> obj
    std::vector<int> multiplicities;  // copies of each generator used, in order
};

/// theta : X0 -> m with X0 a sum of generators, through which every map out of
/// a generator factors. Factoring is by construction: X0 stacks a full hom
/// basis per generator, and a rank certificate rechecks it.
ApproxResult right_approximation(const SubcatSpec& spec, const Module& m);
/// Dual: m -> Y0 through which every map into a generator factors.
ApproxResult left_approximation(const SubcatSpec& spec, const Module& m);

/// Is m a direct summand of a finite sum of generators? Decided by splitting
/// the right approximation.
bool membership(const SubcatSpec& spec, const Module& m);

/// Right approximations over the spec are onto iff it reaches every
/// indecomposable projective; dually for left approximations and injectives.
bool contains_projectives(const SubcatSpec& spec, AlgebraRef alg);
bool contains_injectives(const SubcatSpec& spec, AlgebraRef alg, AlgebraRef op_alg);

/// Resolution: cx lives in degrees [-length, 0] and aug : cx.term(0) -> m.
/// Coresolution: cx lives in [0, length] and aug : m -> cx.term(0).
/// closed reports whether the last kernel (cokernel) landed inside the
/// subcategory, so the complex is a finite resolution, not a truncation.
struct ResolutionResult {
    Complex cx;
    ModuleMap aug;
    bool closed = false;
};

ResolutionResult resolution(const SubcatSpec& spec, const Module& m, int max_len);
ResolutionResult coresolution(const SubcatSpec& spec, const Module& m, int max_len);

/// Glues m onto the resolution (m in degree 1, via aug) or coresolution
/// (m in degree -1). The result is acyclic exactly when r is a closed
/// (co)resolution of m.
Complex augmented_complex(const ResolutionResult& r, const Module& m);

/// Smallest closed (co)resolution length within bound, absent if none.
std::optional<int> resolution_dim(const SubcatSpec& spec, const Module& m, int bound);
std::optional<int> coresolution_dim(const SubcatSpec& spec, const Module& m, int bound);

}  // namespace homalg
