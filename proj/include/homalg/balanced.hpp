#pragma once

#include "homalg/approx.hpp"

namespace homalg {

/// Hom(gen, z) is acyclic for every generator of x.
bool is_right_acyclic(const SubcatSpec& x, const Complex& z);
/// Hom(z, gen) is acyclic for every generator of y.
bool is_left_acyclic(const SubcatSpec& y, const Complex& z);

struct ProbeCheck {
    std::string label;
    bool built = false;    // (co)resolution closed within the bound
    bool acyclic = false;  // augmented complex stays exact under the partner homs
};

struct AcyclicAgreement {
    bool right = false;
    bool left = false;
};

/// One report per (x, y, probe corpus) combination. pass asserts: resolutions
/// built and acyclic on both sides for every probe, right/left acyclicity
/// agrees on every supplied complex, and the two admissibility verdicts agree.
struct BalancedReport {
    bool bp0 = false;  // approximations exist on both sides for every probe
    std::vector<ProbeCheck> bp1;
    std::vector<ProbeCheck> bp2;
    bool x_admissible = false;  // every indecomposable projective is reached
    bool y_admissible = false;  // every indecomposable injective is reached
    std::vector<AcyclicAgreement> agreement;
    std::optional<int> x_res_dim;     // max over probes, absent if any exceeded bound
    std::optional<int> y_cores_dim;
    bool pass = false;
};

BalancedReport check_balanced(const SubcatSpec& x, const SubcatSpec& y,
                              AlgebraRef alg, AlgebraRef op_alg,
                              const std::vector<Module>& probes,
                              const std::vector<Complex>& complexes, int bound);

/// Cohomology dimensions of Hom(x-resolution of m, n) and Hom(m, y-coresolution
/// of n), per degree 0..max_degree. Balance predicts componentwise equality.
std::vector<std::pair<int, int>> balanced_hom_iso(const SubcatSpec& x, const SubcatSpec& y,
                                                  const Module& m, const Module& n,
                                                  int max_degree, int bound);

/// Horseshoe construction: resolutions of the outer terms of a short exact
/// sequence combine into one of the middle term, degreewise the direct sum,
/// with the evident inclusion and projection chain maps.
struct HorseshoeResult {
    ResolutionResult sub, middle, quot;
    ChainMap incl;  // sub resolution -> middle resolution, degreewise (1 0)^T
    ChainMap proj;  // middle resolution -> quot resolution, degreewise (0 1)
};

HorseshoeResult horseshoe(const SubcatSpec& x, const ModuleMap& mono,
                          const ModuleMap& epi, int bound);

/// Special approximation sequences for one probe, built by the pushout and
/// pullback recursion available once x contains the projectives and y the
/// injectives. Class membership is sampled as Ext^1 orthogonality against the
/// generator lists.
struct SpecialSequenceEvidence {
    std::string label;
    bool x_precover = false;     // 0 -> Z -> X -> m -> 0 for the pair (x, z)
    bool z_preenvelope = false;  // 0 -> m -> Z -> X -> 0
    bool z_precover = false;     // 0 -> Y -> Z -> m -> 0 for the pair (z, y)
    bool y_preenvelope = false;  // 0 -> m -> Y -> Z -> 0
};

struct CotorsionReport {
    bool orthogonal = false;  // Ext^1(x-gen, z-gen) = 0 and Ext^1(z-gen, y-gen) = 0
    bool hereditary = false;  // the same through ext-bound degrees
    std::vector<SpecialSequenceEvidence> completeness;
    BalancedReport balanced;
    bool pass = false;
};

CotorsionReport check_cotorsion_triple(const SubcatSpec& x, const SubcatSpec& z,
                                       const SubcatSpec& y, AlgebraRef alg,
                                       AlgebraRef op_alg,
                                       const std::vector<Module>& probes,
                                       int ext_bound, int bound);

}  // namespace homalg
