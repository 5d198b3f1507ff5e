#pragma once

#include <optional>

#include "homalg/quiver.hpp"

namespace homalg {

/// Finite-dimensional left module, stored as a representation: one space per
/// vertex and one matrix per arrow, action[a] : dims[source(a)] -> dims[target(a)].
struct Module {
    AlgebraRef alg;
    std::vector<int> dims;
    std::vector<Matrix> action;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

struct ModuleMap {
    Module src, tgt;
    std::vector<Matrix> blocks;  // per vertex, tgt.dims[v] x src.dims[v]
};

/// Throws unless shapes are consistent and every relation acts as zero.
void validate_module(const Module& m);
void validate_map(const ModuleMap& f);

bool module_equal(const Module& a, const Module& b);
bool map_equal(const ModuleMap& f, const ModuleMap& g);
bool map_is_zero(const ModuleMap& f);
/// Total rank over all vertex blocks; f is onto iff this equals dim tgt,
/// one-to-one iff it equals dim src.
int map_rank(const ModuleMap& f);

Module zero_module(AlgebraRef alg);
ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap identity_map(const Module& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap sub_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const ModuleMap& f, std::uint32_t c);

/// Matrix of the action of an arbitrary path (by arrow word) on m.
Matrix path_action(const Module& m, const Path& p);

/// Deterministic basis of Hom_A(m, n): solutions of the commuting-square
/// system, ordered by the free-column order of the kernel computation.
std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);

/// Brute-force-free dimension (rank computation, no basis materialization).
int hom_dim(const Module& m, const Module& n);

Module simple_module(AlgebraRef alg, int v);
Module indec_projective(AlgebraRef alg, int v);
/// Dual of the opposite projective; op_alg must be build_algebra(opposite_presentation).
Module indec_injective(AlgebraRef alg, AlgebraRef op_alg, int v);
Module regular_module(AlgebraRef alg);

/// Base-field duality to the opposite algebra: spaces kept, actions transposed.
Module dual_module(const Module& m, AlgebraRef op_alg);
/// Contravariant on maps: D(f) : D(tgt) -> D(src).
ModuleMap dual_map(const ModuleMap& f, AlgebraRef op_alg);

struct SumDecomposition {
    Module total;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
SumDecomposition direct_sum(AlgebraRef alg, const std::vector<Module>& parts);

struct SubQuotient {
    Module mod;
    ModuleMap map;  // kernel: incl into src(f); cokernel: proj out of tgt(f)
};
SubQuotient kernel_module(const ModuleMap& f);
SubQuotient cokernel_module(const ModuleMap& f);

struct Pushout {
    Module mod;
    ModuleMap from_b, from_c;  // legs of pushout of (f : A->B, g : A->C)
};
Pushout pushout(const ModuleMap& f, const ModuleMap& g);

struct Pullback {
    Module mod;
    ModuleMap to_b, to_c;  // legs of pullback of (f : B->D, g : C->D)
};
Pullback pullback(const ModuleMap& f, const ModuleMap& g);

struct CoverResult {
    Module proj;       // direct sum of indecomposable projectives
    ModuleMap onto;    // epi proj -> m
    std::vector<int> top_dims;
};
CoverResult projective_cover(const Module& m);

struct EnvelopeResult {
    Module inj;
    ModuleMap into;  // mono m -> inj
    std::vector<int> socle_dims;
};
EnvelopeResult injective_envelope(const Module& m, AlgebraRef op_alg);

Module syzygy(const Module& m, int steps);
Module cosyzygy(const Module& m, AlgebraRef op_alg, int steps);

/// Length of the projective-cover resolution, absent when it exceeds bound.
std::optional<int> projective_dimension(const Module& m, int bound);
std::optional<int> injective_dimension(const Module& m, AlgebraRef op_alg, int bound);

/// dim Ext^i(m, n) from the projective-cover resolution of m.
int ext_dim(const Module& m, const Module& n, int i);
/// Same dimension from the injective coresolution of n; classical balance.
int ext_dim_via_injective(const Module& m, const Module& n, AlgebraRef op_alg, int i);

/// Linear equation over module-map unknowns:
///   sum_t coeff_t * post_t o U_{unknown_t} o pre_t = rhs.
/// Unknown k ranges over Hom(src_k, tgt_k); solutions are canonical (free
/// coefficients set to zero), which pins every "unique up to homotopy" output.
struct MapTerm {
    int unknown = 0;
    std::uint32_t coeff = 1;
    std::optional<ModuleMap> post;  // absent = identity
    std::optional<ModuleMap> pre;
};
struct MapEquation {
    std::vector<MapTerm> terms;
    ModuleMap rhs;
};
struct MapSystem {
    std::vector<std::pair<Module, Module>> unknowns;  // (src, tgt) per unknown
    std::vector<MapEquation> equations;

    int add_unknown(const Module& src, const Module& tgt);
    /// Solves all equations simultaneously; absent iff inconsistent.
    std::optional<std::vector<ModuleMap>> solve() const;
};

}  // namespace homalg
