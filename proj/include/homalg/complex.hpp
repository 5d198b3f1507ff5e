#pragma once

#include <map>

#include "homalg/module.hpp"

namespace homalg {

/// Cochain complex of modules, supported on degrees [lo, hi()].
/// terms[i] sits in degree lo + i, diffs[i] : terms[i] -> terms[i+1].
/// term(n) and diff(n) extend by zero outside the stored window.
struct Complex {
    AlgebraRef alg;
    int lo = 0;
    std::vector<Module> terms;
    std::vector<ModuleMap> diffs;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    Module term(int n) const;
    ModuleMap diff(int n) const;
};

/// Degreewise map f^n : src.term(n) -> tgt.term(n) commuting with differentials.
struct ChainMap {
    Complex src, tgt;
    int lo = 0;
    std::vector<ModuleMap> comps;  // comps[i] is the component in degree lo + i

    ModuleMap comp(int n) const;
};

/// Degree -1 collection h^n : src.term(n) -> tgt.term(n - 1).
struct Homotopy {
    Complex src, tgt;
    int lo = 0;
    std::vector<ModuleMap> comps;

    ModuleMap comp(int n) const;
};

void validate_complex(const Complex& c);
void validate_chain_map(const ChainMap& f);

bool complex_is_zero(const Complex& c);
bool complex_equal(const Complex& a, const Complex& b);
bool chain_map_equal(const ChainMap& f, const ChainMap& g);
bool chain_map_is_zero(const ChainMap& f);

Complex zero_complex(AlgebraRef alg);
Complex complex_from_module(const Module& m, int degree);
/// Drops zero terms at both ends (canonical support window).
Complex trim(const Complex& c);

ChainMap zero_chain_map(const Complex& src, const Complex& tgt);
ChainMap identity_chain_map(const Complex& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap add_chain_maps(const ChainMap& f, const ChainMap& g);
ChainMap sub_chain_maps(const ChainMap& f, const ChainMap& g);
/// Promotes a single map to a chain map between one-term complexes.
ChainMap chain_map_from_map(const ModuleMap& f, int degree);

/// shift(c, k)^n = c^(n+k) with differential scaled by (-1)^k.
Complex shift(const Complex& c, int k);
ChainMap shift_chain_map(const ChainMap& f, int k);

struct ConeResult {
    Complex cone;   // degree n part: src.term(n+1) (+) tgt.term(n)
    ChainMap into;  // tgt -> cone
    ChainMap onto;  // cone -> shift(src, 1)
};
/// Mapping cone with differential [[-d_src, 0], [f, d_tgt]].
ConeResult mapping_cone(const ChainMap& f);

/// d o h + h o d as a chain map (its square-commuting holds automatically).
ChainMap homotopy_boundary(const Homotopy& h);

/// One global linear solve for h with f = d o h + h o d; canonical when present.
std::optional<Homotopy> null_homotopy(const ChainMap& f);
std::optional<Homotopy> homotopy_between(const ChainMap& f, const ChainMap& g);

/// Per-degree, per-vertex cohomology dimensions; degrees with zero cohomology
/// are omitted.
std::map<int, std::vector<int>> cohomology_dims(const Complex& c);

/// Cochain complex of plain vector spaces (used for hom complexes).
struct VecComplex {
    Field field{2};
    int lo = 0;
    std::vector<int> dims;
    std::vector<Matrix> diffs;  // diffs[i] : dims[i] -> dims[i + 1]

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim(int n) const;
    Matrix diff(int n) const;
};

void validate_vec_complex(const VecComplex& c);
std::map<int, int> vec_cohomology_dims(const VecComplex& c);
bool is_acyclic(const VecComplex& c);

/// Hom(g, c): degree n term Hom(g, c^n), differential = postcompose with d.
VecComplex hom_from(const Module& g, const Complex& c);
/// Hom(c, g): degree n term Hom(c^(-n), g), differential = precompose with d.
VecComplex hom_into(const Complex& c, const Module& g);

/// Coordinates of f in the hom basis of Hom(f.src, f.tgt).
Matrix hom_coords(const ModuleMap& f, const std::vector<ModuleMap>& basis);

/// Degreewise dual: dualize(c)^n = D(c^(-n)) over the opposite algebra, with
/// transposed differentials and no sign. An involution on complexes; chain
/// maps and homotopies dualize contravariantly.
Complex dualize_complex(const Complex& c, AlgebraRef op_alg);
ChainMap dualize_chain_map(const ChainMap& f, AlgebraRef op_alg);
Homotopy dualize_homotopy(const Homotopy& h, AlgebraRef op_alg);

}  // namespace homalg
