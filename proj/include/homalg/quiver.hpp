#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    int source = 0;
    int target = 0;
    std::string name;

    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver&) const = default;
};

/// One term of a relation: coeff * (arrow path in traversal order).
struct RelationTerm {
    std::uint32_t coeff = 1;
    std::vector<int> arrows;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

/// Quiver with admissible relations and a nilpotency bound N: every path of
/// length >= N must lie in the relation ideal. Relations are required to be
/// length-homogeneous (all terms of one relation have equal length), which
/// keeps the relation ideal graded and the bound certificate decidable.
struct AlgebraPresentation {
    Field field;
    Quiver quiver;
    std::vector<Relation> relations;
    int nilpotency_bound = 1;
    std::string name;
};

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // traversal order; empty = trivial path at source

    int length() const { return static_cast<int>(arrows.size()); }
};

/// Sparse class of a path in the quotient basis: (basis position, coefficient).
using BasisCombo = std::vector<std::pair<int, std::uint32_t>>;

class Algebra;
using AlgebraRef = std::shared_ptr<const Algebra>;

/// Finite-dimensional quotient of a path algebra. Built once, immutable.
/// The basis consists of the paths of length < N that survive reduction by the
/// graded relation ideal; reduction data is precomputed per path.
class Algebra {
public:
    const AlgebraPresentation& presentation() const { return pres_; }
    const Field& field() const { return pres_.field; }
    const Quiver& quiver() const { return pres_.quiver; }
    int vertex_count() const { return pres_.quiver.vertex_count; }
    int nilpotency_bound() const { return pres_.nilpotency_bound; }

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& paths() const { return paths_; }
    const std::vector<int>& basis_path_ids() const { return basis_; }
    const Path& basis_path(int b) const { return paths_[basis_[b]]; }

    /// Class of the stored path in basis coordinates.
    const BasisCombo& normal_form(int path_id) const { return nf_[path_id]; }
    /// Class of an arbitrary arrow word; zero when length >= N or reducible to 0.
    BasisCombo reduce_word(const std::vector<int>& arrows) const;
    /// Basis positions whose path starts at v (they span e_v A viewed on the left).
    const std::vector<int>& basis_at_source(int v) const { return by_source_[v]; }

    friend AlgebraRef build_algebra(const AlgebraPresentation& pres);

private:
    AlgebraPresentation pres_;
    std::vector<Path> paths_;                 // all paths of length < N, length-major order
    std::map<std::vector<int>, int> path_index_;
    std::vector<int> basis_;                  // path ids, increasing
    std::vector<BasisCombo> nf_;              // per path id
    std::vector<std::vector<int>> by_source_;
};

/// Validates the presentation, enumerates paths, reduces by the graded relation
/// ideal and certifies the nilpotency bound (every path of length N lies in the
/// degree-N slice of the ideal). Throws check_failure when the certificate
/// fails, i.e. the presented algebra is not finite-dimensional over the bound.
AlgebraRef build_algebra(const AlgebraPresentation& pres);

/// Arrows reversed, relation words reversed; an involution on presentations.
AlgebraPresentation opposite_presentation(const AlgebraPresentation& pres);

bool same_algebra(const Algebra& a, const Algebra& b);

}  // namespace homalg
