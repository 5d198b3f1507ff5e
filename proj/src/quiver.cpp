#include "homalg/quiver.hpp"

#include <algorithm>

namespace homalg {

namespace {

constexpr size_t kPathCap = 200000;

void validate_presentation(const AlgebraPresentation& pres) {
    const Quiver& q = pres.quiver;
    if (q.vertex_count <= 0) throw bad_input("quiver needs at least one vertex");
    for (const Arrow& a : q.arrows)
        if (a.source < 0 || a.source >= q.vertex_count || a.target < 0 ||
            a.target >= q.vertex_count)
            throw bad_input("arrow endpoint out of range");
    if (pres.nilpotency_bound < 1) throw bad_input("nilpotency bound must be >= 1");
    for (const Relation& r : pres.relations) {
        if (r.terms.empty()) throw bad_input("empty relation");
        int src = -1, tgt = -1, len = -1;
        for (const RelationTerm& t : r.terms) {
            if (t.arrows.size() < 2)
                throw bad_input("relation terms must be paths of length >= 2");
            if (t.coeff % pres.field.p == 0) throw bad_input("relation term with zero coefficient");
            int s = -1, prev = -1;
            for (int ai : t.arrows) {
                if (ai < 0 || ai >= static_cast<int>(q.arrows.size()))
                    throw bad_input("relation references unknown arrow");
                if (prev >= 0 && q.arrows[prev].target != q.arrows[ai].source)
                    throw bad_input("relation term is not a composable path");
                if (s < 0) s = q.arrows[ai].source;
                prev = ai;
            }
            int e = q.arrows[t.arrows.back()].target;
            if (src < 0) {
                src = s;
                tgt = e;
                len = static_cast<int>(t.arrows.size());
            } else if (s != src || e != tgt) {
                throw bad_input("relation terms must be parallel paths");
            } else if (static_cast<int>(t.arrows.size()) != len) {
                throw bad_input("relation terms must have equal length");
            }
        }
    }
}

}  // namespace

AlgebraRef build_algebra(const AlgebraPresentation& pres) {
    validate_presentation(pres);
    auto alg = std::make_shared<Algebra>();
    alg->pres_ = pres;
    const Quiver& q = pres.quiver;
    const Field f = pres.field;
    const int N = pres.nilpotency_bound;

    // Paths of length < N in length-major order, plus the length-N layer used
    // only by the bound certificate.
    std::vector<Path> certificate_layer;
    std::vector<int> frontier;  // ids of the previous length layer
    for (int v = 0; v < q.vertex_count; ++v) {
        alg->paths_.push_back({v, v, {}});
        frontier.push_back(v);
    }
    // Trivial paths share the empty arrow word, so only non-trivial words are keyed.
    for (int len = 1; len <= N; ++len) {
        std::vector<int> next;
        for (int pid : frontier) {
            const Path base = alg->paths_[pid];
            for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
                if (q.arrows[ai].source != base.target) continue;
                Path ext{base.source, q.arrows[ai].target, base.arrows};
                ext.arrows.push_back(ai);
                if (len < N) {
                    int id = static_cast<int>(alg->paths_.size());
                    alg->paths_.push_back(ext);
                    alg->path_index_[ext.arrows] = id;
                    next.push_back(id);
                    if (alg->paths_.size() > kPathCap)
                        throw check_failure("path count exceeds the desk-scale cap");
                } else {
                    certificate_layer.push_back(ext);
                }
            }
        }
        if (len < N)
            frontier = std::move(next);
    }

    // Group paths by (length, source, target); the relation ideal is graded and
    // respects endpoints, so reduction happens block by block.
    std::map<std::tuple<int, int, int>, std::vector<int>> blocks;
    for (int id = 0; id < static_cast<int>(alg->paths_.size()); ++id) {
        const Path& p = alg->paths_[id];
        blocks[{p.length(), p.source, p.target}].push_back(id);
    }
    auto word_lookup = [&](const std::vector<int>& w) -> int {
        if (w.empty()) throw invariant_violation("trivial path lookup by word");
        auto it = alg->path_index_.find(w);
        return it == alg->path_index_.end() ? -1 : it->second;
    };

    // Degree-L slice of the ideal: all p * r * q with total length L. Collect
    // the slice vectors for lengths < N into their blocks, and the length-N
    // slice separately for the certificate.
    std::map<std::tuple<int, int, int>, std::vector<std::vector<std::uint32_t>>> slice;
    std::map<std::pair<int, int>, std::vector<int>> cert_blocks;
    std::map<std::vector<int>, int> cert_index;
    for (int id = 0; id < static_cast<int>(certificate_layer.size()); ++id) {
        const Path& p = certificate_layer[id];
        cert_blocks[std::make_pair(p.source, p.target)].push_back(id);
        cert_index[p.arrows] = id;
    }
    std::map<std::pair<int, int>, std::vector<std::vector<std::uint32_t>>> cert_slice;

    for (const Relation& r : pres.relations) {
        const int rlen = static_cast<int>(r.terms[0].arrows.size());
        const int rsrc = pres.quiver.arrows[r.terms[0].arrows[0]].source;
        const int rtgt = pres.quiver.arrows[r.terms[0].arrows.back()].target;
        for (int lid = 0; lid < static_cast<int>(alg->paths_.size()); ++lid) {
            const Path& left = alg->paths_[lid];
            if (left.target != rsrc) continue;
            for (int rid = 0; rid < static_cast<int>(alg->paths_.size()); ++rid) {
                const Path& right = alg->paths_[rid];
                if (right.source != rtgt) continue;
                const int total = left.length() + rlen + right.length();
                if (total > N) continue;
                std::vector<int> word;
                if (total < N) {
                    auto key = std::make_tuple(total, left.source, right.target);
                    const auto& blk = blocks[key];
                    std::vector<std::uint32_t> vec(blk.size(), 0);
                    for (const RelationTerm& t : r.terms) {
                        word = left.arrows;
                        word.insert(word.end(), t.arrows.begin(), t.arrows.end());
                        word.insert(word.end(), right.arrows.begin(), right.arrows.end());
                        int pid = word_lookup(word);
                        if (pid < 0) throw invariant_violation("missing enumerated path");
                        auto pos = std::lower_bound(blk.begin(), blk.end(), pid) - blk.begin();
                        vec[pos] = f.add(vec[pos], t.coeff % f.p);
                    }
                    slice[key].push_back(std::move(vec));
                } else {
                    auto key = std::make_pair(left.source, right.target);
                    const auto& blk = cert_blocks[key];
                    std::vector<std::uint32_t> vec(blk.size(), 0);
                    for (const RelationTerm& t : r.terms) {
                        word = left.arrows;
                        word.insert(word.end(), t.arrows.begin(), t.arrows.end());
                        word.insert(word.end(), right.arrows.begin(), right.arrows.end());
                        auto it = cert_index.find(word);
                        if (it == cert_index.end())
                            throw invariant_violation("missing certificate path");
                        auto pos = std::lower_bound(blk.begin(), blk.end(), it->second) -
                                   blk.begin();
                        vec[pos] = f.add(vec[pos], t.coeff % f.p);
                    }
                    cert_slice[key].push_back(std::move(vec));
                }
            }
        }
    }

    // Certificate: the degree-N slice must span every length-N path block.
    for (const auto& [key, ids] : cert_blocks) {
        const auto it = cert_slice.find(key);
        const int have = it == cert_slice.end()
                             ? 0
                             : rank(Matrix::from_rows(f, it->second));
        if (have < static_cast<int>(ids.size()))
            throw check_failure(
                "presentation is infinite-dimensional: paths of length " +
                std::to_string(N) + " escape the relation ideal");
    }

    // Reduce each block: pivot paths are rewritten into the surviving ones.
    alg->nf_.assign(alg->paths_.size(), {});
    std::vector<int> basis_flag(alg->paths_.size(), 0);
    std::vector<std::vector<std::pair<int, std::uint32_t>>> path_class(alg->paths_.size());
    for (const auto& [key, ids] : blocks) {
        const auto it = slice.find(key);
        if (it == slice.end()) {
            for (int pid : ids) {
                basis_flag[pid] = 1;
                path_class[pid] = {{pid, 1}};
            }
            continue;
        }
        RrefResult rr = rref(Matrix::from_rows(f, it->second));
        std::vector<int> is_pivot(ids.size(), 0);
        for (int c : rr.pivots) is_pivot[c] = 1;
        for (size_t c = 0; c < ids.size(); ++c)
            if (!is_pivot[c]) {
                basis_flag[ids[c]] = 1;
                path_class[ids[c]] = {{ids[c], 1}};
            }
        for (size_t i = 0; i < rr.pivots.size(); ++i) {
            std::vector<std::pair<int, std::uint32_t>> combo;
            for (size_t c = 0; c < ids.size(); ++c)
                if (!is_pivot[c] && rr.r.at(static_cast<int>(i), static_cast<int>(c)) != 0)
                    combo.emplace_back(ids[c],
                                       f.neg(rr.r.at(static_cast<int>(i), static_cast<int>(c))));
            path_class[ids[rr.pivots[i]]] = std::move(combo);
        }
    }

    for (int id = 0; id < static_cast<int>(alg->paths_.size()); ++id)
        if (basis_flag[id]) alg->basis_.push_back(id);
    std::vector<int> basis_pos(alg->paths_.size(), -1);
    for (int b = 0; b < static_cast<int>(alg->basis_.size()); ++b)
        basis_pos[alg->basis_[b]] = b;
    for (int id = 0; id < static_cast<int>(alg->paths_.size()); ++id) {
        BasisCombo combo;
        for (auto [pid, cf] : path_class[id]) combo.emplace_back(basis_pos[pid], cf);
        alg->nf_[id] = std::move(combo);
    }
    alg->by_source_.assign(q.vertex_count, {});
    for (int b = 0; b < static_cast<int>(alg->basis_.size()); ++b)
        alg->by_source_[alg->basis_path(b).source].push_back(b);
    return alg;
}

BasisCombo Algebra::reduce_word(const std::vector<int>& arrows) const {
    if (static_cast<int>(arrows.size()) >= pres_.nilpotency_bound) return {};
    if (arrows.empty()) throw bad_input("reduce_word needs a non-trivial word");
    auto it = path_index_.find(arrows);
    if (it == path_index_.end()) throw bad_input("word is not a composable path");
    return nf_[it->second];
}

AlgebraPresentation opposite_presentation(const AlgebraPresentation& pres) {
    AlgebraPresentation op = pres;
    op.name = pres.name.empty() ? "" : pres.name + "^op";
    for (Arrow& a : op.quiver.arrows) std::swap(a.source, a.target);
    for (Relation& r : op.relations)
        for (RelationTerm& t : r.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    return op;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (&a == &b) return true;
    const AlgebraPresentation &pa = a.presentation(), &pb = b.presentation();
    if (pa.field.p != pb.field.p || !(pa.quiver == pb.quiver) ||
        pa.nilpotency_bound != pb.nilpotency_bound)
        return false;
    if (pa.relations.size() != pb.relations.size()) return false;
    for (size_t i = 0; i < pa.relations.size(); ++i) {
        const auto &ra = pa.relations[i].terms, &rb = pb.relations[i].terms;
        if (ra.size() != rb.size()) return false;
        for (size_t j = 0; j < ra.size(); ++j)
            if (ra[j].coeff != rb[j].coeff || ra[j].arrows != rb[j].arrows) return false;
    }
    return true;
}

}  // namespace homalg
