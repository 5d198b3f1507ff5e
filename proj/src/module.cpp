#include "homalg/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace homalg {

namespace {

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.field.p != b.field.p || !(a.quiver == b.quiver) ||
        a.nilpotency_bound != b.nilpotency_bound || a.relations.size() != b.relations.size())
        return false;
    for (size_t i = 0; i < a.relations.size(); ++i) {
        const auto &ra = a.relations[i].terms, &rb = b.relations[i].terms;
        if (ra.size() != rb.size()) return false;
        for (size_t j = 0; j < ra.size(); ++j)
            if (ra[j].coeff != rb[j].coeff || ra[j].arrows != rb[j].arrows) return false;
    }
    return true;
}

void require_same_algebra(const Module& a, const Module& b) {
    if (!same_algebra(*a.alg, *b.alg)) throw bad_input("modules over different algebras");
}

void require_opposite(const Algebra& alg, const Algebra& op) {
    if (!same_presentation(opposite_presentation(alg.presentation()), op.presentation()))
        throw bad_input("second algebra is not the opposite of the first");
}

// Offsets of vec(f_v) inside the concatenated unknown vector of a hom system.
std::vector<int> hom_offsets(const Module& m, const Module& n) {
    std::vector<int> off(m.alg->vertex_count() + 1, 0);
    for (int v = 0; v < m.alg->vertex_count(); ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    return off;
}

// Commuting-square constraints for f : m -> n as rows over the unknown entries.
Matrix hom_constraints(const Module& m, const Module& n) {
    const Field f = m.alg->field();
    const auto& arrows = m.alg->quiver().arrows;
    auto off = hom_offsets(m, n);
    int total_rows = 0;
    for (const Arrow& a : arrows) total_rows += n.dims[a.target] * m.dims[a.source];
    Matrix sys(f, total_rows, off.back());
    int row = 0;
    for (size_t ai = 0; ai < arrows.size(); ++ai) {
        const int u = arrows[ai].source, w = arrows[ai].target;
        // vec(f_w * Ma) - vec(Na * f_u) = 0
        Matrix left = kron(Matrix::identity(f, n.dims[w]), m.action[ai].transpose());
        Matrix right = kron(n.action[ai], Matrix::identity(f, m.dims[u]));
        sys.paste(row, off[w], left);
        for (int r = 0; r < right.rows(); ++r)
            for (int c = 0; c < right.cols(); ++c)
                sys.set(row + r, off[u] + c,
                        f.sub(sys.at(row + r, off[u] + c), right.at(r, c)));
        row += left.rows();
    }
    return sys;
}

ModuleMap unpack_hom_vector(const Module& m, const Module& n, const Matrix& col) {
    auto off = hom_offsets(m, n);
    ModuleMap h{m, n, {}};
    for (int v = 0; v < m.alg->vertex_count(); ++v) {
        Matrix blk(m.alg->field(), n.dims[v], m.dims[v]);
        for (int r = 0; r < n.dims[v]; ++r)
            for (int c = 0; c < m.dims[v]; ++c)
                blk.set(r, c, col.at(off[v] + r * m.dims[v] + c, 0));
        h.blocks.push_back(blk);
    }
    return h;
}

Matrix pack_map(const ModuleMap& h) {
    Matrix out(h.src.alg->field(), 0, 1);
    for (const Matrix& b : h.blocks) out = out.vstack(b.vectorized());
    return out;
}

}  // namespace

int Module::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void validate_module(const Module& m) {
    if (!m.alg) throw bad_input("module without algebra");
    const Quiver& q = m.alg->quiver();
    if (static_cast<int>(m.dims.size()) != q.vertex_count ||
        m.action.size() != q.arrows.size())
        throw bad_input("module shape does not match quiver");
    for (int d : m.dims)
        if (d < 0) throw bad_input("negative dimension");
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (m.action[a].rows() != m.dims[q.arrows[a].target] ||
            m.action[a].cols() != m.dims[q.arrows[a].source] ||
            m.action[a].field().p != m.alg->field().p)
            throw bad_input("action matrix shape mismatch");
    for (const Relation& r : m.alg->presentation().relations) {
        const RelationTerm& t0 = r.terms[0];
        const int src = q.arrows[t0.arrows[0]].source;
        const int tgt = q.arrows[t0.arrows.back()].target;
        Matrix acc(m.alg->field(), m.dims[tgt], m.dims[src]);
        for (const RelationTerm& t : r.terms) {
            Path p{src, tgt, t.arrows};
            acc = acc + path_action(m, p).scaled(t.coeff);
        }
        if (!acc.is_zero()) throw check_failure("relation does not act as zero");
    }
}

void validate_map(const ModuleMap& f) {
    require_same_algebra(f.src, f.tgt);
    const Quiver& q = f.src.alg->quiver();
    if (static_cast<int>(f.blocks.size()) != q.vertex_count)
        throw bad_input("map block count mismatch");
    for (int v = 0; v < q.vertex_count; ++v)
        if (f.blocks[v].rows() != f.tgt.dims[v] || f.blocks[v].cols() != f.src.dims[v])
            throw bad_input("map block shape mismatch");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const int u = q.arrows[a].source, w = q.arrows[a].target;
        if (!(f.blocks[w] * f.src.action[a] == f.tgt.action[a] * f.blocks[u]))
            throw check_failure("map does not commute with the action");
    }
}

bool module_equal(const Module& a, const Module& b) {
    return same_algebra(*a.alg, *b.alg) && a.dims == b.dims && a.action == b.action;
}

bool map_equal(const ModuleMap& f, const ModuleMap& g) {
    return module_equal(f.src, g.src) && module_equal(f.tgt, g.tgt) && f.blocks == g.blocks;
}

bool map_is_zero(const ModuleMap& f) {
    return std::all_of(f.blocks.begin(), f.blocks.end(),
                       [](const Matrix& b) { return b.is_zero(); });
}

int map_rank(const ModuleMap& f) {
    int r = 0;
    for (const Matrix& b : f.blocks) r += rank(b);
    return r;
}

Module zero_module(AlgebraRef alg) {
    Module z{alg, std::vector<int>(alg->vertex_count(), 0), {}};
    for (const Arrow& a : alg->quiver().arrows)
        z.action.push_back(Matrix(alg->field(), z.dims[a.target], z.dims[a.source]));
    return z;
}

ModuleMap zero_map(const Module& src, const Module& tgt) {
    require_same_algebra(src, tgt);
    ModuleMap f{src, tgt, {}};
    for (int v = 0; v < src.alg->vertex_count(); ++v)
        f.blocks.push_back(Matrix(src.alg->field(), tgt.dims[v], src.dims[v]));
    return f;
}

ModuleMap identity_map(const Module& m) {
    ModuleMap f{m, m, {}};
    for (int v = 0; v < m.alg->vertex_count(); ++v)
        f.blocks.push_back(Matrix::identity(m.alg->field(), m.dims[v]));
    return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (!module_equal(g.src, f.tgt)) throw bad_input("compose shape mismatch");
    ModuleMap h{f.src, g.tgt, {}};
    for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h{f.src, f.tgt, {}};
    for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
    return h;
}

ModuleMap sub_maps(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h{f.src, f.tgt, {}};
    for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] - g.blocks[v]);
    return h;
}

ModuleMap scale_map(const ModuleMap& f, std::uint32_t c) {
    ModuleMap h{f.src, f.tgt, {}};
    for (const Matrix& b : f.blocks) h.blocks.push_back(b.scaled(c));
    return h;
}

Matrix path_action(const Module& m, const Path& p) {
    Matrix act = Matrix::identity(m.alg->field(), m.dims[p.source]);
    for (int ai : p.arrows) act = m.action[ai] * act;
    return act;
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    Matrix sys = hom_constraints(m, n);
    Matrix k = kernel_basis(sys);
    std::vector<ModuleMap> out;
    for (int j = 0; j < k.cols(); ++j)
        out.push_back(unpack_hom_vector(m, n, k.submatrix(0, j, k.rows(), 1)));
    return out;
}

int hom_dim(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    Matrix sys = hom_constraints(m, n);
    return sys.cols() - rank(sys);
}

Module simple_module(AlgebraRef alg, int v) {
    Module s = zero_module(alg);
    s.dims[v] = 1;
    for (size_t a = 0; a < alg->quiver().arrows.size(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        s.action[a] = Matrix(alg->field(), s.dims[ar.target], s.dims[ar.source]);
    }
    return s;
}

Module indec_projective(AlgebraRef alg, int v) {
    // Basis paths starting at v, grouped by target vertex; an arrow acts by
    // appending itself and reducing to normal form.
    const auto& pos = alg->basis_at_source(v);
    std::vector<std::vector<int>> by_target(alg->vertex_count());
    std::vector<int> local(alg->dimension(), -1);
    for (int b : pos) {
        int t = alg->basis_path(b).target;
        local[b] = static_cast<int>(by_target[t].size());
        by_target[t].push_back(b);
    }
    Module p{alg, {}, {}};
    for (int u = 0; u < alg->vertex_count(); ++u)
        p.dims.push_back(static_cast<int>(by_target[u].size()));
    for (size_t ai = 0; ai < alg->quiver().arrows.size(); ++ai) {
        const Arrow& a = alg->quiver().arrows[ai];
        Matrix act(alg->field(), p.dims[a.target], p.dims[a.source]);
        for (int b : by_target[a.source]) {
            std::vector<int> word = alg->basis_path(b).arrows;
            word.push_back(static_cast<int>(ai));
            for (auto [bb, cf] : alg->reduce_word(word)) {
                if (alg->basis_path(bb).source != v || local[bb] < 0)
                    throw invariant_violation("reduction left the source block");
                act.set(local[bb], local[b], cf);
            }
        }
        p.action.push_back(act);
    }
    return p;
}

Module indec_injective(AlgebraRef alg, AlgebraRef op_alg, int v) {
    require_opposite(*alg, *op_alg);
    return dual_module(indec_projective(op_alg, v), alg);
}

Module regular_module(AlgebraRef alg) {
    std::vector<Module> parts;
    for (int v = 0; v < alg->vertex_count(); ++v) parts.push_back(indec_projective(alg, v));
    return direct_sum(alg, parts).total;
}

Module dual_module(const Module& m, AlgebraRef op_alg) {
    require_opposite(*m.alg, *op_alg);
    Module d{op_alg, m.dims, {}};
    for (const Matrix& a : m.action) d.action.push_back(a.transpose());
    return d;
}

ModuleMap dual_map(const ModuleMap& f, AlgebraRef op_alg) {
    ModuleMap d{dual_module(f.tgt, op_alg), dual_module(f.src, op_alg), {}};
    for (const Matrix& b : f.blocks) d.blocks.push_back(b.transpose());
    return d;
}

SumDecomposition direct_sum(AlgebraRef alg, const std::vector<Module>& parts) {
    const int nv = alg->vertex_count();
    SumDecomposition out;
    out.total = zero_module(alg);
    std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(nv, 0));
    for (size_t i = 0; i < parts.size(); ++i) {
        require_same_algebra(parts[i], out.total);
        for (int v = 0; v < nv; ++v) {
            offsets[i][v] = out.total.dims[v];
            out.total.dims[v] += parts[i].dims[v];
        }
    }
    for (size_t ai = 0; ai < alg->quiver().arrows.size(); ++ai) {
        const Arrow& a = alg->quiver().arrows[ai];
        Matrix act(alg->field(), out.total.dims[a.target], out.total.dims[a.source]);
        for (size_t i = 0; i < parts.size(); ++i)
            act.paste(offsets[i][a.target], offsets[i][a.source], parts[i].action[ai]);
        out.total.action[ai] = act;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        ModuleMap incl{parts[i], out.total, {}}, proj{out.total, parts[i], {}};
        for (int v = 0; v < nv; ++v) {
            Matrix in(alg->field(), out.total.dims[v], parts[i].dims[v]);
            for (int r = 0; r < parts[i].dims[v]; ++r) in.set(offsets[i][v] + r, r, 1);
            incl.blocks.push_back(in);
            proj.blocks.push_back(in.transpose());
        }
        out.inclusions.push_back(std::move(incl));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

SubQuotient kernel_module(const ModuleMap& f) {
    AlgebraRef alg = f.src.alg;
    const int nv = alg->vertex_count();
    std::vector<Matrix> incl;
    Module k{alg, {}, {}};
    for (int v = 0; v < nv; ++v) {
        incl.push_back(kernel_basis(f.blocks[v]));
        k.dims.push_back(incl.back().cols());
    }
    for (size_t ai = 0; ai < alg->quiver().arrows.size(); ++ai) {
        const Arrow& a = alg->quiver().arrows[ai];
        auto x = solve(incl[a.target], f.src.action[ai] * incl[a.source]);
        if (!x) throw invariant_violation("kernel is not action-stable");
        k.action.push_back(*x);
    }
    ModuleMap inc{k, f.src, incl};
    return {k, inc};
}

SubQuotient cokernel_module(const ModuleMap& f) {
    AlgebraRef alg = f.tgt.alg;
    const Field fld = alg->field();
    const int nv = alg->vertex_count();
    Module q{alg, {}, {}};
    std::vector<Matrix> proj, sec;
    for (int v = 0; v < nv; ++v) {
        // Column space of f_v in echelon coordinates; the complement of the
        // pivot coordinates represents the quotient.
        RrefResult rr = rref(f.blocks[v].transpose());
        const int d = f.tgt.dims[v];
        std::vector<int> is_pivot(d, 0);
        for (int c : rr.pivots) is_pivot[c] = 1;
        std::vector<int> reps;
        for (int j = 0; j < d; ++j)
            if (!is_pivot[j]) reps.push_back(j);
        const int qd = static_cast<int>(reps.size());
        Matrix pr(fld, qd, d), se(fld, d, qd);
        for (int r = 0; r < qd; ++r) {
            pr.set(r, reps[r], 1);
            se.set(reps[r], r, 1);
        }
        for (size_t t = 0; t < rr.pivots.size(); ++t)
            for (int r = 0; r < qd; ++r)
                pr.set(r, rr.pivots[t], fld.neg(rr.r.at(static_cast<int>(t), reps[r])));
        q.dims.push_back(qd);
        proj.push_back(pr);
        sec.push_back(se);
    }
    for (size_t ai = 0; ai < alg->quiver().arrows.size(); ++ai) {
        const Arrow& a = alg->quiver().arrows[ai];
        Matrix act = proj[a.target] * f.tgt.action[ai] * sec[a.source];
        if (!(act * proj[a.source] == proj[a.target] * f.tgt.action[ai]))
            throw invariant_violation("image is not action-stable");
        q.action.push_back(act);
    }
    ModuleMap pm{f.tgt, q, proj};
    return {q, pm};
}

Pushout pushout(const ModuleMap& f, const ModuleMap& g) {
    if (!module_equal(f.src, g.src)) throw bad_input("pushout needs a common source");
    auto sum = direct_sum(f.src.alg, {f.tgt, g.tgt});
    ModuleMap h = sub_maps(compose(sum.inclusions[0], f), compose(sum.inclusions[1], g));
    auto cok = cokernel_module(h);
    return {cok.mod, compose(cok.map, sum.inclusions[0]), compose(cok.map, sum.inclusions[1])};
}

Pullback pullback(const ModuleMap& f, const ModuleMap& g) {
    if (!module_equal(f.tgt, g.tgt)) throw bad_input("pullback needs a common target");
    auto sum = direct_sum(f.src.alg, {f.src, g.src});
    ModuleMap h = sub_maps(compose(f, sum.projections[0]), compose(g, sum.projections[1]));
    auto ker = kernel_module(h);
    return {ker.mod, compose(sum.projections[0], ker.map), compose(sum.projections[1], ker.map)};
}

CoverResult projective_cover(const Module& m) {
    AlgebraRef alg = m.alg;
    const Field fld = alg->field();
    const int nv = alg->vertex_count();
    CoverResult out;
    std::vector<Module> parts;
    std::vector<ModuleMap> components;
    out.top_dims.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        // rad(m)_v is spanned by the columns of every action matrix into v.
        Matrix rad(fld, m.dims[v], 0);
        for (size_t ai = 0; ai < alg->quiver().arrows.size(); ++ai)
            if (alg->quiver().arrows[ai].target == v) rad = rad.hstack(m.action[ai]);
        RrefResult rr = rref(rad.transpose());
        std::vector<int> is_pivot(m.dims[v], 0);
        for (int c : rr.pivots) is_pivot[c] = 1;
        for (int j = 0; j < m.dims[v]; ++j) {
            if (is_pivot[j]) continue;
            ++out.top_dims[v];
            Module pv = indec_projective(alg, v);
            // The unique map P(v) -> m sending the trivial path to e_j.
            ModuleMap comp{pv, m, {}};
            std::vector<std::vector<int>> by_target(nv);
            for (int b : alg->basis_at_source(v))
                by_target[alg->basis_path(b).target].push_back(b);
            for (int u = 0; u < nv; ++u) {
                Matrix blk(fld, m.dims[u], pv.dims[u]);
                for (size_t c = 0; c < by_target[u].size(); ++c) {
                    Matrix col = path_action(m, alg->basis_path(by_target[u][c]));
                    for (int r = 0; r < m.dims[u]; ++r) blk.set(r, static_cast<int>(c), col.at(r, j));
                }
                comp.blocks.push_back(blk);
            }
            parts.push_back(pv);
            components.push_back(comp);
        }
    }
    auto sum = direct_sum(alg, parts);
    ModuleMap onto = zero_map(sum.total, m);
    for (size_t i = 0; i < parts.size(); ++i)
        onto = add_maps(onto, compose(components[i], sum.projections[i]));
    out.proj = sum.total;
    out.onto = onto;
    // Covers of graded finite-dimensional modules are epi once tops are hit.
    for (int v = 0; v < nv; ++v)
        if (rank(onto.blocks[v]) != m.dims[v])
            throw invariant_violation("projective cover is not surjective");
    return out;
}

EnvelopeResult injective_envelope(const Module& m, AlgebraRef op_alg) {
    CoverResult cov = projective_cover(dual_module(m, op_alg));
    EnvelopeResult out;
    out.inj = dual_module(cov.proj, m.alg);
    out.into = dual_map(cov.onto, m.alg);
    out.into.src = m;  // structurally identical to the double dual
    out.socle_dims = cov.top_dims;
    for (int v = 0; v < m.alg->vertex_count(); ++v)
        if (rank(out.into.blocks[v]) != m.dims[v])
            throw invariant_violation("injective envelope is not injective");
    return out;
}

Module syzygy(const Module& m, int steps) {
    Module cur = m;
    for (int i = 0; i < steps; ++i) cur = kernel_module(projective_cover(cur).onto).mod;
    return cur;
}

Module cosyzygy(const Module& m, AlgebraRef op_alg, int steps) {
    Module cur = m;
    for (int i = 0; i < steps; ++i)
        cur = cokernel_module(injective_envelope(cur, op_alg).into).mod;
    return cur;
}

std::optional<int> projective_dimension(const Module& m, int bound) {
    Module cur = m;
    for (int len = 0; len <= bound; ++len) {
        if (cur.is_zero()) return std::max(0, len - 1);
        cur = kernel_module(projective_cover(cur).onto).mod;
    }
    return std::nullopt;
}

std::optional<int> injective_dimension(const Module& m, AlgebraRef op_alg, int bound) {
    return projective_dimension(dual_module(m, op_alg), bound);
}

namespace {

// Matrix of "compose with d" between hom spaces, in the given hom bases.
Matrix induced_on_hom(const std::vector<ModuleMap>& from_basis,
                      const std::vector<ModuleMap>& to_basis,
                      const std::function<ModuleMap(const ModuleMap&)>& apply, Field fld) {
    if (!to_basis.empty()) {
        Matrix b(fld, pack_map(to_basis[0]).rows(), static_cast<int>(to_basis.size()));
        for (size_t j = 0; j < to_basis.size(); ++j) b.paste(0, static_cast<int>(j), pack_map(to_basis[j]));
        Matrix rhs(fld, b.rows(), static_cast<int>(from_basis.size()));
        for (size_t j = 0; j < from_basis.size(); ++j)
            rhs.paste(0, static_cast<int>(j), pack_map(apply(from_basis[j])));
        auto x = solve(b, rhs);
        if (!x) throw invariant_violation("induced hom image escapes the hom space");
        return *x;
    }
    for (size_t j = 0; j < from_basis.size(); ++j)
        if (!map_is_zero(apply(from_basis[j])))
            throw invariant_violation("induced hom image escapes the zero space");
    return Matrix(fld, 0, static_cast<int>(from_basis.size()));
}

}  // namespace

int ext_dim(const Module& m, const Module& n, int i) {
    if (i < 0) throw bad_input("negative ext degree");
    AlgebraRef alg = m.alg;
    const Field fld = alg->field();
    // Deleted cover resolution P_0 .. P_{i+1}.
    std::vector<Module> terms;
    std::vector<ModuleMap> maps;  // maps[j] : P_j -> P_{j-1} for j >= 1
    Module cur = m;
    ModuleMap into_prev = identity_map(m);
    for (int j = 0; j <= i + 1; ++j) {
        CoverResult cov = projective_cover(cur);
        terms.push_back(cov.proj);
        maps.push_back(j == 0 ? cov.onto : compose(into_prev, cov.onto));
        auto ker = kernel_module(cov.onto);
        cur = ker.mod;
        into_prev = ker.map;
    }
    std::vector<std::vector<ModuleMap>> hb;
    for (const Module& p : terms) hb.push_back(hom_basis(p, n));
    auto delta = [&](int j) {
        return induced_on_hom(
            hb[j], hb[j + 1],
            [&](const ModuleMap& phi) { return compose(phi, maps[j + 1]); }, fld);
    };
    const int dim_i = static_cast<int>(hb[i].size());
    const int rank_out = rank(delta(i));
    const int rank_in = i == 0 ? 0 : rank(delta(i - 1));
    return dim_i - rank_out - rank_in;
}

int ext_dim_via_injective(const Module& m, const Module& n, AlgebraRef op_alg, int i) {
    if (i < 0) throw bad_input("negative ext degree");
    const Field fld = m.alg->field();
    // Injective coresolution I^0 .. I^{i+1} of n via envelopes.
    std::vector<Module> terms;
    std::vector<ModuleMap> maps;  // maps[j] : I^{j-1} -> I^j for j >= 1
    Module cur = n;
    ModuleMap from_prev = identity_map(n);
    for (int j = 0; j <= i + 1; ++j) {
        EnvelopeResult env = injective_envelope(cur, op_alg);
        terms.push_back(env.inj);
        maps.push_back(j == 0 ? env.into : compose(env.into, from_prev));
        auto cok = cokernel_module(env.into);
        cur = cok.mod;
        from_prev = cok.map;
    }
    std::vector<std::vector<ModuleMap>> hb;
    for (const Module& t : terms) hb.push_back(hom_basis(m, t));
    auto delta = [&](int j) {
        return induced_on_hom(
            hb[j], hb[j + 1],
            [&](const ModuleMap& phi) { return compose(maps[j + 1], phi); }, fld);
    };
    const int dim_i = static_cast<int>(hb[i].size());
    const int rank_out = rank(delta(i));
    const int rank_in = i == 0 ? 0 : rank(delta(i - 1));
    return dim_i - rank_out - rank_in;
}

int MapSystem::add_unknown(const Module& src, const Module& tgt) {
    unknowns.emplace_back(src, tgt);
    return static_cast<int>(unknowns.size()) - 1;
}

std::optional<std::vector<ModuleMap>> MapSystem::solve() const {
    if (unknowns.empty()) {
        for (const MapEquation& eq : equations)
            if (!map_is_zero(eq.rhs)) return std::nullopt;
        return std::vector<ModuleMap>{};
    }
    const Field fld = unknowns[0].first.alg->field();
    std::vector<std::vector<ModuleMap>> bases;
    std::vector<int> offset{0};
    for (const auto& [s, t] : unknowns) {
        bases.push_back(hom_basis(s, t));
        offset.push_back(offset.back() + static_cast<int>(bases.back().size()));
    }
    int total_rows = 0;
    for (const MapEquation& eq : equations) total_rows += pack_map(eq.rhs).rows();
    Matrix sys(fld, total_rows, offset.back());
    Matrix rhs(fld, total_rows, 1);
    int row = 0;
    for (const MapEquation& eq : equations) {
        Matrix rv = pack_map(eq.rhs);
        rhs.paste(row, 0, rv);
        for (const MapTerm& term : eq.terms) {
            const auto& basis = bases[term.unknown];
            for (size_t j = 0; j < basis.size(); ++j) {
                ModuleMap contrib = basis[j];
                if (term.pre) contrib = compose(contrib, *term.pre);
                if (term.post) contrib = compose(*term.post, contrib);
                Matrix col = pack_map(contrib).scaled(term.coeff);
                const int gc = offset[term.unknown] + static_cast<int>(j);
                for (int r = 0; r < col.rows(); ++r)
                    sys.set(row + r, gc, fld.add(sys.at(row + r, gc), col.at(r, 0)));
            }
        }
        row += rv.rows();
    }
    auto x = homalg::solve(sys, rhs);
    if (!x) return std::nullopt;
    std::vector<ModuleMap> out;
    for (size_t k = 0; k < unknowns.size(); ++k) {
        ModuleMap u = zero_map(unknowns[k].first, unknowns[k].second);
        for (size_t j = 0; j < bases[k].size(); ++j)
            u = add_maps(u, scale_map(bases[k][j], x->at(offset[k] + static_cast<int>(j), 0)));
        out.push_back(u);
    }
    return out;
}

}  // namespace homalg
