#include "module.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace preproj::repmod {

struct ModuleRep::Cache {
    std::vector<std::optional<Matrix>> basis_actions;
    std::unique_ptr<Presentation> presentation;
};

namespace {

// Position of each algebra basis element inside its block e_t Pi e_s.
std::vector<size_t> block_positions(const Algebra& a) {
    std::vector<size_t> pos(a.dim());
    for (int t = 0; t < a.n(); ++t)
        for (int s = 0; s < a.n(); ++s) {
            const auto& blk = a.block(t, s);
            for (size_t k = 0; k < blk.size(); ++k) pos[blk[k]] = k;
        }
    return pos;
}

Matrix path_matrix(const ModuleRep& m, const pathalg::Path& p) {
    const auto& q = m.algebra().quiver();
    Matrix acc = Matrix::identity(m.dim(q.arrows[p.front()].target));
    for (int a : p) acc = m.action(a) * acc;
    return acc;
}

// Dimension of each vertex component of a subspace spanned by homogeneous rows.
std::vector<size_t> vertex_dims(const ModuleRep& m, const Subspace& u) {
    std::vector<size_t> d(m.n(), 0);
    for (size_t p : u.pivots())
        for (int j = m.n() - 1; j >= 0; --j)
            if (p >= m.offset(j)) {
                ++d[j];
                break;
            }
    return d;
}

std::vector<Subspace> vertex_components(const ModuleRep& m, const Subspace& u) {
    std::vector<Subspace> out;
    for (int j = 0; j < m.n(); ++j) out.emplace_back(m.dim(j));
    for (const auto& row : u.basis())
        for (int j = 0; j < m.n(); ++j) {
            if (m.dim(j) == 0) continue;
            Vector loc = m.local(row, j);
            if (!is_zero(loc)) out[j].insert(std::move(loc));
        }
    return out;
}

Subspace full_space(const ModuleRep& m) {
    Subspace s(m.dim());
    for (size_t k = 0; k < m.dim(); ++k) {
        Vector v(m.dim(), m.algebra().field().zero());
        v[k] = m.algebra().field().one();
        s.insert(std::move(v));
    }
    return s;
}

Scalar trace_of(const Matrix& m) {
    Scalar t = 0;
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

// ---------------------------------------------------------------------------

ModuleRep::ModuleRep(AlgebraPtr alg, std::vector<size_t> dims, std::vector<Matrix> action, bool check)
    : alg_(std::move(alg)), dims_(std::move(dims)), act_(std::move(action)), cache_(std::make_shared<Cache>()) {
    const auto& q = alg_->quiver();
    if (static_cast<int>(dims_.size()) != alg_->n() || static_cast<int>(act_.size()) != q.arrow_count())
        fail(ErrorCode::InvalidArgument, "module data does not match the quiver");
    offsets_.resize(dims_.size());
    for (size_t i = 0; i < dims_.size(); ++i) {
        offsets_[i] = total_;
        total_ += dims_[i];
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& ar = q.arrows[a];
        if (act_[a].rows() != dims_[ar.source] || act_[a].cols() != dims_[ar.target]) {
            if (act_[a].empty() && (dims_[ar.source] == 0 || dims_[ar.target] == 0)) {
                act_[a] = Matrix(dims_[ar.source], dims_[ar.target]);
                continue;
            }
            fail(ErrorCode::InvalidArgument, "action of " + ar.name + " has the wrong shape");
        }
    }
    cache_->basis_actions.resize(alg_->dim());
    if (check) validate();
}

ModuleRep ModuleRep::zero(AlgebraPtr alg) {
    const int arrows = alg->quiver().arrow_count();
    const int n = alg->n();
    return ModuleRep(std::move(alg), std::vector<size_t>(n, 0), std::vector<Matrix>(arrows), false);
}

void ModuleRep::validate() const {
    const auto& q = alg_->quiver();
    for (const auto& rel : alg_->relations()) {
        if (rel.poly.empty()) continue;
        const auto& first = rel.poly.begin()->first;
        const int t = q.arrows[first.front()].target, s = q.arrows[first.back()].source;
        if (dims_[t] == 0 || dims_[s] == 0) continue;
        Matrix sum(dims_[s], dims_[t]);
        for (const auto& [path, c] : rel.poly) sum = sum + c * path_matrix(*this, path);
        if (!sum.is_zero())
            fail(ErrorCode::VerificationFailed,
                 "relation " + pathalg::poly_string(q, rel.poly) + " does not annihilate the module");
    }
}

const Matrix& ModuleRep::basis_action(size_t b) const {
    auto& slot = cache_->basis_actions[b];
    if (!slot) {
        const auto& bp = alg_->basis()[b];
        slot = bp.path.empty() ? Matrix::identity(dims_[bp.source]) : path_matrix(*this, bp.path);
    }
    return *slot;
}

Vector ModuleRep::local(const Vector& v, int i) const {
    return Vector(v.begin() + offsets_[i], v.begin() + offsets_[i] + dims_[i]);
}

Vector ModuleRep::embed(const Vector& loc, int i) const {
    Vector v(total_, alg_->field().zero());
    std::copy(loc.begin(), loc.end(), v.begin() + offsets_[i]);
    return v;
}

Vector ModuleRep::act_basis(const Vector& v, size_t b) const {
    const auto& bp = alg_->basis()[b];
    if (dims_[bp.target] == 0 || dims_[bp.source] == 0) return Vector(total_, alg_->field().zero());
    return embed(basis_action(b).apply(local(v, bp.target)), bp.source);
}

Vector ModuleRep::act(const Vector& v, const Vector& x) const {
    Vector out(total_, alg_->field().zero());
    for (size_t b = 0; b < x.size(); ++b) {
        if (x[b].is_zero()) continue;
        Vector w = act_basis(v, b);
        for (size_t k = 0; k < total_; ++k)
            if (!w[k].is_zero()) out[k] += x[b] * w[k];
    }
    return out;
}

std::string ModuleRep::dims_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
    os << ")";
    return os.str();
}

bool is_module_map(const Matrix& f, const ModuleRep& m, const ModuleRep& n) {
    if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            if (i == j) continue;
            for (size_t r = 0; r < n.dim(j); ++r)
                for (size_t c = 0; c < m.dim(i); ++c)
                    if (!f(n.offset(j) + r, m.offset(i) + c).is_zero()) return false;
        }
    const auto& q = m.algebra().quiver();
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix fs(n.dim(s), m.dim(s)), ft(n.dim(t), m.dim(t));
        for (size_t r = 0; r < n.dim(s); ++r)
            for (size_t c = 0; c < m.dim(s); ++c) fs(r, c) = f(n.offset(s) + r, m.offset(s) + c);
        for (size_t r = 0; r < n.dim(t); ++r)
            for (size_t c = 0; c < m.dim(t); ++c) ft(r, c) = f(n.offset(t) + r, m.offset(t) + c);
        if (!(fs * m.action(a) == n.action(a) * ft)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModuleRep>& summands) {
    const int n = alg->n();
    const auto& q = alg->quiver();
    DirectSum ds;
    std::vector<size_t> dims(n, 0);
    for (const auto& s : summands)
        for (int j = 0; j < n; ++j) dims[j] += s.dim(j);
    std::vector<size_t> vertex_start(n, 0);
    for (int j = 1; j < n; ++j) vertex_start[j] = vertex_start[j - 1] + dims[j - 1];
    std::vector<size_t> running(n, 0);
    for (const auto& s : summands) {
        std::vector<size_t> st(n);
        for (int j = 0; j < n; ++j) {
            st[j] = vertex_start[j] + running[j];
            running[j] += s.dim(j);
        }
        ds.start.push_back(std::move(st));
    }
    std::vector<Matrix> act;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int src = q.arrows[a].source, tgt = q.arrows[a].target;
        Matrix m(dims[src], dims[tgt]);
        for (size_t k = 0; k < summands.size(); ++k) {
            const Matrix& x = summands[k].action(a);
            const size_t r0 = ds.start[k][src] - vertex_start[src], c0 = ds.start[k][tgt] - vertex_start[tgt];
            for (size_t r = 0; r < x.rows(); ++r)
                for (size_t c = 0; c < x.cols(); ++c) m(r0 + r, c0 + c) = x(r, c);
        }
        act.push_back(std::move(m));
    }
    ds.module = ModuleRep(alg, dims, std::move(act), false);
    return ds;
}

Matrix DirectSum::injection(size_t s, const ModuleRep& m) const {
    Matrix out(module.dim(), m.dim());
    for (int j = 0; j < m.n(); ++j)
        for (size_t l = 0; l < m.dim(j); ++l) out(index(s, j, l), m.offset(j) + l) = 1;
    return out;
}

Matrix DirectSum::projection(size_t s, const ModuleRep& m) const { return injection(s, m).transpose(); }

Subspace generated_submodule(const ModuleRep& m, const std::vector<Vector>& gens) {
    const auto& q = m.algebra().quiver();
    Subspace u(m.dim());
    std::deque<std::pair<int, Vector>> todo;
    for (const auto& g : gens)
        for (int j = 0; j < m.n(); ++j) {
            if (m.dim(j) == 0) continue;
            Vector loc = m.local(g, j);
            if (!is_zero(loc)) todo.emplace_back(j, std::move(loc));
        }
    while (!todo.empty()) {
        auto [j, loc] = std::move(todo.front());
        todo.pop_front();
        if (!u.insert(m.embed(loc, j))) continue;
        for (int a = 0; a < q.arrow_count(); ++a) {
            if (q.arrows[a].target != j || m.dim(q.arrows[a].source) == 0) continue;
            Vector w = m.action(a).apply(loc);
            if (!is_zero(w)) todo.emplace_back(q.arrows[a].source, std::move(w));
        }
    }
    return u;
}

Sub submodule(const ModuleRep& m, const Subspace& u) {
    const auto& q = m.algebra().quiver();
    std::vector<Subspace> comps = vertex_components(m, u);
    std::vector<size_t> dims;
    for (const auto& c : comps) dims.push_back(c.dim());
    std::vector<Matrix> act;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix x(dims[s], dims[t]);
        for (size_t c = 0; c < dims[t]; ++c) {
            Vector w = m.action(a).apply(comps[t].basis()[c]);
            if (!comps[s].contains(w)) fail(ErrorCode::Internal, "subspace is not a submodule");
            Vector coords = comps[s].coordinates(w);
            for (size_t r = 0; r < dims[s]; ++r) x(r, c) = coords[r];
        }
        act.push_back(std::move(x));
    }
    Sub out{ModuleRep(m.algebra_ptr(), dims, std::move(act), false), Matrix()};
    out.inclusion = Matrix(m.dim(), out.module.dim());
    for (int j = 0; j < m.n(); ++j)
        for (size_t c = 0; c < dims[j]; ++c)
            for (size_t r = 0; r < m.dim(j); ++r) out.inclusion(m.offset(j) + r, out.module.offset(j) + c) = comps[j].basis()[c][r];
    return out;
}

Quot quotient(const ModuleRep& m, const Subspace& u) {
    const auto& q = m.algebra().quiver();
    std::vector<Subspace> comps = vertex_components(m, u);
    std::vector<std::vector<size_t>> complement(m.n());
    std::vector<size_t> dims;
    for (int j = 0; j < m.n(); ++j) {
        const auto& piv = comps[j].pivots();
        for (size_t l = 0; l < m.dim(j); ++l)
            if (!std::binary_search(piv.begin(), piv.end(), l)) complement[j].push_back(l);
        dims.push_back(complement[j].size());
    }
    auto classes = [&](int j, const Vector& loc) {
        Vector r = comps[j].reduce(loc);
        Vector out;
        for (size_t l : complement[j]) out.push_back(r[l]);
        return out;
    };
    std::vector<Matrix> act;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix x(dims[s], dims[t]);
        for (size_t c = 0; c < dims[t]; ++c) {
            Vector w = classes(s, m.action(a).column(complement[t][c]));
            for (size_t r = 0; r < dims[s]; ++r) x(r, c) = w[r];
        }
        act.push_back(std::move(x));
    }
    Quot out{ModuleRep(m.algebra_ptr(), dims, std::move(act), false), Matrix(), Matrix()};
    out.projection = Matrix(out.module.dim(), m.dim());
    out.lift = Matrix(m.dim(), out.module.dim());
    for (int j = 0; j < m.n(); ++j) {
        for (size_t l = 0; l < m.dim(j); ++l) {
            Vector e(m.dim(j), m.algebra().field().zero());
            e[l] = m.algebra().field().one();
            Vector w = classes(j, e);
            for (size_t r = 0; r < dims[j]; ++r) out.projection(out.module.offset(j) + r, m.offset(j) + l) = w[r];
        }
        for (size_t c = 0; c < dims[j]; ++c) out.lift(m.offset(j) + complement[j][c], out.module.offset(j) + c) = 1;
    }
    return out;
}

Subspace radical(const ModuleRep& m) {
    const auto& q = m.algebra().quiver();
    Subspace r(m.dim());
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrows[a].source;
        if (m.dim(s) == 0) continue;
        for (size_t c = 0; c < m.action(a).cols(); ++c) {
            Vector w = m.action(a).column(c);
            if (!is_zero(w)) r.insert(m.embed(w, s));
        }
    }
    return r;
}

Subspace socle(const ModuleRep& m) {
    const auto& q = m.algebra().quiver();
    Subspace out(m.dim());
    for (int j = 0; j < m.n(); ++j) {
        if (m.dim(j) == 0) continue;
        std::vector<Vector> rows;
        for (int a = 0; a < q.arrow_count(); ++a) {
            if (q.arrows[a].target != j) continue;
            for (size_t r = 0; r < m.action(a).rows(); ++r) rows.push_back(m.action(a).row(r));
        }
        if (rows.empty()) {
            for (size_t l = 0; l < m.dim(j); ++l) {
                Vector e(m.dim(j), m.algebra().field().zero());
                e[l] = m.algebra().field().one();
                out.insert(m.embed(e, j));
            }
            continue;
        }
        Matrix k = kernel(Matrix::from_rows(m.dim(j), rows));
        for (size_t c = 0; c < k.cols(); ++c) out.insert(m.embed(k.column(c), j));
    }
    return out;
}

Subspace image(const Matrix& f, const ModuleRep& target) {
    Subspace out(target.dim());
    for (size_t c = 0; c < f.cols(); ++c) {
        Vector w = f.column(c);
        if (!is_zero(w)) out.insert(std::move(w));
    }
    return out;
}

Subspace kernel_space(const Matrix& f, const ModuleRep& source) {
    Subspace out(source.dim());
    if (source.dim() == 0) return out;
    if (f.rows() == 0) return full_space(source);
    Matrix k = kernel(f);
    for (size_t c = 0; c < k.cols(); ++c) {
        Vector v = k.column(c);
        for (int j = 0; j < source.n(); ++j) {
            if (source.dim(j) == 0) continue;
            Vector loc = source.local(v, j);
            if (!is_zero(loc)) out.insert(source.embed(loc, j));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ModuleRep projective(AlgebraPtr alg, int i) {
    const Algebra& a = *alg;
    const auto& q = a.quiver();
    const auto pos = block_positions(a);
    std::vector<size_t> dims;
    for (int j = 0; j < a.n(); ++j) dims.push_back(a.block(i, j).size());
    std::vector<Matrix> act;
    for (int ar = 0; ar < q.arrow_count(); ++ar) {
        const int s = q.arrows[ar].source, t = q.arrows[ar].target;
        Matrix x(dims[s], dims[t]);
        const auto& blk = a.block(i, t);
        for (size_t c = 0; c < blk.size(); ++c)
            for (const auto& [b, coef] : a.right_arrow(ar)[blk[c]]) x(pos[b], c) = coef;
        act.push_back(std::move(x));
    }
    return ModuleRep(std::move(alg), dims, std::move(act), false);
}

ModuleRep regular(AlgebraPtr alg) {
    std::vector<ModuleRep> ps;
    for (int i = 0; i < alg->n(); ++i) ps.push_back(projective(alg, i));
    return direct_sum(alg, ps).module;
}

ModuleRep uniserial(AlgebraPtr alg, int i, size_t d) {
    const auto& q = alg->quiver();
    std::vector<size_t> dims(alg->n(), 0);
    dims[i] = d;
    std::vector<Matrix> act(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) act[a] = Matrix(dims[q.arrows[a].source], dims[q.arrows[a].target]);
    for (size_t k = 0; k + 1 < d; ++k) act[q.loop(i)](k + 1, k) = alg->field().one();
    return ModuleRep(std::move(alg), dims, std::move(act), true);
}

ModuleRep simple(AlgebraPtr alg, int i) { return uniserial(std::move(alg), i, 1); }

ModuleRep generalized_simple(AlgebraPtr alg, int i) {
    const size_t c = static_cast<size_t>(alg->data().c(i));
    return uniserial(std::move(alg), i, c);
}

ModuleRep dual_projective(AlgebraPtr alg, int u) {
    const Algebra& a = *alg;
    const auto& q = a.quiver();
    const auto pos = block_positions(a);
    std::vector<size_t> dims;
    for (int j = 0; j < a.n(); ++j) dims.push_back(a.block(j, u).size());
    std::vector<Matrix> act;
    for (int ar = 0; ar < q.arrow_count(); ++ar) {
        const int s = q.arrows[ar].source, t = q.arrows[ar].target;
        Matrix x(dims[s], dims[t]);
        const auto& rows = a.block(s, u);
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [w, coef] : a.left_arrow(ar)[rows[r]]) x(r, pos[w]) = coef;
        act.push_back(std::move(x));
    }
    return ModuleRep(std::move(alg), dims, std::move(act), false);
}

// ---------------------------------------------------------------------------

namespace {

// Generators of M: vertex-wise complements of the radical.
std::vector<std::pair<int, Vector>> top_generators(const ModuleRep& m) {
    std::vector<Subspace> rad = vertex_components(m, radical(m));
    std::vector<std::pair<int, Vector>> out;
    for (int j = 0; j < m.n(); ++j) {
        const auto& piv = rad[j].pivots();
        for (size_t l = 0; l < m.dim(j); ++l) {
            if (std::binary_search(piv.begin(), piv.end(), l)) continue;
            Vector e(m.dim(j), m.algebra().field().zero());
            e[l] = m.algebra().field().one();
            out.emplace_back(j, m.embed(e, j));
        }
    }
    return out;
}

std::unique_ptr<Presentation> build_presentation(const ModuleRep& m) {
    const AlgebraPtr& alg = m.algebra_ptr();
    const Algebra& a = *alg;
    auto p = std::make_unique<Presentation>();
    std::vector<ModuleRep> covers;
    for (auto& [v, g] : top_generators(m)) {
        p->gen_vertex.push_back(v);
        p->generators.push_back(std::move(g));
        covers.push_back(projective(alg, v));
    }
    p->p0 = direct_sum(alg, covers);
    const ModuleRep& p0 = p->p0.module;
    p->p0_summand.assign(p0.dim(), 0);
    p->p0_basis.assign(p0.dim(), 0);
    p->cover = Matrix(m.dim(), p0.dim());
    for (size_t k = 0; k < p->generators.size(); ++k)
        for (int j = 0; j < a.n(); ++j) {
            const auto& blk = a.block(p->gen_vertex[k], j);
            for (size_t l = 0; l < blk.size(); ++l) {
                const size_t col = p->p0.index(k, j, l);
                p->p0_summand[col] = k;
                p->p0_basis[col] = blk[l];
                Vector w = m.act_basis(p->generators[k], blk[l]);
                for (size_t r = 0; r < m.dim(); ++r) p->cover(r, col) = w[r];
            }
        }
    p->kernel = submodule(p0, kernel_space(p->cover, p0));
    for (auto& [v, g] : top_generators(p->kernel.module)) {
        p->rel_vertex.push_back(v);
        p->relations.push_back(p->kernel.inclusion.apply(g));
    }
    if (m.dim() > 0) {
        p->basis_columns = independent_columns(p->cover);
        auto inv = inverse(p->cover.select_columns(p->basis_columns));
        if (!inv) fail(ErrorCode::Internal, "projective cover is not surjective");
        p->basis_inverse = std::move(*inv);
    }
    return p;
}

// Hom(M, N) as tuples (n_k) of images of the generators of M; columns of the
// returned matrix form a basis.  Tuple block k sits at offsets[k].
Matrix hom_tuples(const ModuleRep& m, const ModuleRep& n, std::vector<size_t>& offsets) {
    const Presentation& p = m.presentation();
    const Algebra& a = m.algebra();
    offsets.clear();
    size_t unknowns = 0;
    for (int v : p.gen_vertex) {
        offsets.push_back(unknowns);
        unknowns += n.dim(v);
    }
    if (unknowns == 0) return Matrix(0, 0);
    std::vector<Vector> rows;
    for (size_t l = 0; l < p.relations.size(); ++l) {
        const int u = p.rel_vertex[l];
        if (n.dim(u) == 0) continue;
        Matrix eq(n.dim(u), unknowns);
        for (size_t k = 0; k < p.gen_vertex.size(); ++k) {
            const int v = p.gen_vertex[k];
            if (n.dim(v) == 0) continue;
            Vector x = p.component(p.relations[l], k);
            for (size_t b : a.block(v, u)) {
                if (x[b].is_zero()) continue;
                const Matrix& nb = n.basis_action(b);
                for (size_t r = 0; r < nb.rows(); ++r)
                    for (size_t c = 0; c < nb.cols(); ++c)
                        if (!nb(r, c).is_zero()) eq(r, offsets[k] + c) += x[b] * nb(r, c);
            }
        }
        for (size_t r = 0; r < eq.rows(); ++r) rows.push_back(eq.row(r));
    }
    if (rows.empty()) return Matrix::identity(unknowns);
    return kernel(Matrix::from_rows(unknowns, rows));
}

Matrix tuple_to_map(const ModuleRep& m, const ModuleRep& n, const Vector& tuple, const std::vector<size_t>& offsets) {
    const Presentation& p = m.presentation();
    std::vector<Vector> images;
    for (size_t k = 0; k < p.gen_vertex.size(); ++k) {
        const int v = p.gen_vertex[k];
        Vector loc(tuple.begin() + offsets[k], tuple.begin() + offsets[k] + n.dim(v));
        images.push_back(n.embed(loc, v));
    }
    Matrix fcols(n.dim(), p.basis_columns.size());
    for (size_t c = 0; c < p.basis_columns.size(); ++c) {
        const size_t col = p.basis_columns[c];
        Vector w = n.act_basis(images[p.p0_summand[col]], p.p0_basis[col]);
        for (size_t r = 0; r < n.dim(); ++r) fcols(r, c) = w[r];
    }
    return fcols * p.basis_inverse;
}

}  // namespace

const Presentation& ModuleRep::presentation() const {
    if (!cache_->presentation) cache_->presentation = build_presentation(*this);
    return *cache_->presentation;
}

Vector Presentation::component(const Vector& v, size_t k) const {
    const ModuleRep& p = p0.module;
    const Algebra& a = p.algebra();
    Vector x = a.zero();
    for (int j = 0; j < a.n(); ++j) {
        const auto& blk = a.block(gen_vertex[k], j);
        for (size_t l = 0; l < blk.size(); ++l) x[blk[l]] = v[p0.index(k, j, l)];
    }
    return x;
}

MinimalPresentation minimal_projective_presentation(const ModuleRep& m) {
    const Presentation& p = m.presentation();
    const AlgebraPtr& alg = m.algebra_ptr();
    MinimalPresentation out;
    out.p0_vertices = p.gen_vertex;
    out.p1_vertices = p.rel_vertex;
    std::vector<ModuleRep> ps;
    for (int u : p.rel_vertex) ps.push_back(projective(alg, u));
    DirectSum p1 = direct_sum(alg, ps);
    out.map = Matrix(p.p0.module.dim(), p1.module.dim());
    for (size_t l = 0; l < p.relations.size(); ++l)
        for (int j = 0; j < alg->n(); ++j) {
            const auto& blk = alg->block(p.rel_vertex[l], j);
            for (size_t pos = 0; pos < blk.size(); ++pos) {
                Vector w = p.p0.module.act_basis(p.relations[l], blk[pos]);
                const size_t col = p1.index(l, j, pos);
                for (size_t r = 0; r < w.size(); ++r) out.map(r, col) = w[r];
            }
        }
    return out;
}

std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n) {
    if (m.is_zero() || n.is_zero()) return {};
    std::vector<size_t> offsets;
    Matrix t = hom_tuples(m, n, offsets);
    std::vector<Matrix> out;
    for (size_t c = 0; c < t.cols(); ++c) out.push_back(tuple_to_map(m, n, t.column(c), offsets));
    return out;
}

size_t hom_dim(const ModuleRep& m, const ModuleRep& n) {
    if (m.is_zero() || n.is_zero()) return 0;
    std::vector<size_t> offsets;
    return hom_tuples(m, n, offsets).cols();
}

size_t hom_dim_direct(const ModuleRep& m, const ModuleRep& n) {
    const auto& q = m.algebra().quiver();
    std::vector<size_t> off(m.n());
    size_t unknowns = 0;
    for (int j = 0; j < m.n(); ++j) {
        off[j] = unknowns;
        unknowns += n.dim(j) * m.dim(j);
    }
    if (unknowns == 0) return 0;
    auto var = [&](int j, size_t r, size_t c) { return off[j] + r * m.dim(j) + c; };
    std::vector<Vector> rows;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        const Matrix &ma = m.action(a), &na = n.action(a);
        // (f_s M_a - N_a f_t)(p, c) = 0
        for (size_t p = 0; p < n.dim(s); ++p)
            for (size_t c = 0; c < m.dim(t); ++c) {
                Vector row(unknowns, m.algebra().field().zero());
                for (size_t r = 0; r < m.dim(s); ++r) row[var(s, p, r)] += ma(r, c);
                for (size_t r = 0; r < n.dim(t); ++r) row[var(t, r, c)] -= na(p, r);
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return unknowns;
    return unknowns - rank(Matrix::from_rows(unknowns, rows));
}

// ---------------------------------------------------------------------------

std::vector<size_t> layer_totals(const std::vector<std::vector<size_t>>& layers) {
    std::vector<size_t> out;
    for (const auto& l : layers) {
        size_t s = 0;
        for (size_t x : l) s += x;
        out.push_back(s);
    }
    return out;
}

StructureSeries structure_series(const ModuleRep& m) {
    const auto& q = m.algebra().quiver();
    StructureSeries s;
    Subspace current = full_space(m);
    while (current.dim() > 0) {
        Subspace next(m.dim());
        for (const auto& v : current.basis())
            for (int a = 0; a < q.arrow_count(); ++a) {
                const int src = q.arrows[a].source, tgt = q.arrows[a].target;
                if (m.dim(src) == 0 || m.dim(tgt) == 0) continue;
                Vector w = m.action(a).apply(m.local(v, tgt));
                if (!is_zero(w)) next.insert(m.embed(w, src));
            }
        std::vector<size_t> a = vertex_dims(m, current), b = vertex_dims(m, next);
        for (int j = 0; j < m.n(); ++j) a[j] -= b[j];
        s.radical_layers.push_back(std::move(a));
        current = std::move(next);
    }
    Subspace soc(m.dim());
    while (soc.dim() < m.dim()) {
        Quot qt = quotient(m, soc);
        Subspace t = socle(qt.module);
        s.socle_layers.push_back(vertex_dims(qt.module, t));
        for (const auto& v : t.basis()) soc.insert(qt.lift.apply(v));
    }
    s.top = s.radical_layers.empty() ? std::vector<size_t>(m.n(), 0) : s.radical_layers.front();
    s.socle = s.socle_layers.empty() ? std::vector<size_t>(m.n(), 0) : s.socle_layers.front();
    return s;
}

ModuleRep tau(const ModuleRep& m) {
    const AlgebraPtr& alg = m.algebra_ptr();
    const auto& data = alg->data();
    if (!cartan::is_dynkin(data.cartan, data.symmetrizer))
        fail(ErrorCode::NotDynkin, "tau needs the finite-dimensional selfinjective algebra of Dynkin type");
    if (m.is_zero()) return ModuleRep::zero(alg);
    const Presentation& p = m.presentation();
    if (p.relations.empty()) return ModuleRep::zero(alg);
    const Algebra& a = *alg;
    const auto pos = block_positions(a);

    // tau M = ker(F^T : sum_l D(Pi e_{u_l}) -> sum_k D(Pi e_{v_k})), where
    // F(y_k) = (y_k x_kl)_l is the dual of the presentation map.
    std::vector<ModuleRep> zs, zps;
    for (int u : p.rel_vertex) zs.push_back(dual_projective(alg, u));
    for (int v : p.gen_vertex) zps.push_back(dual_projective(alg, v));
    DirectSum z = direct_sum(alg, zs), zp = direct_sum(alg, zps);
    Matrix ft(zp.module.dim(), z.module.dim());
    for (size_t l = 0; l < p.relations.size(); ++l) {
        const int u = p.rel_vertex[l];
        for (size_t k = 0; k < p.gen_vertex.size(); ++k) {
            const int v = p.gen_vertex[k];
            Vector x = p.component(p.relations[l], k);
            std::vector<std::pair<size_t, Scalar>> xs;
            for (size_t b = 0; b < x.size(); ++b)
                if (!x[b].is_zero()) xs.emplace_back(b, x[b]);
            if (xs.empty()) continue;
            for (int j = 0; j < a.n(); ++j) {
                const auto& ys = a.block(j, v);
                for (size_t yi = 0; yi < ys.size(); ++yi) {
                    Vector prod = a.zero();
                    for (const auto& [b, c] : xs)
                        for (const auto& [w, coef] : a.product(ys[yi], b)) prod[w] += c * coef;
                    for (size_t w = 0; w < prod.size(); ++w)
                        if (!prod[w].is_zero()) ft(zp.index(k, j, yi), z.index(l, j, pos[w])) += prod[w];
                }
            }
        }
    }
    return submodule(z.module, kernel_space(ft, z.module)).module;
}

ModuleRep nakayama_functor(const ModuleRep& m) {
    const AlgebraPtr& alg = m.algebra_ptr();
    const Algebra& a = *alg;
    const auto& q = a.quiver();
    if (m.is_zero()) return ModuleRep::zero(alg);
    const auto pos = block_positions(a);
    const Presentation& p = m.presentation();
    std::vector<Matrix> h(a.n());
    std::vector<size_t> offsets;
    std::vector<size_t> dims(a.n());
    std::vector<ModuleRep> proj;
    for (int j = 0; j < a.n(); ++j) {
        proj.push_back(projective(alg, j));
        h[j] = hom_tuples(m, proj[j], offsets);
        dims[j] = h[j].cols();
    }
    // offsets depend only on the generator vertices and the target's dims
    auto tuple_offsets = [&](int j) {
        std::vector<size_t> off;
        size_t acc = 0;
        for (int v : p.gen_vertex) {
            off.push_back(acc);
            acc += proj[j].dim(v);
        }
        return off;
    };
    std::vector<Matrix> act;
    for (int ar = 0; ar < q.arrow_count(); ++ar) {
        const int s = q.arrows[ar].source, t = q.arrows[ar].target;
        Matrix x(dims[s], dims[t]);
        if (dims[s] && dims[t]) {
            const auto off_s = tuple_offsets(s), off_t = tuple_offsets(t);
            // left multiplication by the arrow: Hom(M, e_s Pi) -> Hom(M, e_t Pi)
            Matrix images(h[t].rows(), dims[s]);
            for (size_t c = 0; c < dims[s]; ++c)
                for (size_t k = 0; k < p.gen_vertex.size(); ++k) {
                    const int v = p.gen_vertex[k];
                    const auto& src_blk = a.block(s, v);
                    for (size_t l = 0; l < src_blk.size(); ++l) {
                        const Scalar& coef = h[s](off_s[k] + l, c);
                        if (coef.is_zero()) continue;
                        for (const auto& [w, y] : a.left_arrow(ar)[src_blk[l]]) images(off_t[k] + pos[w], c) += coef * y;
                    }
                }
            auto coords = solve(h[t], images);
            if (!coords) fail(ErrorCode::Internal, "left multiplication leaves Hom(M, Pi)");
            x = coords->transpose();
        }
        act.push_back(std::move(x));
    }
    return ModuleRep(alg, dims, std::move(act), false);
}

std::vector<int> nakayama_permutation(const AlgebraPtr& alg) {
    std::vector<int> sigma;
    for (int i = 0; i < alg->n(); ++i) {
        ModuleRep p = projective(alg, i);
        Subspace s = socle(p);
        if (s.dim() != 1) fail(ErrorCode::SocleNotSimple, "soc(e_" + std::to_string(i + 1) + " Pi) is not simple");
        std::vector<size_t> d = vertex_dims(p, s);
        sigma.push_back(static_cast<int>(std::find(d.begin(), d.end(), 1) - d.begin()));
    }
    return sigma;
}

size_t ext1_dim(const ModuleRep& m, const ModuleRep& n) {
    if (m.is_zero() || n.is_zero()) return 0;
    const Presentation& p = m.presentation();
    size_t hom_p0 = 0;
    for (int v : p.gen_vertex) hom_p0 += n.dim(v);
    return hom_dim(p.kernel.module, n) + hom_dim(m, n) - hom_p0;
}

std::optional<std::vector<size_t>> locally_free_rank(const ModuleRep& m) {
    const auto& data = m.algebra().data();
    std::vector<size_t> r;
    for (int i = 0; i < m.n(); ++i) {
        const size_t c = static_cast<size_t>(data.c(i)), d = m.dim(i);
        if (d % c) return std::nullopt;
        const size_t ri = d / c;
        if (d) {
            const Matrix& e = m.action(m.algebra().quiver().loop(i));
            Matrix pw = e;
            for (size_t k = 1; k <= c; ++k) {
                if (rank(pw) != (c - k) * ri) return std::nullopt;
                pw = pw * e;
            }
        }
        r.push_back(ri);
    }
    return r;
}

bool is_tau_rigid(const ModuleRep& m) { return hom_dim(m, tau(m)) == 0; }

Subspace trace(const ModuleRep& t, const ModuleRep& x) {
    Subspace out(x.dim());
    for (const Matrix& f : hom_basis(t, x))
        for (size_t c = 0; c < f.cols(); ++c) {
            Vector w = f.column(c);
            if (!is_zero(w)) out.insert(std::move(w));
        }
    return out;
}

bool in_fac(const ModuleRep& t, const ModuleRep& x) { return trace(t, x).dim() == x.dim(); }

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed) {
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    StructureSeries sm = structure_series(m), sn = structure_series(n);
    if (sm.radical_layers != sn.radical_layers || sm.socle_layers != sn.socle_layers) return false;
    std::vector<Matrix> basis = hom_basis(m, n);
    if (basis.empty()) return false;
    const Field& field = m.algebra().field();
    auto invertible = [&](const std::vector<int64_t>& coef) {
        Matrix f(n.dim(), m.dim());
        for (size_t k = 0; k < basis.size(); ++k)
            if (coef[k]) f = f + field.from_int(coef[k]) * basis[k];
        return rank(f) == m.dim();
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> pick(-1000, 1000);
    std::vector<int64_t> coef(basis.size());
    for (int trial = 0; trial < 20; ++trial) {
        for (auto& c : coef) c = pick(rng);
        if (invertible(coef)) return true;
    }
    if (basis.size() <= 4) {
        std::fill(coef.begin(), coef.end(), -2);
        while (true) {
            if (invertible(coef)) return true;
            size_t k = 0;
            while (k < coef.size() && coef[k] == 2) coef[k++] = -2;
            if (k == coef.size()) break;
            ++coef[k];
        }
    }
    return false;
}

bool is_indecomposable(const ModuleRep& m) {
    if (m.is_zero()) return false;
    std::vector<Matrix> end = hom_basis(m, m);
    const Field& field = m.algebra().field();
    if (!field.is_rational() && (field.p <= m.dim() || field.p <= end.size()))
        fail(ErrorCode::RadicalUnavailable, "trace form radical needs p > dim; rerun over the rationals");
    // rad End(M) is the radical of the trace form (x, y) |-> tr(xy) on M.
    Matrix form(end.size(), end.size());
    for (size_t i = 0; i < end.size(); ++i)
        for (size_t j = i; j < end.size(); ++j) form(i, j) = form(j, i) = trace_of(end[i] * end[j]);
    return rank(form) == 1;
}

}  // namespace preproj::repmod
