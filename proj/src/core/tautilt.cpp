#include "tautilt.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "errors.hpp"

namespace preproj::tautilt {

using namespace repmod;

namespace {

// x * y for sparse-ish vectors through the structure constants.
Vector multiply_sparse(const pathalg::Algebra& a, const Vector& x, const Vector& y) {
    std::vector<size_t> xs, ys;
    for (size_t b = 0; b < x.size(); ++b)
        if (!x[b].is_zero()) xs.push_back(b);
    for (size_t b = 0; b < y.size(); ++b)
        if (!y[b].is_zero()) ys.push_back(b);
    Vector out = a.zero();
    for (size_t b1 : xs)
        for (size_t b2 : ys) {
            const auto& prod = a.product(b1, b2);
            if (prod.empty()) continue;
            const Scalar c = x[b1] * y[b2];
            for (const auto& [w, coef] : prod) out[w] += c * coef;
        }
    return out;
}

std::vector<size_t> block_positions(const pathalg::Algebra& a) {
    std::vector<size_t> pos(a.dim());
    for (int t = 0; t < a.n(); ++t)
        for (int s = 0; s < a.n(); ++s) {
            const auto& blk = a.block(t, s);
            for (size_t k = 0; k < blk.size(); ++k) pos[blk[k]] = k;
        }
    return pos;
}

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

Matrix power(const Matrix& m, size_t k) {
    Matrix out = Matrix::identity(m.rows());
    for (size_t i = 0; i < k; ++i) out = out * m;
    return out;
}

std::string pair_text(const SttPair& p) {
    std::string s = "(" + p.label() + ", ";
    if (p.projective.empty()) return s + "0)";
    for (size_t k = 0; k < p.projective.size(); ++k)
        s += (k ? "+" : "") + std::string("e") + std::to_string(p.projective[k] + 1) + "P";
    return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

Ideal whole(const pathalg::Algebra& a) { return vertex_ideal(a, {}); }

Ideal vertex_ideal(const pathalg::Algebra& a, const std::vector<int>& s) {
    Ideal out{Subspace(a.dim())};
    for (size_t b1 = 0; b1 < a.dim(); ++b1) {
        if (std::find(s.begin(), s.end(), a.source(b1)) != s.end()) continue;
        for (size_t b2 = 0; b2 < a.dim(); ++b2) {
            const auto& prod = a.product(b1, b2);
            if (prod.empty()) continue;
            Vector v = a.zero();
            for (const auto& [w, c] : prod) v[w] += c;
            out.space.insert(std::move(v));
        }
    }
    return out;
}

Ideal ideal_product(const pathalg::Algebra& a, const Ideal& i, const Ideal& j) {
    Ideal out{Subspace(a.dim())};
    for (const auto& u : i.space.basis())
        for (const auto& v : j.space.basis()) {
            Vector w = multiply_sparse(a, u, v);
            if (!is_zero(w)) out.space.insert(std::move(w));
        }
    return out;
}

bool is_two_sided(const pathalg::Algebra& a, const Ideal& i) {
    for (const auto& u : i.space.basis())
        for (int ar = 0; ar < a.quiver().arrow_count(); ++ar) {
            Vector x = a.path_vector({ar});
            if (!i.space.contains(multiply_sparse(a, u, x)) || !i.space.contains(multiply_sparse(a, x, u)))
                return false;
        }
    return true;
}

ModuleRep ideal_block(const AlgebraPtr& a, const Ideal& ideal, int i) {
    ModuleRep p = projective(a, i);
    const auto pos = block_positions(*a);
    Subspace u(p.dim());
    for (const auto& row : ideal.space.basis()) {
        size_t first = 0;
        while (row[first].is_zero()) ++first;
        if (a->target(first) != i) continue;
        Vector v(p.dim(), a->field().zero());
        for (size_t b = 0; b < row.size(); ++b)
            if (!row[b].is_zero()) v[p.offset(a->source(b)) + pos[b]] = row[b];
        u.insert(std::move(v));
    }
    return submodule(p, u).module;
}

Ideal ideal_of_letters(const pathalg::Algebra& a, const coxeter::Word& w) {
    Ideal out = whole(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = ideal_product(a, vertex_ideal(a, {*it}), out);
    return out;
}

IdealSemigroup::IdealSemigroup(AlgebraPtr alg, const coxeter::WeylGroup& w) : alg_(std::move(alg)), w_(w) {
    if (w.rank() != alg_->n()) fail(ErrorCode::InvalidArgument, "Weyl group and algebra have different rank");
    for (int i = 0; i < alg_->n(); ++i) gens_.push_back(vertex_ideal(*alg_, {i}));
    by_element_.resize(w.size());
}

const Ideal& IdealSemigroup::of(size_t w) {
    auto& slot = by_element_[w];
    if (!slot) {
        const auto& word = w_[w].word;
        if (word.empty()) {
            slot = std::make_unique<Ideal>(whole(*alg_));
        } else {
            const Ideal& rest = of(w_.left_mul(word.front(), w));
            slot = std::make_unique<Ideal>(ideal_product(*alg_, gens_[word.front()], rest));
        }
    }
    return *slot;
}

const Ideal& IdealSemigroup::of_word(const coxeter::Word& word) {
    auto it = by_word_.find(word);
    if (it != by_word_.end()) return it->second;
    Ideal value = word.empty() ? whole(*alg_)
                               : ideal_product(*alg_, gens_[word.front()],
                                               of_word(coxeter::Word(word.begin() + 1, word.end())));
    return by_word_.emplace(word, std::move(value)).first->second;
}

// ---------------------------------------------------------------------------

std::string SttPair::label() const {
    if (summands.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < summands.size(); ++k) s += (k ? "+" : "") + summands[k].name;
    return s;
}

ModuleRep SttPair::module(const AlgebraPtr& a) const {
    std::vector<ModuleRep> ms;
    for (const auto& s : summands) ms.push_back(s.module);
    return direct_sum(a, ms).module;
}

std::string summand_name(const AlgebraPtr& a, const ModuleRep& m, int vertex, const std::string& word) {
    const int n = a->n();
    for (int j = 0; j < n; ++j)
        if (is_isomorphic(m, projective(a, j))) return "e" + std::to_string(j + 1) + "P";
    for (int k = 0; k < n; ++k)
        if (is_isomorphic(m, generalized_simple(a, k))) return "E" + std::to_string(k + 1);
    for (int k = 0; k < n; ++k)
        if (is_isomorphic(m, ideal_block(a, vertex_ideal(*a, {k}), k)))
            return "e" + std::to_string(k + 1) + "I" + std::to_string(k + 1);
    if (vertex >= 0) return "e" + std::to_string(vertex + 1) + "I" + word;
    return "M" + m.dims_string();
}

SttPair stt_pair(IdealSemigroup& sg, size_t w) {
    const AlgebraPtr& a = sg.algebra_ptr();
    const auto sigma = nakayama_permutation(a);
    const Ideal& ideal = sg.of(w);
    SttPair pair;
    pair.element = w;
    pair.word = coxeter::word_string(sg.weyl()[w].word);
    for (int j = 0; j < a->n(); ++j) {
        ModuleRep block = ideal_block(a, ideal, j);
        if (block.is_zero()) {
            pair.projective.push_back(sigma[j]);
            continue;
        }
        std::string name = summand_name(a, block, j, pair.word);
        pair.summands.push_back({j, std::move(name), std::move(block)});
    }
    std::sort(pair.projective.begin(), pair.projective.end());
    return pair;
}

SttCheck verify_stt(const AlgebraPtr& a, const SttPair& pair) {
    const ModuleRep m = pair.module(a);
    if (hom_dim(m, tau(m)) != 0) return {false, "Hom(M, tau M) != 0"};
    for (int v : pair.projective)
        if (hom_dim(projective(a, v), m) != 0) return {false, "Hom(P, M) != 0 at e" + std::to_string(v + 1) + "P"};
    std::set<int> distinct(pair.projective.begin(), pair.projective.end());
    if (distinct.size() != pair.projective.size()) return {false, "projective part is not basic"};
    if (pair.summands.size() + pair.projective.size() != static_cast<size_t>(a->n()))
        return {false, "|M| + |P| != n"};
    for (size_t k = 0; k < pair.summands.size(); ++k) {
        if (!is_indecomposable(pair.summands[k].module)) return {false, pair.summands[k].name + " is decomposable"};
        for (size_t l = 0; l < k; ++l)
            if (is_isomorphic(pair.summands[k].module, pair.summands[l].module))
                return {false, "M is not basic"};
    }
    return {};
}

// ---------------------------------------------------------------------------

std::vector<ModuleRep> split_module(const ModuleRep& m) {
    if (m.is_zero()) return {};
    if (is_indecomposable(m)) return {m};
    const std::vector<Matrix> end = hom_basis(m, m);
    const Field& field = m.algebra().field();
    std::vector<Matrix> candidates;
    for (const auto& f : end)
        for (int lambda = -3; lambda <= 3; ++lambda)
            candidates.push_back(f - field.from_int(lambda) * Matrix::identity(m.dim()));
    for (size_t i = 0; i < end.size(); ++i)
        for (size_t j = i + 1; j < end.size(); ++j) candidates.push_back(end[i] + end[j]);
    for (const auto& psi : candidates) {
        // Fitting: M = ker psi^N + im psi^N
        const Matrix pw = power(psi, m.dim());
        const Subspace k = kernel_space(pw, m);
        if (k.dim() == 0 || k.dim() == m.dim()) continue;
        std::vector<ModuleRep> out;
        for (const auto& piece : {submodule(m, k).module, submodule(m, image(pw, m)).module}) {
            auto sub = split_module(piece);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    fail(ErrorCode::Internal, "no splitting endomorphism found for a decomposable module");
}

bool same_pair(const SttPair& a, const SttPair& b) {
    if (a.projective != b.projective || a.summands.size() != b.summands.size()) return false;
    std::vector<bool> used(b.summands.size(), false);
    for (const auto& s : a.summands) {
        bool found = false;
        for (size_t k = 0; k < b.summands.size() && !found; ++k)
            if (!used[k] && is_isomorphic(s.module, b.summands[k].module)) used[k] = found = true;
        if (!found) return false;
    }
    return true;
}

SttPair left_mutation(const AlgebraPtr& a, const SttPair& pair, size_t k, uint64_t seed) {
    if (k >= pair.summands.size()) fail(ErrorCode::InvalidArgument, "summand index out of range");
    const ModuleRep& x = pair.summands[k].module;
    std::vector<const Summand*> u;
    for (size_t l = 0; l < pair.summands.size(); ++l)
        if (l != k) u.push_back(&pair.summands[l]);
    std::vector<ModuleRep> u_modules;
    for (const auto* s : u) u_modules.push_back(s->module);
    const ModuleRep u_sum = direct_sum(a, u_modules).module;
    if (!u.empty() && in_fac(u_sum, x))
        fail(ErrorCode::NotMutable, pair.summands[k].name + " lies in Fac of the other summands");

    // Left add U-approximation from Hom bases, then drop copies that factor
    // through the remaining ones.
    struct Copy {
        size_t target;
        Matrix map;
    };
    std::vector<Copy> copies;
    for (size_t t = 0; t < u.size(); ++t)
        for (auto& f : hom_basis(x, u[t]->module)) copies.push_back({t, std::move(f)});
    std::vector<std::vector<std::vector<Matrix>>> between(u.size(), std::vector<std::vector<Matrix>>(u.size()));
    for (size_t s = 0; s < u.size(); ++s)
        for (size_t t = 0; t < u.size(); ++t) between[s][t] = hom_basis(u[s]->module, u[t]->module);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c < copies.size(); ++c) {
            Subspace through(copies[c].map.rows() * copies[c].map.cols());
            for (size_t r = 0; r < copies.size(); ++r) {
                if (r == c) continue;
                for (const auto& h : between[copies[r].target][copies[c].target]) {
                    Vector v = flatten(h * copies[r].map);
                    if (!is_zero(v)) through.insert(std::move(v));
                }
            }
            if (through.contains(flatten(copies[c].map))) {
                copies.erase(copies.begin() + static_cast<std::ptrdiff_t>(c));
                changed = true;
                break;
            }
        }
    }

    std::vector<ModuleRep> targets;
    for (const auto& c : copies) targets.push_back(u[c.target]->module);
    DirectSum t = direct_sum(a, targets);
    Matrix f(t.module.dim(), x.dim());
    for (size_t c = 0; c < copies.size(); ++c) f = f + t.injection(c, targets[c]) * copies[c].map;
    ModuleRep y = quotient(t.module, image(f, t.module)).module;

    SttPair out;
    for (const auto* s : u) out.summands.push_back(*s);
    out.projective = pair.projective;
    if (y.is_zero()) {
        std::vector<int> free;
        for (int j = 0; j < a->n(); ++j)
            if (u_sum.dim(j) == 0 && std::find(pair.projective.begin(), pair.projective.end(), j) == pair.projective.end())
                free.push_back(j);
        if (free.size() != 1) fail(ErrorCode::Internal, "cannot determine the new projective summand");
        out.projective.push_back(free.front());
        std::sort(out.projective.begin(), out.projective.end());
        return out;
    }
    std::vector<ModuleRep> pieces = split_module(y);
    for (const auto& p : pieces)
        if (!is_isomorphic(p, pieces.front(), seed))
            fail(ErrorCode::Internal, "cokernel of the approximation is not isotypic");
    Summand s{-1, summand_name(a, pieces.front(), -1, ""), pieces.front()};
    out.summands.insert(out.summands.begin() + static_cast<std::ptrdiff_t>(k), std::move(s));
    return out;
}

// ---------------------------------------------------------------------------

MutationGraph mutation_graph(IdealSemigroup& sg) {
    const auto& w = sg.weyl();
    if (!w.complete()) fail(ErrorCode::CapExceeded, "mutation graph needs the full Weyl group");
    MutationGraph g;
    for (size_t e = 0; e < w.size(); ++e) g.nodes.push_back(stt_pair(sg, e));
    for (size_t e = 0; e < w.size(); ++e)
        for (int i = 0; i < w.rank(); ++i) {
            const size_t v = w.left_mul(i, e);
            if (w[v].length > w[e].length) g.edges.push_back({e, v, i});
        }
    return g;
}

std::vector<EdgeCheck> check_edges_by_mutation(const AlgebraPtr& a, const MutationGraph& g,
                                               const std::vector<size_t>& edges) {
    std::vector<EdgeCheck> out;
    for (size_t e : edges) {
        const auto& edge = g.edges[e];
        const SttPair& from = g.nodes[edge.from];
        const SttPair& to = g.nodes[edge.to];
        auto it = std::find_if(from.summands.begin(), from.summands.end(),
                               [&](const Summand& s) { return s.vertex == edge.label; });
        if (it == from.summands.end()) {
            out.push_back({e, false, "no summand at the edge vertex"});
            continue;
        }
        SttPair mutated;
        try {
            mutated = left_mutation(a, from, static_cast<size_t>(it - from.summands.begin()));
        } catch (const Error& err) {
            out.push_back({e, false, err.what()});
            continue;
        }
        if (!same_pair(mutated, to)) {
            out.push_back({e, false, "mutation gives " + pair_text(mutated) + ", graph has " + pair_text(to)});
            continue;
        }
        const ModuleRep m = from.module(a), m2 = to.module(a);
        if (!in_fac(m, m2) || in_fac(m2, m)) {
            out.push_back({e, false, "Fac does not strictly decrease"});
            continue;
        }
        out.push_back({e, true, ""});
    }
    return out;
}

ClassificationReport classification_report(IdealSemigroup& sg, size_t demazure_limit, uint64_t seed) {
    const auto& w = sg.weyl();
    const AlgebraPtr& a = sg.algebra_ptr();
    if (!w.complete()) fail(ErrorCode::CapExceeded, "classification needs the full Weyl group");
    ClassificationReport r;
    r.weyl_order = w.size();

    for (size_t e = 0; e < w.size(); ++e)
        for (const auto& word : w.all_reduced_words(e))
            if (!(sg.of_word(word) == sg.of(e))) {
                r.well_defined = false;
                r.failures.push_back("reduced words of w" + coxeter::word_string(w[e].word) + " give different ideals");
                break;
            }

    for (size_t e = 0; e < w.size(); ++e)
        for (size_t f = 0; f < e; ++f)
            if (sg.of(e) == sg.of(f)) {
                r.injective = false;
                r.failures.push_back("I_w" + coxeter::word_string(w[e].word) + " = I_w" + coxeter::word_string(w[f].word));
            }

    std::vector<ModuleRep> blocks;
    for (size_t e = 0; e < w.size(); ++e) {
        SttPair p = stt_pair(sg, e);
        SttCheck c = verify_stt(a, p);
        if (!c.ok) {
            r.stt_ok = false;
            r.failures.push_back("pair of w" + p.word + ": " + c.reason);
            continue;
        }
        ++r.stt_count;
        for (const auto& s : p.summands) {
            bool seen = false;
            for (const auto& b : blocks) seen = seen || is_isomorphic(b, s.module);
            if (seen) continue;
            blocks.push_back(s.module);
            r.tau_rigid_names.push_back(s.name);
            if (!is_tau_rigid(s.module) || !is_indecomposable(s.module)) {
                r.tau_rigid_ok = false;
                r.failures.push_back(s.name + " is not an indecomposable tau-rigid module");
            }
        }
    }
    std::sort(r.tau_rigid_names.begin(), r.tau_rigid_names.end());

    std::vector<std::pair<size_t, size_t>> pairs;
    if (w.size() * w.size() <= demazure_limit) {
        for (size_t u = 0; u < w.size(); ++u)
            for (size_t v = 0; v < w.size(); ++v) pairs.emplace_back(u, v);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, w.size() - 1);
        for (size_t k = 0; k < demazure_limit; ++k) pairs.emplace_back(pick(rng), pick(rng));
    }
    for (const auto& [u, v] : pairs) {
        ++r.demazure_pairs;
        if (!(ideal_product(*a, sg.of(u), sg.of(v)) == sg.of(w.demazure(u, v)))) {
            r.demazure_ok = false;
            r.failures.push_back("I_u I_v != I_{u*v} for u = w" + coxeter::word_string(w[u].word) +
                                 ", v = w" + coxeter::word_string(w[v].word));
        }
    }
    return r;
}

}  // namespace preproj::tautilt
