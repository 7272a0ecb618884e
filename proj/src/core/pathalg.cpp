#include "pathalg.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace preproj::pathalg {

using cartan::DoubledQuiver;

void add_term(Poly& p, const Path& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

Path concat(const Path& a, const Path& b) {
    Path out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Path concat(const Path& a, const Path& b, const Path& c) {
    Path out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

namespace {

Path loop_power(int loop, int64_t k) { return Path(static_cast<size_t>(k), loop); }

}  // namespace

std::vector<Relation> preprojective_relations(const cartan::CartanData& data, const Field& field) {
    const DoubledQuiver& q = data.quiver;
    const int n = data.n();
    std::vector<Relation> out;
    for (int i = 0; i < n; ++i) {
        Poly p;
        add_term(p, loop_power(q.loop(i), data.c(i)), field.one());
        out.push_back({RelationKind::Nilpotency, i, std::move(p)});
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& ar = q.arrows[a];
        if (ar.loop) continue;
        const int i = ar.i, j = ar.j;
        Poly p;
        add_term(p, concat(loop_power(q.loop(i), q.f[j][i]), Path{a}), field.one());
        add_term(p, concat(Path{a}, loop_power(q.loop(j), q.f[i][j])), -field.one());
        out.push_back({RelationKind::Commutativity, i, std::move(p)});
    }
    for (int i = 0; i < n; ++i) {
        Poly p;
        for (int j = 0; j < n; ++j) {
            if (!data.cartan.adjacent(i, j)) continue;
            const Scalar sign = field.from_int(cartan::sgn(data.orientation, i, j));
            const int64_t fji = q.f[j][i];
            for (int g = 1; g <= q.g[i][j]; ++g) {
                const int aij = q.arrow_index(i, j, g), aji = q.arrow_index(j, i, g);
                for (int64_t f = 0; f < fji; ++f)
                    add_term(p, concat(loop_power(q.loop(i), f), Path{aij, aji}, loop_power(q.loop(i), fji - 1 - f)),
                             sign);
            }
        }
        out.push_back({RelationKind::Mesh, i, std::move(p)});
    }
    return out;
}

std::string path_string(const DoubledQuiver& q, const Path& p) {
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) s += "*";
        s += q.arrows[p[k]].name;
    }
    return s;
}

std::string poly_string(const DoubledQuiver& q, const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::string c = it->second.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (c != "1") s += c + "*";
        s += path_string(q, it->first);
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Groebner completion

std::optional<std::pair<size_t, size_t>> GroebnerBasis::find_tip(const Path& m) const {
    for (size_t end = 1; end <= m.size(); ++end) {
        const int last = m[end - 1];
        if (static_cast<size_t>(last) >= by_last_.size()) continue;
        for (size_t t : by_last_[last]) {
            const Path& tip = tips_[t];
            if (tip.size() > end) continue;
            if (std::equal(tip.begin(), tip.end(), m.begin() + (end - tip.size()))) return std::pair{t, end - tip.size()};
        }
    }
    return std::nullopt;
}

bool GroebnerBasis::tip_is_suffix(const Path& p) const {
    if (p.empty() || static_cast<size_t>(p.back()) >= by_last_.size()) return false;
    for (size_t t : by_last_[p.back()]) {
        const Path& tip = tips_[t];
        if (tip.size() <= p.size() && std::equal(tip.begin(), tip.end(), p.end() - tip.size())) return true;
    }
    return false;
}

Poly GroebnerBasis::reduce(Poly p) const {
    Poly out;
    while (!p.empty()) {
        auto it = std::prev(p.end());
        const Path m = it->first;
        const Scalar c = it->second;
        auto hit = find_tip(m);
        if (!hit) {
            out.emplace(m, c);
            p.erase(it);
            continue;
        }
        const auto [g, pos] = *hit;
        const Path u(m.begin(), m.begin() + pos);
        const Path v(m.begin() + pos + tips_[g].size(), m.end());
        for (const auto& [mono, coef] : elements_[g]) add_term(p, concat(u, mono, v), -(c * coef));
    }
    return out;
}

namespace {

void make_monic(Poly& p) {
    const Scalar lead = p.rbegin()->second;
    if (lead.is_one()) return;
    const Scalar inv = lead.inverse();
    for (auto& [m, c] : p) c *= inv;
}

bool is_subword(const Path& small, const Path& big) {
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

struct Overlap {
    size_t length;
    size_t g1, g2, k;
    bool operator>(const Overlap& o) const {
        return std::tie(length, g1, g2, k) > std::tie(o.length, o.g1, o.g2, o.k);
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::complete(const DoubledQuiver& q, const std::vector<Poly>& generators,
                                      const GroebnerCaps& caps) {
    // Working state: all elements ever added; inactive ones are skipped.
    std::vector<Poly> polys;
    std::vector<bool> active;
    GroebnerBasis gb;
    auto rebuild_index = [&] {
        gb.elements_.clear();
        gb.tips_.clear();
        gb.by_last_.assign(q.arrow_count(), {});
        for (size_t g = 0; g < polys.size(); ++g) {
            if (!active[g]) continue;
            gb.by_last_[polys[g].rbegin()->first.back()].push_back(gb.tips_.size());
            gb.elements_.push_back(polys[g]);
            gb.tips_.push_back(polys[g].rbegin()->first);
        }
    };
    rebuild_index();

    std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> overlaps;
    auto push_overlaps = [&](size_t g1, size_t g2) {
        const Path& l1 = polys[g1].rbegin()->first;
        const Path& l2 = polys[g2].rbegin()->first;
        for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
            if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
            const size_t len = l1.size() + l2.size() - k;
            if (len > static_cast<size_t>(caps.max_degree))
                fail(ErrorCode::CapExceeded, "Groebner completion exceeded degree " + std::to_string(caps.max_degree));
            overlaps.push({len, g1, g2, k});
        }
    };

    std::vector<Poly> pending(generators.begin(), generators.end());
    auto add_pending = [&] {
        while (!pending.empty()) {
            Poly h = gb.reduce(std::move(pending.back()));
            pending.pop_back();
            if (h.empty()) continue;
            make_monic(h);
            const size_t idx = polys.size();
            const Path tip = h.rbegin()->first;
            polys.push_back(std::move(h));
            active.push_back(true);
            for (size_t g = 0; g < idx; ++g) {
                if (active[g] && is_subword(tip, polys[g].rbegin()->first)) {
                    active[g] = false;
                    pending.push_back(polys[g]);
                }
            }
            rebuild_index();
            for (size_t g = 0; g <= idx; ++g) {
                if (!active[g]) continue;
                push_overlaps(g, idx);
                if (g != idx) push_overlaps(idx, g);
            }
            if (gb.elements_.size() > caps.max_basis)
                fail(ErrorCode::CapExceeded, "Groebner basis grew beyond " + std::to_string(caps.max_basis) + " elements");
        }
    };
    add_pending();

    while (!overlaps.empty()) {
        Overlap o = overlaps.top();
        overlaps.pop();
        if (!active[o.g1] || !active[o.g2]) continue;
        const Path& l1 = polys[o.g1].rbegin()->first;
        const Path& l2 = polys[o.g2].rbegin()->first;
        const Path u(l1.begin(), l1.end() - o.k);
        const Path v(l2.begin() + o.k, l2.end());
        Poly s;
        for (const auto& [m, c] : polys[o.g1]) add_term(s, concat(m, v), c);
        for (const auto& [m, c] : polys[o.g2]) add_term(s, concat(u, m), -c);
        s = gb.reduce(std::move(s));
        if (s.empty()) continue;
        pending.push_back(std::move(s));
        add_pending();
    }

    // Interreduce tails so the basis is the reduced one.
    for (size_t g = 0; g < polys.size(); ++g) {
        if (!active[g]) continue;
        Poly tail = polys[g];
        auto lead = *tail.rbegin();
        tail.erase(std::prev(tail.end()));
        Poly reduced = gb.reduce(std::move(tail));
        reduced.emplace(lead.first, lead.second);
        polys[g] = std::move(reduced);
        rebuild_index();
    }
    std::vector<Poly> final;
    for (size_t g = 0; g < polys.size(); ++g)
        if (active[g]) final.push_back(polys[g]);
    std::sort(final.begin(), final.end(),
              [](const Poly& a, const Poly& b) { return PathLess{}(a.rbegin()->first, b.rbegin()->first); });
    polys = std::move(final);
    active.assign(polys.size(), true);
    rebuild_index();
    return gb;
}

// ---------------------------------------------------------------------------
// Finite-dimensional quotient

namespace {

void accumulate(Vector& acc, const SparseVec& v, const Scalar& c) {
    for (const auto& [i, x] : v) acc[i] += c * x;
}

SparseVec sparsify(const Vector& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::build(const cartan::CartanData& data, const Field& field,
                                              const GroebnerCaps& caps) {
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->data_ = data;
    alg->field_ = field;
    alg->relations_ = preprojective_relations(data, field);
    std::vector<Poly> gens;
    for (const auto& r : alg->relations_)
        if (!r.poly.empty()) gens.push_back(r.poly);
    alg->groebner_ = GroebnerBasis::complete(data.quiver, gens, caps);

    const auto& q = data.quiver;
    const int n = data.n();
    for (int i = 0; i < n; ++i) {
        alg->idempotents_.push_back(alg->basis_.size());
        alg->basis_.push_back({{}, i, i});
    }
    std::vector<BasisPath> level = alg->basis_;
    for (size_t len = 1; !level.empty(); ++len) {
        std::vector<BasisPath> next;
        for (const auto& p : level)
            for (int a = 0; a < q.arrow_count(); ++a) {
                if (q.arrows[a].target != p.source) continue;
                Path path = concat(p.path, Path{a});
                if (alg->groebner_.tip_is_suffix(path)) continue;
                next.push_back({std::move(path), q.arrows[a].source, p.target});
            }
        if (next.empty()) break;
        if (len > static_cast<size_t>(caps.max_degree) || alg->basis_.size() + next.size() > caps.max_basis)
            fail(ErrorCode::CapExceeded, "algebra is not finite-dimensional within the caps (degree " +
                                             std::to_string(caps.max_degree) + ", basis " +
                                             std::to_string(caps.max_basis) + ")");
        std::sort(next.begin(), next.end(), [](const BasisPath& a, const BasisPath& b) { return a.path < b.path; });
        for (const auto& p : next) {
            alg->index_.emplace(p.path, alg->basis_.size());
            alg->basis_.push_back(p);
        }
        level = std::move(next);
    }

    const size_t d = alg->dim();
    alg->blocks_.assign(static_cast<size_t>(n) * n, {});
    for (size_t b = 0; b < d; ++b) alg->blocks_[alg->basis_[b].target * n + alg->basis_[b].source].push_back(b);

    alg->right_.assign(q.arrow_count(), std::vector<SparseVec>(d));
    alg->left_.assign(q.arrow_count(), std::vector<SparseVec>(d));
    for (int a = 0; a < q.arrow_count(); ++a)
        for (size_t b = 0; b < d; ++b) {
            const BasisPath& bp = alg->basis_[b];
            if (bp.source == q.arrows[a].target)
                alg->right_[a][b] = sparsify(alg->path_vector(concat(bp.path, Path{a})));
            if (bp.target == q.arrows[a].source)
                alg->left_[a][b] = sparsify(alg->path_vector(concat(Path{a}, bp.path)));
        }
    alg->table_.assign(d * d, {});
    for (size_t b1 = 0; b1 < d; ++b1)
        for (size_t b2 = 0; b2 < d; ++b2) {
            const BasisPath &x = alg->basis_[b1], &y = alg->basis_[b2];
            if (x.source != y.target) continue;
            if (x.path.empty())
                alg->table_[b1 * d + b2] = {{b2, field.one()}};
            else if (y.path.empty())
                alg->table_[b1 * d + b2] = {{b1, field.one()}};
            else
                alg->table_[b1 * d + b2] = sparsify(alg->path_vector(concat(x.path, y.path)));
        }
    return alg;
}

std::optional<size_t> Algebra::find(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Algebra::basis_name(size_t b) const {
    const BasisPath& p = basis_[b];
    if (p.path.empty()) return "e" + std::to_string(p.source + 1);
    return path_string(quiver(), p.path);
}

Vector Algebra::unit(size_t b) const {
    Vector v = zero();
    v[b] = field_.one();
    return v;
}

Vector Algebra::one() const {
    Vector v = zero();
    for (size_t e : idempotents_) v[e] = field_.one();
    return v;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    Vector out = zero();
    for (size_t b1 = 0; b1 < dim(); ++b1) {
        if (x[b1].is_zero()) continue;
        for (size_t b2 = 0; b2 < dim(); ++b2) {
            if (y[b2].is_zero()) continue;
            accumulate(out, product(b1, b2), x[b1] * y[b2]);
        }
    }
    return out;
}

Vector Algebra::to_vector(const Poly& p) const {
    Poly nf = normal_form(p);
    Vector v = zero();
    for (const auto& [m, c] : nf) {
        auto idx = find(m);
        if (!idx) fail(ErrorCode::Internal, "normal form " + path_string(quiver(), m) + " is not a basis path");
        v[*idx] = c;
    }
    return v;
}

Vector Algebra::path_vector(const Path& p) const {
    if (p.empty()) fail(ErrorCode::InvalidArgument, "empty path has no vertex");
    Poly poly;
    poly.emplace(p, field_.one());
    return to_vector(poly);
}

// ---------------------------------------------------------------------------

std::vector<size_t> projective_radical_layers(const Algebra& a, int i) {
    Subspace current(a.dim());
    for (int j = 0; j < a.n(); ++j)
        for (size_t b : a.block(i, j)) current.insert(a.unit(b));
    std::vector<size_t> layers;
    while (current.dim() > 0) {
        Subspace next(a.dim());
        for (const auto& x : current.basis())
            for (int arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
                Vector y = a.zero();
                const auto& act = a.right_arrow(arrow);
                for (size_t b = 0; b < a.dim(); ++b)
                    if (!x[b].is_zero()) accumulate(y, act[b], x[b]);
                if (!is_zero(y)) next.insert(std::move(y));
            }
        layers.push_back(current.dim() - next.dim());
        current = std::move(next);
    }
    return layers;
}

AlgebraReport verify_algebra(const Algebra& a, size_t exhaustive_limit, uint64_t seed) {
    AlgebraReport r;
    r.dim = a.dim();
    const auto& q = a.quiver();
    auto failure = [&](const std::string& what) {
        if (r.ok) r.failure = what;
        r.ok = false;
    };
    for (const auto& rel : a.relations())
        if (!a.normal_form(rel.poly).empty()) failure("relation " + poly_string(q, rel.poly) + " does not reduce to 0");

    const Vector one = a.one();
    for (size_t b = 0; b < a.dim(); ++b) {
        const Vector u = a.unit(b);
        if (a.multiply(one, u) != u || a.multiply(u, one) != u)
            failure("sum of idempotents does not act as identity on " + a.basis_name(b));
    }

    auto check_triple = [&](size_t x, size_t y, size_t z) {
        Vector left = a.zero(), right = a.zero();
        for (const auto& [k, c] : a.product(x, y)) accumulate(left, a.product(k, z), c);
        for (const auto& [k, c] : a.product(y, z)) accumulate(right, a.product(x, k), c);
        ++r.associativity_triples;
        if (left != right)
            failure("associativity fails on (" + a.basis_name(x) + ", " + a.basis_name(y) + ", " + a.basis_name(z) + ")");
    };
    const size_t d = a.dim();
    if (d <= exhaustive_limit) {
        for (size_t x = 0; x < d; ++x)
            for (size_t y = 0; y < d; ++y)
                for (size_t z = 0; z < d; ++z) check_triple(x, y, z);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, d - 1);
        for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    for (int i = 0; i < a.n(); ++i) {
        size_t s = 0;
        for (int j = 0; j < a.n(); ++j) s += a.block(i, j).size();
        r.projective_dims.push_back(s);
        r.radical_layers.push_back(projective_radical_layers(a, i));
    }
    return r;
}

}  // namespace preproj::pathalg
