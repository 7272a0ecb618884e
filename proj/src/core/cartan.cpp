#include "cartan.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <numeric>
#include <queue>

#include "errors.hpp"
#include "matrix.hpp"

namespace preproj::cartan {

namespace {

std::string vertex_name(int i) { return std::to_string(i + 1); }

std::vector<std::vector<int>> find_components(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && m[v][w] != 0 && comp[w] < 0) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// Solves c_i * c_ij = c_j * c_ji along a spanning tree of each component,
// returning rational ratios; std::nullopt on an inconsistent cycle.
std::optional<std::vector<Scalar>> symmetrizer_ratios(const IntMatrix& m,
                                                      const std::vector<std::vector<int>>& comps) {
    const int n = static_cast<int>(m.size());
    std::vector<Scalar> ratio(n);
    std::vector<bool> seen(n, false);
    for (const auto& comp : comps) {
        int root = comp.front();
        ratio[root] = 1;
        seen[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                if (j == i || m[i][j] == 0) continue;
                Scalar cj = ratio[i] * Scalar(m[i][j]) / Scalar(m[j][i]);
                if (!seen[j]) {
                    ratio[j] = cj;
                    seen[j] = true;
                    q.push(j);
                } else if (ratio[j] != cj) {
                    return std::nullopt;
                }
            }
        }
    }
    return ratio;
}

Scalar determinant(Matrix m) {
    const size_t n = m.rows();
    Scalar det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

}  // namespace

CartanMatrix CartanMatrix::validate(const IntMatrix& entries) {
    const size_t n = entries.size();
    if (n == 0) fail(ErrorCode::ValidationError, "Cartan matrix must be non-empty");
    for (const auto& row : entries)
        if (row.size() != n) fail(ErrorCode::ValidationError, "Cartan matrix must be square");
    for (size_t i = 0; i < n; ++i) {
        if (entries[i][i] != 2)
            fail(ErrorCode::DiagonalNotTwo, "c_" + vertex_name(i) + vertex_name(i) + " must equal 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries[i][j] > 0)
                fail(ErrorCode::PositivityViolation,
                     "off-diagonal entry c_" + vertex_name(i) + vertex_name(j) + " is positive");
            if ((entries[i][j] == 0) != (entries[j][i] == 0))
                fail(ErrorCode::AsymmetricZeroPattern,
                     "c_" + vertex_name(i) + vertex_name(j) + " and c_" + vertex_name(j) + vertex_name(i) +
                         " must vanish together");
        }
    }
    CartanMatrix cm;
    cm.entries_ = entries;
    cm.components_ = find_components(entries);
    if (!symmetrizer_ratios(entries, cm.components_))
        fail(ErrorCode::NoSymmetrizer, "no positive diagonal D makes DC symmetric (inconsistent cycle)");
    return cm;
}

Symmetrizer minimal_symmetrizer(const CartanMatrix& cm) {
    auto ratios = symmetrizer_ratios(cm.entries(), cm.components());
    if (!ratios) fail(ErrorCode::NoSymmetrizer, "no symmetrizer");
    Symmetrizer d;
    d.c.assign(cm.n(), 0);
    d.minimal = true;
    for (const auto& comp : cm.components()) {
        // ratios are positive rationals; scale by a common multiple of the
        // denominators, then divide out the gcd
        int64_t l = 1;
        for (int i : comp) {
            int64_t k = 1;
            while (!((*ratios)[i] * Scalar(k)).is_integer()) ++k;
            l = std::lcm(l, k);
        }
        int64_t g = 0;
        for (int i : comp) {
            int64_t v = std::stoll(((*ratios)[i] * Scalar(l)).str());
            d.c[i] = v;
            g = std::gcd(g, v);
        }
        for (int i : comp) d.c[i] /= g;
    }
    return d;
}

Symmetrizer given_symmetrizer(const CartanMatrix& cm, const std::vector<int64_t>& c) {
    const int n = cm.n();
    if (static_cast<int>(c.size()) != n)
        fail(ErrorCode::NotASymmetrizer, "symmetrizer length " + std::to_string(c.size()) + " != " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (c[i] < 1) fail(ErrorCode::NotASymmetrizer, "symmetrizer entries must be positive integers");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (c[i] * cm(i, j) != c[j] * cm(j, i))
                fail(ErrorCode::NotASymmetrizer, "DC is not symmetric at (" + vertex_name(i) + "," + vertex_name(j) + ")");
    Symmetrizer d{c, false};
    d.minimal = (c == minimal_symmetrizer(cm).c);
    return d;
}

Orientation default_orientation(const CartanMatrix& cm) {
    Orientation o;
    for (int i = 0; i < cm.n(); ++i)
        for (int j = i + 1; j < cm.n(); ++j)
            if (cm(i, j) < 0) o.pairs.insert({i, j});
    validate_orientation(cm, o);
    return o;
}

Orientation opposite(const Orientation& o) {
    Orientation op;
    for (auto [i, j] : o.pairs) op.pairs.insert({j, i});
    return op;
}

void validate_orientation(const CartanMatrix& cm, const Orientation& o) {
    const int n = cm.n();
    for (auto [i, j] : o.pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            fail(ErrorCode::InvalidOrientation, "orientation pair out of range");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool a = o.contains(i, j), b = o.contains(j, i);
            if (a && b)
                fail(ErrorCode::InvalidOrientation, "both (" + vertex_name(i) + "," + vertex_name(j) + ") and its reverse");
            if ((a || b) != (cm(i, j) < 0))
                fail(ErrorCode::InvalidOrientation,
                     "orientation must contain exactly one of (" + vertex_name(i) + "," + vertex_name(j) +
                         ") and its reverse iff c_ij < 0");
        }
    // (A2): no oriented cycle among arrows j -> i for (i, j)
    std::vector<int> state(n, 0);
    std::function<bool(int)> has_cycle = [&](int v) {
        state[v] = 1;
        for (auto [i, j] : o.pairs) {
            if (j != v) continue;
            if (state[i] == 1 || (state[i] == 0 && has_cycle(i))) return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && has_cycle(v)) fail(ErrorCode::InvalidOrientation, "orientation has an oriented cycle");
}

int sgn(const Orientation& o, int i, int j) { return o.contains(i, j) ? 1 : -1; }

int64_t g_local(const CartanMatrix& cm, int i, int j) {
    if (cm(i, j) == 0 || i == j) return 0;
    return std::gcd(cm(i, j), cm(j, i));
}

int64_t f_local(const CartanMatrix& cm, int i, int j) {
    int64_t g = g_local(cm, i, j);
    return g == 0 ? 0 : -cm(i, j) / g;
}

int DoubledQuiver::arrow_index(int i, int j, int gg) const {
    for (int a = 0; a < arrow_count(); ++a) {
        const Arrow& ar = arrows[a];
        if (!ar.loop && ar.i == i && ar.j == j && ar.g == gg) return a;
    }
    return -1;
}

DoubledQuiver double_quiver(const CartanMatrix& cm, const Symmetrizer& d) {
    (void)d;
    const int n = cm.n();
    DoubledQuiver q;
    q.n = n;
    q.g.assign(n, std::vector<int64_t>(n, 0));
    q.f.assign(n, std::vector<int64_t>(n, 0));
    const bool wide = n >= 10;
    auto arrow_name = [&](int i, int j, int g, int64_t gij) {
        std::string s = "a" + vertex_name(i) + (wide ? "_" : "") + vertex_name(j);
        if (gij > 1) s += "^" + std::to_string(g);
        return s;
    };
    for (int i = 0; i < n; ++i) q.arrows.push_back({i, i, true, i, i, 0, "eps" + vertex_name(i)});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (cm(i, j) == 0) continue;
            q.g[i][j] = g_local(cm, i, j);
            q.g[j][i] = g_local(cm, j, i);
            q.f[i][j] = f_local(cm, i, j);
            q.f[j][i] = f_local(cm, j, i);
            for (auto [t, s] : {std::pair{i, j}, std::pair{j, i}})
                for (int g = 1; g <= q.g[t][s]; ++g) q.arrows.push_back({s, t, false, t, s, g, arrow_name(t, s, g, q.g[t][s])});
        }
    return q;
}

IntMatrix gram_matrix(const CartanMatrix& cm, const Symmetrizer& d) {
    const int n = cm.n();
    IntMatrix g(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = i == j ? 2 * d[i] : -d[i] * std::abs(cm(i, j));
    return g;
}

bool component_is_dynkin(const CartanMatrix& cm, const Symmetrizer& d, const std::vector<int>& comp) {
    IntMatrix g = gram_matrix(cm, d);
    for (size_t k = 1; k <= comp.size(); ++k) {
        Matrix minor(k, k);
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) minor(a, b) = g[comp[a]][comp[b]];
        Scalar det = determinant(minor);
        if (!(Scalar(0) < det)) return false;
    }
    return true;
}

bool is_dynkin(const CartanMatrix& cm, const Symmetrizer& d) {
    for (const auto& comp : cm.components())
        if (!component_is_dynkin(cm, d, comp)) return false;
    return true;
}

bool has_no_dynkin_component(const CartanMatrix& cm, const Symmetrizer& d) {
    for (const auto& comp : cm.components())
        if (component_is_dynkin(cm, d, comp)) return false;
    return true;
}

CartanData CartanData::make(const IntMatrix& entries, const std::vector<int64_t>* symmetrizer,
                            const Orientation* orientation) {
    CartanMatrix cm = CartanMatrix::validate(entries);
    Symmetrizer d = symmetrizer ? given_symmetrizer(cm, *symmetrizer) : minimal_symmetrizer(cm);
    Orientation o;
    if (orientation) {
        validate_orientation(cm, *orientation);
        o = *orientation;
    } else {
        o = default_orientation(cm);
    }
    DoubledQuiver q = double_quiver(cm, d);
    return CartanData{std::move(cm), std::move(d), std::move(o), std::move(q)};
}

}  // namespace preproj::cartan
