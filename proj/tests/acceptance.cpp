// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "module.hpp"
#include "tautilt.hpp"

using namespace preproj;
using namespace preproj::repmod;
using namespace preproj::tautilt;
using fixtures::make;

namespace {

// Collects failures of a criterion; the first few are printed.
struct Criterion {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string str(size_t v) { return std::to_string(v); }

// ---- independent Weyl group oracle -----------------------------------------
// sigma_i^* on the basis of V^*: the j-th coordinate of alpha_i gets
// reflected, computed from the Cartan entries directly.
using Mat = std::vector<int64_t>;

Mat reflection(const cartan::IntMatrix& c, int i) {
    const int n = static_cast<int>(c.size());
    Mat m(n * n, 0);
    for (int k = 0; k < n; ++k) m[k * n + k] = 1;
    for (int k = 0; k < n; ++k) m[k * n + i] -= c[k][i];
    return m;
}

Mat mul(const Mat& a, const Mat& b, int n) {
    Mat out(n * n, 0);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k)
            if (a[r * n + k])
                for (int c = 0; c < n; ++c) out[r * n + c] += a[r * n + k] * b[k * n + c];
    return out;
}

Mat ident(int n) {
    Mat m(n * n, 0);
    for (int k = 0; k < n; ++k) m[k * n + k] = 1;
    return m;
}

// BFS ball: element -> length.
std::map<Mat, int> weyl_ball(const cartan::IntMatrix& c, int radius) {
    const int n = static_cast<int>(c.size());
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i) gens.push_back(reflection(c, i));
    std::map<Mat, int> seen{{ident(n), 0}};
    std::vector<Mat> frontier{ident(n)};
    for (int len = 1; len <= radius && !frontier.empty(); ++len) {
        std::vector<Mat> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat p = mul(g, m, n);
                if (seen.emplace(p, len).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return seen;
}

Mat word_matrix(const cartan::IntMatrix& c, const coxeter::Word& w) {
    const int n = static_cast<int>(c.size());
    Mat m = ident(n);
    for (int i : w) m = mul(m, reflection(c, i), n);
    return m;
}

// All words of the element's length that evaluate to it.
std::vector<coxeter::Word> reduced_words_oracle(const cartan::IntMatrix& c, const Mat& target, int length) {
    const int n = static_cast<int>(c.size());
    std::vector<coxeter::Word> out;
    coxeter::Word w;
    std::function<void(const Mat&)> rec = [&](const Mat& acc) {
        if (static_cast<int>(w.size()) == length) {
            if (acc == target) out.push_back(w);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (!w.empty() && w.back() == i) continue;
            w.push_back(i);
            rec(mul(acc, reflection(c, i), n));
            w.pop_back();
        }
    };
    rec(ident(n));
    return out;
}

struct Named {
    std::string name;
    cartan::CartanData data;
    size_t order;  // |W| quoted in the criteria
};

std::vector<Named> acceptance_types() {
    using namespace fixtures;
    return {{"A2", make(A2), 6}, {"B2", make(B2), 8}, {"G2", make(G2), 12}, {"A3", make(A3), 24}, {"B3", make(B3), 48}};
}

size_t proj_dim(const pathalg::Algebra& a, int i) {
    size_t s = 0;
    for (int j = 0; j < a.n(); ++j) s += a.block(i, j).size();
    return s;
}

// ---- criteria ----------------------------------------------------------------

void c1(Criterion& c) {
    auto a = fixtures::algebra(fixtures::eg1());
    c.expect(a->dim() == 8, "dim Pi = " + str(a->dim()));
    for (int i = 0; i < 2; ++i) {
        c.expect(proj_dim(*a, i) == 4, "dim e" + str(i + 1) + "Pi");
        c.expect(layer_totals(structure_series(projective(a, i)).radical_layers) == std::vector<size_t>{1, 2, 1}, "layers of e" + str(i + 1) + "Pi");
        c.expect(generalized_simple(a, i).dim() == 2, "dim E" + str(i + 1));
        c.expect(structure_series(projective(a, i)).radical_layers.size() == 3, "Loewy length of e" + str(i + 1) + "Pi");
    }
    c.summary = "eg1: dim Pi 8, e_iPi 4 with layers [1,2,1], dim E_i 2";
}

void c2(Criterion& c) {
    auto a = fixtures::algebra(fixtures::eg2());
    c.expect(a->dim() == 10, "dim Pi = " + str(a->dim()));
    c.expect(proj_dim(*a, 0) == 6, "dim e1Pi");
    c.expect(proj_dim(*a, 1) == 4, "dim e2Pi");
    c.expect(layer_totals(structure_series(projective(a, 0)).radical_layers) == std::vector<size_t>{1, 2, 2, 1}, "layers of e1Pi");
    c.expect(layer_totals(structure_series(projective(a, 1)).radical_layers) == std::vector<size_t>{1, 1, 1, 1}, "layers of e2Pi");
    c.expect(generalized_simple(a, 0).dim() == 2, "dim E1");
    c.expect(generalized_simple(a, 1).dim() == 1, "dim E2");
    const size_t e2i2 = ideal_block(a, vertex_ideal(*a, {1}), 1).dim();
    c.expect(e2i2 == 3, "dim e2I2 = " + str(e2i2));
    // e_1I_1 is the kernel of e_1Pi -> E_1, so its dimension is dim e_1Pi - dim E_1
    const size_t e1i1 = ideal_block(a, vertex_ideal(*a, {0}), 0).dim();
    const size_t derived = projective(a, 0).dim() - generalized_simple(a, 0).dim();
    c.expect(e1i1 == 4 && e1i1 == derived, "dim e1I1 = " + str(e1i1) + ", derived " + str(derived));
    c.summary = "eg2: dim Pi 10, e1Pi 6 [1,2,2,1], e2Pi 4 [1,1,1,1], e2I2 3, e1I1 4, E 2/1";
}

void c3(Criterion& c) {
    auto alternating = [](int len, int first) {
        coxeter::Word w;
        for (int k = 0; k < len; ++k) w.push_back((first + k) % 2);
        return w;
    };
    auto check = [&](const std::string& name, const cartan::CartanData& d, int m) {
        auto a = fixtures::algebra(d);
        for (int first : {0, 1}) {
            c.expect(ideal_of_letters(*a, alternating(m, first)).dim() == 0, name + ": " + str(m) + "-fold product nonzero");
            c.expect(ideal_of_letters(*a, alternating(m - 1, first)).dim() > 0, name + ": shorter product vanishes");
        }
    };
    for (int64_t d : {1, 2, 3}) check("A2 d=" + std::to_string(d), make(fixtures::A2, {d, d}), 3);
    for (int64_t d : {1, 2}) check("B2 d=" + std::to_string(d), make(fixtures::B2, {2 * d, d}), 4);
    check("G2 d=1", make(fixtures::G2, {3, 1}), 6);
    c.summary = "alternating products vanish at length 3 (A2, d=1..3), 4 (B2, d=1,2), 6 (G2)";
}

void c4(Criterion& c) {
    std::ostringstream counts;
    for (const auto& t : acceptance_types()) {
        auto a = fixtures::algebra(t.data);
        auto ball = weyl_ball(t.data.cartan.entries(), 64);
        c.expect(ball.size() == t.order, t.name + ": oracle |W| = " + str(ball.size()));
        std::vector<Ideal> ideals;
        size_t words = 0;
        for (const auto& [m, len] : ball) {
            auto rw = reduced_words_oracle(t.data.cartan.entries(), m, len);
            c.expect(!rw.empty(), t.name + ": no reduced word");
            Ideal first = ideal_of_letters(*a, rw.front());
            for (const auto& w : rw) {
                ++words;
                c.expect(ideal_of_letters(*a, w) == first, t.name + ": reduced words disagree for w" + coxeter::word_string(w));
            }
            ideals.push_back(first);
        }
        size_t distinct = 0;
        for (size_t i = 0; i < ideals.size(); ++i) {
            bool fresh = true;
            for (size_t j = 0; j < i && fresh; ++j) fresh = !(ideals[i] == ideals[j]);
            distinct += fresh;
        }
        c.expect(distinct == t.order, t.name + ": " + str(distinct) + " distinct ideals");
        counts << t.name << " " << distinct << " (" << words << " words) ";
    }
    c.summary = "ideals well defined and distinct: " + counts.str();
}

void c5(Criterion& c) {
    std::ostringstream counts;
    for (const auto& t : acceptance_types()) {
        auto a = fixtures::algebra(t.data);
        auto w = coxeter::WeylGroup::enumerate(t.data.cartan);
        IdealSemigroup sg(a, w);
        size_t ok = 0;
        for (size_t e = 0; e < w.size(); ++e) {
            SttCheck chk = verify_stt(a, stt_pair(sg, e));
            c.expect(chk.ok, t.name + " w" + coxeter::word_string(w[e].word) + ": " + chk.reason);
            ok += chk.ok;
        }
        c.expect(ok == weyl_ball(t.data.cartan.entries(), 64).size(), t.name + ": count " + str(ok));
        counts << t.name << " " << ok << " ";
    }
    auto names_of = [](const cartan::CartanData& d) {
        auto a = fixtures::algebra(d);
        auto w = coxeter::WeylGroup::enumerate(d.cartan);
        IdealSemigroup sg(a, w);
        return classification_report(sg).tau_rigid_names;
    };
    c.expect(names_of(fixtures::eg1()) == std::vector<std::string>{"E1", "E2", "e1P", "e2P"}, "eg1 tau-rigid set");
    c.expect(names_of(fixtures::eg2()) == std::vector<std::string>{"E1", "E2", "e1I1", "e1P", "e2I2", "e2P"},
             "eg2 tau-rigid set");
    c.summary = "all (I_w, P_w) support tau-tilting, counts " + counts.str() + "; eg1/eg2 tau-rigid sets match";
}

void c6(Criterion& c) {
    using Fig = std::map<std::string, std::multiset<std::string>>;
    using Arr = std::set<std::tuple<std::string, std::string, int>>;
    auto compare = [&](const std::string& name, const cartan::CartanData& d, const Fig& fig, const Arr& arr) {
        auto a = fixtures::algebra(d);
        auto w = coxeter::WeylGroup::enumerate(d.cartan);
        IdealSemigroup sg(a, w);
        MutationGraph g = mutation_graph(sg);
        c.expect(g.nodes.size() == fig.size() && g.edges.size() == arr.size(), name + ": size");
        for (const auto& node : g.nodes) {
            std::multiset<std::string> got;
            for (const auto& s : node.summands) got.insert(s.name);
            c.expect(fig.count(node.word) && fig.at(node.word) == got, name + ": node w" + node.word);
        }
        Arr got;
        for (const auto& e : g.edges) got.emplace(g.nodes[e.from].word, g.nodes[e.to].word, e.label + 1);
        c.expect(got == arr, name + ": arrows differ");
    };
    compare("eg1", fixtures::eg1(),
            {{"", {"e1P", "e2P"}}, {"1", {"E2", "e2P"}}, {"2", {"e1P", "E1"}}, {"12", {"E1"}}, {"21", {"E2"}}, {"121", {}}},
            {{"", "1", 1}, {"1", "21", 2}, {"21", "121", 1}, {"", "2", 2}, {"2", "12", 1}, {"12", "121", 2}});
    compare("eg2", fixtures::eg2(),
            {{"", {"e1P", "e2P"}}, {"1", {"e1I1", "e2P"}}, {"21", {"e1I1", "E2"}}, {"121", {"E2"}},
             {"2", {"e1P", "e2I2"}}, {"12", {"e2I2", "E1"}}, {"212", {"E1"}}, {"1212", {}}},
            {{"", "1", 1}, {"1", "21", 2}, {"21", "121", 1}, {"121", "1212", 2},
             {"", "2", 2}, {"2", "12", 1}, {"12", "212", 2}, {"212", "1212", 1}});

    size_t reproduced = 0;
    auto reproduce = [&](const std::string& name, const cartan::CartanData& d, size_t sample) {
        auto a = fixtures::algebra(d);
        auto w = coxeter::WeylGroup::enumerate(d.cartan);
        IdealSemigroup sg(a, w);
        MutationGraph g = mutation_graph(sg);
        std::vector<size_t> edges(g.edges.size());
        for (size_t k = 0; k < edges.size(); ++k) edges[k] = k;
        if (sample < edges.size()) {
            std::mt19937_64 rng(2024);
            std::shuffle(edges.begin(), edges.end(), rng);
            edges.resize(sample);
        }
        for (const auto& r : check_edges_by_mutation(a, g, edges)) {
            c.expect(r.ok, name + " edge " + str(r.edge) + ": " + r.reason);
            reproduced += r.ok;
        }
    };
    reproduce("eg1", fixtures::eg1(), SIZE_MAX);
    reproduce("eg2", fixtures::eg2(), SIZE_MAX);
    reproduce("A2", make(fixtures::A2), SIZE_MAX);
    reproduce("B2", make(fixtures::B2), SIZE_MAX);
    reproduce("G2", make(fixtures::G2), SIZE_MAX);
    reproduce("A3", make(fixtures::A3), 24);
    c.summary = "eg1 hexagon and eg2 octagon match; " + str(reproduced) +
                " edges reproduced by left mutation (all rank 2, 24 sampled in A3)";
}

void c7(Criterion& c) {
    for (const auto& t : acceptance_types()) {
        auto a = fixtures::algebra(t.data);
        const auto& d = t.data;
        const int n = d.n();
        const auto sigma = nakayama_permutation(a);
        std::vector<ModuleRep> e, p, ei;
        for (int i = 0; i < n; ++i) {
            e.push_back(generalized_simple(a, i));
            p.push_back(projective(a, i));
            ei.push_back(ideal_block(a, vertex_ideal(*a, {i}), i));
        }
        for (int i = 0; i < n; ++i) {
            const std::string at = t.name + " i=" + str(i + 1) + ": ";
            int64_t lhs = static_cast<int64_t>(e[i].dim() + e[sigma[i]].dim());
            for (int j = 0; j < n; ++j)
                if (j != i) lhs += std::abs(d.cartan(j, i)) * static_cast<int64_t>(p[j].dim());
            c.expect(lhs == 2 * static_cast<int64_t>(p[i].dim()), at + "dimension identity");
            c.expect(d.c(i) == d.c(sigma[i]), at + "c_i != c_sigma(i)");
            c.expect(is_isomorphic(nakayama_functor(e[sigma[i]]), e[i]), at + "nu E_sigma(i) != E_i");
            for (int j = 0; j < n; ++j)
                c.expect(hom_dim_direct(p[j], e[i]) == (i == j ? static_cast<size_t>(d.c(i)) : 0u), at + "Hom(e_jPi, E_i)");
            const Ideal ii = vertex_ideal(*a, {i});
            for (int j = 0; j < n; ++j) c.expect(hom_dim_direct(ideal_block(a, ii, j), e[i]) == 0, at + "Hom(I_i, E_i)");
            c.expect(is_isomorphic(tau(ei[i]), e[i]), at + "tau(e_iI_i) != E_i");
        }
        std::vector<ModuleRep> corpus;
        for (int i = 0; i < n; ++i) corpus.insert(corpus.end(), {e[i], ei[i], p[i]});
        for (size_t x = 0; x < corpus.size(); ++x)
            for (size_t y = 0; y < corpus.size(); ++y)
                c.expect(ext1_dim(corpus[x], corpus[y]) == ext1_dim(corpus[y], corpus[x]), t.name + ": Ext^1 asymmetric");
    }
    c.summary = "EI identity, c_i = c_sigma(i), nu E, Hom(e_jPi,E_i), Hom(I_i,E_i)=0, tau(e_iI_i)=E_i, Ext^1 symmetry on A2..B3";
}

void c8(Criterion& c) {
    // c_ij c_ji -> order of s_i s_j
    const std::map<int64_t, int> expected{{0, 2}, {1, 3}, {2, 4}, {3, 6}};
    size_t pairs = 0;
    for (const auto& t : acceptance_types()) {
        const auto& cm = t.data.cartan;
        const int n = cm.n();
        for (int i = 0; i < n; ++i) {
            auto si = coxeter::simple_reflection_matrix(cm, i);
            c.expect(si.data == reflection(cm.entries(), i), t.name + ": sigma_" + str(i + 1) + " matrix");
            for (int j = 0; j < i; ++j) {
                const int m = expected.at(cm(i, j) * cm(j, i));
                auto prod = si * coxeter::simple_reflection_matrix(cm, j);
                auto acc = coxeter::IntSquare::identity(n);
                int order = 0;
                for (int k = 1; k <= 12 && !order; ++k) {
                    acc = acc * prod;
                    if (acc == coxeter::IntSquare::identity(n)) order = k;
                }
                c.expect(order == m, t.name + ": order of s" + str(i + 1) + "s" + str(j + 1) + " is " + str(order));
                ++pairs;
            }
        }
    }
    const auto affine = make(fixtures::AFFINE_A1);
    auto ball = coxeter::WeylGroup::enumerate(affine.cartan, coxeter::WeylGroup::default_cap, 8);
    auto oracle = weyl_ball(affine.cartan.entries(), 8);
    c.expect(ball.size() == 17 && oracle.size() == 17, "affine ball has " + str(ball.size()) + " elements");
    std::map<int, size_t> per_length;
    for (const auto& e : ball.elements()) ++per_length[e.length];
    for (int l = 1; l <= 8; ++l) c.expect(per_length[l] == 2, "affine: length " + str(l) + " count");
    c.expect(!ball.complete(), "affine ball reported complete");
    c.summary = str(pairs) + " Coxeter orders match; affine A1 ball of radius 8 has " + str(ball.size()) + " elements";
}

void c9(Criterion& c) {
    std::ostringstream counts;
    struct Case {
        std::string name;
        cartan::CartanData d;
        size_t random;  // 0 = exhaustive
    };
    for (const auto& t : {Case{"A2", make(fixtures::A2), 0}, Case{"B2", make(fixtures::B2), 0},
                          Case{"G2", make(fixtures::G2), 0}, Case{"A3", make(fixtures::A3), 250}}) {
        auto a = fixtures::algebra(t.d);
        auto w = coxeter::WeylGroup::enumerate(t.d.cartan);
        IdealSemigroup sg(a, w);
        // Demazure oracle: fold the letters of v onto u, keeping only length increases
        auto demazure = [&](size_t u, size_t v) {
            size_t acc = u;
            for (int s : w[v].word) {
                const size_t next = w.right_mul(acc, s);
                if (w[next].length > w[acc].length) acc = next;
            }
            return acc;
        };
        std::vector<std::pair<size_t, size_t>> pairs;
        if (!t.random) {
            for (size_t u = 0; u < w.size(); ++u)
                for (size_t v = 0; v < w.size(); ++v) pairs.emplace_back(u, v);
        } else {
            std::mt19937_64 rng(99);
            std::uniform_int_distribution<size_t> pick(0, w.size() - 1);
            for (size_t k = 0; k < t.random; ++k) pairs.emplace_back(pick(rng), pick(rng));
        }
        for (const auto& [u, v] : pairs) {
            const size_t uv = demazure(u, v);
            c.expect(uv == w.demazure(u, v), t.name + ": Demazure product differs");
            c.expect(ideal_product(*a, sg.of(u), sg.of(v)) == ideal_of_letters(*a, w[uv].word),
                     t.name + ": I_u I_v != I_(u*v) for u=w" + coxeter::word_string(w[u].word) + " v=w" +
                         coxeter::word_string(w[v].word));
        }
        counts << t.name << " " << pairs.size() << " ";
    }
    c.summary = "I_u I_v = I_(u*v) on pairs: " + counts.str();
}

}  // namespace

int main() {
    const std::vector<std::pair<int, void (*)(Criterion&)>> criteria{{1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5},
                                                                      {6, c6}, {7, c7}, {8, c8}, {9, c9}};
    int failed = 0;
    for (const auto& [num, fn] : criteria) {
        Criterion c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, c.summary.c_str());
        for (size_t k = 0; k < c.failures.size() && k < 5; ++k) std::printf("    %s\n", c.failures[k].c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
