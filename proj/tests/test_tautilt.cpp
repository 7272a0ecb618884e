#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"
#include "fixtures.hpp"
#include "tautilt.hpp"

using namespace preproj;
using namespace preproj::tautilt;
using namespace preproj::repmod;
using coxeter::WeylGroup;

namespace {

struct Setup {
    pathalg::AlgebraPtr alg;
    WeylGroup w;
    std::unique_ptr<IdealSemigroup> sg;

    explicit Setup(const cartan::CartanData& d, Field f = Field::rationals())
        : alg(fixtures::algebra(d, f)), w(WeylGroup::enumerate(d.cartan)) {
        sg = std::make_unique<IdealSemigroup>(alg, w);
    }
    size_t elem(const coxeter::Word& word) const { return w.from_word(word); }
};

std::multiset<std::string> names(const SttPair& p) {
    std::multiset<std::string> out;
    for (const auto& s : p.summands) out.insert(s.name);
    return out;
}

std::set<int> proj(const SttPair& p) { return {p.projective.begin(), p.projective.end()}; }

using ExpectedGraph = std::map<std::string, std::multiset<std::string>>;  // canonical word -> summand names
using Arrows = std::set<std::tuple<std::string, std::string, int>>;  // from, to, 1-based label

void check_graph(Setup& s, const ExpectedGraph& fig, const Arrows& arrows) {
    MutationGraph g = mutation_graph(*s.sg);
    REQUIRE(g.nodes.size() == fig.size());
    for (const auto& node : g.nodes) {
        INFO("node w" << node.word);
        REQUIRE(fig.count(node.word));
        CHECK(names(node) == fig.at(node.word));
    }
    Arrows got;
    for (const auto& e : g.edges) got.emplace(g.nodes[e.from].word, g.nodes[e.to].word, e.label + 1);
    CHECK(got == arrows);
}

}  // namespace

TEST_CASE("vertex ideals") {
    Setup s(fixtures::eg1());
    const auto& a = *s.alg;
    CHECK(vertex_ideal(a, {}).dim() == a.dim());
    CHECK(vertex_ideal(a, {0, 1}).dim() == 0);
    Ideal i1 = vertex_ideal(a, {0});
    CHECK(i1.dim() == 6);
    CHECK(is_two_sided(a, i1));
    ModuleRep b = ideal_block(s.alg, i1, 0);
    CHECK(b.dim() == 2);
    CHECK(is_isomorphic(b, generalized_simple(s.alg, 1)));
    CHECK(ideal_block(s.alg, i1, 1).dim() == projective(s.alg, 1).dim());
}

TEST_CASE("eg2 ideal blocks") {
    Setup s(fixtures::eg2());
    CHECK(ideal_block(s.alg, vertex_ideal(*s.alg, {0}), 0).dim() == 4);
    ModuleRep e2i2 = ideal_block(s.alg, vertex_ideal(*s.alg, {1}), 1);
    CHECK(e2i2.dim() == 3);
    CHECK(is_indecomposable(e2i2));
}

TEST_CASE("semigroup relations: idempotence and braid relations") {
    using namespace fixtures;
    for (const auto& d : {eg1(), eg2(), make(A3), make(G2), make(B3)}) {
        auto alg = algebra(d);
        const auto& a = *alg;
        for (int i = 0; i < a.n(); ++i) {
            Ideal ii = vertex_ideal(a, {i});
            CHECK(ideal_product(a, ii, ii) == ii);
            CHECK(is_two_sided(a, ii));
            for (int j = 0; j < i; ++j) {
                const int m = coxeter::coxeter_order(d.cartan, i, j);
                coxeter::Word u, v;
                for (int k = 0; k < m; ++k) {
                    u.push_back(k % 2 ? j : i);
                    v.push_back(k % 2 ? i : j);
                }
                CHECK(ideal_of_letters(a, u) == ideal_of_letters(a, v));
            }
        }
    }
}

TEST_CASE("rank two zero products, scaled symmetrizers") {
    using namespace fixtures;
    auto alternating = [](int len, int first) {
        coxeter::Word w;
        for (int k = 0; k < len; ++k) w.push_back((first + k) % 2);
        return w;
    };
    for (int64_t d : {1, 2, 3}) {
        auto a = algebra(make(A2, {d, d}));
        CHECK(ideal_of_letters(*a, alternating(3, 0)).dim() == 0);
        CHECK(ideal_of_letters(*a, alternating(3, 1)).dim() == 0);
        CHECK(ideal_of_letters(*a, alternating(2, 0)).dim() > 0);
    }
    for (int64_t d : {1, 2}) {
        auto a = algebra(make(B2, {2 * d, d}));
        CHECK(ideal_of_letters(*a, alternating(4, 0)).dim() == 0);
        CHECK(ideal_of_letters(*a, alternating(4, 1)).dim() == 0);
        CHECK(ideal_of_letters(*a, alternating(3, 0)).dim() > 0);
    }
    auto g = algebra(make(G2, {3, 1}));
    CHECK(ideal_of_letters(*g, alternating(6, 0)).dim() == 0);
    CHECK(ideal_of_letters(*g, alternating(6, 1)).dim() == 0);
    CHECK(ideal_of_letters(*g, alternating(5, 0)).dim() > 0);
}

TEST_CASE("ideal of a word") {
    Setup s(fixtures::eg1());
    CHECK(s.sg->of(s.w.identity()).dim() == s.alg->dim());
    CHECK(s.sg->of(s.w.longest()).dim() == 0);
    Setup t(fixtures::eg2());
    SttPair p = stt_pair(*t.sg, t.elem({0}));
    CHECK(names(p) == std::multiset<std::string>{"e1I1", "e2P"});
    CHECK(p.projective.empty());
}

TEST_CASE("eg1 support tau-tilting pairs") {
    Setup s(fixtures::eg1());
    struct Expect {
        coxeter::Word word;
        std::multiset<std::string> m;
        std::set<int> p;
    };
    const std::vector<Expect> table{
        {{}, {"e1P", "e2P"}, {}},   {{0}, {"E2", "e2P"}, {}}, {{1}, {"E1", "e1P"}, {}},
        {{0, 1}, {"E1"}, {1}},      {{1, 0}, {"E2"}, {0}},    {{0, 1, 0}, {}, {0, 1}},
    };
    for (const auto& e : table) {
        SttPair p = stt_pair(*s.sg, s.elem(e.word));
        INFO("w" << p.word);
        CHECK(names(p) == e.m);
        CHECK(proj(p) == e.p);
        CHECK(verify_stt(s.alg, p).ok);
    }
}

TEST_CASE("verify_stt rejects a non-rigid pair") {
    Setup s(fixtures::eg1());
    SttPair bad;
    bad.summands.push_back({0, "E1", generalized_simple(s.alg, 0)});
    bad.summands.push_back({1, "E2", generalized_simple(s.alg, 1)});
    SttCheck c = verify_stt(s.alg, bad);
    CHECK_FALSE(c.ok);
    CHECK(c.reason == "Hom(M, tau M) != 0");
}

TEST_CASE("eg1 mutation graph matches the hexagon") {
    Setup s(fixtures::eg1());
    ExpectedGraph fig{{"", {"e1P", "e2P"}}, {"1", {"E2", "e2P"}}, {"2", {"e1P", "E1"}},
               {"12", {"E1"}},       {"21", {"E2"}},       {"121", {}}};
    Arrows arrows{{"", "1", 1},    {"1", "21", 2},  {"21", "121", 1},
                  {"", "2", 2},    {"2", "12", 1},  {"12", "121", 2}};
    check_graph(s, fig, arrows);
}

TEST_CASE("eg2 mutation graph matches the octagon") {
    Setup s(fixtures::eg2());
    ExpectedGraph fig{{"", {"e1P", "e2P"}}, {"1", {"e1I1", "e2P"}}, {"21", {"e1I1", "E2"}}, {"121", {"E2"}},
               {"2", {"e1P", "e2I2"}}, {"12", {"e2I2", "E1"}}, {"212", {"E1"}},        {"1212", {}}};
    Arrows arrows{{"", "1", 1},   {"1", "21", 2},   {"21", "121", 1},  {"121", "1212", 2},
                  {"", "2", 2},   {"2", "12", 1},   {"12", "212", 2},  {"212", "1212", 1}};
    check_graph(s, fig, arrows);
}

TEST_CASE("left mutation reproduces every edge in rank two") {
    using namespace fixtures;
    for (const auto& d : {eg1(), eg2(), make(G2), make(B2), make(A2, {3, 3})}) {
        Setup s(d);
        MutationGraph g = mutation_graph(*s.sg);
        std::vector<size_t> all(g.edges.size());
        for (size_t k = 0; k < all.size(); ++k) all[k] = k;
        for (const auto& c : check_edges_by_mutation(s.alg, g, all)) {
            INFO(c.reason);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("left mutation examples and errors") {
    Setup s(fixtures::eg1());
    SttPair top = stt_pair(*s.sg, s.w.identity());
    SttPair m = left_mutation(s.alg, top, 0);
    CHECK(same_pair(m, stt_pair(*s.sg, s.elem({0}))));
    SttPair e2 = stt_pair(*s.sg, s.elem({1, 0}));  // (E2, e1P)
    SttPair zero = left_mutation(s.alg, e2, 0);
    CHECK(zero.summands.empty());
    CHECK(proj(zero) == std::set<int>{0, 1});
    // E2 is a quotient of e2P, so mutating it away would be a right mutation
    SttPair i1 = stt_pair(*s.sg, s.elem({0}));
    size_t e_index = 0;
    for (size_t k = 0; k < i1.summands.size(); ++k)
        if (i1.summands[k].name == "E2") e_index = k;
    try {
        left_mutation(s.alg, i1, e_index);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMutable);
    }
}

TEST_CASE("graph regularity") {
    using namespace fixtures;
    for (const auto& d : {eg1(), eg2(), make(A3), make(G2)}) {
        Setup s(d);
        MutationGraph g = mutation_graph(*s.sg);
        std::vector<int> degree(g.nodes.size(), 0);
        for (const auto& e : g.edges) {
            ++degree[e.from];
            ++degree[e.to];
        }
        for (int deg : degree) CHECK(deg == d.n());
        // connected: every node reachable from the identity
        std::vector<bool> seen(g.nodes.size(), false);
        seen[0] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& e : g.edges)
                if (seen[e.from] != seen[e.to]) seen[e.from] = seen[e.to] = grew = true;
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("classification reports") {
    using namespace fixtures;
    struct Case {
        cartan::CartanData d;
        size_t order;
    };
    for (const auto& c : {Case{eg1(), 6}, Case{eg2(), 8}, Case{make(G2), 12}, Case{make(A3), 24}}) {
        Setup s(c.d);
        ClassificationReport r = classification_report(*s.sg);
        for (const auto& f : r.failures) INFO(f);
        CHECK(r.ok());
        CHECK(r.weyl_order == c.order);
        CHECK(r.stt_count == c.order);
    }
    Setup one(fixtures::eg1());
    CHECK(classification_report(*one.sg).tau_rigid_names == std::vector<std::string>{"E1", "E2", "e1P", "e2P"});
    Setup two(fixtures::eg2());
    CHECK(classification_report(*two.sg).tau_rigid_names ==
          std::vector<std::string>{"E1", "E2", "e1I1", "e1P", "e2I2", "e2P"});
}

TEST_CASE("ideal blocks: Hom(I_i, E_i) = 0, local freeness and tau(e_i I_i) = E_i") {
    using namespace fixtures;
    for (const auto& d : {eg1(), eg2(), make(A3), make(G2), make(B3)}) {
        auto a = algebra(d);
        for (int i = 0; i < a->n(); ++i) {
            Ideal ii = vertex_ideal(*a, {i});
            ModuleRep e = generalized_simple(a, i);
            for (int j = 0; j < a->n(); ++j) {
                ModuleRep b = ideal_block(a, ii, j);
                CHECK(hom_dim(b, e) == 0);
                CHECK(locally_free_rank(b).has_value());
            }
            CHECK(is_isomorphic(tau(ideal_block(a, ii, i)), e));
        }
    }
}

TEST_CASE("rank additivity for 0 -> e_i I_i -> e_i Pi -> E_i -> 0") {
    using namespace fixtures;
    for (const auto& d : {eg1(), eg2(), make(G2), make(B3)}) {
        auto a = algebra(d);
        for (int i = 0; i < a->n(); ++i) {
            auto sub = *locally_free_rank(ideal_block(a, vertex_ideal(*a, {i}), i));
            auto mid = *locally_free_rank(projective(a, i));
            auto quo = *locally_free_rank(generalized_simple(a, i));
            for (int j = 0; j < a->n(); ++j) CHECK(mid[j] == sub[j] + quo[j]);
        }
    }
}

TEST_CASE("rank one") {
    Setup s(fixtures::make({{2}}, {3}));
    MutationGraph g = mutation_graph(*s.sg);
    CHECK(g.nodes.size() == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("field independence of the classification") {
    Setup q(fixtures::eg2()), p(fixtures::eg2(), Field::prime(32003));
    MutationGraph gq = mutation_graph(*q.sg), gp = mutation_graph(*p.sg);
    REQUIRE(gq.nodes.size() == gp.nodes.size());
    for (size_t k = 0; k < gq.nodes.size(); ++k) {
        CHECK(names(gq.nodes[k]) == names(gp.nodes[k]));
        CHECK(gq.nodes[k].module(q.alg).dims() == gp.nodes[k].module(p.alg).dims());
    }
}
