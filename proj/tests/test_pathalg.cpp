#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "fixtures.hpp"
#include "pathalg.hpp"

using namespace preproj;
using namespace preproj::pathalg;

namespace {

Poly poly(std::initializer_list<std::pair<Path, int>> terms) {
    Poly p;
    for (const auto& [m, c] : terms) add_term(p, m, c);
    return p;
}

std::vector<size_t> dims_matrix(const Algebra& a) {
    std::vector<size_t> out;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out.push_back(a.block(i, j).size());
    return out;
}

size_t proj_dim(const Algebra& a, int i) {
    size_t s = 0;
    for (int j = 0; j < a.n(); ++j) s += a.block(i, j).size();
    return s;
}

// arrow indices for rank two: eps1, eps2, a12, a21
constexpr int E1 = 0, E2 = 1, A12 = 2, A21 = 3;

}  // namespace

TEST_CASE("relations of eg1") {
    auto rels = preprojective_relations(fixtures::eg1(), Field::rationals());
    REQUIRE(rels.size() == 6);
    CHECK(rels[0].poly == poly({{{E1, E1}, 1}}));
    CHECK(rels[1].poly == poly({{{E2, E2}, 1}}));
    CHECK(rels[2].poly == poly({{{E1, A12}, 1}, {{A12, E2}, -1}}));
    CHECK(rels[3].poly == poly({{{E2, A21}, 1}, {{A21, E1}, -1}}));
    CHECK(rels[4].poly == poly({{{A12, A21}, 1}}));
    CHECK(rels[5].poly == poly({{{A21, A12}, -1}}));
}

TEST_CASE("mesh relations of eg2 and G2") {
    auto eg2 = preprojective_relations(fixtures::eg2(), Field::rationals());
    CHECK(eg2[4].kind == RelationKind::Mesh);
    CHECK(eg2[4].poly == poly({{{A12, A21, E1}, 1}, {{E1, A12, A21}, 1}}));
    CHECK(eg2[3].poly == poly({{{E2, A21}, 1}, {{A21, E1, E1}, -1}}));
    auto g2 = preprojective_relations(fixtures::make(fixtures::G2, {3, 1}), Field::rationals());
    CHECK(g2[4].poly ==
          poly({{{A12, A21, E1, E1}, 1}, {{E1, A12, A21, E1}, 1}, {{E1, E1, A12, A21}, 1}}));
}

TEST_CASE("dimensions of the worked examples") {
    auto a1 = fixtures::algebra(fixtures::eg1());
    CHECK(a1->dim() == 8);
    CHECK(proj_dim(*a1, 0) == 4);
    CHECK(proj_dim(*a1, 1) == 4);
    CHECK(projective_radical_layers(*a1, 0) == std::vector<size_t>{1, 2, 1});
    CHECK(projective_radical_layers(*a1, 1) == std::vector<size_t>{1, 2, 1});

    auto a2 = fixtures::algebra(fixtures::eg2());
    CHECK(a2->dim() == 10);
    CHECK(proj_dim(*a2, 0) == 6);
    CHECK(proj_dim(*a2, 1) == 4);
    CHECK(projective_radical_layers(*a2, 0) == std::vector<size_t>{1, 2, 2, 1});
    CHECK(projective_radical_layers(*a2, 1) == std::vector<size_t>{1, 1, 1, 1});

    for (int64_t d = 1; d <= 4; ++d) {
        auto r = fixtures::algebra(fixtures::make({{2}}, {d}));
        CHECK(r->dim() == static_cast<size_t>(d));
        for (size_t b = 1; b < r->dim(); ++b) CHECK(r->basis()[b].path == Path(b, 0));
        CHECK(projective_radical_layers(*r, 0) == std::vector<size_t>(d, 1));
    }
}

TEST_CASE("normal forms") {
    auto a2 = fixtures::algebra(fixtures::eg2());
    CHECK(a2->normal_form(poly({{{A12, A21, E1}, 1}})) == poly({{{E1, A12, A21}, -1}}));
    CHECK(a2->normal_form(poly({{{E1, E1}, 1}})).empty());
    CHECK(a2->normal_form(poly({{{E2}, 1}})).empty());
    auto a1 = fixtures::algebra(fixtures::eg1());
    CHECK(a1->path_vector({E1, A12}) == a1->path_vector({A12, E2}));
    for (const auto& r : a1->relations()) {
        Poly once = a1->normal_form(r.poly);
        CHECK(a1->normal_form(once) == once);
    }
}

TEST_CASE("verify_algebra on the acceptance algebras") {
    for (const auto& data : {fixtures::eg1(), fixtures::eg2(), fixtures::make(fixtures::A2),
                             fixtures::make(fixtures::B2), fixtures::make(fixtures::G2),
                             fixtures::make(fixtures::A3), fixtures::make(fixtures::B3)}) {
        auto a = fixtures::algebra(data);
        AlgebraReport r = verify_algebra(*a);
        CHECK_MESSAGE(r.ok, r.failure);
        // H_i = K[eps_i]/(eps_i^{c_i}) embeds at each vertex
        for (int i = 0; i < a->n(); ++i) {
            CHECK(a->block(i, i).size() >= static_cast<size_t>(data.c(i)));
            Subspace h(a->dim());
            h.insert(a->unit(a->idempotent(i)));
            for (int64_t k = 1; k < data.c(i); ++k) h.insert(a->path_vector(Path(k, a->quiver().loop(i))));
            CHECK(h.dim() == static_cast<size_t>(data.c(i)));
        }
    }
}

TEST_CASE("orientation independence") {
    for (const auto& data : {fixtures::eg1(), fixtures::eg2()}) {
        auto a = fixtures::algebra(data);
        auto op_orient = cartan::opposite(data.orientation);
        auto op = fixtures::algebra(cartan::CartanData::make(data.cartan.entries(), &data.symmetrizer.c, &op_orient));
        CHECK(op->dim() == a->dim());
        CHECK(dims_matrix(*op) == dims_matrix(*a));
    }
}

TEST_CASE("field independence of dimensions") {
    for (const auto& data : {fixtures::eg1(), fixtures::eg2(), fixtures::make(fixtures::G2),
                             fixtures::make(fixtures::A3), fixtures::make(fixtures::B3)}) {
        auto q = fixtures::algebra(data);
        for (uint32_t p : {101u, 32003u}) {
            auto fp = fixtures::algebra(data, Field::prime(p));
            CHECK(dims_matrix(*fp) == dims_matrix(*q));
            for (int i = 0; i < q->n(); ++i)
                CHECK(projective_radical_layers(*fp, i) == projective_radical_layers(*q, i));
        }
    }
}

TEST_CASE("deterministic basis matches the golden listing") {
    auto a = fixtures::algebra(fixtures::eg2());
    auto b = fixtures::algebra(fixtures::eg2());
    std::ostringstream os;
    for (size_t k = 0; k < a->dim(); ++k) {
        CHECK(a->basis_name(k) == b->basis_name(k));
        os << a->basis_name(k) << "\n";
    }
    std::ifstream golden(PREPROJ_TEST_DATA "/eg2_basis.txt");
    REQUIRE(golden.good());
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(os.str() == expected.str());
}

TEST_CASE("non-Dynkin algebras exceed the caps") {
    auto data = fixtures::make(fixtures::AFFINE_A1);
    GroebnerCaps caps;
    caps.max_degree = 16;
    caps.max_basis = 400;
    CHECK_THROWS_AS(Algebra::build(data, Field::rationals(), caps), Error);
}
