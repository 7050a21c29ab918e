#include "doctest.h"

#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/structures.hpp"

#include <random>

using namespace homalg;

namespace {

Vector V(const char* text, std::size_t n) { return parse_vector(text, n); }

Matrix permutation(const std::vector<std::size_t>& p) {
    Matrix m(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) m(p[j], j) = 1;
    return m;
}

// Relabels basis vectors e_j -> e_p(j).
HomAlgebra permuted(const HomAlgebra& alg, const std::vector<std::size_t>& p) {
    std::size_t n = alg.dim();
    Matrix P = permutation(p), Pinv = P.transpose();
    std::vector<ProductTensor> ps;
    for (const auto& [label, t] : alg.products()) {
        ProductTensor u(label, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) u.at(p[i], p[j]) = mat_apply(P, t.at(i, j));
        ps.push_back(u);
    }
    return make_algebra(n, alg.params(), ps, mat_mul(P, mat_mul(alg.twist(), Pinv)));
}

} // namespace

TEST_CASE("make_algebra validates shapes and labels") {
    auto one = make_algebra(1, {}, {ProductTensor("bracket", 1)}, Matrix::identity(1));
    CHECK(one.dim() == 1);
    CHECK_THROWS_AS(make_algebra(2, {}, {ProductTensor("bracket", 3)}, Matrix::identity(2)), ShapeMismatch);
    CHECK_THROWS_AS(make_algebra(2, {}, {ProductTensor("bracket", 2)}, Matrix::identity(3)), ShapeMismatch);
    CHECK_THROWS_AS(make_algebra(2, {}, {ProductTensor("dot", 2), ProductTensor("dot", 2)}, Matrix::identity(2)),
                    DuplicateLabel);
    auto m4 = load_example("malcev4").algebra;
    CHECK(m4.labels() == std::vector<std::string>{"bracket"});
}

TEST_CASE("product_eval examples") {
    auto m4 = load_example("malcev4").algebra;
    CHECK(product_eval(m4, "bracket", V("e2", 4), V("e3", 4)) == V("2*e4", 4));
    CHECK(is_zero(product_eval(m4, "bracket", zero_vector(4), V("e3 + e1", 4))));
    auto m5 = load_example("malcev5").algebra;
    CHECK(product_eval(m5, "bracket", V("e1", 5), V("e4", 5)) == V("e2", 5));
    CHECK_THROWS_AS(product_eval(m4, "dot", V("e1", 4), V("e1", 4)), UnknownLabel);
}

TEST_CASE("product_eval reproduces structure constants and is bilinear") {
    auto m4 = load_example("malcev4").algebra;
    const auto& t = m4.product("bracket");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(product_eval(m4, "bracket", basis_vector(4, i), basis_vector(4, j)) == t.at(i, j));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd = [&] {
        Vector v(4);
        for (auto& s : v) s = Scalar(c(rng)) + Scalar(c(rng)) * Scalar::param("a4");
        return v;
    };
    for (int it = 0; it < 20; ++it) {
        Vector x = rnd(), y = rnd(), z = rnd();
        Scalar k = Scalar(c(rng)) + Scalar::param("b3");
        CHECK(product_eval(t, x + k * y, z) == product_eval(t, x, z) + k * product_eval(t, y, z));
        CHECK(product_eval(t, z, x + k * y) == product_eval(t, z, x) + k * product_eval(t, z, y));
    }
}

TEST_CASE("check_multiplicative") {
    auto m4 = load_example("malcev4").algebra;
    CHECK(check_multiplicative(m4, "bracket").pass());
    auto twisted = m4.with_twist(load_example("alpha4-morphic").op("alpha").matrix);
    CHECK(check_multiplicative(twisted, "bracket").pass());

    // The twisting map as printed sends e4 to -e4, which breaks [e2,e3] = 2e4.
    auto printed = m4.with_twist(load_example("alpha4").op("alpha").matrix);
    Report r = check_multiplicative(printed, "bracket");
    CHECK_FALSE(r.pass());
    CHECK(r.violations.front().tuple == std::vector<std::size_t>{1, 2});

    // b3 moved into a single image: alpha(e3) picks up b3*e4 while nothing else changes.
    Matrix a = load_example("alpha4-morphic").op("alpha").matrix;
    a(3, 2) = Scalar::param("b3");
    Report bad = check_multiplicative(m4.with_twist(a), "bracket");
    REQUIRE_FALSE(bad.pass());
    CHECK(bad.violations.front().tuple_names == std::vector<std::string>{"e1", "e3"});
}

TEST_CASE("check_multiplicative is invariant under basis permutation") {
    auto m4 = load_example("malcev4").algebra;
    Matrix good = load_example("alpha4-morphic").op("alpha").matrix;
    Matrix bad = load_example("alpha4").op("alpha").matrix;
    std::vector<std::size_t> p = {2, 0, 3, 1};
    for (const Matrix& a : {good, bad}) {
        auto alg = m4.with_twist(a);
        auto q = permuted(alg, p);
        Report r1 = check_multiplicative(alg, "bracket"), r2 = check_multiplicative(q, "bracket");
        CHECK(r1.pass() == r2.pass());
        CHECK(r1.violations.size() == r2.violations.size());
    }
}

TEST_CASE("check_morphism") {
    auto m4 = load_example("malcev4").algebra;
    CHECK(check_morphism({"id", Matrix::identity(4)}, m4, m4).pass());
    CHECK(check_morphism(load_example("alpha4-morphic").op("alpha"), m4, m4).pass());
    CHECK_FALSE(check_morphism(load_example("alpha4").op("alpha"), m4, m4).pass());
    // R happens to preserve every bracket of the basis: [Re1, Re2] = -lambda1*e3 = R([e1, e2]).
    CHECK(check_morphism(load_example("rb4").op("R"), m4, m4).pass());
    Report r = check_morphism({"swap", permutation({1, 0, 2, 3})}, m4, m4);
    REQUIRE_FALSE(r.pass());
    CHECK(r.violations.front().identity_id == "morphism:bracket");
    CHECK_THROWS_AS(check_morphism({"f", Matrix::identity(3)}, m4, m4), ShapeMismatch);
}

TEST_CASE("render_vector and parse_vector") {
    CHECK(render_vector(V("e2 - b3*e3", 4)) == "e2 - b3*e3");
    CHECK(render_vector(V("-b/a5*e3", 5)) == "-b/a5*e3");
    CHECK(render_vector(zero_vector(3)) == "0");
    CHECK(V("-b*a4/a5*e3", 5)[2] == parse_scalar("-b*a4/a5"));
    CHECK_THROWS_AS(parse_vector("e1*e2", 2), SyntaxError);
    CHECK_THROWS_AS(parse_vector("e3", 2), ShapeMismatch);
    CHECK_THROWS_AS(parse_vector("a4", 2), SyntaxError);
}

TEST_CASE("module validation") {
    auto m4 = load_example("malcev4").algebra;
    std::vector<Matrix> rho(4, Matrix(2, 2));
    auto mod = make_module(4, 2, Matrix::identity(2), {{"rho", rho}});
    CHECK(mod.has_action("rho"));
    CHECK_THROWS_AS(mod.action("ell"), MissingAction);
    CHECK_THROWS_AS(make_module(4, 2, Matrix::identity(2), {{"rho", std::vector<Matrix>(3, Matrix(2, 2))}}),
                    ShapeMismatch);
    CHECK_THROWS_AS(make_module(4, 2, Matrix::identity(2), {{"bogus", rho}}), UnknownLabel);
}

TEST_CASE("substitution and denominators") {
    auto e = load_example("rb5");
    CHECK(denominators(e.op("R").matrix) == std::set<std::string>{"a5"});
    auto bound = load_example("rb5", {{"b", 1}, {"a4", 0}, {"a5", 1}, {"lambda2", 0}});
    CHECK(bound.op("R").matrix(1, 3) == Scalar(-1));
    CHECK_THROWS_AS(load_example("rb5", {{"a5", 0}}), DenominatorVanishes);
    CHECK_THROWS_AS(load_example("nope"), UnknownExample);
}
