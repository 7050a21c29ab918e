#include "doctest.h"

#include "homalg/checkers.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/io.hpp"

using namespace homalg;

TEST_CASE("examples survive a JSON round trip") {
    for (const auto& name : example_names()) {
        auto e = load_example(name);
        std::string text = to_json(e);
        CHECK(detect_kind(text) == DocKind::Example);
        auto back = example_from_json(text);
        CHECK(back.name == e.name);
        CHECK(back.description == e.description);
        CHECK(back.expected == e.expected);
        CHECK(back.notes == e.notes);
        CHECK(back.algebra.twist() == e.algebra.twist());
        CHECK(back.algebra.params() == e.algebra.params());
        for (const auto& [l, t] : e.algebra.products()) CHECK_MESSAGE(back.algebra.product(l) == t, name);
        REQUIRE(back.operators.size() == e.operators.size());
        for (std::size_t i = 0; i < e.operators.size(); ++i) {
            CHECK(back.operators[i].name == e.operators[i].name);
            CHECK(back.operators[i].matrix == e.operators[i].matrix);
        }
        CHECK(to_json(back) == text);

        auto alg = algebra_from_json(to_json(e.algebra));
        CHECK(detect_kind(to_json(e.algebra)) == DocKind::Algebra);
        CHECK(to_json(alg) == to_json(e.algebra));
        for (const auto& op : e.operators) {
            auto o = operator_from_json(text, op.name);
            CHECK(o.matrix == op.matrix);
            CHECK(operator_from_json(to_json(op)).matrix == op.matrix);
        }
    }
}

TEST_CASE("modules survive a JSON round trip") {
    auto m4 = load_example("malcev4").algebra;
    auto ad = adjoint(m4);
    std::string text = to_json(ad);
    CHECK(detect_kind(text) == DocKind::Module);
    auto back = module_from_json(text);
    CHECK(back.action("rho") == ad.action("rho"));
    CHECK(back.twist() == ad.twist());
    CHECK(check_module(m4, back, "malcev-representation").pass());
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(algebra_from_json("{\"dim\": 2,"), SyntaxError);
    CHECK_THROWS_AS(algebra_from_json("{\"dim\": 2}"), SyntaxError);
    CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "products": {"star": [[["1", "2"]]]}})"), ShapeMismatch);
    CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "params": [], "products": {"star": [[["q"]]]}})"),
                    UnknownParameter);
    CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "products": {"star": [[["1/"]]]}})"), SyntaxError);
    CHECK_THROWS_AS(detect_kind("[1, 2]"), SyntaxError);
    CHECK_THROWS_AS(operator_from_json(to_json(load_example("rb4")), "nope"), UnknownLabel);
    CHECK_THROWS_AS(operator_from_json(to_json(load_example("alpha4"))), UnknownLabel);
    CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InputError);

    auto a = algebra_from_json(R"({"dim": 1, "products": {"star": [[["t"]]]}})");
    CHECK(a.params() == std::vector<std::string>{"t"});
    CHECK(a.twist() == Matrix::identity(1));
}

TEST_CASE("tables and reports") {
    auto m4 = load_example("malcev4").algebra;
    std::string t = render_table(m4, "bracket");
    CHECK(t.find("2*e4") != std::string::npos);
    CHECK(t.rfind("bracket | e1", 0) == 0);

    auto bad = check_structure(load_example("corrupted-malcev4").algebra, "hom-malcev");
    std::string text = render_report(bad, 1);
    CHECK(text.find("antisymmetry at (e2,e3)") != std::string::npos);
    CHECK(text.find("more") != std::string::npos);
    std::string js = to_json(bad);
    CHECK(js.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(js.find("\"identity\": \"antisymmetry\"") != std::string::npos);
    CHECK(to_json(check_structure(m4, "hom-malcev")).find("\"verdict\": \"pass\"") != std::string::npos);
}
