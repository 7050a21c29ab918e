#include "doctest.h"

#include "homalg/checkers.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"

using namespace homalg;

namespace {

HomAlgebra zero_algebra(std::size_t n, const std::string& cls, const Matrix& twist) {
    std::vector<ProductTensor> ps;
    for (const auto& l : class_products(cls)) ps.emplace_back(l, n);
    return make_algebra(n, {}, ps, twist);
}

ModuleSpec zero_module(std::size_t n, std::size_t m, const std::string& mc) {
    std::map<std::string, std::vector<Matrix>> acts;
    for (const auto& l : module_actions(mc)) acts[l] = std::vector<Matrix>(n, Matrix(m, m));
    return make_module(n, m, Matrix::identity(m), acts);
}

bool has_note(const Report& r, const std::string& text) {
    for (const auto& n : r.notes)
        if (n.find(text) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("check_structure") {
    auto m4 = load_example("malcev4").algebra;
    Report r = check_structure(m4, "hom-malcev");
    CHECK(r.pass());
    CHECK(r.identities == 3);

    Matrix diag(3, 3);
    diag(0, 0) = Scalar::param("t");
    diag(1, 1) = 2;
    diag(2, 2) = Scalar(1) / Scalar::param("t");
    for (const auto& cls : structure_classes()) {
        CHECK_MESSAGE(check_structure(zero_algebra(3, cls, diag), cls).pass(), cls);
        CHECK_THROWS_AS(check_structure(make_algebra(2, {}, {ProductTensor("unrelated", 2)}, Matrix::identity(2)), cls),
                        MissingProduct);
    }

    Report bad = check_structure(load_example("corrupted-malcev4").algebra, "hom-malcev");
    REQUIRE_FALSE(bad.pass());
    CHECK(bad.violations.front().identity_id == "antisymmetry");
    CHECK(render_tuple(bad.violations.front()) == "(e2,e3)");

    Report printed = check_structure(yau_twist(m4, load_example("alpha4").op("alpha")), "hom-malcev");
    REQUIRE_FALSE(printed.pass());
    bool multiplicative = false;
    for (const auto& v : printed.violations) multiplicative = multiplicative || v.identity_id == "multiplicative:bracket";
    CHECK(multiplicative);

    CheckOptions early;
    early.stop_early = true;
    CHECK(check_structure(load_example("corrupted-malcev4").algebra, "hom-malcev", early).violations.size() == 1);
}

TEST_CASE("twisted M-dendriform tables form a Hom-M-dendriform algebra with the morphic twist") {
    auto alpha = load_example("alpha4-morphic").op("alpha");
    auto tw = yau_twist(load_example("malcev4").algebra, alpha);
    auto R = load_example("rb4").op("R");
    CHECK(check_structure(commuting_rb_split(tw, R, R), "hom-m-dendriform").pass());
}

TEST_CASE("check_module") {
    auto m4 = load_example("malcev4").algebra;
    CHECK(check_module(m4, adjoint(m4), "malcev-representation").pass());
    CHECK(check_module(m4, adjoint(m4), "hom-malcev").pass());

    auto pre = make_algebra(4, {}, {reference_table("malcev4-dot")}, Matrix::identity(4));
    Report lm = check_module(pre, left_mult(pre), "malcev-representation");
    CHECK(lm.pass());
    CHECK(lm.notes.empty());

    for (const auto& mc : module_classes()) {
        auto alg = load_example("dualnum-assoc").algebra;
        std::vector<ProductTensor> ps;
        for (const auto& l : class_products(mc)) ps.push_back(alg.product("star").relabeled(l));
        auto a = make_algebra(2, {}, ps, Matrix::identity(2));
        Report r = check_module(a, zero_module(2, 3, mc), mc);
        CHECK_MESSAGE(r.pass(), mc);
        CHECK_MESSAGE(r.notes.empty(), mc);
    }

    CHECK_THROWS_AS(check_module(m4, zero_module(4, 2, "pre-alt-bimodule"), "malcev-representation"), MissingAction);
    CHECK_THROWS_AS(check_module(m4, zero_module(3, 2, "malcev-representation"), "malcev-representation"),
                    ShapeMismatch);
}

TEST_CASE("check_module flags disagreement with the printed bimodule equations") {
    auto pre = make_algebra(4, {}, {reference_table("malcev4-dot")}, Matrix::identity(4));
    Report r = check_module(pre, regular_bimodule(pre, "hom-pre-malcev"), "pre-malcev-bimodule");
    CHECK(r.pass());
    CHECK(has_note(r, "printed equations fail"));
    CHECK(has_note(r, "bimodule-2"));
    CHECK_FALSE(has_note(r, "semidirect"));

    CheckOptions plain;
    plain.cross_check = false;
    CHECK(check_module(pre, regular_bimodule(pre, "hom-pre-malcev"), "pre-malcev-bimodule", plain).notes.empty());

    auto e = load_example("t2-upper");
    auto pa = rb_split(e.algebra, SplitRule::AltToPreAlt, e.op("R"));
    Report q = check_module(pa, regular_bimodule(pa, "hom-pre-alternative"), "pre-alt-bimodule");
    CHECK(q.pass());
    CHECK(has_note(q, "bimodule-4"));
    CHECK_FALSE(has_note(q, "semidirect"));
}

TEST_CASE("a broken module fails both the axioms and the semidirect product") {
    auto m4 = load_example("malcev4").algebra;
    auto ad = adjoint(m4);
    auto rho = ad.action("rho");
    rho[0](0, 1) = 1;
    Report r = check_module(m4, make_module(4, 4, m4.twist(), {{"rho", rho}}), "malcev-representation");
    CHECK_FALSE(r.pass());
    CHECK(r.notes.empty());
}

TEST_CASE("check_rota_baxter") {
    auto m4 = load_example("malcev4").algebra;
    CHECK(check_rota_baxter(m4, "hom-malcev", load_example("rb4").op("R")).pass());
    CHECK(check_rota_baxter(m4, "hom-malcev", {"zero", Matrix(4, 4)}).pass());

    Report id = check_rota_baxter(m4, "hom-malcev", {"id", Matrix::identity(4)});
    REQUIRE_FALSE(id.pass());
    CHECK(id.violations.front().identity_id == "rb-bracket");
    CHECK(render_tuple(id.violations.front()) == "(e1,e2)");
    CHECK(render_residual(id.violations.front()) == "e2");

    CHECK_THROWS_AS(check_rota_baxter(m4, "hom-malcev", {"R", Matrix(3, 3)}), ShapeMismatch);

    // The printed alpha5 does not commute with R5.
    auto tw5 = yau_twist(load_example("malcev5").algebra, load_example("alpha5").op("alpha"));
    Report c = check_rota_baxter(tw5, "hom-malcev", load_example("rb5").op("R"));
    REQUIRE_FALSE(c.pass());
    CHECK(c.violations.front().identity_id == "commute");
    auto tw5c = yau_twist(load_example("malcev5").algebra, load_example("alpha5-commuting").op("alpha"));
    CHECK(check_rota_baxter(tw5c, "hom-malcev", load_example("rb5").op("R")).pass());

    auto dn = load_example("rb-dualnum");
    CHECK(check_rota_baxter(dn.algebra, "hom-alternative", dn.op("R")).pass());
}

TEST_CASE("Rota-Baxter on a Malcev algebra is an O-operator for the adjoint representation") {
    for (const auto& name : {"rb4", "rb5", "alpha4-morphic", "alpha5-commuting"}) {
        auto e = load_example(name);
        for (const auto& op : e.operators) {
            Report rb = check_rota_baxter(e.algebra, "hom-malcev", op);
            Report oo = check_o_operator(e.algebra, adjoint(e.algebra), "hom-malcev", op);
            CHECK_MESSAGE(rb.pass() == oo.pass(), name << ":" << op.name);
        }
    }
}

TEST_CASE("check_o_operator") {
    auto m4 = load_example("malcev4").algebra;
    auto R4 = load_example("rb4").op("R");
    CHECK(check_o_operator(m4, adjoint(m4), "hom-malcev", R4).pass());
    CHECK(check_o_operator(m4, adjoint(m4), "hom-malcev", {"zero", Matrix(4, 4)}).pass());
    CHECK(check_o_operator(m4, zero_module(4, 2, "malcev-representation"), "hom-malcev", {"zero", Matrix(4, 2)}).pass());
    CHECK_THROWS_AS(check_o_operator(m4, adjoint(m4), "hom-malcev", {"T", Matrix(2, 4)}), ShapeMismatch);

    auto pre = make_algebra(4, {}, {reference_table("malcev4-dot")}, Matrix::identity(4));
    Report id = check_o_operator(pre, left_mult(pre), "hom-pre-malcev", {"id", Matrix::identity(4)});
    CHECK(id.pass());

    auto dn = load_example("rb-dualnum");
    CHECK(check_o_operator(dn.algebra, regular_bimodule(dn.algebra, "hom-alternative"), "hom-alternative", dn.op("R"))
              .pass());
    CHECK_FALSE(check_o_operator(dn.algebra, regular_bimodule(dn.algebra, "hom-alternative"), "hom-alternative",
                                 {"id", Matrix::identity(2)})
                    .pass());
}

TEST_CASE("check_commuting") {
    auto R4 = load_example("rb4").op("R");
    CHECK(check_commuting(R4, R4).pass());
    CHECK(check_commuting(R4, {"id", Matrix::identity(4)}).pass());
    Matrix swap(4, 4);
    swap(1, 0) = swap(0, 1) = swap(2, 2) = swap(3, 3) = 1;
    Report r = check_commuting(R4, {"swap", swap});
    REQUIRE_FALSE(r.pass());
    CHECK(r.violations.front().tuple_names == std::vector<std::string>{"e1"});
    CHECK_THROWS_AS(check_commuting(R4, {"small", Matrix::identity(3)}), ShapeMismatch);
}

TEST_CASE("check_symplectic") {
    auto s = load_example("sympl2-abelian");
    CHECK(check_symplectic(s.algebra, s.op("omega")).pass());

    Report zero = check_symplectic(s.algebra, {"zero", Matrix(2, 2)});
    REQUIRE_FALSE(zero.pass());
    CHECK(zero.violations.front().identity_id == "nondegenerate");

    // Any bracket on a plane has vanishing cyclic sum, so this form is symplectic.
    auto lie2 = load_example("lie2-omega");
    Report l = check_symplectic(lie2.algebra, lie2.op("omega"));
    CHECK(l.pass());

    Matrix sym(2, 2);
    sym(0, 0) = sym(1, 1) = 1;
    Report nonanti = check_symplectic(s.algebra, {"sym", sym});
    REQUIRE_FALSE(nonanti.pass());
    CHECK(nonanti.violations.front().identity_id == "antisymmetric");
    CHECK_THROWS_AS(check_symplectic(s.algebra, {"w", Matrix(3, 3)}), ShapeMismatch);
}

TEST_CASE("every corpus expectation is reproduced") {
    for (const auto& name : example_names()) {
        auto e = load_example(name);
        for (const auto& [key, verdict] : e.expected)
            CHECK_MESSAGE(run_expectation(e, key).pass() == verdict, name << " " << key);
    }
    CHECK_THROWS_AS(run_expectation(load_example("malcev4"), "bogus:thing"), UnknownLabel);
}
