#include "doctest.h"

#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"
#include "homalg/identity/evaluator.hpp"
#include "homalg/identity/parser.hpp"

#include <random>

using namespace homalg;

namespace {

Report run(const std::string& set, const HomAlgebra& alg, const ModuleSpec* mod = nullptr, CheckOptions opts = {}) {
    EvalContext ctx(alg, mod);
    ctx.apply(catalog(set).derivations);
    return check_identities(catalog(set).identities, ctx, opts);
}

const Identity& find(const std::string& set, const std::string& id) {
    for (const auto& i : catalog(set).identities)
        if (i.id == id) return i;
    throw std::runtime_error("no identity " + id);
}

} // namespace

TEST_CASE("parse_identity examples") {
    Signature sig = Signature::standard();
    auto as = parse_identity("p(dot,p(dot,x,y),A(z)) - p(dot,A(x),p(dot,y,z))", sig);
    CHECK(as.sort == Sort::Algebra);
    CHECK(as.vars.size() == 3);
    CHECK(as.root->kind == Node::Kind::Sum);
    CHECK(render_identity(as) == "p(dot, p(dot, x, y), A(z)) - p(dot, A(x), p(dot, y, z))");

    auto x = parse_identity("x", sig);
    CHECK(x.root->kind == Node::Kind::Var);
    CHECK(x.root->name == "x");

    try {
        parse_identity("p(dot,x,x)", sig);
        FAIL("expected NotMultilinear");
    } catch (const NotMultilinear& e) {
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
        CHECK(std::string(e.what()).find("x*x") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_identity("p(dot,x,y) + x", sig), NotMultilinear);
}

TEST_CASE("parse_identity errors") {
    Signature sig = Signature::standard();
    try {
        parse_identity("p(dot, x, y", sig);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 11);
    }
    CHECK_THROWS_AS(parse_identity("p(dot, x, q)", sig), SyntaxError);
    CHECK_THROWS_AS(parse_identity("p(dot, v, x)", sig), SortError);
    CHECK_THROWS_AS(parse_identity("act(rho, v, x)", sig), SortError);
    CHECK_THROWS_AS(parse_identity("A(v)", sig), SortError);
    CHECK_THROWS_AS(parse_identity("x + v", sig), SortError);
    CHECK_THROWS_AS(parse_identity("op(R, x)", sig), SyntaxError);
    CHECK_THROWS_AS(parse_identity("(x*a)*y", sig), SyntaxError);
}

TEST_CASE("scalar coefficients, twist powers and grouping") {
    Signature sig = Signature::standard();
    sig.ops["R"] = {Sort::Algebra, Sort::Algebra};
    auto e = parse_identity("2*act(rho, A3(x), v) - (a4/2)*B2(act(rho, x, v)) + 1/3*(act(ell, op(R, x), v) - act(r, A(x), B(v)))", sig);
    std::string text = render_identity(e);
    auto again = parse_identity(text, sig);
    CHECK(same_tree(*e.root, *again.root));
    auto neg = parse_identity("-p(dot, x, y)", sig);
    CHECK(neg.root->kind == Node::Kind::Scale);
    CHECK(render_identity(neg) == "-p(dot, x, y)");
}

TEST_CASE("parse and render round trip on the whole catalog") {
    for (const auto& name : catalog_names()) {
        const IdentitySet& set = catalog(name);
        CHECK_FALSE(set.identities.empty());
        for (const auto& id : set.identities) {
            auto again = parse_identity(render_identity(id.expr), set.signature);
            CHECK_MESSAGE(same_tree(*id.expr.root, *again.root), name << ":" << id.id);
        }
        IdentitySet reread = parse_identity_file(render_identity_file(set));
        REQUIRE(reread.identities.size() == set.identities.size());
        CHECK(reread.name == set.name);
        CHECK(reread.derivations.size() == set.derivations.size());
        for (std::size_t i = 0; i < set.identities.size(); ++i)
            CHECK(same_tree(*reread.identities[i].expr.root, *set.identities[i].expr.root));
    }
}

TEST_CASE("identity files") {
    auto set = parse_identity_file(R"(# comment
%name demo
%var a b : algebra
%product bracket ?= dot - dot^T
anti: p(bracket, a, b) + p(bracket, b, a)  # trivially true
)");
    CHECK(set.name == "demo");
    REQUIRE(set.identities.size() == 1);
    CHECK(set.identities[0].anchor == "trivially true");
    CHECK(set.derivations[0].if_absent);
    CHECK(set.derivations[0].terms[1].swapped);
    CHECK_THROWS_AS(parse_identity_file("a: x\na: y\n"), DuplicateLabel);
    CHECK_THROWS_AS(parse_identity_file("%bogus\n"), SyntaxError);
    CHECK_THROWS_AS(parse_identity_file("no colon here\n"), SyntaxError);
}

TEST_CASE("eval_identity examples") {
    auto m4 = load_example("malcev4").algebra;
    EvalContext ctx(m4);
    const Identity& malcev = find("hom-malcev", "malcev");
    CHECK(is_zero(eval_identity(malcev.expr, ctx, {0, 1, 2, 3})));

    auto zero = make_algebra(3, {}, {ProductTensor("bracket", 3)}, Matrix::identity(3));
    EvalContext zctx(zero);
    CHECK(is_zero(eval_identity(malcev.expr, zctx, {0, 1, 2, 0})));

    auto bad = load_example("corrupted-malcev4").algebra;
    EvalContext bctx(bad);
    CHECK(eval_identity(find("hom-malcev", "antisymmetry").expr, bctx, {1, 2}) == parse_vector("-e4", 4));
    CHECK(eval_identity(malcev.expr, bctx, {0, 0, 1, 2}) == parse_vector("e4", 4));
    CHECK(is_zero(eval_identity(malcev.expr, bctx, {0, 1, 2, 3})));

    CHECK_THROWS_AS(eval_identity(parse_identity("p(dot, x, y)", Signature::standard()), ctx, {0, 1}), UnknownLabel);
    CHECK_THROWS_AS(eval_identity(parse_identity("act(rho, x, v)", Signature::standard()), ctx, {0, 0}),
                    MissingAction);
}

TEST_CASE("check_identity examples") {
    Report r = run("hom-malcev", load_example("malcev4").algebra);
    CHECK(r.pass());
    CHECK(r.identities == 2);
    CHECK(r.tuples == 16 + 256);

    auto zero1 = make_algebra(1, {}, {ProductTensor("bracket", 1)}, Matrix::identity(1));
    CHECK(run("hom-malcev", zero1).pass());

    auto pre = make_algebra(4, {}, {reference_table("malcev4-dot")}, Matrix::identity(4));
    CHECK(run("hom-pre-malcev", pre).pass());
    Report pl = run("hom-pre-lie", pre);
    CHECK_FALSE(pl.pass());

    Report c = run("hom-malcev", load_example("corrupted-malcev4").algebra);
    REQUIRE_FALSE(c.pass());
    CHECK(c.violations.front().identity_id == "antisymmetry");
    CHECK(render_tuple(c.violations.front()) == "(e2,e3)");
    CHECK(render_residual(c.violations.front()) == "-e4");
}

TEST_CASE("stop_early and parallel determinism") {
    auto bad = load_example("corrupted-malcev4").algebra;
    CheckOptions one{false, 1}, four{false, 4}, early{true, 4};
    Report a = run("hom-malcev", bad, nullptr, one), b = run("hom-malcev", bad, nullptr, four);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].identity_id == b.violations[i].identity_id);
        CHECK(a.violations[i].tuple == b.violations[i].tuple);
        CHECK(a.violations[i].residual == b.violations[i].residual);
    }
    Report e = run("hom-malcev", bad, nullptr, early);
    CHECK(e.violations.size() == 1);
    CHECK(e.violations[0].tuple == a.violations[0].tuple);
}

TEST_CASE("multilinearity soundness on random vectors") {
    // Residual at u = sum of the basis residuals weighted by the coordinates of u.
    auto alg = load_example("corrupted-malcev4").algebra.with_twist(load_example("alpha4").op("alpha").matrix);
    EvalContext ctx(alg);
    const Identity& id = find("hom-malcev", "malcev");
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int it = 0; it < 5; ++it) {
        std::vector<Vector> args(4, zero_vector(4));
        for (auto& v : args)
            for (auto& s : v) s = c(rng);
        Vector direct = eval_node(*id.expr.root, ctx, args);
        Vector combined = zero_vector(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    for (std::size_t l = 0; l < 4; ++l) {
                        Scalar w = args[0][i] * args[1][j] * args[2][k] * args[3][l];
                        if (!w.is_zero()) axpy(combined, w, eval_identity(id.expr, ctx, {i, j, k, l}));
                    }
        CHECK(direct == combined);
    }
}

TEST_CASE("pre-Lie algebras in the corpus are pre-Malcev") {
    for (const auto& name : example_names()) {
        auto alg = load_example(name).algebra;
        for (const auto& [label, t] : alg.products()) {
            auto as_dot = make_algebra(alg.dim(), alg.params(), {t.relabeled("dot")}, alg.twist());
            if (run("hom-pre-lie", as_dot).pass()) CHECK_MESSAGE(run("hom-pre-malcev", as_dot).pass(), name);
        }
    }
}

TEST_CASE("derived products and actions") {
    auto pre = make_algebra(4, {}, {reference_table("malcev4-dot")}, Matrix::identity(4));
    EvalContext ctx(pre);
    ctx.apply(catalog("hom-pre-malcev").derivations);
    CHECK(ctx.product("bracket").at(0, 1) == parse_vector("-e2 - lambda1*e3", 4));
    CHECK_FALSE(pre.has_product("bracket"));
    Derivation missing{false, false, "x", {{1, "nothing", false}}};
    CHECK_THROWS_AS(ctx.apply(missing), MissingProduct);
}
