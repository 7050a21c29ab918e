#include "homalg/checkers.hpp"

#include "homalg/constructions.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"
#include "homalg/identity/parser.hpp"

#include <map>
#include <sstream>

namespace homalg {

namespace {

void require_products(const HomAlgebra& alg, const std::string& cls) {
    for (const auto& l : class_products(cls))
        if (!alg.has_product(l)) throw MissingProduct("class '" + cls + "' needs a product '" + l + "'");
}

void require_context(const EvalContext& ctx, const std::string& mc) {
    for (const auto& l : class_products(mc))
        if (!ctx.has_product(l)) throw MissingProduct("class '" + mc + "' needs a product '" + l + "'");
    for (const auto& l : module_actions(mc))
        if (!ctx.has_action(l)) throw MissingAction("class '" + mc + "' needs an action '" + l + "'");
}

std::string first_failure(const Report& r) {
    const Violation& v = r.violations.front();
    return v.identity_id + " at " + render_tuple(v);
}

std::vector<std::string> failing_ids(const Report& r) {
    std::vector<std::string> ids;
    for (const auto& v : r.violations)
        if (ids.empty() || ids.back() != v.identity_id) ids.push_back(v.identity_id);
    return ids;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

// Violations of the semidirect product that involve at least one module basis vector.
Report module_part(const Report& r, std::size_t n) {
    Report out = r;
    out.violations.clear();
    for (const auto& v : r.violations) {
        bool touches = false;
        for (auto i : v.tuple) touches = touches || i >= n;
        if (touches) out.violations.push_back(v);
    }
    return out;
}

void cross_check(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& mc, const EvalContext& ctx,
                 const CheckOptions& opts, Report& rep) {
    CheckOptions quiet = opts;
    quiet.stop_early = false;
    std::string literal = mc + "-literal";
    bool has_literal = false;
    for (const auto& n : catalog_names()) has_literal = has_literal || n == literal;
    if (!has_literal) return;
    {
        EvalContext lctx(alg, &mod);
        lctx.apply(catalog(literal).derivations);
        Report lit = check_identities(catalog(literal).identities, lctx, quiet);
        if (lit.pass() != rep.pass()) {
            std::ostringstream os;
            os << "printed equations " << (lit.pass() ? "pass" : "fail") << " where the module axioms "
               << (rep.pass() ? "pass" : "fail");
            if (!lit.pass()) os << ": " << join(failing_ids(lit)) << " (first " << first_failure(lit) << ")";
            rep.notes.push_back(os.str());
        }
    }

    static const std::map<std::string, std::string> algebra_class = {
        {"pre-malcev-bimodule", "hom-pre-malcev"},
        {"pre-alt-bimodule", "hom-pre-alternative"},
    };
    const std::string& cls = algebra_class.at(mc);
    std::vector<ProductTensor> base;
    for (const auto& l : class_products(cls)) base.push_back(ctx.product(l));
    HomAlgebra a = make_algebra(alg.dim(), alg.params(), base, alg.twist());
    Report semi = module_part(check_structure(semidirect(a, mod, mc), cls, quiet), alg.dim());
    if (semi.pass() != rep.pass()) {
        std::ostringstream os;
        os << "semidirect product " << (semi.pass() ? "passes" : "fails") << " " << cls << " where the module axioms "
           << (rep.pass() ? "pass" : "fail");
        if (!semi.pass()) os << " (first " << first_failure(semi) << ")";
        rep.notes.push_back(os.str());
    }
}

Report run_set(const IdentitySet& set, EvalContext& ctx, const CheckOptions& opts) {
    ctx.apply(set.derivations);
    return check_identities(set.identities, ctx, opts);
}

} // namespace

Report check_structure(const HomAlgebra& alg, const std::string& cls, const CheckOptions& opts) {
    const IdentitySet& set = catalog(cls);
    require_products(alg, cls);
    Report rep;
    for (const auto& l : class_products(cls)) {
        rep.merge(check_multiplicative(alg, l));
        if (opts.stop_early && !rep.pass()) break;
    }
    if (!(opts.stop_early && !rep.pass())) {
        EvalContext ctx(alg);
        rep.merge(run_set(set, ctx, opts));
    }
    sort_violations(rep);
    return rep;
}

Report check_module(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls, const CheckOptions& opts) {
    std::string mc = module_class_for(cls);
    EvalContext ctx(alg, &mod);
    ctx.apply(catalog(mc).derivations);
    require_context(ctx, mc);
    Report rep = check_identities(catalog(mc).identities, ctx, opts);
    if (opts.cross_check) cross_check(alg, mod, mc, ctx, opts, rep);
    return rep;
}

IdentitySet rota_baxter_identities(const std::string& cls) {
    std::ostringstream os;
    os << "%name rota-baxter:" << cls << "\n%var x y : algebra\n%op R : algebra -> algebra\n";
    os << "commute: op(R, A(x)) - A(op(R, x))\n";
    for (const auto& l : class_products(cls))
        os << "rb-" << l << ": p(" << l << ", op(R, x), op(R, y)) - op(R, p(" << l << ", op(R, x), y) + p(" << l
           << ", x, op(R, y)))\n";
    IdentitySet set = parse_identity_file(os.str());
    set.derivations = catalog(cls).derivations;
    return set;
}

IdentitySet o_operator_identities(const std::string& cls) {
    std::string mc = module_class_for(cls);
    std::ostringstream os;
    os << "%name o-operator:" << mc << "\n%var u v : module\n%op T : module -> algebra\n";
    os << "twist: A(op(T, u)) - op(T, B(u))\n";
    auto eq = [&](const std::string& id, const std::string& prod, const std::string& l, const std::string& r,
                  const char* sign) {
        os << id << ": p(" << prod << ", op(T, u), op(T, v)) - op(T, act(" << l << ", op(T, u), v) " << sign
           << " act(" << r << ", op(T, v), u))\n";
    };
    if (mc == "malcev-representation") eq("o-operator", "bracket", "rho", "rho", "-");
    else if (mc == "alt-bimodule") eq("o-operator", "star", "ell", "r", "+");
    else if (mc == "pre-malcev-bimodule") eq("o-operator", "dot", "ell", "r", "+");
    else {
        eq("o-succ", "succ", "Lsucc", "Rsucc", "+");
        eq("o-prec", "prec", "Lprec", "Rprec", "+");
    }
    IdentitySet set = parse_identity_file(os.str());
    set.derivations = catalog(mc).derivations;
    return set;
}

Report check_rota_baxter(const HomAlgebra& alg, const std::string& cls, const LinearOperator& R,
                         const CheckOptions& opts) {
    require_products(alg, cls);
    IdentitySet set = rota_baxter_identities(cls);
    EvalContext ctx(alg);
    ctx.set_operator("R", R.matrix, {Sort::Algebra, Sort::Algebra});
    return run_set(set, ctx, opts);
}

Report check_o_operator(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls, const LinearOperator& T,
                        const CheckOptions& opts) {
    std::string mc = module_class_for(cls);
    IdentitySet set = o_operator_identities(mc);
    EvalContext ctx(alg, &mod);
    ctx.set_operator("T", T.matrix, {Sort::Module, Sort::Algebra});
    ctx.apply(set.derivations);
    require_context(ctx, mc);
    return check_identities(set.identities, ctx, opts);
}

Report check_commuting(const LinearOperator& R1, const LinearOperator& R2) {
    const Matrix &a = R1.matrix, &b = R2.matrix;
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("operators '" + R1.name + "' and '" + R2.name + "' must be square of the same size");
    Matrix d = mat_sub(mat_mul(a, b), mat_mul(b, a));
    Report rep;
    rep.identities = 1;
    rep.tuples = a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Vector c = d.column(j);
        if (!is_zero(c)) rep.violations.push_back({"commuting", {j}, {"e" + std::to_string(j + 1)}, c, 'e'});
    }
    rep.add_assumptions(denominators(a));
    rep.add_assumptions(denominators(b));
    return rep;
}

Report check_symplectic(const HomAlgebra& alg, const LinearOperator& omega, const CheckOptions& opts) {
    std::size_t n = alg.dim();
    if (omega.matrix.rows() != n || omega.matrix.cols() != n)
        throw ShapeMismatch("form '" + omega.name + "' must be " + std::to_string(n) + "x" + std::to_string(n));
    require_products(alg, "hom-malcev");
    Report rep;
    rep.identities = 1;
    rep.tuples = 1;
    Scalar det = determinant(omega.matrix);
    if (det.is_zero()) rep.violations.push_back({"nondegenerate", {}, {}, {det}, 's'});
    if (opts.stop_early && !rep.pass()) return rep;

    const IdentitySet& set = catalog("symplectic");
    EvalContext ctx(alg);
    ctx.set_form("omega", omega.matrix);
    std::vector<Identity> ids = {{"antisymmetric", parse_identity("form(omega, x, y) + form(omega, y, x)", set.signature), ""}};
    ids.insert(ids.end(), set.identities.begin(), set.identities.end());
    rep.merge(check_identities(ids, ctx, opts));
    sort_violations(rep);
    return rep;
}

Report run_expectation(const ExampleEntry& entry, const std::string& key, const CheckOptions& opts) {
    std::vector<std::string> parts;
    std::stringstream ss(key);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    const HomAlgebra& alg = entry.algebra;
    const std::string& kind = parts.empty() ? key : parts[0];
    if (kind == "structure" && parts.size() == 2) return check_structure(alg, parts[1], opts);
    if (kind == "structure" && parts.size() == 3) {
        auto eq = parts[2].find('=');
        if (eq == std::string::npos) throw UnknownLabel("unknown expectation '" + key + "'");
        return check_structure(select_products(alg, {{parts[2].substr(0, eq), parts[2].substr(eq + 1)}}), parts[1], opts);
    }
    if (kind == "multiplicative" && parts.size() == 2) return check_multiplicative(alg, parts[1]);
    if (kind == "morphism" && parts.size() == 2) return check_morphism(entry.op(parts[1]), alg, alg);
    if (kind == "rota-baxter" && parts.size() == 3) return check_rota_baxter(alg, parts[1], entry.op(parts[2]), opts);
    if (kind == "commuting" && parts.size() == 3) return check_commuting(entry.op(parts[1]), entry.op(parts[2]));
    if (kind == "symplectic" && parts.size() == 2) return check_symplectic(alg, entry.op(parts[1]), opts);
    throw UnknownLabel("unknown expectation '" + key + "'");
}

} // namespace homalg
