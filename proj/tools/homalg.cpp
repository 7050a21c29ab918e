#include "homalg/checkers.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"
#include "homalg/identity/evaluator.hpp"
#include "homalg/identity/parser.hpp"
#include "homalg/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace homalg;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kMath = 3;

struct Globals {
    std::string emit = "text";
    std::string set;
    bool assume_nonzero = false;
    bool stop_early = false;
    unsigned threads = 0;
    std::size_t max_violations = 20;

    std::map<std::string, mpq_class> bindings() const {
        return set.empty() ? std::map<std::string, mpq_class>{} : parse_bindings(set);
    }
    CheckOptions options() const {
        CheckOptions o;
        o.stop_early = stop_early;
        o.threads = threads;
        return o;
    }
};

const std::string kExamplePrefix = "example:";
const std::string kBuiltinPrefix = "builtin:";

bool is_example(const std::string& spec) { return spec.rfind(kExamplePrefix, 0) == 0; }

// "path#name" or "example:rb4#R"
std::pair<std::string, std::string> split_fragment(const std::string& spec) {
    auto h = spec.rfind('#');
    if (h == std::string::npos) return {spec, ""};
    return {spec.substr(0, h), spec.substr(h + 1)};
}

class Loader {
public:
    explicit Loader(const Globals& g) : bindings_(g.bindings()) {}

    HomAlgebra algebra(const std::string& spec) const {
        if (is_example(spec)) return load_example(spec.substr(kExamplePrefix.size()), bindings_).algebra;
        return bind(algebra_from_json(read_file(spec)));
    }

    LinearOperator op(const std::string& spec) const {
        auto [where, name] = split_fragment(spec);
        if (is_example(where)) {
            auto e = load_example(where.substr(kExamplePrefix.size()), bindings_);
            if (!name.empty()) return e.op(name);
            if (e.operators.size() != 1) throw UnknownLabel("example " + e.name + " has " +
                                                            std::to_string(e.operators.size()) +
                                                            " operators; select one with #name");
            return e.operators.front();
        }
        LinearOperator o = operator_from_json(read_file(where), name);
        return bindings_.empty() ? o : substitute(o, bindings_);
    }

    // Modules are files or builtin:adjoint, builtin:coadjoint, builtin:left-mult, builtin:regular.
    ModuleSpec module(const std::string& spec, const HomAlgebra& alg, const std::string& cls) const {
        if (spec.rfind(kBuiltinPrefix, 0) == 0) {
            std::string kind = spec.substr(kBuiltinPrefix.size());
            if (kind == "adjoint") return adjoint(alg);
            if (kind == "coadjoint") return coadjoint(alg);
            if (kind == "left-mult") return left_mult(alg);
            if (kind == "regular") return regular_bimodule(alg, cls.empty() ? "hom-alternative" : cls);
            throw UnknownLabel("unknown builtin module '" + kind + "' (adjoint, coadjoint, left-mult, regular)");
        }
        ModuleSpec m = module_from_json(read_file(spec));
        return bindings_.empty() ? m : substitute(m, bindings_);
    }

private:
    HomAlgebra bind(const HomAlgebra& a) const { return bindings_.empty() ? a : substitute(a, bindings_); }

    std::map<std::string, mpq_class> bindings_;
};

class Output {
public:
    explicit Output(const Globals& g) : g_(g) {}

    int report(Report r) const {
        if (!g_.assume_nonzero && !r.assumptions.empty()) throw_assumption(r.assumptions);
        if (g_.emit == "json")
            std::cout << to_json(r) << "\n";
        else
            std::cout << render_report(r, g_.max_violations);
        return r.pass() ? kPass : kFail;
    }

    int algebra(const HomAlgebra& a) const {
        guard(denominators(a));
        if (g_.emit == "json")
            std::cout << to_json(a) << "\n";
        else
            std::cout << render_tables(a) << trailer(denominators(a));
        return kPass;
    }

    int module(const ModuleSpec& m) const {
        guard(denominators(m));
        if (g_.emit == "json")
            std::cout << to_json(m) << "\n";
        else
            std::cout << render_module(m) << trailer(denominators(m));
        return kPass;
    }

private:
    void guard(const std::set<std::string>& dens) const {
        if (!g_.assume_nonzero && !dens.empty()) throw_assumption({dens.begin(), dens.end()});
    }

    static std::string trailer(const std::set<std::string>& dens) {
        std::string s;
        for (const auto& d : dens) s += "assuming " + d + " != 0\n";
        return s;
    }

    [[noreturn]] static void throw_assumption(const std::vector<std::string>& dens) {
        std::string list;
        for (const auto& d : dens) list += (list.empty() ? "" : ", ") + d;
        throw DenominatorAssumption("result depends on nonvanishing of " + list + "; rerun with --assume-nonzero");
    }

    const Globals& g_;
};

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
}

void add_common(CLI::App* sub, Globals& g) {
    sub->add_option("--emit", g.emit, "Output format")->check(CLI::IsMember({"json", "table", "text"}));
    sub->add_option("--set", g.set, "Parameter bindings, e.g. a4=2,lambda1=3/2");
    sub->add_flag("--assume-nonzero", g.assume_nonzero, "Record non-constant denominators as assumptions");
}

void add_check_flags(CLI::App* sub, Globals& g) {
    add_common(sub, g);
    sub->add_flag("--stop-early", g.stop_early, "Stop at the first violation");
    sub->add_option("--threads", g.threads, "Worker threads (default: HOMALG_THREADS or 1)");
    sub->add_option("--max-violations", g.max_violations, "Violations listed in text output");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact verification and constructions for finite-dimensional Hom-algebras", "homalg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "homalg 0.1.0");
    Globals g;
    std::function<int()> action;

    // check
    std::string cls, alg_spec, op_spec, op2_spec, mod_spec, rule;
    auto* check = app.add_subcommand("check", "Check that an algebra belongs to a class");
    check->add_option("--class", cls, "Algebra class")->required()->check(CLI::IsMember(structure_classes()));
    check->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    add_check_flags(check, g);
    check->callback([&] {
        action = [&] {
            Loader ld(g);
            return Output(g).report(check_structure(ld.algebra(alg_spec), cls, g.options()));
        };
    });

    // check-op
    std::string kind = "rota-baxter";
    auto* check_op = app.add_subcommand("check-op", "Check an operator on an algebra");
    check_op->add_option("--kind", kind, "rota-baxter, o-operator, morphism, commuting or symplectic")
        ->check(CLI::IsMember({"rota-baxter", "o-operator", "morphism", "commuting", "symplectic"}));
    check_op->add_option("--class", cls, "Algebra class (rota-baxter, o-operator)")
        ->check(CLI::IsMember(structure_classes()));
    check_op->add_option("--module", mod_spec, "Module for o-operator: file or builtin:<kind>");
    check_op->add_option("--target", op2_spec, "Target algebra for morphism (default: the source)");
    check_op->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    check_op->add_option("operator", op_spec, "Operator file, optionally #name")->required();
    std::string second_op;
    check_op->add_option("second", second_op, "Second operator (commuting)");
    add_check_flags(check_op, g);
    check_op->callback([&] {
        action = [&] {
            Loader ld(g);
            Output out(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            LinearOperator op = ld.op(op_spec);
            if (kind == "rota-baxter") {
                if (cls.empty()) throw CLI::RequiredError("--class");
                return out.report(check_rota_baxter(alg, cls, op, g.options()));
            }
            if (kind == "o-operator") {
                if (cls.empty()) throw CLI::RequiredError("--class");
                if (mod_spec.empty()) throw CLI::RequiredError("--module");
                return out.report(check_o_operator(alg, ld.module(mod_spec, alg, cls), cls, op, g.options()));
            }
            if (kind == "morphism")
                return out.report(check_morphism(op, alg, op2_spec.empty() ? alg : ld.algebra(op2_spec)));
            if (kind == "commuting") {
                if (second_op.empty()) throw CLI::RequiredError("second");
                return out.report(check_commuting(op, ld.op(second_op)));
            }
            return out.report(check_symplectic(alg, op, g.options()));
        };
    });

    // check-module
    auto* check_mod = app.add_subcommand("check-module", "Check module axioms");
    check_mod->add_option("--class", cls, "Algebra or module class")->required();
    check_mod->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    check_mod->add_option("module", mod_spec, "Module file or builtin:<kind>")->required();
    add_check_flags(check_mod, g);
    check_mod->callback([&] {
        action = [&] {
            Loader ld(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            return Output(g).report(check_module(alg, ld.module(mod_spec, alg, cls), cls, g.options()));
        };
    });

    // derive
    auto* derive = app.add_subcommand("derive", "Add the products derived by a rule");
    derive->add_option("--rule", rule, join(derive_rule_names()))->required();
    derive->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    add_common(derive, g);
    derive->callback([&] {
        action = [&] {
            Loader ld(g);
            return Output(g).algebra(derive_structure(ld.algebra(alg_spec), parse_derive_rule(rule)));
        };
    });

    // split
    auto* split = app.add_subcommand("split", "Split an algebra along an operator");
    split->add_option("--rule", rule,
                      join(split_rule_names()) + ", commuting, o-operator, transport or symplectic")
        ->required();
    split->add_option("--class", cls, "Algebra class (o-operator)");
    split->add_option("--module", mod_spec, "Module (o-operator, transport): file or builtin:<kind>");
    split->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    split->add_option("operator", op_spec, "Operator file, optionally #name")->required();
    split->add_option("second", second_op, "Second operator (commuting)");
    add_common(split, g);
    split->callback([&] {
        action = [&] {
            Loader ld(g);
            Output out(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            LinearOperator op = ld.op(op_spec);
            if (rule == "commuting")
                return out.algebra(commuting_rb_split(alg, op, second_op.empty() ? op : ld.op(second_op)));
            if (rule == "symplectic") return out.algebra(symplectic_product(alg, op));
            if (rule == "o-operator" || rule == "transport") {
                if (mod_spec.empty()) throw CLI::RequiredError("--module");
                if (rule == "o-operator" && cls.empty()) throw CLI::RequiredError("--class");
                ModuleSpec mod = ld.module(mod_spec, alg, cls);
                return out.algebra(rule == "transport" ? transport(alg, mod, op) : o_induced(alg, mod, cls, op));
            }
            return out.algebra(rb_split(alg, parse_split_rule(rule), op));
        };
    });

    // twist
    std::string module_op;
    auto* twist = app.add_subcommand("twist", "Yau twist of an algebra, or of a module with --module");
    twist->add_option("--module", mod_spec, "Module file or builtin:<kind>");
    twist->add_option("--module-op", module_op, "Operator on the module (default: identity)");
    twist->add_option("--class", cls, "Class used by builtin:regular");
    twist->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    twist->add_option("operator", op_spec, "Operator file, optionally #name")->required();
    add_common(twist, g);
    twist->callback([&] {
        action = [&] {
            Loader ld(g);
            Output out(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            LinearOperator f = ld.op(op_spec);
            if (mod_spec.empty()) return out.algebra(yau_twist(alg, f));
            ModuleSpec mod = ld.module(mod_spec, alg, cls);
            LinearOperator gop = module_op.empty() ? LinearOperator{"id", Matrix::identity(mod.dim())} : ld.op(module_op);
            return out.module(twist_module(alg, mod, f, gop));
        };
    });

    // dual
    auto* dual = app.add_subcommand("dual", "Dual representation (coadjoint without a module)");
    dual->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    dual->add_option("module", mod_spec, "Module file or builtin:<kind>");
    add_common(dual, g);
    dual->callback([&] {
        action = [&] {
            Loader ld(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            if (mod_spec.empty()) return Output(g).module(coadjoint(alg));
            return Output(g).module(dual_rep(alg, ld.module(mod_spec, alg, "")));
        };
    });

    // semidirect
    auto* semi = app.add_subcommand("semidirect", "Semidirect product of an algebra and a module");
    semi->add_option("--class", cls, "Algebra class")->required()->check(CLI::IsMember(structure_classes()));
    semi->add_option("algebra", alg_spec, "Algebra file or example:<name>")->required();
    semi->add_option("module", mod_spec, "Module file or builtin:<kind>")->required();
    add_common(semi, g);
    semi->callback([&] {
        action = [&] {
            Loader ld(g);
            HomAlgebra alg = ld.algebra(alg_spec);
            return Output(g).algebra(semidirect(alg, ld.module(mod_spec, alg, cls), cls));
        };
    });

    // example
    std::string example_name;
    bool list = false, verify = false;
    auto* example = app.add_subcommand("example", "Export a built-in example");
    example->add_option("name", example_name, "Example name");
    example->add_flag("--list", list, "List the examples");
    example->add_flag("--verify", verify, "Run the recorded expectations");
    add_check_flags(example, g);
    example->callback([&] {
        action = [&] {
            if (list || example_name.empty()) {
                for (const auto& n : example_names()) std::cout << n << "\n";
                return example_name.empty() && !list ? kUsage : kPass;
            }
            ExampleEntry e = load_example(example_name, g.bindings());
            if (verify) {
                bool ok = true;
                for (const auto& [key, expected] : e.expected) {
                    Report r = run_expectation(e, key, g.options());
                    bool match = r.pass() == expected;
                    ok = ok && match;
                    std::cout << (match ? "ok   " : "MISMATCH ") << key << ": " << r.summary() << "\n";
                }
                return ok ? kPass : kFail;
            }
            if (g.emit == "json") {
                std::cout << to_json(e) << "\n";
                return kPass;
            }
            std::cout << e.name << ": " << e.description << "\n\n" << render_tables(e.algebra);
            std::cout << "\ntwist:\n" << render_matrix(e.algebra.twist());
            for (const auto& op : e.operators) std::cout << "\n" << op.name << ":\n" << render_matrix(op.matrix);
            for (const auto& n : e.notes) std::cout << "note: " << n << "\n";
            return kPass;
        };
    });

    // identity
    std::string id_file;
    std::vector<std::string> op_binds, form_binds;
    std::string show;
    bool list_ids = false;
    auto* identity = app.add_subcommand("identity", "Check an identity file, or show a catalog entry");
    identity->add_option("--show", show, "Print a catalog identity set");
    identity->add_flag("--list", list_ids, "List catalog identity sets");
    identity->add_option("--module", mod_spec, "Module file or builtin:<kind>");
    identity->add_option("--op", op_binds, "Operator binding NAME=SPEC");
    identity->add_option("--form", form_binds, "Form binding NAME=SPEC");
    identity->add_option("--class", cls, "Class used by builtin:regular");
    identity->add_option("file", id_file, "Identity file");
    identity->add_option("algebra", alg_spec, "Algebra file or example:<name>");
    add_check_flags(identity, g);
    identity->callback([&] {
        action = [&] {
            if (list_ids) {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
                return kPass;
            }
            if (!show.empty()) {
                std::cout << catalog_source(show);
                return kPass;
            }
            if (id_file.empty() || alg_spec.empty()) throw CLI::RequiredError("file and algebra");
            Loader ld(g);
            IdentitySet set = parse_identity_file(read_file(id_file), id_file);
            HomAlgebra alg = ld.algebra(alg_spec);
            std::optional<ModuleSpec> mod;
            if (!mod_spec.empty()) mod = ld.module(mod_spec, alg, cls);
            EvalContext ctx(alg, mod ? &*mod : nullptr);
            auto binding = [](const std::string& b) {
                auto eq = b.find('=');
                if (eq == std::string::npos || eq == 0) throw SyntaxError("expected NAME=SPEC in '" + b + "'", 0);
                return std::make_pair(b.substr(0, eq), b.substr(eq + 1));
            };
            for (const auto& b : op_binds) {
                auto [name, spec] = binding(b);
                auto it = set.signature.ops.find(name);
                if (it == set.signature.ops.end()) throw UnknownLabel("identity file declares no operator '" + name + "'");
                ctx.set_operator(name, ld.op(spec).matrix, it->second);
            }
            for (const auto& b : form_binds) {
                auto [name, spec] = binding(b);
                ctx.set_form(name, ld.op(spec).matrix);
            }
            ctx.apply(set.derivations);
            Report r = check_identities(set.identities, ctx, g.options());
            return Output(g).report(r);
        };
    });

    try {
        app.parse(argc, argv);
        return action();
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kMath;
    }
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
