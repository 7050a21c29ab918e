#include "homalg/checkers.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"

#include "oracle/crosscheck.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace homalg;

namespace {

struct Part {
    std::string what;
    bool ok;
};

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void record(const std::string& what, bool ok) { parts_.push_back({what, ok}); }
    void check(const std::string& what, const std::function<bool()>& f) {
        try {
            record(what, f());
        } catch (const std::exception& e) {
            record(what + " (threw: " + e.what() + ")", false);
        }
    }

    bool ok() const {
        for (const auto& p : parts_)
            if (!p.ok) return false;
        return !parts_.empty();
    }

    std::string line(const std::string& id) const {
        std::string s = std::string(ok() ? "PASS" : "FAIL") + " " + id + ": " + title_;
        std::string failed;
        for (const auto& p : parts_)
            if (!p.ok) failed += (failed.empty() ? "" : "; ") + p.what;
        if (!failed.empty()) s += " [failed: " + failed + "]";
        return s;
    }

private:
    std::string title_;
    std::vector<Part> parts_;
};

HomAlgebra malcev(int dim) { return load_example(dim == 4 ? "malcev4" : "malcev5").algebra; }
LinearOperator rb(int dim) { return load_example(dim == 4 ? "rb4" : "rb5").op("R"); }

std::string ref(int dim, const std::string& what) { return "malcev" + std::to_string(dim) + "-" + what; }

HomAlgebra split_dot(const HomAlgebra& alg, const LinearOperator& R) {
    return rb_split(alg, SplitRule::MalcevToPreMalcev, R);
}

// Criterion 1 to 3 for one Malcev algebra.
void untwisted_chain(Criterion& c, int dim) {
    auto alg = malcev(dim);
    auto R = rb(dim);
    std::string d = std::to_string(dim);
    c.check("malcev" + d + " is Hom-Malcev", [&] {
        Report r = check_structure(alg, "hom-malcev");
        return r.pass() && r.tuples <= r.identities * dim * dim * dim * dim;
    });
    c.check("R" + d + " is Rota-Baxter", [&] { return check_rota_baxter(alg, "hom-malcev", R).pass(); });
    c.check("split equals the printed dot table", [&] {
        return split_dot(alg, R).product("dot") == reference_table(ref(dim, "dot"));
    });
    c.check("split is Hom-pre-Malcev", [&] { return check_structure(split_dot(alg, R), "hom-pre-malcev").pass(); });
}

// Criterion 4 for one twist; printed tables are compared only for the printed twist.
void twisted_chain(Criterion& c, int dim, const LinearOperator& alpha, bool printed) {
    auto alg = malcev(dim);
    auto R = rb(dim);
    auto tw = yau_twist(alg, alpha);
    c.check("alpha is a morphism", [&] { return check_morphism(alpha, alg, alg).pass(); });
    if (printed)
        c.check("twisted bracket equals the printed table",
                [&] { return tw.product("bracket") == reference_table(ref(dim, "twisted-bracket")); });
    c.check("twisted algebra is Hom-Malcev", [&] { return check_structure(tw, "hom-malcev").pass(); });
    c.check("R is Rota-Baxter on the twisted algebra", [&] { return check_rota_baxter(tw, "hom-malcev", R).pass(); });
    if (printed)
        c.check("twisted split equals the printed dot table",
                [&] { return split_dot(tw, R).product("dot") == reference_table(ref(dim, "twisted-dot")); });
    c.check("twisted split is Hom-pre-Malcev", [&] { return check_structure(split_dot(tw, R), "hom-pre-malcev").pass(); });
}

// Criterion 5 for one twist.
void mdend_chain(Criterion& c, int dim, const LinearOperator& alpha, bool printed) {
    auto R = rb(dim);
    auto tw = yau_twist(malcev(dim), alpha);
    auto md = commuting_rb_split(tw, R, R);
    if (printed) {
        c.check("tright equals the printed table",
                [&] { return md.product("tright") == reference_table(ref(dim, "twisted-tright")); });
        c.check("tleft equals the printed table",
                [&] { return md.product("tleft") == reference_table(ref(dim, "twisted-tleft")); });
    }
    c.check("split is Hom-M-dendriform", [&] { return check_structure(md, "hom-m-dendriform").pass(); });
    auto h = select_products(derive_structure(md, DeriveRule::MdendHorizontal), {{"dot", "dot"}});
    auto v = select_products(derive_structure(md, DeriveRule::MdendVertical), {{"diamond", "dot"}});
    c.check("horizontal product is Hom-pre-Malcev", [&] { return check_structure(h, "hom-pre-malcev").pass(); });
    c.check("vertical product is Hom-pre-Malcev", [&] { return check_structure(v, "hom-pre-malcev").pass(); });
    c.check("horizontal and vertical commutators agree", [&] {
        return derive_structure(h, DeriveRule::Commutator).product("bracket") ==
               derive_structure(v, DeriveRule::Commutator).product("bracket");
    });
}

void dual_chain(Criterion& c, const LinearOperator& alpha) {
    auto tw = yau_twist(malcev(4), alpha);
    auto ad = adjoint(tw);
    auto dual = dual_rep(tw, ad);
    c.check("dual of the adjoint is a Malcev representation",
            [&] { return check_module(tw, dual, "malcev-representation").pass(); });
    c.check("double dual equals the adjoint", [&] {
        auto dd = dual_rep(tw, dual);
        return dd.action("rho") == ad.action("rho") && dd.twist() == ad.twist();
    });
}

struct ModuleCase {
    std::string name, cls;
    HomAlgebra alg;
    ModuleSpec mod;
    bool expect_module;
};

std::vector<ModuleCase> module_cases() {
    std::vector<ModuleCase> cs;
    auto m4 = malcev(4), m5 = malcev(5);
    auto tw4 = yau_twist(m4, load_example("alpha4-morphic").op("alpha"));
    auto tw5 = yau_twist(m5, load_example("alpha5-commuting").op("alpha"));
    auto lie2 = load_example("lie2-omega").algebra;
    for (const auto& [name, alg] : std::vector<std::pair<std::string, HomAlgebra>>{
             {"malcev4", m4}, {"malcev5", m5}, {"malcev4-twisted", tw4}, {"malcev5-twisted", tw5}, {"lie2", lie2}}) {
        cs.push_back({"adjoint " + name, "hom-malcev", alg, adjoint(alg), true});
        cs.push_back({"coadjoint " + name, "hom-malcev", alg, coadjoint(alg), true});
    }
    auto rho = adjoint(m4).action("rho");
    rho[1](2, 2) = 1;
    cs.push_back({"broken Malcev representation", "hom-malcev", m4, make_module(4, 4, m4.twist(), {{"rho", rho}}),
                  false});

    for (int dim : {4, 5}) {
        for (const auto& alpha : {std::string(), std::string(dim == 4 ? "alpha4-morphic" : "alpha5-commuting")}) {
            auto base = alpha.empty() ? malcev(dim) : yau_twist(malcev(dim), load_example(alpha).op("alpha"));
            auto pm = split_dot(base, rb(dim));
            std::string tag = "pre-Malcev " + std::to_string(dim) + (alpha.empty() ? "" : " twisted");
            cs.push_back({"regular " + tag, "hom-pre-malcev", pm, regular_bimodule(pm, "hom-pre-malcev"), true});
            cs.push_back({"left multiplication " + tag, "hom-pre-malcev", pm, left_mult(pm), true});
        }
    }
    auto pm4 = split_dot(malcev(4), rb(4));
    auto reg = regular_bimodule(pm4, "hom-pre-malcev");
    auto ell = reg.action("ell");
    ell[0](3, 3) += 1;
    cs.push_back({"broken pre-Malcev bimodule", "hom-pre-malcev", pm4,
                  make_module(4, 4, reg.twist(), {{"ell", ell}, {"r", reg.action("r")}}), false});

    std::vector<std::pair<std::string, std::pair<HomAlgebra, LinearOperator>>> alts;
    for (const auto& name : {"rb-dualnum", "t2-upper"}) {
        auto e = load_example(name);
        alts.push_back({name, {e.algebra, e.op("R")}});
    }
    auto sw = load_example("t2-swap");
    alts.push_back({"t2-swap twisted", {yau_twist(sw.algebra, sw.op("alpha")), sw.op("R")}});
    for (const auto& [name, ar] : alts) {
        auto pa = rb_split(ar.first, SplitRule::AltToPreAlt, ar.second);
        cs.push_back({"regular pre-alternative " + name, "hom-pre-alternative", pa,
                      regular_bimodule(pa, "hom-pre-alternative"), true});
    }
    auto t2 = load_example("t2-upper");
    auto pa = rb_split(t2.algebra, SplitRule::AltToPreAlt, t2.op("R"));
    auto preg = regular_bimodule(pa, "hom-pre-alternative");
    auto acts = preg.actions();
    acts.at("Lsucc")[1](0, 0) += 1;
    cs.push_back({"broken pre-alternative bimodule", "hom-pre-alternative", pa, make_module(3, 3, preg.twist(), acts),
                  false});
    return cs;
}

bool has_note(const Report& r, const std::string& text) {
    for (const auto& n : r.notes)
        if (n.find(text) != std::string::npos) return true;
    return false;
}

void semidirect_equivalence(Criterion& c) {
    for (const auto& m : module_cases()) {
        c.check(m.name + ": module axioms agree with the semidirect product", [&] {
            if (!check_structure(m.alg, m.cls).pass()) return false;
            CheckOptions plain;
            plain.cross_check = false;
            bool axioms = check_module(m.alg, m.mod, m.cls, plain).pass();
            bool semi = check_structure(semidirect(m.alg, m.mod, m.cls), m.cls).pass();
            return axioms == semi && axioms == m.expect_module;
        });
    }
    c.check("printed pre-alternative equations that disagree are flagged", [&] {
        auto t2 = load_example("t2-upper");
        auto pa = rb_split(t2.algebra, SplitRule::AltToPreAlt, t2.op("R"));
        Report r = check_module(pa, regular_bimodule(pa, "hom-pre-alternative"), "pre-alt-bimodule");
        return r.pass() && has_note(r, "printed equations fail");
    });
}

struct RbCase {
    std::string name;
    HomAlgebra alg;
    LinearOperator R;
    std::string cls;
};

std::vector<RbCase> rb_cases() {
    auto m4 = malcev(4), m5 = malcev(5);
    std::vector<RbCase> out = {
        {"malcev4", m4, rb(4), "hom-malcev"},
        {"malcev5", m5, rb(5), "hom-malcev"},
        {"malcev4 twisted", yau_twist(m4, load_example("alpha4-morphic").op("alpha")), rb(4), "hom-malcev"},
        {"malcev5 twisted", yau_twist(m5, load_example("alpha5-commuting").op("alpha")), rb(5), "hom-malcev"},
        {"dual numbers", load_example("rb-dualnum").algebra, load_example("rb-dualnum").op("R"), "hom-alternative"},
        {"t2-upper", load_example("t2-upper").algebra, load_example("t2-upper").op("R"), "hom-alternative"},
    };
    auto sw = load_example("t2-swap");
    out.push_back({"t2-swap twisted", yau_twist(sw.algebra, sw.op("alpha")), sw.op("R"), "hom-alternative"});
    return out;
}

Vector sum_at(const HomAlgebra& a, const std::string& l1, const std::string& l2, std::size_t i, std::size_t j) {
    return a.product(l1).at(i, j) + a.product(l2).at(i, j);
}

void splitting_soundness(Criterion& c) {
    for (const auto& rc : rb_cases()) {
        bool malcev_like = rc.cls == "hom-malcev";
        SplitRule s1 = malcev_like ? SplitRule::MalcevToPreMalcev : SplitRule::AltToPreAlt;
        SplitRule s2 = malcev_like ? SplitRule::PreMalcevToMdend : SplitRule::PreAltToQuadri;
        const Matrix& R = rc.R.matrix;
        std::size_t n = rc.alg.dim();
        auto one = rb_split(rc.alg, s1, rc.R);
        auto two = rb_split(one, s2, rc.R);
        auto induced = o_induced(rc.alg, regular_bimodule(rc.alg, rc.cls), rc.cls, rc.R);
        c.check(rc.name + ": first split passes " + split_target_class(s1),
                [&] { return check_structure(one, split_target_class(s1)).pass(); });
        c.check(rc.name + ": second split passes " + split_target_class(s2),
                [&] { return check_structure(two, split_target_class(s2)).pass(); });
        c.check(rc.name + ": O-operator product passes " + split_target_class(s1),
                [&] { return check_structure(induced, split_target_class(s1)).pass(); });
        c.check(rc.name + ": homomorphism laws on all basis pairs", [&] {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Vector Ri = R.column(i), Rj = R.column(j);
                    if (malcev_like) {
                        const auto& dot = one.product("dot");
                        if (mat_apply(R, dot.at(i, j) - dot.at(j, i)) !=
                            product_eval(rc.alg.product("bracket"), Ri, Rj))
                            return false;
                        if (mat_apply(R, sum_at(two, "tright", "tleft", i, j)) != product_eval(dot, Ri, Rj))
                            return false;
                        const auto& idot = induced.product("dot");
                        if (mat_apply(R, idot.at(i, j) - idot.at(j, i)) !=
                            product_eval(rc.alg.product("bracket"), Ri, Rj))
                            return false;
                    } else {
                        if (mat_apply(R, sum_at(one, "prec", "succ", i, j)) !=
                            product_eval(rc.alg.product("star"), Ri, Rj))
                            return false;
                        if (mat_apply(R, sum_at(induced, "prec", "succ", i, j)) !=
                            product_eval(rc.alg.product("star"), Ri, Rj))
                            return false;
                    }
                }
            return true;
        });
    }
}

struct Entry {
    std::string id;
    std::string title;
    std::function<void(Criterion&)> run;
};

std::vector<Entry> entries() {
    auto alpha4 = [] { return load_example("alpha4").op("alpha"); };
    auto alpha4m = [] { return load_example("alpha4-morphic").op("alpha"); };
    auto alpha5 = [] { return load_example("alpha5").op("alpha"); };
    auto alpha5c = [] { return load_example("alpha5-commuting").op("alpha"); };
    return {
        {"criterion 1", "malcev4 is a Hom-Malcev algebra with symbolic parameters",
         [](Criterion& c) {
             auto alg = malcev(4);
             c.check("hom-malcev check passes within 4^4 tuples per identity", [&] {
                 Report r = check_structure(alg, "hom-malcev");
                 return r.pass() && r.tuples <= r.identities * 256;
             });
         }},
        {"criterion 2", "R4 is a Rota-Baxter operator on malcev4",
         [](Criterion& c) { c.check("rota-baxter check passes", [] { return check_rota_baxter(malcev(4), "hom-malcev", rb(4)).pass(); }); }},
        {"criterion 3", "the split of malcev4 by R4 is the printed Hom-pre-Malcev table",
         [](Criterion& c) {
             c.check("split equals the printed dot table",
                     [] { return split_dot(malcev(4), rb(4)).product("dot") == reference_table("malcev4-dot"); });
             c.check("split is Hom-pre-Malcev",
                     [] { return check_structure(split_dot(malcev(4), rb(4)), "hom-pre-malcev").pass(); });
         }},
        {"criterion 4", "twisting malcev4 by the printed alpha4 and splitting",
         [=](Criterion& c) { twisted_chain(c, 4, alpha4(), true); }},
        {"criterion 5", "commuting split of the alpha4-twisted malcev4 is Hom-M-dendriform",
         [=](Criterion& c) { mdend_chain(c, 4, alpha4(), true); }},
        {"criterion 6", "the full chain on malcev5 with R5 and the printed alpha5",
         [=](Criterion& c) {
             untwisted_chain(c, 5);
             twisted_chain(c, 5, alpha5(), true);
             mdend_chain(c, 5, alpha5(), true);
         }},
        {"criterion 7", "dual of the adjoint representation of the alpha4-twisted malcev4",
         [=](Criterion& c) { dual_chain(c, alpha4()); }},
        {"criterion 8", "module axioms hold exactly when the semidirect product is in the class",
         [](Criterion& c) { semidirect_equivalence(c); }},
        {"criterion 9", "splittings land in their target classes and satisfy the homomorphism laws",
         [](Criterion& c) { splitting_soundness(c); }},
        {"criterion 10", "engine residuals equal an independent big-rational oracle on 100 random pairs",
         [](Criterion& c) {
             auto r = crosscheck::random_pairs(100, 20261019u);
             c.record("100 samples drawn", r.samples == 100);
             c.record(std::to_string(r.mismatches.size()) + " mismatching residuals", r.mismatches.empty());
         }},
        {"criterion 11", "negative controls",
         [](Criterion& c) {
             c.check("corrupted malcev4 fails with antisymmetry at (e2,e3), residual -e4", [] {
                 Report r = check_structure(load_example("corrupted-malcev4").algebra, "hom-malcev");
                 if (r.pass()) return false;
                 const auto& v = r.violations.front();
                 return v.identity_id == "antisymmetry" && render_tuple(v) == "(e2,e3)" && render_residual(v) == "-e4";
             });
             c.check("dim-2 Lie algebra with omega(e1,e2) = 1 fails symplectic at (e1,e2,e1)", [] {
                 auto e = load_example("lie2-omega");
                 Report r = check_symplectic(e.algebra, e.op("omega"));
                 for (const auto& v : r.violations)
                     if (render_tuple(v) == "(e1,e2,e1)") return true;
                 return false;
             });
         }},
        {"supplementary 4m", "criterion 4 with the multiplicative variant of alpha4",
         [=](Criterion& c) { twisted_chain(c, 4, alpha4m(), false); }},
        {"supplementary 5m", "criterion 5 with the multiplicative variant of alpha4",
         [=](Criterion& c) { mdend_chain(c, 4, alpha4m(), false); }},
        {"supplementary 6c", "criterion 6 with the variant of alpha5 commuting with R5",
         [=](Criterion& c) {
             twisted_chain(c, 5, alpha5c(), false);
             mdend_chain(c, 5, alpha5c(), false);
         }},
        {"supplementary 7m", "criterion 7 with the multiplicative variant of alpha4",
         [=](Criterion& c) { dual_chain(c, alpha4m()); }},
    };
}

} // namespace

// Usage: acceptance [id...]; ids are "1".."11" or "4m", "5m", "6c", "7m".
int main(int argc, char** argv) {
    std::vector<std::string> only(argv + 1, argv + argc);
    bool all_ok = true;
    std::size_t ran = 0;
    for (const auto& e : entries()) {
        std::string tag = e.id.substr(e.id.find(' ') + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), tag) == only.end()) continue;
        Criterion c(e.title);
        e.run(c);
        std::cout << c.line(e.id) << std::endl;
        all_ok = all_ok && c.ok();
        ++ran;
    }
    if (ran == 0) {
        std::cerr << "no criterion matches\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}
