#include "homalg/constructions.hpp"

#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"
#include "homalg/identity/evaluator.hpp"

#include <algorithm>
#include <functional>

namespace homalg {

namespace {

template <class E>
E find_name(const std::vector<std::string>& names, const std::string& name, const char* what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UnknownLabel(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<E>(it - names.begin());
}

void require_square(const Matrix& m, std::size_t n, const std::string& name) {
    if (m.rows() != n || m.cols() != n)
        throw ShapeMismatch("operator '" + name + "' is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(n) + "x" + std::to_string(n));
}

const ProductTensor& need_product(const HomAlgebra& alg, const std::string& label) {
    if (!alg.has_product(label)) throw MissingProduct("algebra has no product '" + label + "'");
    return alg.product(label);
}

ProductTensor build(const std::string& label, std::size_t n, const std::function<Vector(std::size_t, std::size_t)>& f) {
    ProductTensor t(label, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = f(i, j);
    return t;
}

// Matrices of x -> e_i o x (left) or x -> x o e_i (right).
std::vector<Matrix> multiplications(const ProductTensor& t, bool left) {
    std::size_t n = t.dim();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(left ? t.at(i, j) : t.at(j, i));
        out.push_back(Matrix::from_columns(cols));
    }
    return out;
}

std::vector<Matrix> combine(const std::vector<Matrix>& a, const std::vector<Matrix>& b, int sign) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(sign > 0 ? mat_add(a[i], b[i]) : mat_sub(a[i], b[i]));
    return out;
}

// Actions of mod after the module class's derived labels are filled in.
class ModuleView {
public:
    ModuleView(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& module_class) : ctx_(alg, &mod) {
        for (const auto& d : catalog(module_class).derivations)
            if (d.is_action) ctx_.apply(d);
    }
    const std::vector<Matrix>& action(const std::string& label) const { return ctx_.action(label); }
    Vector act(const std::string& label, const Vector& x, const Vector& v) const {
        return mat_apply(action_of(action(label), x), v);
    }

private:
    EvalContext ctx_;
};

// Actions rho, or ell - r when rho is absent.
std::vector<Matrix> rho_of(const ModuleSpec& mod) {
    if (mod.has_action("rho")) return mod.action("rho");
    if (mod.has_action("ell") && mod.has_action("r")) return combine(mod.action("ell"), mod.action("r"), -1);
    throw MissingAction("module has neither 'rho' nor 'ell' and 'r'");
}

Vector embed(const Vector& v, std::size_t offset, std::size_t total) {
    Vector out = zero_vector(total);
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
}

} // namespace

const std::vector<std::string>& derive_rule_names() {
    static const std::vector<std::string> n = {"commutator",       "pre-alt-sum",     "pre-alt-to-pre-malcev",
                                               "mdend-horizontal", "mdend-vertical",  "quadri-horizontal",
                                               "quadri-vertical",  "quadri-to-mdend"};
    return n;
}

const std::vector<std::string>& split_rule_names() {
    static const std::vector<std::string> n = {"malcev-to-pre-malcev", "alt-to-pre-alt", "pre-malcev-to-mdend",
                                               "pre-alt-to-quadri"};
    return n;
}

const std::vector<std::string>& descend_rule_names() {
    static const std::vector<std::string> n = {"alt-to-malcev", "pre-malcev-ell", "pre-malcev-to-malcev",
                                               "pre-alt-to-pre-malcev"};
    return n;
}

DeriveRule parse_derive_rule(const std::string& name) {
    return find_name<DeriveRule>(derive_rule_names(), name, "derive rule");
}
SplitRule parse_split_rule(const std::string& name) {
    return find_name<SplitRule>(split_rule_names(), name, "split rule");
}
DescendRule parse_descend_rule(const std::string& name) {
    return find_name<DescendRule>(descend_rule_names(), name, "descend rule");
}
std::string rule_name(DeriveRule r) { return derive_rule_names()[static_cast<std::size_t>(r)]; }
std::string rule_name(SplitRule r) { return split_rule_names()[static_cast<std::size_t>(r)]; }
std::string rule_name(DescendRule r) { return descend_rule_names()[static_cast<std::size_t>(r)]; }

std::string module_class_for(const std::string& cls) {
    static const std::map<std::string, std::string> m = {
        {"hom-malcev", "malcev-representation"},
        {"hom-alternative", "alt-bimodule"},
        {"hom-pre-malcev", "pre-malcev-bimodule"},
        {"hom-pre-alternative", "pre-alt-bimodule"},
    };
    auto it = m.find(cls);
    if (it != m.end()) return it->second;
    for (const auto& [a, b] : m)
        if (b == cls) return b;
    throw UnknownLabel("no module class for '" + cls + "'");
}

std::string split_source_class(SplitRule r) {
    switch (r) {
    case SplitRule::MalcevToPreMalcev: return "hom-malcev";
    case SplitRule::AltToPreAlt: return "hom-alternative";
    case SplitRule::PreMalcevToMdend: return "hom-pre-malcev";
    case SplitRule::PreAltToQuadri: return "hom-pre-alternative";
    }
    return {};
}

std::string split_target_class(SplitRule r) {
    switch (r) {
    case SplitRule::MalcevToPreMalcev: return "hom-pre-malcev";
    case SplitRule::AltToPreAlt: return "hom-pre-alternative";
    case SplitRule::PreMalcevToMdend: return "hom-m-dendriform";
    case SplitRule::PreAltToQuadri: return "hom-alt-quadri";
    }
    return {};
}

HomAlgebra derive_structure(const HomAlgebra& alg, DeriveRule rule) {
    using T = Derivation::Term;
    auto d = [](std::string target, std::vector<T> terms) { return Derivation{false, false, std::move(target), terms}; };
    std::vector<Derivation> ds;
    switch (rule) {
    case DeriveRule::Commutator: {
        std::string src = alg.has_product("dot") ? "dot" : "star";
        need_product(alg, src);
        ds = {d("bracket", {{1, src, false}, {-1, src, true}})};
        break;
    }
    case DeriveRule::PreAltSum: ds = {d("star", {{1, "prec", false}, {1, "succ", false}})}; break;
    case DeriveRule::PreAltToPreMalcev: ds = {d("dot", {{1, "succ", false}, {-1, "prec", true}})}; break;
    case DeriveRule::MdendHorizontal: ds = {d("dot", {{1, "tleft", false}, {1, "tright", false}})}; break;
    case DeriveRule::MdendVertical: ds = {d("diamond", {{1, "tleft", false}, {-1, "tright", true}})}; break;
    case DeriveRule::QuadriHorizontal:
        ds = {d("succ", {{1, "ne", false}, {1, "se", false}}), d("prec", {{1, "nw", false}, {1, "sw", false}})};
        break;
    case DeriveRule::QuadriVertical:
        ds = {d("vee", {{1, "se", false}, {1, "sw", false}}), d("wedge", {{1, "ne", false}, {1, "nw", false}})};
        break;
    case DeriveRule::QuadriToMdend:
        ds = {d("tright", {{1, "ne", false}, {-1, "sw", true}}), d("tleft", {{1, "se", false}, {-1, "nw", true}})};
        break;
    }
    EvalContext ctx(alg);
    std::vector<ProductTensor> made;
    for (const auto& x : ds) {
        ctx.apply(x);
        made.push_back(ctx.product(x.target));
    }
    return alg.with_products(made);
}

HomAlgebra select_products(const HomAlgebra& alg, const std::map<std::string, std::string>& renames) {
    std::vector<ProductTensor> ps;
    for (const auto& [from, to] : renames) ps.push_back(need_product(alg, from).relabeled(to));
    return make_algebra(alg.dim(), alg.params(), ps, alg.twist());
}

HomAlgebra rb_split(const HomAlgebra& alg, SplitRule rule, const LinearOperator& R) {
    std::size_t n = alg.dim();
    require_square(R.matrix, n, R.name);
    auto Re = [&](std::size_t i) { return R.matrix.column(i); };
    auto e = [&](std::size_t i) { return basis_vector(n, i); };
    // Products l(R x, y) and l(x, R y).
    auto left = [&](const std::string& label, const std::string& src) {
        const auto& t = need_product(alg, src);
        return build(label, n, [&](std::size_t i, std::size_t j) { return product_eval(t, Re(i), e(j)); });
    };
    auto right = [&](const std::string& label, const std::string& src) {
        const auto& t = need_product(alg, src);
        return build(label, n, [&](std::size_t i, std::size_t j) { return product_eval(t, e(i), Re(j)); });
    };
    std::vector<ProductTensor> ps;
    switch (rule) {
    case SplitRule::MalcevToPreMalcev: ps = {left("dot", "bracket")}; break;
    case SplitRule::AltToPreAlt: ps = {right("prec", "star"), left("succ", "star")}; break;
    case SplitRule::PreMalcevToMdend: ps = {right("tright", "dot"), left("tleft", "dot")}; break;
    case SplitRule::PreAltToQuadri:
        ps = {right("ne", "succ"), left("se", "succ"), left("sw", "prec"), right("nw", "prec")};
        break;
    }
    return make_algebra(n, alg.params(), ps, alg.twist());
}

HomAlgebra commuting_rb_split(const HomAlgebra& alg, const LinearOperator& R1, const LinearOperator& R2) {
    std::size_t n = alg.dim();
    require_square(R1.matrix, n, R1.name);
    require_square(R2.matrix, n, R2.name);
    const auto& br = need_product(alg, "bracket");
    Matrix R12 = mat_mul(R1.matrix, R2.matrix);
    auto tright = build("tright", n, [&](std::size_t i, std::size_t j) {
        return product_eval(br, R1.matrix.column(i), R2.matrix.column(j));
    });
    auto tleft = build("tleft", n, [&](std::size_t i, std::size_t j) {
        return product_eval(br, R12.column(i), basis_vector(n, j));
    });
    return make_algebra(n, alg.params(), {tright, tleft}, alg.twist());
}

HomAlgebra o_induced(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls, const LinearOperator& T) {
    std::string mc = module_class_for(cls);
    std::size_t n = alg.dim(), m = mod.dim();
    if (T.matrix.rows() != n || T.matrix.cols() != m)
        throw ShapeMismatch("operator '" + T.name + "' must map the module (dimension " + std::to_string(m) +
                            ") to the algebra (dimension " + std::to_string(n) + ")");
    ModuleView view(alg, mod, mc);
    auto Ta = [&](std::size_t a) { return T.matrix.column(a); };
    auto v = [&](std::size_t a) { return basis_vector(m, a); };
    // a o b = act(T a) b, or act(T b) a.
    auto on_left = [&](const std::string& label, const std::string& action) {
        return build(label, m, [&](std::size_t a, std::size_t b) { return view.act(action, Ta(a), v(b)); });
    };
    auto on_right = [&](const std::string& label, const std::string& action) {
        return build(label, m, [&](std::size_t a, std::size_t b) { return view.act(action, Ta(b), v(a)); });
    };
    std::vector<ProductTensor> ps;
    if (mc == "malcev-representation") ps = {on_left("dot", "rho")};
    else if (mc == "alt-bimodule") ps = {on_left("succ", "ell"), on_right("prec", "r")};
    else if (mc == "pre-malcev-bimodule") ps = {on_right("tright", "r"), on_left("tleft", "ell")};
    else
        ps = {on_left("se", "Lsucc"), on_right("ne", "Rsucc"), on_left("sw", "Lprec"), on_right("nw", "Rprec")};
    return make_algebra(m, alg.params(), ps, mod.twist());
}

HomAlgebra semidirect(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls) {
    std::string mc = module_class_for(cls);
    struct Part {
        std::string product, left, right;
        int right_sign;
    };
    std::vector<Part> parts;
    if (mc == "malcev-representation") parts = {{"bracket", "rho", "rho", -1}};
    else if (mc == "alt-bimodule") parts = {{"star", "ell", "r", 1}};
    else if (mc == "pre-malcev-bimodule") parts = {{"dot", "ell", "r", 1}};
    else parts = {{"succ", "Lsucc", "Rsucc", 1}, {"prec", "Lprec", "Rprec", 1}};

    std::size_t n = alg.dim(), m = mod.dim(), N = n + m;
    ModuleView view(alg, mod, mc);
    std::vector<ProductTensor> ps;
    for (const auto& p : parts) {
        const auto& t = need_product(alg, p.product);
        const auto& L = view.action(p.left);
        const auto& R = view.action(p.right);
        ps.push_back(build(p.product, N, [&](std::size_t i, std::size_t j) {
            if (i < n && j < n) return embed(t.at(i, j), 0, N);
            if (i < n && j >= n) return embed(L[i].column(j - n), n, N);
            if (i >= n && j < n) {
                Vector c = R[j].column(i - n);
                return embed(p.right_sign > 0 ? c : Scalar(-1) * c, n, N);
            }
            return zero_vector(N);
        }));
    }
    return make_algebra(N, alg.params(), ps, direct_sum(alg.twist(), mod.twist()));
}

ModuleSpec adjoint(const HomAlgebra& alg) {
    const auto& br = need_product(alg, "bracket");
    return make_module(alg.dim(), alg.dim(), alg.twist(), {{"rho", multiplications(br, true)}}, alg.params());
}

ModuleSpec left_mult(const HomAlgebra& alg) {
    const auto& dot = need_product(alg, "dot");
    std::size_t n = alg.dim();
    return make_module(n, n, alg.twist(),
                       {{"ell", multiplications(dot, true)}, {"r", std::vector<Matrix>(n, Matrix(n, n))}},
                       alg.params());
}

ModuleSpec regular_bimodule(const HomAlgebra& alg, const std::string& cls) {
    std::string mc = module_class_for(cls);
    std::size_t n = alg.dim();
    std::map<std::string, std::vector<Matrix>> acts;
    if (mc == "malcev-representation") {
        acts["rho"] = multiplications(need_product(alg, "bracket"), true);
    } else if (mc == "alt-bimodule" || mc == "pre-malcev-bimodule") {
        const auto& t = need_product(alg, mc == "alt-bimodule" ? "star" : "dot");
        acts["ell"] = multiplications(t, true);
        acts["r"] = multiplications(t, false);
    } else {
        const auto& succ = need_product(alg, "succ");
        const auto& prec = need_product(alg, "prec");
        acts["Lsucc"] = multiplications(succ, true);
        acts["Rsucc"] = multiplications(succ, false);
        acts["Lprec"] = multiplications(prec, true);
        acts["Rprec"] = multiplications(prec, false);
    }
    return make_module(n, n, alg.twist(), std::move(acts), alg.params());
}

ModuleSpec module_descend(const ModuleSpec& mod, DescendRule rule) {
    std::map<std::string, std::vector<Matrix>> acts;
    switch (rule) {
    case DescendRule::AltToMalcev:
    case DescendRule::PreMalcevToMalcev: acts["rho"] = combine(mod.action("ell"), mod.action("r"), -1); break;
    case DescendRule::PreMalcevEll: acts["rho"] = mod.action("ell"); break;
    case DescendRule::PreAltToPreMalcev:
        acts["ell"] = combine(mod.action("Lsucc"), mod.action("Rprec"), -1);
        acts["r"] = combine(mod.action("Rsucc"), mod.action("Lprec"), -1);
        break;
    }
    return make_module(mod.algebra_dim(), mod.dim(), mod.twist(), std::move(acts), mod.params());
}

ModuleSpec dual_rep(const HomAlgebra& alg, const ModuleSpec& mod) {
    if (mod.algebra_dim() != alg.dim()) throw ShapeMismatch("module does not act on this algebra");
    std::vector<Matrix> rho = rho_of(mod);
    Matrix binv = mat_invert(mod.twist());
    Matrix binv2 = mat_mul(binv, binv);
    std::vector<Matrix> star;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Matrix m = mat_mul(binv2, action_of(rho, alg.twist().column(i)));
        star.push_back(mat_scale(Scalar(-1), m.transpose()));
    }
    return make_module(alg.dim(), mod.dim(), binv.transpose(), {{"rho", star}}, mod.params());
}

ModuleSpec coadjoint(const HomAlgebra& alg) { return dual_rep(alg, adjoint(alg)); }

HomAlgebra yau_twist(const HomAlgebra& alg, const LinearOperator& f) {
    std::size_t n = alg.dim();
    require_square(f.matrix, n, f.name);
    std::vector<ProductTensor> ps;
    for (const auto& [label, t] : alg.products())
        ps.push_back(build(label, n, [&](std::size_t i, std::size_t j) { return mat_apply(f.matrix, t.at(i, j)); }));
    return make_algebra(n, alg.params(), ps, mat_mul(f.matrix, alg.twist()));
}

ModuleSpec twist_module(const HomAlgebra& alg, const ModuleSpec& mod, const LinearOperator& f,
                        const LinearOperator& g) {
    require_square(f.matrix, alg.dim(), f.name);
    require_square(g.matrix, mod.dim(), g.name);
    if (mod.algebra_dim() != alg.dim()) throw ShapeMismatch("module does not act on this algebra");
    std::map<std::string, std::vector<Matrix>> acts;
    for (const auto& [label, maps] : mod.actions()) {
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(mat_mul(action_of(maps, f.matrix.column(i)), g.matrix));
        acts[label] = std::move(out);
    }
    return make_module(alg.dim(), mod.dim(), mat_mul(g.matrix, mod.twist()), std::move(acts), mod.params());
}

HomAlgebra transpose_mdend(const HomAlgebra& alg) {
    const auto& tr = need_product(alg, "tright");
    const auto& tl = need_product(alg, "tleft");
    std::size_t n = alg.dim();
    auto t = build("tright", n, [&](std::size_t i, std::size_t j) { return Scalar(-1) * tr.at(j, i); });
    return make_algebra(n, alg.params(), {t, tl}, alg.twist());
}

Matrix omega_sharp(const Matrix& gram) { return gram.transpose(); }

HomAlgebra symplectic_product(const HomAlgebra& alg, const LinearOperator& omega) {
    std::size_t n = alg.dim();
    require_square(omega.matrix, n, omega.name);
    const auto& br = need_product(alg, "bracket");
    const Matrix& W = omega.matrix;
    const Matrix& A = alg.twist();
    // omega(u, alpha z) = u^T W A z, so u solves (W A)^T u = c.
    Matrix sys = mat_invert(mat_mul(W, A).transpose());
    auto dot = build("dot", n, [&](std::size_t i, std::size_t j) {
        Vector wy = mat_apply(W.transpose(), A.column(j));
        Vector c(n);
        for (std::size_t k = 0; k < n; ++k) {
            Vector zx = br.at(k, i);
            Scalar s;
            for (std::size_t l = 0; l < n; ++l)
                if (!zx[l].is_zero()) s += wy[l] * zx[l];
            c[k] = s;
        }
        return mat_apply(sys, c);
    });
    return alg.with_products({dot});
}

HomAlgebra transport(const HomAlgebra& alg, const ModuleSpec& mod, const LinearOperator& T) {
    std::size_t n = alg.dim();
    require_square(T.matrix, n, T.name);
    if (mod.dim() != n || mod.algebra_dim() != n) throw ShapeMismatch("transport needs a module of the algebra's dimension");
    std::vector<Matrix> rho = rho_of(mod);
    Matrix Tinv = mat_invert(T.matrix);
    auto dot = build("dot", n, [&](std::size_t i, std::size_t j) {
        return mat_apply(T.matrix, mat_apply(rho[i], Tinv.column(j)));
    });
    return alg.with_products({dot});
}

} // namespace homalg
