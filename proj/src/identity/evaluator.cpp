#include "homalg/identity/evaluator.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace homalg {

EvalContext::EvalContext(const HomAlgebra& alg, const ModuleSpec* mod) : alg_(&alg), mod_(mod) {
    products_ = alg.products();
    if (mod) {
        if (mod->algebra_dim() != alg.dim())
            throw ShapeMismatch("module acts on dimension " + std::to_string(mod->algebra_dim()) +
                                " but the algebra has dimension " + std::to_string(alg.dim()));
        actions_ = mod->actions();
    }
}

void EvalContext::set_product(const ProductTensor& t) {
    if (t.dim() != alg_->dim()) throw ShapeMismatch("product '" + t.label() + "' has the wrong dimension");
    products_[t.label()] = t;
}

void EvalContext::set_action(const std::string& label, std::vector<Matrix> maps) {
    if (!mod_) throw MissingAction("action '" + label + "' needs a module");
    if (maps.size() != alg_->dim()) throw ShapeMismatch("action '" + label + "' needs one matrix per basis vector");
    for (const auto& m : maps)
        if (m.rows() != mod_->dim() || m.cols() != mod_->dim())
            throw ShapeMismatch("action '" + label + "' has a matrix of the wrong shape");
    actions_[label] = std::move(maps);
}

void EvalContext::set_operator(const std::string& name, const Matrix& m, OperatorDecl decl) {
    if (m.rows() != dim(decl.codomain) || m.cols() != dim(decl.domain))
        throw ShapeMismatch("operator '" + name + "' is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(dim(decl.codomain)) + "x" +
                            std::to_string(dim(decl.domain)));
    ops_[name] = {m, decl};
}

void EvalContext::set_form(const std::string& name, const Matrix& gram) {
    if (gram.rows() != alg_->dim() || gram.cols() != alg_->dim())
        throw ShapeMismatch("form '" + name + "' needs a square matrix of the algebra's dimension");
    forms_[name] = gram;
}

void EvalContext::apply(const Derivation& d) {
    if (d.is_action) {
        if (d.if_absent && has_action(d.target)) return;
        std::size_t m = mod_ ? mod_->dim() : 0;
        std::vector<Matrix> out(alg_->dim(), Matrix(m, m));
        for (const auto& t : d.terms) {
            const auto& src = action(t.source);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = mat_add(out[i], mat_scale(Scalar(t.coeff), src[i]));
        }
        set_action(d.target, std::move(out));
        return;
    }
    if (d.if_absent && has_product(d.target)) return;
    std::size_t n = alg_->dim();
    for (const auto& t : d.terms)
        if (!has_product(t.source)) throw MissingProduct("product '" + t.source + "' is needed to form '" + d.target + "'");
    ProductTensor out(d.target, n);
    for (const auto& t : d.terms) {
        const auto& src = products_.at(t.source);
        Scalar c(t.coeff);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) axpy(out.at(i, j), c, t.swapped ? src.at(j, i) : src.at(i, j));
    }
    products_[d.target] = std::move(out);
}

void EvalContext::apply(const std::vector<Derivation>& ds) {
    for (const auto& d : ds) apply(d);
}

const ProductTensor& EvalContext::product(const std::string& label) const {
    auto it = products_.find(label);
    if (it == products_.end()) throw UnknownLabel("unknown product '" + label + "'");
    return it->second;
}

const std::vector<Matrix>& EvalContext::action(const std::string& label) const {
    if (!mod_) throw MissingAction("action '" + label + "' needs a module");
    auto it = actions_.find(label);
    if (it == actions_.end()) throw MissingAction("module has no action '" + label + "'");
    return it->second;
}

const Matrix& EvalContext::op(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) throw UnknownLabel("unknown operator '" + name + "'");
    return it->second.first;
}

const Matrix& EvalContext::form(const std::string& name) const {
    auto it = forms_.find(name);
    if (it == forms_.end()) throw UnknownLabel("unknown form '" + name + "'");
    return it->second;
}

const Matrix& EvalContext::beta() const {
    if (!mod_) throw MissingAction("identity needs a module");
    return mod_->twist();
}

std::size_t EvalContext::dim(Sort s) const {
    switch (s) {
    case Sort::Algebra: return alg_->dim();
    case Sort::Module:
        if (!mod_) throw MissingAction("identity needs a module");
        return mod_->dim();
    case Sort::Scalar: return 1;
    }
    return 0;
}

std::set<std::string> EvalContext::denominators() const {
    std::set<std::string> out = homalg::denominators(alg_->twist());
    auto add = [&](const std::set<std::string>& s) { out.insert(s.begin(), s.end()); };
    for (const auto& [l, t] : products_)
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t j = 0; j < t.dim(); ++j) add(homalg::denominators(t.at(i, j)));
    if (mod_) add(homalg::denominators(mod_->twist()));
    for (const auto& [l, ms] : actions_)
        for (const auto& m : ms) add(homalg::denominators(m));
    for (const auto& [n, o] : ops_) add(homalg::denominators(o.first));
    for (const auto& [n, f] : forms_) add(homalg::denominators(f));
    return out;
}

namespace {

Vector act_on(const std::vector<Matrix>& maps, const Vector& a, const Vector& v) {
    Vector out = zero_vector(v.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) axpy(out, a[i], mat_apply(maps[i], v));
    return out;
}

} // namespace

Vector eval_node(const Node& n, const EvalContext& ctx, const std::vector<Vector>& args) {
    switch (n.kind) {
    case Node::Kind::Var: return args.at(n.slot);
    case Node::Kind::TwistA:
    case Node::Kind::TwistB: {
        Vector v = eval_node(*n.children[0], ctx, args);
        const Matrix& m = n.kind == Node::Kind::TwistA ? ctx.alpha() : ctx.beta();
        for (unsigned k = 0; k < n.power; ++k) v = mat_apply(m, v);
        return v;
    }
    case Node::Kind::Prod: {
        Vector l = eval_node(*n.children[0], ctx, args);
        if (is_zero(l)) return zero_vector(l.size());
        return product_eval(ctx.product(n.name), l, eval_node(*n.children[1], ctx, args));
    }
    case Node::Kind::Act: {
        Vector a = eval_node(*n.children[0], ctx, args);
        Vector v = eval_node(*n.children[1], ctx, args);
        return act_on(ctx.action(n.name), a, v);
    }
    case Node::Kind::Apply: return mat_apply(ctx.op(n.name), eval_node(*n.children[0], ctx, args));
    case Node::Kind::Form: {
        Vector l = eval_node(*n.children[0], ctx, args);
        Vector r = eval_node(*n.children[1], ctx, args);
        Vector g = mat_apply(ctx.form(n.name), r);
        Scalar s;
        for (std::size_t i = 0; i < l.size(); ++i)
            if (!l[i].is_zero()) s += l[i] * g[i];
        return {s};
    }
    case Node::Kind::Scale: return n.coeffs[0] * eval_node(*n.children[0], ctx, args);
    case Node::Kind::Sum: {
        Vector out;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            Vector c = eval_node(*n.children[i], ctx, args);
            if (i == 0) out = n.coeffs[0] * c;
            else axpy(out, n.coeffs[i], c);
        }
        return out;
    }
    }
    return {};
}

Vector eval_identity(const IdentityExpr& expr, const EvalContext& ctx, const std::vector<std::size_t>& assignment) {
    if (assignment.size() != expr.vars.size())
        throw ShapeMismatch("assignment has " + std::to_string(assignment.size()) + " entries for " +
                            std::to_string(expr.vars.size()) + " variables");
    std::vector<Vector> args;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        std::size_t d = ctx.dim(expr.vars[i].second);
        if (assignment[i] >= d) throw ShapeMismatch("basis index out of range");
        args.push_back(basis_vector(d, assignment[i]));
    }
    return eval_node(*expr.root, ctx, args);
}

unsigned worker_count(const CheckOptions& opts) {
    unsigned t = opts.threads;
    if (t == 0) {
        if (const char* env = std::getenv("HOMALG_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            t = v > 0 ? static_cast<unsigned>(v) : 1;
        } else {
            t = 1;
        }
    }
    return std::max(1u, t);
}

namespace {

char basis_letter(Sort s) {
    switch (s) {
    case Sort::Algebra: return 'e';
    case Sort::Module: return 'v';
    case Sort::Scalar: return 's';
    }
    return 'e';
}

std::vector<Violation> scan(const Identity& id, const EvalContext& ctx, const std::vector<std::size_t>& dims,
                            std::size_t begin, std::size_t end, bool stop_early) {
    std::vector<Violation> out;
    const auto& vars = id.expr.vars;
    std::vector<std::size_t> tuple(dims.size());
    for (std::size_t idx = begin; idx < end; ++idx) {
        std::size_t r = idx;
        for (std::size_t k = dims.size(); k-- > 0;) {
            tuple[k] = r % dims[k];
            r /= dims[k];
        }
        Vector res = eval_identity(id.expr, ctx, tuple);
        if (is_zero(res)) continue;
        Violation v;
        v.identity_id = id.id;
        v.tuple = tuple;
        for (std::size_t k = 0; k < tuple.size(); ++k)
            v.tuple_names.push_back(std::string(1, basis_letter(vars[k].second)) + std::to_string(tuple[k] + 1));
        v.residual = std::move(res);
        v.residual_basis = basis_letter(id.expr.sort);
        out.push_back(std::move(v));
        if (stop_early) break;
    }
    return out;
}

} // namespace

Report check_identity(const Identity& id, const EvalContext& ctx, const CheckOptions& opts) {
    std::vector<std::size_t> dims;
    std::size_t total = 1;
    for (const auto& [name, sort] : id.expr.vars) {
        dims.push_back(ctx.dim(sort));
        total *= dims.back();
    }
    Report rep;
    rep.identities = 1;
    rep.tuples = total;
    unsigned workers = opts.stop_early ? 1u : std::min<std::size_t>(worker_count(opts), std::max<std::size_t>(total, 1));
    if (workers <= 1) {
        rep.violations = scan(id, ctx, dims, 0, total, opts.stop_early);
    } else {
        std::vector<std::vector<Violation>> parts(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t b = total * w / workers, e = total * (w + 1) / workers;
            pool.emplace_back([&, w, b, e] {
                try {
                    parts[w] = scan(id, ctx, dims, b, e, false);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& p : parts)
            for (auto& v : p) rep.violations.push_back(std::move(v));
    }
    rep.add_assumptions(ctx.denominators());
    return rep;
}

Report check_identities(const std::vector<Identity>& ids, const EvalContext& ctx, const CheckOptions& opts) {
    Report rep;
    for (const auto& id : ids) {
        Report r = check_identity(id, ctx, opts);
        rep.merge(r);
        if (opts.stop_early && !r.pass()) break;
    }
    sort_violations(rep);
    return rep;
}

void sort_violations(Report& r) {
    std::stable_sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
        return a.tuple < b.tuple;
    });
}

} // namespace homalg
