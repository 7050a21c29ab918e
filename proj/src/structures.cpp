#include "homalg/structures.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace homalg {

ProductTensor::ProductTensor(std::string label, std::size_t n)
    : label_(std::move(label)), n_(n), c_(n * n, Vector(n)) {}

ProductTensor::ProductTensor(std::string label, std::size_t n, std::vector<Vector> entries)
    : label_(std::move(label)), n_(n), c_(std::move(entries)) {
    if (c_.size() != n * n) throw ShapeMismatch("product '" + label_ + "' needs " + std::to_string(n * n) + " entries");
    for (const auto& v : c_)
        if (v.size() != n) throw ShapeMismatch("product '" + label_ + "' has an entry of wrong length");
}

bool ProductTensor::is_zero() const {
    for (const auto& v : c_)
        if (!homalg::is_zero(v)) return false;
    return true;
}

ProductTensor ProductTensor::relabeled(std::string label) const {
    ProductTensor t = *this;
    t.label_ = std::move(label);
    return t;
}

Vector product_eval(const ProductTensor& t, const Vector& x, const Vector& y) {
    const std::size_t n = t.dim();
    if (x.size() != n || y.size() != n) throw ShapeMismatch("product argument of wrong dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vector& c = t.at(i, j);
            if (is_zero(c)) continue;
            Scalar xy = x[i] * y[j];
            axpy(out, xy, c);
        }
    }
    return out;
}

const ProductTensor& HomAlgebra::product(const std::string& label) const {
    auto it = products_.find(label);
    if (it == products_.end()) throw UnknownLabel("no product labeled '" + label + "'");
    return it->second;
}

std::vector<std::string> HomAlgebra::labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : products_) out.push_back(k);
    return out;
}

HomAlgebra HomAlgebra::with_products(const std::vector<ProductTensor>& added) const {
    std::map<std::string, ProductTensor> merged = products_;
    for (const auto& t : added) merged[t.label()] = t;
    std::vector<ProductTensor> list;
    for (auto& [k, v] : merged) list.push_back(v);
    return make_algebra(dim_, params_, std::move(list), twist_);
}

HomAlgebra HomAlgebra::only(const std::vector<std::string>& labels) const {
    std::vector<ProductTensor> list;
    for (const auto& l : labels) list.push_back(product(l));
    return make_algebra(dim_, params_, std::move(list), twist_);
}

HomAlgebra HomAlgebra::with_twist(const Matrix& twist) const {
    std::vector<ProductTensor> list;
    for (const auto& [k, v] : products_) list.push_back(v);
    return make_algebra(dim_, params_, std::move(list), twist);
}

std::set<std::string> variables(const Matrix& m) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& v : m(i, j).variables()) out.insert(v);
    return out;
}

namespace {

void merge_params(std::vector<std::string>& params, const std::set<std::string>& found) {
    std::set<std::string> all(params.begin(), params.end());
    all.insert(found.begin(), found.end());
    params.assign(all.begin(), all.end());
}

} // namespace

HomAlgebra make_algebra(std::size_t dim, std::vector<std::string> params, std::vector<ProductTensor> products,
                        Matrix twist) {
    if (dim == 0) throw ShapeMismatch("algebra dimension must be positive");
    if (twist.rows() != dim || twist.cols() != dim)
        throw ShapeMismatch("twist must be " + std::to_string(dim) + "x" + std::to_string(dim));
    HomAlgebra a;
    a.dim_ = dim;
    std::set<std::string> found = variables(twist);
    for (auto& t : products) {
        if (t.dim() != dim) throw ShapeMismatch("product '" + t.label() + "' has wrong dimension");
        if (a.products_.count(t.label())) throw DuplicateLabel("duplicate product label '" + t.label() + "'");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (const auto& s : t.at(i, j))
                    for (const auto& v : s.variables()) found.insert(v);
        std::string label = t.label();
        a.products_.emplace(label, std::move(t));
    }
    for (const auto& p : params)
        if (!is_parameter_name(p)) throw InputError("invalid parameter name '" + p + "'");
    merge_params(params, found);
    a.params_ = std::move(params);
    a.twist_ = std::move(twist);
    return a;
}

Vector product_eval(const HomAlgebra& alg, const std::string& label, const Vector& x, const Vector& y) {
    return product_eval(alg.product(label), x, y);
}

const std::vector<std::string>& action_labels() {
    static const std::vector<std::string> labels = {"rho", "ell", "r", "Lsucc", "Rsucc", "Lprec", "Rprec"};
    return labels;
}

const std::vector<Matrix>& ModuleSpec::action(const std::string& label) const {
    auto it = actions_.find(label);
    if (it == actions_.end()) throw MissingAction("module has no action '" + label + "'");
    return it->second;
}

std::vector<std::string> ModuleSpec::labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : actions_) out.push_back(k);
    return out;
}

ModuleSpec ModuleSpec::with_actions(const std::map<std::string, std::vector<Matrix>>& added) const {
    auto merged = actions_;
    for (const auto& [k, v] : added) merged[k] = v;
    return make_module(n_, mdim_, beta_, std::move(merged), params_);
}

ModuleSpec ModuleSpec::only(const std::vector<std::string>& labels) const {
    std::map<std::string, std::vector<Matrix>> kept;
    for (const auto& l : labels) kept[l] = action(l);
    return make_module(n_, mdim_, beta_, std::move(kept), params_);
}

ModuleSpec make_module(std::size_t n, std::size_t mdim, Matrix beta, std::map<std::string, std::vector<Matrix>> actions,
                       std::vector<std::string> params) {
    if (n == 0 || mdim == 0) throw ShapeMismatch("module and algebra dimensions must be positive");
    if (beta.rows() != mdim || beta.cols() != mdim)
        throw ShapeMismatch("module twist must be " + std::to_string(mdim) + "x" + std::to_string(mdim));
    std::set<std::string> found = variables(beta);
    const auto& allowed = action_labels();
    for (const auto& [label, mats] : actions) {
        if (std::find(allowed.begin(), allowed.end(), label) == allowed.end())
            throw UnknownLabel("unknown action label '" + label + "'");
        if (mats.size() != n)
            throw ShapeMismatch("action '" + label + "' needs one matrix per algebra basis element");
        for (const auto& m : mats) {
            if (m.rows() != mdim || m.cols() != mdim)
                throw ShapeMismatch("action '" + label + "' matrices must be " + std::to_string(mdim) + "x" +
                                    std::to_string(mdim));
            for (const auto& v : variables(m)) found.insert(v);
        }
    }
    for (const auto& p : params)
        if (!is_parameter_name(p)) throw InputError("invalid parameter name '" + p + "'");
    merge_params(params, found);
    ModuleSpec m;
    m.n_ = n;
    m.mdim_ = mdim;
    m.params_ = std::move(params);
    m.beta_ = std::move(beta);
    m.actions_ = std::move(actions);
    return m;
}

Matrix action_of(const std::vector<Matrix>& action, const Vector& x) {
    if (action.size() != x.size()) throw ShapeMismatch("action argument of wrong dimension");
    Matrix out(action.empty() ? 0 : action[0].rows(), action.empty() ? 0 : action[0].cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        out = mat_add(out, x[i].is_one() ? action[i] : mat_scale(x[i], action[i]));
    }
    return out;
}

void Report::merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& a : other.assumptions)
        if (std::find(assumptions.begin(), assumptions.end(), a) == assumptions.end()) assumptions.push_back(a);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    identities += other.identities;
    tuples += other.tuples;
}

void Report::add_assumptions(const std::set<std::string>& dens) {
    for (const auto& d : dens)
        if (std::find(assumptions.begin(), assumptions.end(), d) == assumptions.end()) assumptions.push_back(d);
    std::sort(assumptions.begin(), assumptions.end());
}

std::string Report::summary() const {
    std::ostringstream os;
    if (pass())
        os << "PASS (" << identities << " identities, " << tuples << " tuples)";
    else
        os << "FAIL (" << violations.size() << " violations; " << identities << " identities, " << tuples
           << " tuples)";
    return os.str();
}

std::string render_vector(const Vector& v, const std::string& basis) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        Scalar c = v[k];
        if (c.is_zero()) continue;
        bool neg = c.num().is_monomial() && sgn(c.num().leading_coeff()) < 0;
        if (neg) c = -c;
        std::string name = basis + std::to_string(k + 1);
        std::string term;
        if (c.is_one()) {
            term = name;
        } else {
            std::string s = c.to_string();
            if (s.find(' ') != std::string::npos) s = "(" + s + ")";
            term = s + "*" + name;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Vector parse_vector(const std::string& text, std::size_t n, const std::string& basis) {
    Scalar s = parse_scalar(text);
    auto basis_index = [&](const std::string& name) -> long {
        if (name.size() <= basis.size() || name.compare(0, basis.size(), basis) != 0) return -1;
        std::string digits = name.substr(basis.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits[0] == '0') return -1;
        return std::stol(digits) - 1;
    };
    for (const auto& [m, c] : s.den().terms())
        for (const auto& [var, e] : m)
            if (basis_index(var) >= 0) throw SyntaxError("basis vector '" + var + "' in a denominator", 0);
    Vector out = zero_vector(n);
    for (const auto& [m, c] : s.num().terms()) {
        long k = -1;
        Monomial rest;
        for (const auto& [var, e] : m) {
            long idx = basis_index(var);
            if (idx < 0) {
                rest.push_back({var, e});
                continue;
            }
            if (k >= 0 || e != 1) throw SyntaxError("'" + text + "' is not linear in the basis", 0);
            if (static_cast<std::size_t>(idx) >= n)
                throw ShapeMismatch("basis vector '" + var + "' out of range for dimension " + std::to_string(n));
            k = idx;
        }
        if (k < 0) throw SyntaxError("term without a basis vector in '" + text + "'", 0);
        out[k] += Scalar::normalize(Polynomial::term(rest, c), s.den());
    }
    return out;
}

std::string render_residual(const Violation& v) {
    if (v.residual_basis == 's') return v.residual.empty() ? "0" : v.residual[0].to_string();
    return render_vector(v.residual, std::string(1, v.residual_basis));
}

std::string render_tuple(const Violation& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.tuple_names.size(); ++i) s += (i ? "," : "") + v.tuple_names[i];
    return s + ")";
}

namespace {

std::string basis_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

} // namespace

Report check_multiplicative(const HomAlgebra& alg, const std::string& label) {
    const ProductTensor& t = alg.product(label);
    const std::size_t n = alg.dim();
    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = alg.twist().column(i);
    Report rep;
    rep.identities = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++rep.tuples;
            Vector lhs = mat_apply(alg.twist(), t.at(i, j));
            Vector rhs = product_eval(t, images[i], images[j]);
            Vector res = lhs - rhs;
            if (!is_zero(res))
                rep.violations.push_back({"multiplicative:" + label, {i, j}, {basis_name("e", i), basis_name("e", j)}, res, 'e'});
        }
    rep.add_assumptions(denominators(alg));
    return rep;
}

Report check_morphism(const LinearOperator& f, const HomAlgebra& src, const HomAlgebra& dst) {
    const Matrix& m = f.matrix;
    if (m.rows() != dst.dim() || m.cols() != src.dim())
        throw ShapeMismatch("morphism '" + f.name + "' must be " + std::to_string(dst.dim()) + "x" +
                            std::to_string(src.dim()));
    Report rep;
    const std::size_t n = src.dim();
    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = m.column(i);
    for (const auto& [label, t] : src.products()) {
        const ProductTensor& u = dst.product(label);
        ++rep.identities;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++rep.tuples;
                Vector res = mat_apply(m, t.at(i, j)) - product_eval(u, images[i], images[j]);
                if (!is_zero(res))
                    rep.violations.push_back({"morphism:" + label, {i, j}, {basis_name("e", i), basis_name("e", j)}, res, 'e'});
            }
    }
    ++rep.identities;
    Matrix diff = mat_sub(mat_mul(m, src.twist()), mat_mul(dst.twist(), m));
    for (std::size_t i = 0; i < n; ++i) {
        ++rep.tuples;
        Vector res = diff.column(i);
        if (!is_zero(res)) rep.violations.push_back({"morphism:twist", {i}, {basis_name("e", i)}, res, 'e'});
    }
    rep.add_assumptions(denominators(src));
    rep.add_assumptions(denominators(dst));
    rep.add_assumptions(denominators(m));
    return rep;
}

std::set<std::string> denominators(const Vector& v) {
    std::set<std::string> out;
    for (const auto& s : v)
        if (!s.den().is_constant()) out.insert(s.den().to_string());
    return out;
}

std::set<std::string> denominators(const Matrix& m) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).den().is_constant()) out.insert(m(i, j).den().to_string());
    return out;
}

std::set<std::string> denominators(const HomAlgebra& alg) {
    std::set<std::string> out = denominators(alg.twist());
    const std::size_t n = alg.dim();
    for (const auto& [label, t] : alg.products())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& d : denominators(t.at(i, j))) out.insert(d);
    return out;
}

std::set<std::string> denominators(const ModuleSpec& mod) {
    std::set<std::string> out = denominators(mod.twist());
    for (const auto& [label, mats] : mod.actions())
        for (const auto& m : mats)
            for (const auto& d : denominators(m)) out.insert(d);
    return out;
}

HomAlgebra substitute(const HomAlgebra& alg, const std::map<std::string, mpq_class>& values) {
    std::vector<ProductTensor> prods;
    const std::size_t n = alg.dim();
    for (const auto& [label, t] : alg.products()) {
        std::vector<Vector> entries;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) entries.push_back(substitute(t.at(i, j), values));
        prods.emplace_back(label, n, std::move(entries));
    }
    std::vector<std::string> params;
    for (const auto& p : alg.params())
        if (!values.count(p)) params.push_back(p);
    return make_algebra(n, params, std::move(prods), substitute(alg.twist(), values));
}

ModuleSpec substitute(const ModuleSpec& mod, const std::map<std::string, mpq_class>& values) {
    std::map<std::string, std::vector<Matrix>> acts;
    for (const auto& [label, mats] : mod.actions())
        for (const auto& m : mats) acts[label].push_back(substitute(m, values));
    std::vector<std::string> params;
    for (const auto& p : mod.params())
        if (!values.count(p)) params.push_back(p);
    return make_module(mod.algebra_dim(), mod.dim(), substitute(mod.twist(), values), std::move(acts), params);
}

LinearOperator substitute(const LinearOperator& op, const std::map<std::string, mpq_class>& values) {
    return {op.name, substitute(op.matrix, values)};
}

} // namespace homalg
