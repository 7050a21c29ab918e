#pragma once

#include "homalg/exactnum/linalg.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace homalg {

// Structure constants of one bilinear product: at(i, j)[k] is the
// coefficient of e_k in e_i o e_j.
class ProductTensor {
public:
    ProductTensor() = default;
    ProductTensor(std::string label, std::size_t n);
    ProductTensor(std::string label, std::size_t n, std::vector<Vector> entries);

    const std::string& label() const { return label_; }
    std::size_t dim() const { return n_; }
    const Vector& at(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
    Vector& at(std::size_t i, std::size_t j) { return c_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[i * n_ + j][k]; }
    bool is_zero() const;

    ProductTensor relabeled(std::string label) const;

    friend bool operator==(const ProductTensor& a, const ProductTensor& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

private:
    std::string label_;
    std::size_t n_ = 0;
    std::vector<Vector> c_;
};

Vector product_eval(const ProductTensor& t, const Vector& x, const Vector& y);

class HomAlgebra {
public:
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::map<std::string, ProductTensor>& products() const { return products_; }
    const Matrix& twist() const { return twist_; }

    bool has_product(const std::string& label) const { return products_.count(label) != 0; }
    // Throws UnknownLabel.
    const ProductTensor& product(const std::string& label) const;
    std::vector<std::string> labels() const;

    // New algebra with the given products added, replacing equal labels.
    HomAlgebra with_products(const std::vector<ProductTensor>& added) const;
    // New algebra carrying only the given products.
    HomAlgebra only(const std::vector<std::string>& labels) const;
    HomAlgebra with_twist(const Matrix& twist) const;

    friend HomAlgebra make_algebra(std::size_t, std::vector<std::string>, std::vector<ProductTensor>, Matrix);

private:
    std::size_t dim_ = 0;
    std::vector<std::string> params_;
    std::map<std::string, ProductTensor> products_;
    Matrix twist_;
};

// Validates shapes and labels. The parameter list is completed with every
// parameter occurring in the data and kept sorted.
HomAlgebra make_algebra(std::size_t dim, std::vector<std::string> params, std::vector<ProductTensor> products,
                        Matrix twist);

Vector product_eval(const HomAlgebra& alg, const std::string& label, const Vector& x, const Vector& y);

// Action labels a module may carry.
const std::vector<std::string>& action_labels();

class ModuleSpec {
public:
    std::size_t dim() const { return mdim_; }
    std::size_t algebra_dim() const { return n_; }
    const std::vector<std::string>& params() const { return params_; }
    const Matrix& twist() const { return beta_; }
    const std::map<std::string, std::vector<Matrix>>& actions() const { return actions_; }

    bool has_action(const std::string& label) const { return actions_.count(label) != 0; }
    // Throws MissingAction.
    const std::vector<Matrix>& action(const std::string& label) const;
    std::vector<std::string> labels() const;

    ModuleSpec with_actions(const std::map<std::string, std::vector<Matrix>>& added) const;
    ModuleSpec only(const std::vector<std::string>& labels) const;

    friend ModuleSpec make_module(std::size_t, std::size_t, Matrix, std::map<std::string, std::vector<Matrix>>,
                                  std::vector<std::string>);

private:
    std::size_t n_ = 0, mdim_ = 0;
    std::vector<std::string> params_;
    Matrix beta_;
    std::map<std::string, std::vector<Matrix>> actions_;
};

// n is the dimension of the acting algebra, mdim that of the module.
ModuleSpec make_module(std::size_t n, std::size_t mdim, Matrix beta,
                       std::map<std::string, std::vector<Matrix>> actions, std::vector<std::string> params = {});

// Linear map x -> sum_i x_i action[i].
Matrix action_of(const std::vector<Matrix>& action, const Vector& x);

struct LinearOperator {
    std::string name;
    Matrix matrix;
};

struct Violation {
    std::string identity_id;
    std::vector<std::size_t> tuple;
    std::vector<std::string> tuple_names;
    Vector residual;
    char residual_basis = 'e';
};

struct Report {
    std::vector<Violation> violations;
    // Denominators assumed nonzero, rendered as polynomials.
    std::vector<std::string> assumptions;
    // Free-form remarks, e.g. disagreements between equivalent formulations.
    std::vector<std::string> notes;
    std::size_t identities = 0;
    std::size_t tuples = 0;

    bool pass() const { return violations.empty(); }
    void merge(const Report& other);
    void add_assumptions(const std::set<std::string>& dens);
    std::string summary() const;
};

// Renders sum_k v_k e_k, e.g. "e2 - b3*e3"; the zero vector renders as "0".
std::string render_vector(const Vector& v, const std::string& basis = "e");
// Reads a linear combination such as "-e2 + b3*e3" or "-b/a5*e3" back into
// coordinates; the inverse of render_vector. Throws SyntaxError.
Vector parse_vector(const std::string& text, std::size_t n, const std::string& basis = "e");
std::string render_tuple(const Violation& v);
std::string render_residual(const Violation& v);

Report check_multiplicative(const HomAlgebra& alg, const std::string& label);
Report check_morphism(const LinearOperator& f, const HomAlgebra& src, const HomAlgebra& dst);

// Non-constant denominators occurring in the data.
std::set<std::string> denominators(const Matrix& m);
std::set<std::string> denominators(const HomAlgebra& alg);
std::set<std::string> denominators(const ModuleSpec& mod);
std::set<std::string> denominators(const Vector& v);

std::set<std::string> variables(const Matrix& m);

// Parameter substitution; throws DenominatorVanishes.
HomAlgebra substitute(const HomAlgebra& alg, const std::map<std::string, mpq_class>& values);
ModuleSpec substitute(const ModuleSpec& mod, const std::map<std::string, mpq_class>& values);
LinearOperator substitute(const LinearOperator& op, const std::map<std::string, mpq_class>& values);

} // namespace homalg
