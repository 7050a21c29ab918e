#pragma once

#include "homalg/identity/ast.hpp"
#include "homalg/structures.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace homalg {

// Products, actions, operators and forms an identity may refer to. Derived
// labels are computed when added and never written back to the inputs.
class EvalContext {
public:
    explicit EvalContext(const HomAlgebra& alg, const ModuleSpec* mod = nullptr);

    void set_product(const ProductTensor& t);
    void set_action(const std::string& label, std::vector<Matrix> maps);
    void set_operator(const std::string& name, const Matrix& m, OperatorDecl decl);
    void set_form(const std::string& name, const Matrix& gram);
    void apply(const Derivation& d);
    void apply(const std::vector<Derivation>& ds);

    const HomAlgebra& algebra() const { return *alg_; }
    const ModuleSpec* module() const { return mod_; }
    bool has_product(const std::string& label) const { return products_.count(label) != 0; }
    bool has_action(const std::string& label) const { return actions_.count(label) != 0; }
    const ProductTensor& product(const std::string& label) const;
    const std::vector<Matrix>& action(const std::string& label) const;
    const Matrix& op(const std::string& name) const;
    const Matrix& form(const std::string& name) const;
    const Matrix& alpha() const { return alg_->twist(); }
    // Throws MissingAction without a module.
    const Matrix& beta() const;
    std::size_t dim(Sort s) const;

    std::set<std::string> denominators() const;

private:
    const HomAlgebra* alg_;
    const ModuleSpec* mod_;
    std::map<std::string, ProductTensor> products_;
    std::map<std::string, std::vector<Matrix>> actions_;
    std::map<std::string, std::pair<Matrix, OperatorDecl>> ops_;
    std::map<std::string, Matrix> forms_;
};

// Residual of expr with each variable set to the given basis vector index.
Vector eval_identity(const IdentityExpr& expr, const EvalContext& ctx, const std::vector<std::size_t>& assignment);
Vector eval_node(const Node& n, const EvalContext& ctx, const std::vector<Vector>& args);

struct CheckOptions {
    bool stop_early = false;
    // 0 means: HOMALG_THREADS if set, else 1.
    unsigned threads = 0;
    // Module checks also evaluate the printed equation variants and the
    // semidirect product, and report disagreements as notes.
    bool cross_check = true;
};

unsigned worker_count(const CheckOptions& opts);

// Evaluates on every basis tuple in lexicographic order.
Report check_identity(const Identity& id, const EvalContext& ctx, const CheckOptions& opts = {});
Report check_identities(const std::vector<Identity>& ids, const EvalContext& ctx, const CheckOptions& opts = {});

// Violations ordered by (identity id, tuple).
void sort_violations(Report& r);

} // namespace homalg
