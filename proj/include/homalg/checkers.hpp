#pragma once

#include "homalg/corpus.hpp"
#include "homalg/identity/ast.hpp"
#include "homalg/identity/evaluator.hpp"
#include "homalg/structures.hpp"

#include <string>

namespace homalg {

// Multiplicativity of the class products, then the class identities.
// Throws MissingProduct, UnknownLabel.
Report check_structure(const HomAlgebra& alg, const std::string& cls, const CheckOptions& opts = {});

// Module axioms of a module class; an algebra class selects its module class.
// For pre-Malcev and pre-alternative bimodules the printed equations and the
// semidirect product are evaluated as well; disagreements become report notes,
// never the verdict.
Report check_module(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls,
                    const CheckOptions& opts = {});

// R o alpha = alpha o R, and R(x) o R(y) = R(R(x) o y + x o R(y)) for each class product.
Report check_rota_baxter(const HomAlgebra& alg, const std::string& cls, const LinearOperator& R,
                         const CheckOptions& opts = {});

// alpha o T = T o beta, and the class's O-operator equations on module basis pairs.
Report check_o_operator(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls, const LinearOperator& T,
                        const CheckOptions& opts = {});

// R1 R2 = R2 R1, one violation per basis vector where they differ.
Report check_commuting(const LinearOperator& R1, const LinearOperator& R2);

// omega given by its Gram matrix: invertible, antisymmetric, invariant under alpha,
// with vanishing cyclic sum.
Report check_symplectic(const HomAlgebra& alg, const LinearOperator& omega, const CheckOptions& opts = {});

// The identity sets behind check_rota_baxter and check_o_operator.
IdentitySet rota_baxter_identities(const std::string& cls);
IdentitySet o_operator_identities(const std::string& cls);

// Runs the checker named by an expectation key of an ExampleEntry.
Report run_expectation(const ExampleEntry& entry, const std::string& key, const CheckOptions& opts = {});

} // namespace homalg
