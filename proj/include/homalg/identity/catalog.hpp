#pragma once

#include "homalg/identity/ast.hpp"

#include <string>
#include <vector>

namespace homalg {

// Algebra classes, in the order of their splitting diagram.
const std::vector<std::string>& structure_classes();
const std::vector<std::string>& module_classes();

// Product labels a class needs on the algebra.
const std::vector<std::string>& class_products(const std::string& cls);
// Action labels a module class needs.
const std::vector<std::string>& module_actions(const std::string& cls);

// Identity set of a class, module class, "symplectic", or one of the
// "-literal" variants kept for comparison. Throws UnknownLabel.
const IdentitySet& catalog(const std::string& name);
const std::string& catalog_source(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace homalg
