#pragma once

#include "homalg/structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace homalg {

struct ExampleEntry {
    std::string name;
    std::string description;
    HomAlgebra algebra;
    std::vector<LinearOperator> operators;
    // Verdicts the checkers reproduce, keyed "structure:<class>", "multiplicative:<label>",
    // "morphism:<op>", "rota-baxter:<class>:<op>", "commuting:<op>:<op>" or "symplectic:<op>".
    // "structure:<class>:<from>=<to>" checks a product under another label.
    std::map<std::string, bool> expected;
    std::vector<std::string> notes;

    // Throws UnknownLabel.
    const LinearOperator& op(const std::string& name) const;
};

// The built-in examples followed by the supplementary fixtures.
const std::vector<std::string>& example_names();

// Throws UnknownExample; DenominatorVanishes when a binding zeroes a denominator.
ExampleEntry load_example(const std::string& name, const std::map<std::string, mpq_class>& bindings = {});

// Reads "a4=2,lambda1=3/2".
std::map<std::string, mpq_class> parse_bindings(const std::string& text);

// Multiplication tables printed alongside the examples, for entrywise comparison.
const std::vector<std::string>& reference_table_names();
ProductTensor reference_table(const std::string& name);

// Builds a product from sparse entries {i, j, "vector"} with 1-based indices.
struct TableEntry {
    std::size_t i, j;
    std::string value;
};
ProductTensor table_from_entries(const std::string& label, std::size_t n, const std::vector<TableEntry>& entries);
// Matrix whose column j is the image of e_{j+1}, given as vector texts.
Matrix matrix_from_images(std::size_t n, const std::vector<std::string>& images);

} // namespace homalg
