#pragma once

#include "homalg/corpus.hpp"
#include "homalg/structures.hpp"

#include <string>

namespace homalg {

// Documents:
//   algebra   {"dim": n, "params": [...], "twist": rows, "products": {label: n x n x n}}
//   module    {"dim": m, "algebra_dim": n, "params": [...], "beta": rows, "actions": {label: [n matrices]}}
//   operator  {"name": ..., "matrix": rows}
//   example   {"name": ..., "description": ..., "algebra": {...}, "operators": {name: {"matrix": rows}},
//              "expected": {key: bool}, "notes": [...]}
// Scalars are strings in the scalar grammar. When "params" is present every
// parameter must be listed. Malformed text throws SyntaxError; wrong shapes
// throw ShapeMismatch.
enum class DocKind { Algebra, Module, Operator, Example };

DocKind detect_kind(const std::string& json_text);

HomAlgebra algebra_from_json(const std::string& json_text);
ModuleSpec module_from_json(const std::string& json_text);
// For an example document, picks the operator called name (or the only one).
LinearOperator operator_from_json(const std::string& json_text, const std::string& name = "");
ExampleEntry example_from_json(const std::string& json_text);

std::string to_json(const HomAlgebra& alg);
std::string to_json(const ModuleSpec& mod);
std::string to_json(const LinearOperator& op);
std::string to_json(const ExampleEntry& e);
std::string to_json(const Report& r);

// Multiplication table of one product, rows e_i, columns e_j, entry e_i o e_j.
std::string render_table(const HomAlgebra& alg, const std::string& label);
std::string render_tables(const HomAlgebra& alg);
std::string render_matrix(const Matrix& m);
std::string render_module(const ModuleSpec& mod);
// Summary line, then violations, assumptions and notes.
std::string render_report(const Report& r, std::size_t max_violations = 20);

std::string read_file(const std::string& path);

} // namespace homalg
