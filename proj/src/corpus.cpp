#include "homalg/corpus.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace homalg {

const LinearOperator& ExampleEntry::op(const std::string& n) const {
    for (const auto& o : operators)
        if (o.name == n) return o;
    throw UnknownLabel("example '" + name + "' has no operator '" + n + "'");
}

ProductTensor table_from_entries(const std::string& label, std::size_t n, const std::vector<TableEntry>& entries) {
    ProductTensor t(label, n);
    for (const auto& e : entries) {
        if (e.i < 1 || e.j < 1 || e.i > n || e.j > n) throw ShapeMismatch("table entry out of range");
        t.at(e.i - 1, e.j - 1) = parse_vector(e.value, n);
    }
    return t;
}

Matrix matrix_from_images(std::size_t n, const std::vector<std::string>& images) {
    if (images.size() != n) throw ShapeMismatch("expected " + std::to_string(n) + " images");
    std::vector<Vector> cols;
    for (const auto& s : images) cols.push_back(parse_vector(s, n));
    return Matrix::from_columns(cols);
}

namespace {

ProductTensor bracket4(const std::string& e23 = "2*e4", const std::string& e32 = "-2*e4") {
    return table_from_entries("bracket", 4,
                              {{1, 2, "-e2"}, {1, 3, "-e3"}, {1, 4, "e4"}, {2, 1, "e2"}, {2, 3, e23},
                               {3, 1, "e3"}, {3, 2, e32}, {4, 1, "-e4"}});
}

ProductTensor bracket5() {
    return table_from_entries("bracket", 5, {{1, 4, "e2"}, {2, 5, "e3"}, {4, 1, "-e2"}, {5, 2, "-e3"}});
}

Matrix r4() { return matrix_from_images(4, {"e1 + a4/2*e4", "lambda1*e3", "0*e1", "0*e1"}); }
Matrix alpha4() { return matrix_from_images(4, {"e1 + a4*e4", "-e2 + b3*e3", "-e3", "-e4"}); }
Matrix alpha4_morphic() { return matrix_from_images(4, {"e1", "-e2 + b3*e3", "-e3", "e4"}); }
Matrix r5() { return matrix_from_images(5, {"e1 + a4*e4 + a5*e5", "b*e3", "0*e1", "-b/a5*e2", "0*e1"}); }
Matrix alpha5() { return matrix_from_images(5, {"e1", "e2", "e3", "lambda2*e3 + e4", "a4/a5*lambda2*e3 + e5"}); }
Matrix alpha5_commuting() {
    return matrix_from_images(5, {"e1", "e2", "e3", "lambda2*e3 + e4", "-a4/a5*lambda2*e3 + e5"});
}

HomAlgebra with_id(std::size_t n, std::vector<ProductTensor> ps) {
    return make_algebra(n, {}, std::move(ps), Matrix::identity(n));
}

HomAlgebra malcev4() { return with_id(4, {bracket4()}); }
HomAlgebra malcev5() { return with_id(5, {bracket5()}); }

HomAlgebra dualnum() { return with_id(2, {table_from_entries("star", 2, {{1, 1, "e1"}, {1, 2, "e2"}, {2, 1, "e2"}})}); }

HomAlgebra t2_upper() {
    return with_id(3, {table_from_entries("star", 3, {{1, 1, "e1"}, {1, 2, "e2"}, {2, 3, "e2"}, {3, 3, "e3"}})});
}

Matrix rb_t2() { return matrix_from_images(3, {"-s*e1 + e2", "-s*s*e1 + s*e2", "s*e1 - e2"}); }

HomAlgebra t2_pair() {
    std::vector<TableEntry> es;
    for (std::size_t off : {0u, 3u})
        for (auto [i, j, k] : std::vector<std::array<std::size_t, 3>>{{1, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 3, 3}})
            es.push_back({i + off, j + off, "e" + std::to_string(k + off)});
    return with_id(6, {table_from_entries("star", 6, es)});
}

Matrix block_pair(const Matrix& m) { return direct_sum(m, m); }

Matrix swap_pair() { return matrix_from_images(6, {"e4", "e5", "e6", "e1", "e2", "e3"}); }

HomAlgebra octonions() {
    std::vector<TableEntry> es;
    for (std::size_t i = 1; i <= 8; ++i) {
        es.push_back({1, i, "e" + std::to_string(i)});
        if (i > 1) es.push_back({i, 1, "e" + std::to_string(i)});
        if (i > 1) es.push_back({i, i, "-e1"});
    }
    const std::size_t triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (const auto& t : triples)
        for (int r = 0; r < 3; ++r) {
            std::size_t a = t[r] + 1, b = t[(r + 1) % 3] + 1, c = t[(r + 2) % 3] + 1;
            es.push_back({a, b, "e" + std::to_string(c)});
            es.push_back({b, a, "-e" + std::to_string(c)});
        }
    return with_id(8, {table_from_entries("star", 8, es)});
}

Matrix octonion_automorphism() {
    std::vector<std::string> imgs;
    for (int i = 1; i <= 8; ++i) imgs.push_back((i <= 4 ? "e" : "-e") + std::to_string(i));
    return matrix_from_images(8, imgs);
}

Matrix standard_form() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }

ExampleEntry build(const std::string& name) {
    ExampleEntry e;
    e.name = name;
    if (name == "malcev4") {
        e.description = "4-dimensional Malcev algebra, untwisted";
        e.algebra = malcev4();
        e.expected = {{"structure:hom-malcev", true}};
    } else if (name == "rb4") {
        e.description = "4-dimensional Malcev algebra with the Rota-Baxter operator R";
        e.algebra = malcev4();
        e.operators = {{"R", r4()}};
        e.expected = {{"structure:hom-malcev", true}, {"rota-baxter:hom-malcev:R", true}};
    } else if (name == "alpha4") {
        e.description = "4-dimensional Malcev algebra with the twisting map alpha";
        e.algebra = malcev4();
        e.operators = {{"alpha", alpha4()}, {"R", r4()}};
        e.expected = {{"morphism:alpha", false}, {"commuting:alpha:R", true}};
        e.notes = {"alpha is not multiplicative: alpha([e2,e3]) = -2*e4 but [alpha(e2), alpha(e3)] = 2*e4"};
    } else if (name == "malcev5") {
        e.description = "5-dimensional Malcev algebra, untwisted";
        e.algebra = malcev5();
        e.expected = {{"structure:hom-malcev", true}};
    } else if (name == "rb5") {
        e.description = "5-dimensional Malcev algebra with the Rota-Baxter operator R";
        e.algebra = malcev5();
        e.operators = {{"R", r5()}};
        e.expected = {{"structure:hom-malcev", true}, {"rota-baxter:hom-malcev:R", true}};
    } else if (name == "alpha5") {
        e.description = "5-dimensional Malcev algebra with the twisting map alpha";
        e.algebra = malcev5();
        e.operators = {{"alpha", alpha5()}, {"R", r5()}};
        e.expected = {{"morphism:alpha", true}, {"commuting:alpha:R", false}};
        e.notes = {"alpha is a morphism but does not commute with R: alpha(R(e1)) - R(alpha(e1)) = 2*a4*lambda2*e3"};
    } else if (name == "dualnum-assoc") {
        e.description = "dual numbers Q[x]/(x^2) with basis {1, x}";
        e.algebra = dualnum();
        e.expected = {{"structure:hom-alternative", true}, {"structure:hom-pre-lie:star=dot", true}};
    } else if (name == "rb-dualnum") {
        e.description = "dual numbers with R(1) = x, R(x) = 0";
        e.algebra = dualnum();
        e.operators = {{"R", matrix_from_images(2, {"e2", "0*e1"})}};
        e.expected = {{"structure:hom-alternative", true}, {"rota-baxter:hom-alternative:R", true}};
    } else if (name == "sympl2-abelian") {
        e.description = "2-dimensional abelian algebra, alpha = diag(t, 1/t), standard symplectic form";
        e.algebra = make_algebra(2, {"t"}, {ProductTensor("bracket", 2)}, matrix_from_images(2, {"t*e1", "1/t*e2"}));
        e.operators = {{"omega", standard_form()}};
        e.expected = {{"structure:hom-malcev", true}, {"symplectic:omega", true}};
    } else if (name == "alpha4-morphic") {
        e.description = "4-dimensional Malcev algebra with a multiplicative twisting map commuting with R";
        e.algebra = malcev4();
        e.operators = {{"alpha", alpha4_morphic()}, {"R", r4()}};
        e.expected = {{"morphism:alpha", true}, {"commuting:alpha:R", true}};
    } else if (name == "alpha5-commuting") {
        e.description = "5-dimensional Malcev algebra with a twisting map commuting with R";
        e.algebra = malcev5();
        e.operators = {{"alpha", alpha5_commuting()}, {"R", r5()}};
        e.expected = {{"morphism:alpha", true}, {"commuting:alpha:R", true}};
    } else if (name == "corrupted-malcev4") {
        e.description = "4-dimensional Malcev table with [e2,e3] changed to e4 (one entry only)";
        e.algebra = with_id(4, {bracket4("e4", "-2*e4")});
        e.expected = {{"structure:hom-malcev", false}};
    } else if (name == "lie2-omega") {
        e.description = "2-dimensional Lie algebra [e1,e2] = e1 with omega(e1,e2) = 1";
        e.algebra = with_id(2, {table_from_entries("bracket", 2, {{1, 2, "e1"}, {2, 1, "-e1"}})});
        e.operators = {{"omega", standard_form()}};
        e.expected = {{"structure:hom-malcev", true}, {"symplectic:omega", true}};
        e.notes = {"the cyclic sum of an antisymmetric bracket in dimension 2 is alternating, hence zero"};
    } else if (name == "t2-upper") {
        e.description = "upper triangular 2x2 matrices with basis e11, e12, e22 and a Rota-Baxter family";
        e.algebra = t2_upper();
        e.operators = {{"R", rb_t2()}};
        e.expected = {{"structure:hom-alternative", true}, {"rota-baxter:hom-alternative:R", true}};
    } else if (name == "t2-swap") {
        e.description = "two copies of the upper triangular matrices, alpha swapping them";
        e.algebra = t2_pair();
        e.operators = {{"alpha", swap_pair()}, {"R", block_pair(rb_t2())}};
        e.expected = {{"structure:hom-alternative", true},
                      {"morphism:alpha", true},
                      {"rota-baxter:hom-alternative:R", true},
                      {"commuting:alpha:R", true}};
    } else if (name == "octonions") {
        e.description = "octonions with an order-2 automorphism";
        e.algebra = octonions();
        e.operators = {{"alpha", octonion_automorphism()}};
        e.expected = {{"structure:hom-alternative", true}, {"morphism:alpha", true}};
    } else {
        throw UnknownExample("unknown example '" + name + "'");
    }
    return e;
}

} // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> n = {
        "malcev4",        "rb4",           "alpha4",           "malcev5",           "rb5",
        "alpha5",         "dualnum-assoc", "rb-dualnum",       "sympl2-abelian",    "alpha4-morphic",
        "alpha5-commuting", "corrupted-malcev4", "lie2-omega", "t2-upper",          "t2-swap",
        "octonions"};
    return n;
}

ExampleEntry load_example(const std::string& name, const std::map<std::string, mpq_class>& bindings) {
    ExampleEntry e = build(name);
    if (bindings.empty()) return e;
    e.algebra = substitute(e.algebra, bindings);
    for (auto& o : e.operators) o = substitute(o, bindings);
    return e;
}

std::map<std::string, mpq_class> parse_bindings(const std::string& text) {
    std::map<std::string, mpq_class> out;
    std::stringstream in(text);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw SyntaxError("expected name=value", pos);
        std::string k = item.substr(0, eq);
        k.erase(0, k.find_first_not_of(' '));
        k.erase(k.find_last_not_of(' ') + 1);
        if (!is_parameter_name(k)) throw SyntaxError("bad parameter name '" + k + "'", pos);
        Scalar v;
        try {
            v = parse_scalar(item.substr(eq + 1), {});
        } catch (const SyntaxError& e) {
            throw SyntaxError("bad value for '" + k + "'", pos + eq + 1 + e.position());
        } catch (const UnknownParameter&) {
            throw SyntaxError("value for '" + k + "' is not a number", pos + eq + 1);
        }
        out[k] = v.constant_value();
        pos += item.size() + 1;
    }
    return out;
}

const std::vector<std::string>& reference_table_names() {
    static const std::vector<std::string> n = {"malcev4-dot",           "malcev4-twisted-bracket",
                                               "malcev4-twisted-dot",   "malcev4-twisted-tright",
                                               "malcev4-twisted-tleft", "malcev5-dot",
                                               "malcev5-twisted-bracket", "malcev5-twisted-dot",
                                               "malcev5-twisted-tright",  "malcev5-twisted-tleft"};
    return n;
}

ProductTensor reference_table(const std::string& name) {
    // alpha(e2) = -e2 + b3*e3 in the 4-dimensional tables.
    const std::string alpha_e2 = "-e2 + b3*e3", minus_alpha_e2 = "e2 - b3*e3";
    if (name == "malcev4-dot")
        return table_from_entries("dot", 4,
                                  {{1, 1, "-a4/2*e4"}, {1, 2, "-e2"}, {1, 3, "-e3"}, {1, 4, "e4"},
                                   {2, 1, "lambda1*e3"}, {2, 2, "-2*lambda1*e4"}});
    if (name == "malcev4-twisted-bracket")
        return table_from_entries("bracket", 4,
                                  {{1, 2, minus_alpha_e2}, {1, 3, "e3"}, {1, 4, "-e4"}, {2, 1, alpha_e2},
                                   {2, 3, "-2*e4"}, {3, 1, "-e3"}, {3, 2, "2*e4"}, {4, 1, "e4"}});
    if (name == "malcev4-twisted-dot")
        return table_from_entries("dot", 4,
                                  {{1, 1, "a4/2*e4"}, {1, 2, minus_alpha_e2}, {1, 3, "e3"}, {1, 4, "-e4"},
                                   {2, 1, "-lambda1*e3"}, {2, 2, "2*lambda1*e4"}});
    if (name == "malcev4-twisted-tright")
        return table_from_entries("tright", 4, {{1, 2, "lambda1*e3"}, {2, 1, "-lambda1*e3"}});
    if (name == "malcev4-twisted-tleft")
        return table_from_entries("tleft", 4,
                                  {{1, 1, "a4/2*e4"}, {1, 2, minus_alpha_e2}, {1, 3, "e3"}, {1, 4, "-e4"}});
    if (name == "malcev5-dot" || name == "malcev5-twisted-dot")
        return table_from_entries("dot", 5,
                                  {{1, 1, "-a4*e2"}, {1, 2, "-a5*e3"}, {1, 4, "e2"}, {4, 5, "-b/a5*e3"}});
    if (name == "malcev5-twisted-bracket") {
        ProductTensor t = bracket5();
        return t;
    }
    if (name == "malcev5-twisted-tright")
        return table_from_entries("tright", 5, {{1, 4, "b*e3"}, {4, 1, "-b*e3"}});
    if (name == "malcev5-twisted-tleft")
        return table_from_entries("tleft", 5,
                                  {{1, 1, "-a4*e2"}, {1, 2, "-a5*e3"}, {1, 4, "e2"}, {1, 5, "-b*a4/a5*e3"}});
    throw UnknownLabel("no reference table '" + name + "'");
}

} // namespace homalg
