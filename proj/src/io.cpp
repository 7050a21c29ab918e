#include "homalg/io.hpp"

#include "homalg/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homalg {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        auto close = msg.find("] ");
        if (close != std::string::npos) msg = msg.substr(close + 2);
        throw SyntaxError("invalid JSON: " + msg, e.byte);
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SyntaxError(std::string("missing field '") + key + "'", 0);
    return j.at(key);
}

class ScalarReader {
public:
    explicit ScalarReader(const json& doc) {
        if (doc.is_object() && doc.contains("params")) {
            restricted_ = true;
            for (const auto& p : doc.at("params")) params_.push_back(p.get<std::string>());
        }
    }
    const std::vector<std::string>& params() const { return params_; }

    Scalar scalar(const json& j) const {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (!j.is_string()) throw SyntaxError("scalar must be a string or an integer", 0);
        const std::string s = j.get<std::string>();
        return restricted_ ? parse_scalar(s, params_) : parse_scalar(s);
    }
    Vector vector(const json& j, std::size_t n) const {
        if (!j.is_array() || j.size() != n)
            throw ShapeMismatch("expected a coefficient array of length " + std::to_string(n));
        Vector v;
        for (const auto& x : j) v.push_back(scalar(x));
        return v;
    }
    Matrix matrix(const json& j, std::size_t rows, std::size_t cols) const {
        if (!j.is_array() || j.size() != rows) throw ShapeMismatch("expected " + std::to_string(rows) + " matrix rows");
        std::vector<Vector> rs;
        for (const auto& r : j) rs.push_back(vector(r, cols));
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = rs[i][k];
        return m;
    }
    Matrix square(const json& j) const {
        if (!j.is_array() || j.empty() || !j[0].is_array()) throw ShapeMismatch("expected a non-empty matrix");
        return matrix(j, j.size(), j[0].size());
    }

private:
    bool restricted_ = false;
    std::vector<std::string> params_;
};

std::size_t size_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        throw SyntaxError(std::string("field '") + key + "' must be a non-negative integer", 0);
    return v.get<std::size_t>();
}

HomAlgebra algebra_of(const json& j) {
    ScalarReader rd(j);
    std::size_t n = size_field(j, "dim");
    Matrix twist = j.contains("twist") ? rd.matrix(j.at("twist"), n, n) : Matrix::identity(n);
    std::vector<ProductTensor> ps;
    for (const auto& [label, table] : field(j, "products").items()) {
        if (!table.is_array() || table.size() != n)
            throw ShapeMismatch("product '" + label + "' needs " + std::to_string(n) + " rows");
        std::vector<Vector> entries;
        for (const auto& row : table) {
            if (!row.is_array() || row.size() != n)
                throw ShapeMismatch("product '" + label + "' needs " + std::to_string(n) + " columns");
            for (const auto& c : row) entries.push_back(rd.vector(c, n));
        }
        ps.emplace_back(label, n, std::move(entries));
    }
    return make_algebra(n, rd.params(), std::move(ps), std::move(twist));
}

LinearOperator operator_of(const json& j, const std::string& fallback) {
    ScalarReader rd(j);
    LinearOperator op;
    op.name = j.contains("name") ? j.at("name").get<std::string>() : fallback;
    op.matrix = rd.square(field(j, "matrix"));
    return op;
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vector_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar_json(s));
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

json algebra_json(const HomAlgebra& alg) {
    json j;
    j["dim"] = alg.dim();
    j["params"] = alg.params();
    j["twist"] = matrix_json(alg.twist());
    json ps = json::object();
    for (const auto& [label, t] : alg.products()) {
        json rows = json::array();
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < alg.dim(); ++k) row.push_back(vector_json(t.at(i, k)));
            rows.push_back(row);
        }
        ps[label] = rows;
    }
    j["products"] = ps;
    return j;
}

json operator_json(const LinearOperator& op) {
    json j;
    j["name"] = op.name;
    std::set<std::string> vars = variables(op.matrix);
    j["params"] = std::vector<std::string>(vars.begin(), vars.end());
    j["matrix"] = matrix_json(op.matrix);
    return j;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string grid(const std::string& corner, const std::vector<std::string>& cols, const std::vector<std::string>& rows,
                 const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> w(cols.size() + 1, corner.size());
    for (const auto& r : rows) w[0] = std::max(w[0], r.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        w[c + 1] = cols[c].size();
        for (const auto& row : cells) w[c + 1] = std::max(w[c + 1], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::string& head, const std::vector<std::string>& xs) {
        std::string s = pad(head, w[0]);
        for (std::size_t c = 0; c < xs.size(); ++c) s += " | " + pad(xs[c], w[c + 1]);
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << "\n";
    };
    line(corner, cols);
    std::string rule(w[0], '-');
    for (std::size_t c = 0; c < cols.size(); ++c) rule += "-+-" + std::string(w[c + 1], '-');
    os << rule << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) line(rows[r], cells[r]);
    return os.str();
}

} // namespace

DocKind detect_kind(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw SyntaxError("expected a JSON object", 0);
    if (j.contains("algebra")) return DocKind::Example;
    if (j.contains("actions")) return DocKind::Module;
    if (j.contains("products")) return DocKind::Algebra;
    if (j.contains("matrix")) return DocKind::Operator;
    throw SyntaxError("not an algebra, module, operator or example document", 0);
}

HomAlgebra algebra_from_json(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("algebra")) return algebra_of(j.at("algebra"));
    return algebra_of(j);
}

ModuleSpec module_from_json(const std::string& text) {
    json j = parse(text);
    ScalarReader rd(j);
    std::size_t m = size_field(j, "dim");
    std::size_t n = size_field(j, "algebra_dim");
    Matrix beta = j.contains("beta") ? rd.matrix(j.at("beta"), m, m) : Matrix::identity(m);
    std::map<std::string, std::vector<Matrix>> acts;
    for (const auto& [label, mats] : field(j, "actions").items()) {
        if (!mats.is_array() || mats.size() != n)
            throw ShapeMismatch("action '" + label + "' needs " + std::to_string(n) + " matrices");
        std::vector<Matrix> ms;
        for (const auto& x : mats) ms.push_back(rd.matrix(x, m, m));
        acts[label] = std::move(ms);
    }
    return make_module(n, m, std::move(beta), std::move(acts), rd.params());
}

LinearOperator operator_from_json(const std::string& text, const std::string& name) {
    json j = parse(text);
    if (j.is_object() && j.contains("operators")) {
        const json& ops = j.at("operators");
        if (!name.empty()) {
            if (!ops.contains(name)) throw UnknownLabel("document has no operator '" + name + "'");
            return operator_of(ops.at(name), name);
        }
        if (ops.size() != 1) throw UnknownLabel("document has several operators; choose one by name");
        return operator_of(ops.begin().value(), ops.begin().key());
    }
    LinearOperator op = operator_of(j, name.empty() ? "T" : name);
    if (!name.empty() && j.contains("name") && op.name != name)
        throw UnknownLabel("operator is named '" + op.name + "', not '" + name + "'");
    return op;
}

ExampleEntry example_from_json(const std::string& text) {
    json j = parse(text);
    ExampleEntry e;
    e.name = j.value("name", "");
    e.description = j.value("description", "");
    e.algebra = algebra_of(field(j, "algebra"));
    if (j.contains("operators"))
        for (const auto& [name, o] : j.at("operators").items()) e.operators.push_back(operator_of(o, name));
    if (j.contains("expected"))
        for (const auto& [k, v] : j.at("expected").items()) e.expected[k] = v.get<bool>();
    if (j.contains("notes"))
        for (const auto& n : j.at("notes")) e.notes.push_back(n.get<std::string>());
    return e;
}

std::string to_json(const HomAlgebra& alg) { return algebra_json(alg).dump(2); }

std::string to_json(const ModuleSpec& mod) {
    json j;
    j["dim"] = mod.dim();
    j["algebra_dim"] = mod.algebra_dim();
    j["params"] = mod.params();
    j["beta"] = matrix_json(mod.twist());
    json acts = json::object();
    for (const auto& [label, ms] : mod.actions()) {
        json a = json::array();
        for (const auto& m : ms) a.push_back(matrix_json(m));
        acts[label] = a;
    }
    j["actions"] = acts;
    return j.dump(2);
}

std::string to_json(const LinearOperator& op) { return operator_json(op).dump(2); }

std::string to_json(const ExampleEntry& e) {
    json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["algebra"] = algebra_json(e.algebra);
    json ops = json::object();
    for (const auto& op : e.operators) {
        json o = operator_json(op);
        o.erase("name");
        ops[op.name] = o;
    }
    j["operators"] = ops;
    json ex = json::object();
    for (const auto& [k, v] : e.expected) ex[k] = v;
    j["expected"] = ex;
    j["notes"] = e.notes;
    return j.dump(2);
}

std::string to_json(const Report& r) {
    json j;
    j["verdict"] = r.pass() ? "pass" : "fail";
    j["summary"] = r.summary();
    j["identities"] = r.identities;
    j["tuples"] = r.tuples;
    json vs = json::array();
    for (const auto& v : r.violations) {
        json x;
        x["identity"] = v.identity_id;
        x["tuple"] = v.tuple_names;
        x["residual"] = render_residual(v);
        vs.push_back(x);
    }
    j["violations"] = vs;
    j["assumptions"] = r.assumptions;
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string render_table(const HomAlgebra& alg, const std::string& label) {
    const ProductTensor& t = alg.product(label);
    std::size_t n = alg.dim();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    std::vector<std::vector<std::string>> cells(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) cells[i].push_back(render_vector(t.at(i, k)));
    return grid(label, names, names, cells);
}

std::string render_tables(const HomAlgebra& alg) {
    std::string out;
    for (const auto& l : alg.labels()) out += (out.empty() ? "" : "\n") + render_table(alg, l);
    return out;
}

std::string render_matrix(const Matrix& m) {
    std::vector<std::string> cols, rows;
    for (std::size_t k = 0; k < m.cols(); ++k) cols.push_back(std::to_string(k + 1));
    std::vector<std::vector<std::string>> cells(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(std::to_string(i + 1));
        for (std::size_t k = 0; k < m.cols(); ++k) cells[i].push_back(m(i, k).to_string());
    }
    return grid("", cols, rows, cells);
}

std::string render_module(const ModuleSpec& mod) {
    std::ostringstream os;
    os << "beta:\n" << render_matrix(mod.twist());
    for (const auto& [label, ms] : mod.actions())
        for (std::size_t i = 0; i < ms.size(); ++i) os << "\n" << label << "(e" << i + 1 << "):\n" << render_matrix(ms[i]);
    return os.str();
}

std::string render_report(const Report& r, std::size_t max_violations) {
    std::ostringstream os;
    os << r.summary() << "\n";
    std::size_t shown = std::min(max_violations, r.violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const Violation& v = r.violations[i];
        os << "  " << v.identity_id << " at " << render_tuple(v) << ": " << render_residual(v) << "\n";
    }
    if (shown < r.violations.size()) os << "  ... " << r.violations.size() - shown << " more\n";
    for (const auto& a : r.assumptions) os << "assuming " << a << " != 0\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace homalg
