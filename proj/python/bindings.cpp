#include "homalg/checkers.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity/catalog.hpp"
#include "homalg/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace homalg;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows rows_of(const Matrix& m) {
    Rows r(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).to_string();
    return r;
}

Matrix matrix_of(const Rows& rows, const std::vector<std::string>& params) {
    std::vector<Vector> vs;
    for (const auto& row : rows) {
        Vector v;
        for (const auto& s : row) v.push_back(params.empty() ? parse_scalar(s) : parse_scalar(s, params));
        vs.push_back(std::move(v));
    }
    if (!vs.empty())
        for (const auto& v : vs)
            if (v.size() != vs.front().size()) throw ShapeMismatch("ragged matrix rows");
    return Matrix::from_rows(vs);
}

std::map<std::string, mpq_class> bindings_of(const std::map<std::string, std::string>& b) {
    std::map<std::string, mpq_class> out;
    for (const auto& [k, v] : b) {
        mpq_class q;
        if (q.set_str(v, 10) != 0) throw SyntaxError("invalid rational '" + v + "'", 0);
        q.canonicalize();
        out[k] = q;
    }
    return out;
}

CheckOptions options(bool stop_early, unsigned threads) {
    CheckOptions o;
    o.stop_early = stop_early;
    o.threads = threads;
    return o;
}

py::dict violation_dict(const Violation& v) {
    py::dict d;
    d["identity"] = v.identity_id;
    d["tuple"] = render_tuple(v);
    d["indices"] = v.tuple;
    d["residual"] = render_residual(v);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact checks and constructions for Hom-Malcev and related algebras";
    m.attr("__version__") = "0.1.0";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<MathError>(m, "MathError", error.ptr());

    py::class_<LinearOperator>(m, "Operator")
        .def(py::init([](std::string name, const Rows& rows, std::vector<std::string> params) {
                 return LinearOperator{std::move(name), matrix_of(rows, params)};
             }),
             py::arg("name"), py::arg("rows"), py::arg("params") = std::vector<std::string>{})
        .def_readonly("name", &LinearOperator::name)
        .def_property_readonly("rows", [](const LinearOperator& op) { return rows_of(op.matrix); })
        .def_property_readonly("dim", [](const LinearOperator& op) { return op.matrix.cols(); })
        .def("to_json", [](const LinearOperator& op) { return to_json(op); })
        .def("render", [](const LinearOperator& op) { return render_matrix(op.matrix); })
        .def_static("from_json", &operator_from_json, py::arg("text"), py::arg("name") = "")
        .def("__repr__", [](const LinearOperator& op) {
            return "<Operator " + op.name + " " + std::to_string(op.matrix.rows()) + "x" +
                   std::to_string(op.matrix.cols()) + ">";
        });

    py::class_<HomAlgebra>(m, "Algebra")
        .def_property_readonly("dim", &HomAlgebra::dim)
        .def_property_readonly("params", &HomAlgebra::params)
        .def_property_readonly("labels", &HomAlgebra::labels)
        .def_property_readonly("twist", [](const HomAlgebra& a) { return rows_of(a.twist()); })
        .def("has_product", &HomAlgebra::has_product)
        .def(
            "product",
            [](const HomAlgebra& a, const std::string& label, std::size_t i, std::size_t j) {
                if (i < 1 || j < 1 || i > a.dim() || j > a.dim()) throw py::index_error("basis index out of range");
                return render_vector(a.product(label).at(i - 1, j - 1));
            },
            py::arg("label"), py::arg("i"), py::arg("j"), "e_i o e_j with 1-based indices")
        .def("table", &render_table)
        .def("tables", &render_tables)
        .def("to_json", [](const HomAlgebra& a) { return to_json(a); })
        .def_static("from_json", &algebra_from_json)
        .def("substitute",
             [](const HomAlgebra& a, const std::map<std::string, std::string>& b) {
                 return substitute(a, bindings_of(b));
             })
        .def("__repr__", [](const HomAlgebra& a) {
            std::string s = "<Algebra dim=" + std::to_string(a.dim());
            for (const auto& l : a.labels()) s += " " + l;
            return s + ">";
        });

    py::class_<ModuleSpec>(m, "Module")
        .def_property_readonly("dim", &ModuleSpec::dim)
        .def_property_readonly("algebra_dim", &ModuleSpec::algebra_dim)
        .def_property_readonly("labels", &ModuleSpec::labels)
        .def_property_readonly("twist", [](const ModuleSpec& mod) { return rows_of(mod.twist()); })
        .def("action",
             [](const ModuleSpec& mod, const std::string& label) {
                 std::vector<Rows> out;
                 for (const auto& a : mod.action(label)) out.push_back(rows_of(a));
                 return out;
             })
        .def("render", &render_module)
        .def("to_json", [](const ModuleSpec& mod) { return to_json(mod); })
        .def_static("from_json", &module_from_json)
        .def("__repr__", [](const ModuleSpec& mod) {
            return "<Module dim=" + std::to_string(mod.dim()) + " over " + std::to_string(mod.algebra_dim()) + ">";
        });

    py::class_<Report>(m, "Report")
        .def_property_readonly("passed", &Report::pass)
        .def_readonly("identities", &Report::identities)
        .def_readonly("tuples", &Report::tuples)
        .def_readonly("assumptions", &Report::assumptions)
        .def_readonly("notes", &Report::notes)
        .def_property_readonly("violations",
                               [](const Report& r) {
                                   py::list l;
                                   for (const auto& v : r.violations) l.append(violation_dict(v));
                                   return l;
                               })
        .def("summary", &Report::summary)
        .def("render", &render_report, py::arg("max_violations") = 20)
        .def("to_json", [](const Report& r) { return to_json(r); })
        .def("__bool__", &Report::pass)
        .def("__repr__", [](const Report& r) { return "<Report " + r.summary() + ">"; });

    py::class_<ExampleEntry>(m, "Example")
        .def_readonly("name", &ExampleEntry::name)
        .def_readonly("description", &ExampleEntry::description)
        .def_readonly("algebra", &ExampleEntry::algebra)
        .def_readonly("operators", &ExampleEntry::operators)
        .def_readonly("expected", &ExampleEntry::expected)
        .def_readonly("notes", &ExampleEntry::notes)
        .def("op", &ExampleEntry::op, py::return_value_policy::copy)
        .def(
            "verify",
            [](const ExampleEntry& e, const std::string& key, bool stop_early, unsigned threads) {
                return run_expectation(e, key, options(stop_early, threads));
            },
            py::arg("key"), py::arg("stop_early") = false, py::arg("threads") = 0)
        .def("to_json", [](const ExampleEntry& e) { return to_json(e); })
        .def("__repr__", [](const ExampleEntry& e) { return "<Example " + e.name + ">"; });

    m.def("example_names", &example_names);
    m.def(
        "load_example",
        [](const std::string& name, const std::map<std::string, std::string>& b) {
            return load_example(name, bindings_of(b));
        },
        py::arg("name"), py::arg("bindings") = std::map<std::string, std::string>{});
    m.def("structure_classes", &structure_classes);
    m.def("module_classes", &module_classes);
    m.def("derive_rules", &derive_rule_names);
    m.def("split_rules", &split_rule_names);

    m.def(
        "check_structure",
        [](const HomAlgebra& a, const std::string& cls, bool stop_early, unsigned threads) {
            return check_structure(a, cls, options(stop_early, threads));
        },
        py::arg("algebra"), py::arg("cls"), py::arg("stop_early") = false, py::arg("threads") = 0);
    m.def(
        "check_module",
        [](const HomAlgebra& a, const ModuleSpec& mod, const std::string& cls, bool stop_early, unsigned threads) {
            return check_module(a, mod, cls, options(stop_early, threads));
        },
        py::arg("algebra"), py::arg("module"), py::arg("cls"), py::arg("stop_early") = false,
        py::arg("threads") = 0);
    m.def(
        "check_rota_baxter",
        [](const HomAlgebra& a, const std::string& cls, const LinearOperator& R, bool stop_early, unsigned threads) {
            return check_rota_baxter(a, cls, R, options(stop_early, threads));
        },
        py::arg("algebra"), py::arg("cls"), py::arg("op"), py::arg("stop_early") = false, py::arg("threads") = 0);
    m.def(
        "check_o_operator",
        [](const HomAlgebra& a, const ModuleSpec& mod, const std::string& cls, const LinearOperator& T,
           bool stop_early, unsigned threads) { return check_o_operator(a, mod, cls, T, options(stop_early, threads)); },
        py::arg("algebra"), py::arg("module"), py::arg("cls"), py::arg("op"), py::arg("stop_early") = false,
        py::arg("threads") = 0);
    m.def("check_commuting", &check_commuting);
    m.def("check_symplectic", [](const HomAlgebra& a, const LinearOperator& w) { return check_symplectic(a, w); });
    m.def("check_multiplicative", &check_multiplicative);
    m.def("check_morphism", &check_morphism, py::arg("op"), py::arg("source"), py::arg("target"));

    m.def("derive", [](const HomAlgebra& a, const std::string& rule) {
        return derive_structure(a, parse_derive_rule(rule));
    });
    m.def("split", [](const HomAlgebra& a, const std::string& rule, const LinearOperator& R) {
        return rb_split(a, parse_split_rule(rule), R);
    });
    m.def("commuting_split", &commuting_rb_split);
    m.def("twist", &yau_twist, py::arg("algebra"), py::arg("op"));
    m.def("twist_module", &twist_module);
    m.def("adjoint", &adjoint);
    m.def("coadjoint", &coadjoint);
    m.def("dual", &dual_rep);
    m.def("semidirect", &semidirect);
    m.def("o_induced", &o_induced);
    m.def("transport", &transport);
    m.def("symplectic_product", &symplectic_product);
}
