#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kgfam/charsys.hpp"
#include "kgfam/family.hpp"
#include "kgfam/golden.hpp"
#include "kgfam/nilalgebra.hpp"
#include "kgfam/render.hpp"
#include "kgfam/serialize.hpp"
#include "kgfam/verify.hpp"

namespace py = pybind11;
using namespace kgfam;

namespace {

using Row = std::tuple<Cplx, Cplx, Cplx>;

DirectionTable<Cplx> make_table(int dim, const std::vector<Row>& rows)
{
    DirectionTable<Cplx> t{dim, {}};
    for (const auto& [m, g, d] : rows) {
        t.rows.push_back({m, g, d});
    }
    return t;
}

Branch branch_of(const std::string& s)
{
    if (s == "plus") {
        return Branch::plus;
    }
    if (s == "minus") {
        return Branch::minus;
    }
    throw py::value_error("branch must be 'plus' or 'minus'");
}

// [(exponents, (re, im))] with "p/q" strings
py::list xi_terms(const XiPoly& p)
{
    py::list out;
    for (const auto& [e, c] : p.terms()) {
        out.append(py::make_tuple(py::tuple(py::cast(e)),
                                  py::make_tuple(format_rational(c.real()), format_rational(c.imag()))));
    }
    return out;
}

std::string generate_json(const std::string& spec_text, std::optional<std::size_t> order,
                          std::optional<std::string> branch, std::optional<std::string> mode)
{
    SpecOverrides o;
    o.R = order;
    if (branch) {
        o.branch = branch_of(*branch);
    }
    if (mode) {
        o.mode = *mode == "rational" ? Mode::rational : Mode::floating;
    }
    const auto spec = parse_problem_spec(json::parse(spec_text), o);
    const auto build = [&](auto tag) {
        using S = decltype(tag);
        FamilyDocument<S> doc;
        const S mass = spec.mass_as<S>();
        const auto table = spec.table_as<S>();
        doc.dim = spec.dim;
        doc.mass = mass;
        doc.branch = spec.branch;
        doc.k = solve_chain(mass, table, spec.branch, spec.R).k;
        doc.solutions = build_solutions(mass, table, spec.branch, spec.R);
        return family_to_json(doc).dump();
    };
    return spec.mode == Mode::rational ? build(QCplx{}) : build(Cplx{});
}

std::string verify_json(const std::string& doc_text, double tol, bool numeric, std::size_t points, double h,
                        std::uint64_t seed, double numeric_tol)
{
    const VerifyOptions opts{tol, numeric, points, h, seed, numeric_tol};
    const json j = json::parse(doc_text);
    const auto run = [&](const auto& doc) {
        json reports = json::array();
        for (const auto& u : doc.solutions) {
            reports.push_back(report_to_json(verify_solution(u, doc.mass, Signature::klein_gordon(doc.dim), opts)));
        }
        return reports.dump();
    };
    return document_mode(j) == Mode::rational ? run(family_from_json<QCplx>(j)) : run(family_from_json<Cplx>(j));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Polynomial-exponential solution families of the Klein-Gordon equation";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<DegenerateK0>(m, "DegenerateK0", PyExc_ArithmeticError);
    py::register_exception<NonRationalRoot>(m, "NonRationalRoot", PyExc_ArithmeticError);
    py::register_exception<OrderMismatch>(m, "OrderMismatch", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

    m.def("nil_mul", [](const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
        const auto p = NilElement<Cplx>(a) * NilElement<Cplx>(b);
        return std::vector<Cplx>(p.coeffs().begin(), p.coeffs().end());
    });
    m.def("nil_exp", [](const std::vector<Cplx>& a) {
        const auto e = nil_exp(NilElement<Cplx>(a));
        return std::vector<Cplx>(e.coeffs().begin(), e.coeffs().end());
    });

    m.def(
        "solve_chain",
        [](Cplx mass, const std::vector<Row>& rows, int dim, const std::string& branch, std::size_t R) {
            return solve_chain(mass, make_table(dim, rows), branch_of(branch), R).k;
        },
        py::arg("mass"), py::arg("rows"), py::arg("dim") = 4, py::arg("branch") = "plus", py::arg("R"));

    m.def(
        "char_residual",
        [](Cplx mass, const std::vector<Row>& rows, int dim, const std::string& branch, std::size_t R) {
            const auto table = make_table(dim, rows);
            const auto chain = solve_chain(mass, table, branch_of(branch), R);
            return char_residual_relative(basis_from_chain(chain, table), mass);
        },
        py::arg("mass"), py::arg("rows"), py::arg("dim") = 4, py::arg("branch") = "plus", py::arg("R"));

    m.def(
        "exp_components",
        [](Cplx mass, const std::vector<Row>& rows, const std::vector<double>& point, int dim,
           const std::string& branch, std::size_t R) {
            const auto table = make_table(dim, rows);
            const auto chain = solve_chain(mass, table, branch_of(branch), R);
            return exp_component_path(chain, table, point, R);
        },
        py::arg("mass"), py::arg("rows"), py::arg("point"), py::arg("dim") = 4, py::arg("branch") = "plus",
        py::arg("R"));

    m.def("atilde", [](std::size_t R) {
        py::list out;
        for (const auto& p : atilde_recurrence(R).polys) {
            out.append(xi_terms(p));
        }
        return out;
    });
    m.def("partition_oracle", [](std::size_t r) { return xi_terms(partition_oracle(r)); });
    m.def("partition_count", &partition_count);
    m.def(
        "render_atilde",
        [](std::size_t r, bool latex) {
            return render_atilde(atilde_recurrence(r).polys[r], latex ? Notation::latex : Notation::text);
        },
        py::arg("r"), py::arg("latex") = false);
    m.def(
        "render_resolvent",
        [](std::size_t r, bool latex) {
            return render_resolvent(resolvent_expand(r)[r], latex ? Notation::latex : Notation::text);
        },
        py::arg("r"), py::arg("latex") = false);
    m.def("crosscheck", [](std::size_t R) {
        const auto fam = atilde_recurrence(R);
        const auto res = resolvent_expand(R);
        for (std::size_t r = 0; r <= R; ++r) {
            if (!(apply_P(res[r]) == fam.polys[r]) || !(partition_oracle(r, xi_vars(R)) == fam.polys[r])) {
                return false;
            }
        }
        return true;
    });

    m.def(
        "adjudicate_radicand",
        [](Cplx mass, const Row& row0, int dim) {
            const auto v = adjudicate_radicand(mass, {std::get<0>(row0), std::get<1>(row0), std::get<2>(row0)}, dim);
            py::dict d;
            d["subtracted_residual"] = v.subtracted_residual;
            d["added_residual"] = v.added_residual;
            d["subtracted_passes"] = v.subtracted_passes;
            d["added_passes"] = v.added_passes;
            d["text"] = v.text;
            return d;
        },
        py::arg("mass"), py::arg("row0") = Row{}, py::arg("dim") = 4);

    m.def("_generate_json", &generate_json, py::arg("spec"), py::arg("order") = py::none(),
          py::arg("branch") = py::none(), py::arg("mode") = py::none());
    m.def("_verify_json", &verify_json, py::arg("doc"), py::arg("tol") = 1e-10, py::arg("numeric") = false,
          py::arg("points") = 20, py::arg("h") = 1e-3, py::arg("seed") = 42, py::arg("numeric_tol") = 1e-6);
}
