// kgfam: generate, verify and cross-check polynomial-exponential solution
// families of the Klein-Gordon equation.
//
// Exit codes: 0 ok, 1 unexpected error, 2 unreadable or invalid input,
// 3 degenerate k0, 4 verification failure or mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kgfam/charsys.hpp"
#include "kgfam/errors.hpp"
#include "kgfam/family.hpp"
#include "kgfam/golden.hpp"
#include "kgfam/render.hpp"
#include "kgfam/serialize.hpp"
#include "kgfam/verify.hpp"

using namespace kgfam;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitFailed = 4;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw SpecError(path + ": cannot open");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

json parse_json(const std::string& text, const std::string& path)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(path + ": " + e.what());
    }
}

template <Scalar S>
FamilyDocument<S> generate_family(const ProblemSpec& spec)
{
    const S mass = spec.mass_as<S>();
    const auto table = spec.table_as<S>();
    FamilyDocument<S> doc;
    doc.dim = spec.dim;
    doc.mass = mass;
    doc.branch = spec.branch;
    doc.k = solve_chain(mass, table, spec.branch, spec.R).k;
    doc.solutions = build_solutions(mass, table, spec.branch, spec.R);
    return doc;
}

std::string scalar_text(const Cplx& z, Notation) { return format_cplx(z); }

std::string scalar_text(const QCplx& z, Notation n)
{
    return render_x_poly(SparsePoly<QCplx>::constant(4, z), n);
}

template <Scalar S>
std::string family_text(const FamilyDocument<S>& doc, Notation n)
{
    const auto fam = atilde_recurrence(doc.solutions.empty() ? 0 : doc.solutions.back().r);
    std::ostringstream os;
    const LinearForm<S> xi0 = doc.solutions.empty() ? LinearForm<S>{} : doc.solutions.front().xi0;
    if (n == Notation::latex) {
        os << "% dim = " << doc.dim << ", branch = " << to_string(doc.branch) << "\n";
        os << "\\begin{align*}\n";
        for (std::size_t r = 0; r < doc.k.size(); ++r) {
            os << "k_{" << r << "} &= " << scalar_text(doc.k[r], n) << " \\\\\n";
        }
        os << "\\xi_{0} &= " << render_form(xi0, n) << " \\\\\n";
        for (const auto& u : doc.solutions) {
            os << "U_{" << u.r << "} &= \\left(" << render_atilde(fam.polys[u.r], n) << "\\right) e^{\\xi_{0}}"
               << " = \\left(" << render_x_poly(u.poly, n) << "\\right) e^{\\xi_{0}}";
            os << (&u == &doc.solutions.back() ? "\n" : " \\\\\n");
        }
        os << "\\end{align*}\n";
        return os.str();
    }
    os << "dim = " << doc.dim << ", branch = " << to_string(doc.branch) << "\n";
    for (std::size_t r = 0; r < doc.k.size(); ++r) {
        os << "k" << r << " = " << scalar_text(doc.k[r], n) << "\n";
    }
    os << "ξ0 = " << render_form(xi0, n) << "\n";
    for (const auto& u : doc.solutions) {
        os << "U" << u.r << " = (" << render_atilde(fam.polys[u.r], n) << ") exp(ξ0)\n";
        os << "   = (" << render_x_poly(u.poly, n) << ") exp(ξ0)\n";
    }
    return os.str();
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw std::runtime_error(out + ": cannot write");
    }
    f << text;
}

template <Scalar S>
std::string render_document(const FamilyDocument<S>& doc, const std::string& format)
{
    if (format == "json") {
        return family_to_json(doc).dump(2) + "\n";
    }
    return family_text(doc, format == "latex" ? Notation::latex : Notation::text);
}

template <Scalar S>
json verify_family(const FamilyDocument<S>& doc, const VerifyOptions& opts, bool& all_passed)
{
    json reports = json::array();
    const auto sig = Signature::klein_gordon(doc.dim);
    for (const auto& u : doc.solutions) {
        const auto rep = verify_solution(u, doc.mass, sig, opts);
        all_passed = all_passed && rep.passed;
        reports.push_back(report_to_json(rep));
    }
    return reports;
}

int run_crosscheck(std::size_t R)
{
    const auto fam = atilde_recurrence(R);
    const auto res = resolvent_expand(R);
    const std::size_t nvars = xi_vars(R);
    int mismatches = 0;
    std::cout << "r  terms  p(r)  recurrence=resolvent  recurrence=partitions\n";
    for (std::size_t r = 0; r <= R; ++r) {
        const bool via_p = apply_P(res[r]) == fam.polys[r];
        const bool via_partitions = partition_oracle(r, nvars) == fam.polys[r];
        const bool counts = fam.polys[r].term_count() == partition_count(r);
        mismatches += (via_p ? 0 : 1) + (via_partitions ? 0 : 1) + (counts ? 0 : 1);
        std::cout << r << "  " << fam.polys[r].term_count() << "  " << partition_count(r) << "  "
                  << (via_p ? "yes" : "NO") << "  " << (via_partitions ? "yes" : "NO") << "\n";
    }
    std::cout << mismatches << " discrepancies\n";
    return mismatches == 0 ? 0 : kExitFailed;
}

int run_reproduce()
{
    const auto& g = golden_corpus();
    const auto fam = atilde_recurrence(g.nvars);
    const auto res = resolvent_expand(g.nvars);
    int mismatches = 0;
    const auto mark = [&](bool ok) {
        mismatches += ok ? 0 : 1;
        return ok ? "  [match]" : "  [MISMATCH]";
    };

    std::cout << "Polynomial factors of U_r = At_r exp(ξ0):\n";
    for (std::size_t r = 0; r < g.atilde.size(); ++r) {
        std::cout << "  At" << r << " = " << render_atilde(fam.polys[r]) << mark(fam.polys[r] == g.atilde[r]) << "\n";
    }
    std::cout << "Resolvent coefficients A_r:\n";
    for (std::size_t r = 0; r < g.resolvent.size(); ++r) {
        std::cout << "  A" << r << " = " << render_resolvent(res[r]) << mark(res[r].parts == g.resolvent[r].parts)
                  << "\n";
    }
    const auto pa3 = apply_P(res[3]);
    std::cout << "P(A3) = " << render_atilde(pa3) << mark(pa3 == g.p_of_a3) << "\n";

    std::cout << "First solutions (k0^2 = m0^2+g0^2+d0^2-mass):\n";
    DirectionTable<QCplx> table{4, {{QCplx(1), QCplx(2), 0}, {QCplx(1), 0, QCplx(-1)}, {0, QCplx(1), QCplx(1)}}};
    const QCplx mass(-4);
    const auto sols = build_solutions(mass, table, Branch::plus, 2);
    const auto closed = closed_form_first_solutions(mass, table, Branch::plus);
    std::cout << "  example: mass = -4, rows (m,g,d) = (1,2,0), (1,0,-1), (0,1,1)\n";
    std::cout << "  ξ0 = " << render_form(sols[0].xi0) << "\n";
    for (std::size_t r = 0; r <= 2; ++r) {
        std::cout << "  U" << r << " = (" << render_x_poly(sols[r].poly) << ") exp(ξ0)"
                  << mark(sols[r].poly == closed[r].poly && sols[r].xi0 == closed[r].xi0) << "\n";
    }

    const auto v = adjudicate_radicand(Cplx(-1.0), {}, 4);
    std::cout << "Radicand check at mass = -1, row0 = 0:\n"
              << "  m0^2+g0^2+d0^2-mass: residual " << format_cplx(v.subtracted_residual) << "\n"
              << "  mass+m0^2+g0^2+d0^2: residual " << format_cplx(v.added_residual) << "\n"
              << "  " << v.text << "\n";

    std::cout << "Dimension reduction (d_r = 0):\n";
    DirectionTable<QCplx> t3{3, {{QCplx(1), QCplx(2), 0}}};
    const auto u0 = build_solutions(mass, t3, Branch::plus, 0)[0];
    std::cout << "  U0 = exp(" << render_form(u0.xi0) << ")" << mark(u0.xi0.k * u0.xi0.k == QCplx(9)) << "\n";

    std::cout << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : kExitFailed;
}

Branch parse_branch(const std::string& s) { return s == "minus" ? Branch::minus : Branch::plus; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Polynomial-exponential solutions of the Klein-Gordon equation"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path;
    std::string format = "json";
    std::optional<std::size_t> order;
    std::optional<std::string> branch;
    std::optional<std::string> mode;

    auto* gen = app.add_subcommand("generate", "Build U_0..U_R for a problem spec");
    gen->add_option("--spec", spec_path, "Problem spec JSON")->required();
    gen->add_option("--out", out_path, "Output file (default stdout)");
    gen->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
    gen->add_option("--order", order, "Highest index R");
    gen->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
    gen->add_option("--mode", mode)->check(CLI::IsMember({"rational", "float"}));

    VerifyOptions vopts;
    auto* ver = app.add_subcommand("verify", "Check a spec or solutions file against the operator");
    ver->add_option("--spec", spec_path, "Problem spec or solutions JSON")->required();
    ver->add_option("--tol", vopts.tol, "Relative coefficient tolerance");
    ver->add_flag("--numeric", vopts.numeric, "Also run the finite-difference check");
    ver->add_option("--points", vopts.points);
    ver->set_help_flag("--help", "Print this help message and exit");
    ver->add_option("--h", vopts.h, "Finite-difference step");
    ver->add_option("--seed", vopts.seed);
    ver->add_option("--numeric-tol", vopts.numeric_tol, "Scaled finite-difference tolerance");
    ver->add_option("--order", order);
    ver->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
    ver->add_option("--mode", mode)->check(CLI::IsMember({"rational", "float"}));

    std::size_t cross_order = 12;
    auto* cross = app.add_subcommand("crosscheck", "Compare the three constructions of At_r");
    cross->add_option("--order", cross_order)->required();

    auto* repro = app.add_subcommand("reproduce-paper", "Print the reference families and their checks");

    CLI11_PARSE(app, argc, argv);

    SpecOverrides overrides;
    overrides.R = order;
    if (branch) {
        overrides.branch = parse_branch(*branch);
    }
    if (mode) {
        overrides.mode = *mode == "rational" ? Mode::rational : Mode::floating;
    }

    try {
        if (*gen) {
            const auto spec = parse_problem_spec(parse_json(read_file(spec_path), spec_path), overrides);
            const std::string text = spec.mode == Mode::rational ? render_document(generate_family<QCplx>(spec), format)
                                                                 : render_document(generate_family<Cplx>(spec), format);
            emit(text, out_path);
            return 0;
        }
        if (*ver) {
            const std::string text = read_file(spec_path);
            if (blank(text)) {
                std::cerr << "warning: " << spec_path << " is empty, nothing to verify\n";
                std::cout << "[]\n";
                return 0;
            }
            const json j = parse_json(text, spec_path);
            bool passed = true;
            json reports;
            if (j.is_object() && j.contains("solutions")) {
                reports = document_mode(j) == Mode::rational ? verify_family(family_from_json<QCplx>(j), vopts, passed)
                                                             : verify_family(family_from_json<Cplx>(j), vopts, passed);
            } else {
                const auto spec = parse_problem_spec(j, overrides);
                reports = spec.mode == Mode::rational ? verify_family(generate_family<QCplx>(spec), vopts, passed)
                                                      : verify_family(generate_family<Cplx>(spec), vopts, passed);
            }
            std::cout << reports.dump(2) << "\n";
            return passed ? 0 : kExitFailed;
        }
        if (*cross) {
            return run_crosscheck(cross_order);
        }
        if (*repro) {
            return run_reproduce();
        }
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegenerateK0& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NonRationalRoot& e) {
        std::cerr << "error: " << e.what() << " (use --mode float)\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
