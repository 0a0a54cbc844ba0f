#pragma once

// JSON forms of complex scalars, polynomials, problem specs, solution
// families and verification reports.
//
// Complex scalars are [re, im]; in rational mode each part is a string
// "p" or "p/q". Polynomial terms are {"exps": [...], "coeff": [re, im]} in
// float mode and {"exps": [...], "num": [re_num, im_num], "den": [re_den,
// im_den]} with string-encoded integers in rational mode.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgfam/charsys.hpp"
#include "kgfam/family.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"
#include "kgfam/verify.hpp"

namespace kgfam {

using json = nlohmann::ordered_json;

/// Malformed or invalid input document; the message names the field.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Mode { rational, floating };

inline const char* to_string(Mode m) { return m == Mode::rational ? "rational" : "float"; }

json to_json(const Cplx& z);
json to_json(const QCplx& z);

/// Accepts [re, im] (numbers or "p/q" strings) or a bare real number/string.
template <Scalar S>
S scalar_from_json(const json& j, const std::string& field);

template <>
Cplx scalar_from_json<Cplx>(const json& j, const std::string& field);
template <>
QCplx scalar_from_json<QCplx>(const json& j, const std::string& field);

json poly_to_json(const SparsePoly<Cplx>& p);
json poly_to_json(const SparsePoly<QCplx>& p);

template <Scalar S>
SparsePoly<S> poly_from_json(const json& j, std::size_t nvars, const std::string& field);

template <>
SparsePoly<Cplx> poly_from_json<Cplx>(const json& j, std::size_t nvars, const std::string& field);
template <>
SparsePoly<QCplx> poly_from_json<QCplx>(const json& j, std::size_t nvars, const std::string& field);

template <Scalar S>
json form_to_json(const LinearForm<S>& f)
{
    return json{{"k", to_json(f.k)}, {"m", to_json(f.m)}, {"g", to_json(f.g)}, {"d", to_json(f.d)}};
}

template <Scalar S>
LinearForm<S> form_from_json(const json& j, const std::string& field)
{
    if (!j.is_object()) {
        throw SpecError(field + ": expected an object with k, m, g, d");
    }
    LinearForm<S> f;
    const auto get = [&](const char* key) {
        return j.contains(key) ? scalar_from_json<S>(j.at(key), field + "." + key) : S(0);
    };
    f.k = get("k");
    f.m = get("m");
    f.g = get("g");
    f.d = get("d");
    return f;
}

/// Everything needed to generate a family: dimension, mass, direction rows,
/// maximal index, branch and coefficient mode.
struct ProblemSpec {
    int dim = 4;
    std::size_t R = 0;
    Branch branch = Branch::plus;
    Mode mode = Mode::floating;
    json mass;
    json rows;

    template <Scalar S>
    [[nodiscard]] S mass_as() const
    {
        return scalar_from_json<S>(mass, "mass");
    }

    template <Scalar S>
    [[nodiscard]] DirectionTable<S> table_as() const;
};

/// Overrides applied on top of the spec file (command-line flags win).
struct SpecOverrides {
    std::optional<std::size_t> R;
    std::optional<Branch> branch;
    std::optional<Mode> mode;
};

ProblemSpec parse_problem_spec(const json& j, const SpecOverrides& overrides = {});

json table_to_json(const DirectionTable<Cplx>& table, const Cplx& mass);

template <Scalar S>
struct FamilyDocument {
    int dim = 4;
    S mass{0};
    Branch branch = Branch::plus;
    std::vector<S> k;
    std::vector<SolutionTerm<S>> solutions;
};

template <Scalar S>
json family_to_json(const FamilyDocument<S>& doc);

/// Reads a family document; the mode is taken from its "mode" field.
template <Scalar S>
FamilyDocument<S> family_from_json(const json& j);

Mode document_mode(const json& j);

json report_to_json(const VerificationReport& rep);

} // namespace kgfam
