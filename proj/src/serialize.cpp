#include "kgfam/serialize.hpp"

#include <cmath>
#include <limits>

namespace kgfam {

namespace {

// Exact rational value of a finite double.
Rational rational_from_double(double v, const std::string& field)
{
    if (!std::isfinite(v)) {
        throw SpecError(field + ": non-finite number");
    }
    int exponent = 0;
    const double mantissa = std::frexp(v, &exponent);
    // mantissa * 2^53 is an exact integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Integer num(scaled);
    Integer den(1);
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return {num, den};
}

Rational rational_from_json(const json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
    }
    if (j.is_number_float()) {
        return rational_from_double(j.get<double>(), field);
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SpecError(field + ": " + e.what());
        }
    }
    throw SpecError(field + ": expected a number or a \"p/q\" string");
}

double double_from_json(const json& j, const std::string& field)
{
    if (j.is_number()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            throw SpecError(field + ": non-finite number");
        }
        return v;
    }
    return rational_from_json(j, field).convert_to<double>();
}

const json& pair_part(const json& j, std::size_t i, const std::string& field)
{
    if (!j.is_array() || j.size() != 2) {
        throw SpecError(field + ": expected a two-element [re, im] array");
    }
    return j[i];
}

Integer integer_from_json(const json& j, const std::string& field)
{
    const Rational q = rational_from_json(j, field);
    if (boost::multiprecision::denominator(q) != 1) {
        throw SpecError(field + ": expected an integer");
    }
    return boost::multiprecision::numerator(q);
}

Exponents exps_from_json(const json& j, std::size_t nvars, const std::string& field)
{
    if (!j.is_array() || j.size() != nvars) {
        throw SpecError(field + ": expected an array of " + std::to_string(nvars) + " exponents");
    }
    Exponents e;
    e.reserve(nvars);
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
            throw SpecError(field + ": exponents must be nonnegative integers");
        }
        e.push_back(v.get<std::uint32_t>());
    }
    return e;
}

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw SpecError(where + (where.empty() ? "" : ".") + key + ": missing");
    }
    return j.at(key);
}

QCplx num_den_from_json(const json& term, const std::string& where)
{
    const auto& num = require(term, "num", where);
    const auto& den = require(term, "den", where);
    const Integer re_den = integer_from_json(pair_part(den, 0, where + ".den"), where + ".den[0]");
    const Integer im_den = integer_from_json(pair_part(den, 1, where + ".den"), where + ".den[1]");
    if (re_den == 0 || im_den == 0) {
        throw SpecError(where + ".den: zero denominator");
    }
    return {Rational(integer_from_json(pair_part(num, 0, where + ".num"), where + ".num[0]"), re_den),
            Rational(integer_from_json(pair_part(num, 1, where + ".num"), where + ".num[1]"), im_den)};
}

Branch branch_from_string(const std::string& s)
{
    if (s == "plus" || s == "+") {
        return Branch::plus;
    }
    if (s == "minus" || s == "-") {
        return Branch::minus;
    }
    throw SpecError("branch: expected \"plus\" or \"minus\", got \"" + s + "\"");
}

Mode mode_from_string(const std::string& s)
{
    if (s == "rational") {
        return Mode::rational;
    }
    if (s == "float") {
        return Mode::floating;
    }
    throw SpecError("mode: expected \"rational\" or \"float\", got \"" + s + "\"");
}

} // namespace

json to_json(const Cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const QCplx& z) { return json::array({format_rational(z.real()), format_rational(z.imag())}); }

template <>
Cplx scalar_from_json<Cplx>(const json& j, const std::string& field)
{
    if (j.is_array()) {
        return {double_from_json(pair_part(j, 0, field), field + "[0]"),
                double_from_json(pair_part(j, 1, field), field + "[1]")};
    }
    return {double_from_json(j, field), 0.0};
}

template <>
QCplx scalar_from_json<QCplx>(const json& j, const std::string& field)
{
    if (j.is_array()) {
        return {rational_from_json(pair_part(j, 0, field), field + "[0]"),
                rational_from_json(pair_part(j, 1, field), field + "[1]")};
    }
    return {rational_from_json(j, field)};
}

json poly_to_json(const SparsePoly<Cplx>& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        out.push_back(json{{"exps", e}, {"coeff", to_json(c)}});
    }
    return out;
}

json poly_to_json(const SparsePoly<QCplx>& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        const auto& re = c.real();
        const auto& im = c.imag();
        out.push_back(json{{"exps", e},
                           {"num", json::array({boost::multiprecision::numerator(re).str(),
                                                boost::multiprecision::numerator(im).str()})},
                           {"den", json::array({boost::multiprecision::denominator(re).str(),
                                                boost::multiprecision::denominator(im).str()})}});
    }
    return out;
}

template <>
SparsePoly<Cplx> poly_from_json<Cplx>(const json& j, std::size_t nvars, const std::string& field)
{
    if (!j.is_array()) {
        throw SpecError(field + ": expected an array of terms");
    }
    SparsePoly<Cplx> p(nvars);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        const auto& term = j[i];
        auto e = exps_from_json(require(term, "exps", where), nvars, where + ".exps");
        const Cplx c = term.contains("coeff") ? scalar_from_json<Cplx>(term.at("coeff"), where + ".coeff")
                                              : scalar_traits<QCplx>::to_cplx(num_den_from_json(term, where));
        p.add_term(std::move(e), c);
    }
    return p.normalize();
}

template <>
SparsePoly<QCplx> poly_from_json<QCplx>(const json& j, std::size_t nvars, const std::string& field)
{
    if (!j.is_array()) {
        throw SpecError(field + ": expected an array of terms");
    }
    SparsePoly<QCplx> p(nvars);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        const auto& term = j[i];
        auto e = exps_from_json(require(term, "exps", where), nvars, where + ".exps");
        const QCplx c = term.contains("num") ? num_den_from_json(term, where)
                                             : scalar_from_json<QCplx>(require(term, "coeff", where), where + ".coeff");
        p.add_term(std::move(e), c);
    }
    return p.normalize();
}

template <Scalar S>
DirectionTable<S> ProblemSpec::table_as() const
{
    DirectionTable<S> table;
    table.dim = dim;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = "rows[" + std::to_string(r) + "]";
        const auto& row = rows[r];
        if (!row.is_object()) {
            throw SpecError(where + ": expected an object with m, g, d");
        }
        const auto get = [&](const char* key) {
            return row.contains(key) ? scalar_from_json<S>(row.at(key), where + "." + key) : S(0);
        };
        table.rows.push_back({get("m"), get("g"), get("d")});
    }
    try {
        table.validate();
    } catch (const NonFiniteValue& e) {
        throw SpecError(e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
    return table;
}

template DirectionTable<Cplx> ProblemSpec::table_as<Cplx>() const;
template DirectionTable<QCplx> ProblemSpec::table_as<QCplx>() const;

ProblemSpec parse_problem_spec(const json& j, const SpecOverrides& overrides)
{
    if (!j.is_object()) {
        throw SpecError("spec: expected a JSON object");
    }
    ProblemSpec spec;
    const auto& dim = require(j, "dim", "");
    if (!dim.is_number_integer() || dim.get<int>() < 2 || dim.get<int>() > 4) {
        throw SpecError("dim: must be 2, 3 or 4");
    }
    spec.dim = dim.get<int>();
    spec.mass = j.contains("mass") ? j.at("mass") : json::array({0, 0});
    spec.rows = require(j, "rows", "");
    if (!spec.rows.is_array() || spec.rows.empty()) {
        throw SpecError("rows: expected a non-empty array");
    }

    if (overrides.R) {
        spec.R = *overrides.R;
    } else if (j.contains("R")) {
        if (!j.at("R").is_number_integer() || j.at("R").get<long long>() < 0) {
            throw SpecError("R: must be a nonnegative integer");
        }
        spec.R = j.at("R").get<std::size_t>();
    } else {
        spec.R = spec.rows.size() - 1;
    }
    if (spec.rows.size() < spec.R + 1) {
        throw SpecError("rows: need at least R+1 = " + std::to_string(spec.R + 1) + " rows, got " +
                        std::to_string(spec.rows.size()));
    }

    if (overrides.branch) {
        spec.branch = *overrides.branch;
    } else if (j.contains("branch")) {
        spec.branch = branch_from_string(j.at("branch").get<std::string>());
    }
    if (overrides.mode) {
        spec.mode = *overrides.mode;
    } else if (j.contains("mode")) {
        spec.mode = mode_from_string(j.at("mode").get<std::string>());
    }

    // Validate every field eagerly in the requested mode.
    if (spec.mode == Mode::rational) {
        (void)spec.mass_as<QCplx>();
        (void)spec.table_as<QCplx>();
    } else {
        (void)spec.mass_as<Cplx>();
        (void)spec.table_as<Cplx>();
    }
    return spec;
}

json table_to_json(const DirectionTable<Cplx>& table, const Cplx& mass)
{
    json rows = json::array();
    for (const auto& row : table.rows) {
        rows.push_back(json{{"m", to_json(row.m)}, {"g", to_json(row.g)}, {"d", to_json(row.d)}});
    }
    return json{{"dim", table.dim}, {"mass", to_json(mass)}, {"rows", rows}};
}

template <Scalar S>
json family_to_json(const FamilyDocument<S>& doc)
{
    json k = json::array();
    for (const auto& v : doc.k) {
        k.push_back(to_json(v));
    }
    json sols = json::array();
    for (const auto& u : doc.solutions) {
        sols.push_back(json{{"r", u.r}, {"poly", poly_to_json(u.poly)}});
    }
    const LinearForm<S> xi0 = doc.solutions.empty() ? LinearForm<S>{} : doc.solutions.front().xi0;
    return json{{"mode", scalar_traits<S>::name},
                {"dim", doc.dim},
                {"mass", to_json(doc.mass)},
                {"branch", to_string(doc.branch)},
                {"k", k},
                {"xi0", form_to_json(xi0)},
                {"solutions", sols}};
}

template json family_to_json<Cplx>(const FamilyDocument<Cplx>&);
template json family_to_json<QCplx>(const FamilyDocument<QCplx>&);

Mode document_mode(const json& j)
{
    if (j.is_object() && j.contains("mode")) {
        return mode_from_string(j.at("mode").get<std::string>());
    }
    return Mode::floating;
}

template <Scalar S>
FamilyDocument<S> family_from_json(const json& j)
{
    if (!j.is_object()) {
        throw SpecError("solutions file: expected a JSON object");
    }
    FamilyDocument<S> doc;
    const auto& dim = require(j, "dim", "");
    if (!dim.is_number_integer() || dim.get<int>() < 2 || dim.get<int>() > 4) {
        throw SpecError("dim: must be 2, 3 or 4");
    }
    doc.dim = dim.get<int>();
    doc.mass = scalar_from_json<S>(require(j, "mass", ""), "mass");
    if (j.contains("branch")) {
        doc.branch = branch_from_string(j.at("branch").get<std::string>());
    }
    if (j.contains("k")) {
        for (std::size_t i = 0; i < j.at("k").size(); ++i) {
            doc.k.push_back(scalar_from_json<S>(j.at("k")[i], "k[" + std::to_string(i) + "]"));
        }
    }
    const auto xi0 = form_from_json<S>(require(j, "xi0", ""), "xi0");
    const auto& sols = require(j, "solutions", "");
    if (!sols.is_array()) {
        throw SpecError("solutions: expected an array");
    }
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const std::string where = "solutions[" + std::to_string(i) + "]";
        const auto& s = sols[i];
        const auto& r = require(s, "r", where);
        if (!r.is_number_integer() || r.get<long long>() < 0) {
            throw SpecError(where + ".r: must be a nonnegative integer");
        }
        doc.solutions.push_back(
            {r.get<std::size_t>(), poly_from_json<S>(require(s, "poly", where), 4, where + ".poly"), xi0});
    }
    return doc;
}

template FamilyDocument<Cplx> family_from_json<Cplx>(const json&);
template FamilyDocument<QCplx> family_from_json<QCplx>(const json&);

json report_to_json(const VerificationReport& rep)
{
    json j{{"r", rep.r},
           {"symbolic_max_coeff", rep.symbolic_max_coeff},
           {"numeric_max_residual", rep.numeric_max_residual < 0.0 ? json(nullptr) : json(rep.numeric_max_residual)},
           {"passed", rep.passed},
           {"notes", rep.notes}};
    return j;
}

} // namespace kgfam
