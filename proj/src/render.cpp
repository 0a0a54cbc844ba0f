#include "kgfam/render.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace kgfam {

namespace {

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(std::uint32_t n)
{
    const std::string digits = std::to_string(n);
    std::string out;
    for (const char c : digits) {
        out += kSuperscripts[c - '0'];
    }
    return out;
}

std::string power_text(const std::string& base, std::uint32_t p, Notation n)
{
    if (p == 1) {
        return base;
    }
    if (n == Notation::latex) {
        return base + "^{" + std::to_string(p) + "}";
    }
    return base + superscript(p);
}

// Variable names: xi-polys index j holds xi_{j+1}; x-polys index j holds x_j.
std::string monomial(const Exponents& e, bool xi, Notation n)
{
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) {
            continue;
        }
        const std::size_t label = xi ? j + 1 : j;
        std::string base;
        if (n == Notation::latex) {
            base = std::string(xi ? "\\xi" : "x") + "_{" + std::to_string(label) + "}";
        } else {
            base = std::string(xi ? "ξ" : "x") + std::to_string(label);
        }
        out += power_text(base, e[j], n);
    }
    return out;
}

std::string rational_text(const Rational& q, Notation n)
{
    const Integer den = boost::multiprecision::denominator(q);
    const Integer num = boost::multiprecision::numerator(q);
    if (den == 1) {
        return num.str();
    }
    if (n == Notation::latex) {
        return (num < 0 ? "-" : "") + std::string("\\frac{") + Integer(boost::multiprecision::abs(num)).str() + "}{" +
               den.str() + "}";
    }
    return num.str() + "/" + den.str();
}

std::string qcplx_text(const QCplx& z, Notation n)
{
    if (z.imag() == 0) {
        return rational_text(z.real(), n);
    }
    if (z.real() == 0) {
        return rational_text(z.imag(), n) + "i";
    }
    return "(" + rational_text(z.real(), n) + (z.imag() > 0 ? "+" : "") + rational_text(z.imag(), n) + "i)";
}

// Coefficient prefix for a monomial: "" for 1, "-" for -1, else the value.
// The sign is pulled out so terms can be joined with + or -.
struct SignedText {
    bool negative = false;
    std::string body;
};

SignedText term_text(const QCplx& c, const std::string& mono, Notation n)
{
    SignedText t;
    QCplx v = c;
    if (v.imag() == 0 && v.real() < 0) {
        t.negative = true;
        v = -v;
    }
    const std::string coeff = qcplx_text(v, n);
    if (mono.empty()) {
        t.body = coeff;
    } else if (v == QCplx(1)) {
        t.body = mono;
    } else {
        t.body = coeff + mono;
    }
    return t;
}

std::string join(const std::vector<SignedText>& terms, const std::string& plus, const std::string& minus)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
        } else {
            out += (terms[i].negative ? minus : plus) + terms[i].body;
        }
    }
    return out.empty() ? "0" : out;
}

std::string fraction(const std::string& num, std::size_t num_terms, const std::string& den, Notation n)
{
    if (n == Notation::latex) {
        return "\\frac{" + num + "}{" + den + "}";
    }
    return (num_terms > 1 ? "(" + num + ")" : num) + "/" + den;
}

std::string minus_sign(Notation n) { return n == Notation::latex ? "-" : "−"; }

} // namespace

std::string format_cplx(const Cplx& z)
{
    std::ostringstream os;
    os.precision(12);
    if (z.imag() == 0.0) {
        os << z.real();
        return os.str();
    }
    if (z.real() == 0.0) {
        os << z.imag() << "i";
        return os.str();
    }
    os << "(" << z.real() << (z.imag() >= 0.0 ? "+" : "") << z.imag() << "i)";
    return os.str();
}

std::string render_xi_poly(const XiPoly& p, Notation n)
{
    std::vector<SignedText> terms;
    for (const auto& [e, c] : p.terms()) {
        const std::string mono = monomial(e, true, n);
        auto t = term_text(c, mono, n);
        if (!mono.empty() && t.body != mono) {
            t.body = qcplx_text(t.negative ? -c : c, n) + " " + mono;
        }
        terms.push_back(std::move(t));
    }
    return join(terms, " + ", " - ");
}

std::string render_atilde(const XiPoly& p, Notation n)
{
    std::map<std::uint32_t, std::vector<std::pair<Exponents, QCplx>>> groups;
    for (const auto& [e, c] : p.terms()) {
        groups[total_degree(e)].emplace_back(e, c);
    }
    std::vector<std::string> parts;
    for (const auto& [d, terms] : groups) {
        const QCplx factorial(Rational(1) / inverse_factorial(d));
        std::vector<SignedText> nums;
        for (const auto& [e, c] : terms) {
            nums.push_back(term_text(c * factorial, monomial(e, true, n), n));
        }
        if (d <= 1) {
            parts.push_back(join(nums, " + ", " - "));
        } else {
            const std::string den = std::to_string(d) + "!";
            parts.push_back(fraction(join(nums, "+", "-"), nums.size(), den, n));
        }
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

std::string render_resolvent(const ResolventExpansion& a, Notation n)
{
    const std::string pole = n == Notation::latex ? "(t-\\xi_{0})" : "(t" + minus_sign(n) + "ξ0)";
    std::vector<std::string> parts;
    for (const auto& [s, numerator] : a.parts) {
        std::vector<SignedText> nums;
        for (const auto& [e, c] : numerator.terms()) {
            nums.push_back(term_text(c, monomial(e, true, n), n));
        }
        const std::string den = power_text(pole, static_cast<std::uint32_t>(s), n);
        parts.push_back(fraction(join(nums, "+", "-"), nums.size(), den, n));
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

std::string render_x_poly(const SparsePoly<QCplx>& p, Notation n)
{
    std::vector<SignedText> terms;
    for (const auto& [e, c] : p.terms()) {
        const std::string mono = monomial(e, false, n);
        auto t = term_text(c, mono, n);
        if (!mono.empty() && t.body != mono) {
            t.body = qcplx_text(t.negative ? -c : c, n) + (n == Notation::latex ? "\\," : "·") + mono;
        }
        terms.push_back(std::move(t));
    }
    return join(terms, " + ", " - ");
}

std::string render_x_poly(const SparsePoly<Cplx>& p, Notation n)
{
    std::vector<std::string> terms;
    for (const auto& [e, c] : p.terms()) {
        const std::string mono = monomial(e, false, n);
        const std::string coeff = format_cplx(c);
        if (mono.empty()) {
            terms.push_back(coeff);
        } else if (c == Cplx(1.0)) {
            terms.push_back(mono);
        } else {
            terms.push_back(coeff + (n == Notation::latex ? "\\," : "·") + mono);
        }
    }
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        out += " + " + terms[i];
    }
    return out;
}

std::string render_form(const LinearForm<Cplx>& f, Notation n)
{
    SparsePoly<Cplx> p = f.to_poly();
    return render_x_poly(p, n);
}

std::string render_form(const LinearForm<QCplx>& f, Notation n)
{
    SparsePoly<QCplx> p = f.to_poly();
    return render_x_poly(p, n);
}

} // namespace kgfam
