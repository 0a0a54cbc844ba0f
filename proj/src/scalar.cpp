#include "kgfam/scalar.hpp"

#include <cctype>
#include <sstream>

namespace kgfam {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational '" + whole + "'");
    }
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            throw std::invalid_argument("malformed rational '" + whole + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& out)
{
    if (q < 0) {
        return false;
    }
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    Integer rn;
    Integer rd;
    const Integer sn = boost::multiprecision::sqrt(num, rn);
    const Integer sd = boost::multiprecision::sqrt(den, rd);
    if (rn != 0 || rd != 0) {
        return false;
    }
    out = Rational(sn, sd);
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return {parse_integer(text, text)};
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return {num, den};
}

std::string format_rational(const Rational& q)
{
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return boost::multiprecision::numerator(q).str();
    }
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

QCplx exact_sqrt(const QCplx& z)
{
    const auto fail = [&z]() {
        std::ostringstream os;
        os << "no exact rational square root of " << z;
        return NonRationalRoot(os.str());
    };
    Rational root;
    if (z.imag() == 0) {
        if (z.real() >= 0) {
            if (!rational_sqrt(z.real(), root)) {
                throw fail();
            }
            return {root};
        }
        if (!rational_sqrt(-z.real(), root)) {
            throw fail();
        }
        return {Rational(0), root};
    }
    Rational modulus;
    if (!rational_sqrt(z.norm(), modulus)) {
        throw fail();
    }
    Rational re;
    Rational im;
    if (!rational_sqrt((modulus + z.real()) / 2, re) || !rational_sqrt((modulus - z.real()) / 2, im)) {
        throw fail();
    }
    return {re, z.imag() < 0 ? Rational(-im) : im};
}

Rational inverse_factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return {Integer(1), f};
}

std::ostream& operator<<(std::ostream& os, const QCplx& z)
{
    if (z.imag() == 0) {
        return os << format_rational(z.real());
    }
    if (z.real() == 0) {
        return os << format_rational(z.imag()) << "i";
    }
    os << "(" << format_rational(z.real());
    if (z.imag() > 0) {
        os << "+";
    }
    return os << format_rational(z.imag()) << "i)";
}

} // namespace kgfam
