#pragma once

// Coefficient scalars: double-precision complex for numeric work and
// exact rational complex for golden-form comparisons.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "kgfam/errors.hpp"

namespace kgfam {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

/// Complex number with arbitrary-precision rational real and imaginary parts.
class QCplx {
public:
    QCplx() = default;
    QCplx(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    QCplx(const Rational& re) : re_(re) {} // NOLINT(google-explicit-constructor)
    template <std::integral I>
    QCplx(I re) : re_(re) {} // NOLINT(google-explicit-constructor)

    [[nodiscard]] const Rational& real() const { return re_; }
    [[nodiscard]] const Rational& imag() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_ == 0 && im_ == 0; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] QCplx conj() const { return {re_, -im_}; }

    QCplx& operator+=(const QCplx& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    QCplx& operator-=(const QCplx& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    QCplx& operator*=(const QCplx& o)
    {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    QCplx& operator/=(const QCplx& o)
    {
        const Rational den = o.norm();
        if (den == 0) {
            throw std::domain_error("QCplx: division by zero");
        }
        Rational re = (re_ * o.re_ + im_ * o.im_) / den;
        im_ = (im_ * o.re_ - re_ * o.im_) / den;
        re_ = std::move(re);
        return *this;
    }

    friend QCplx operator+(QCplx a, const QCplx& b) { return a += b; }
    friend QCplx operator-(QCplx a, const QCplx& b) { return a -= b; }
    friend QCplx operator*(QCplx a, const QCplx& b) { return a *= b; }
    friend QCplx operator/(QCplx a, const QCplx& b) { return a /= b; }
    friend QCplx operator-(const QCplx& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const QCplx& a, const QCplx& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const QCplx& z);

private:
    Rational re_{0};
    Rational im_{0};
};

/// Parses "p", "-p/q" (decimal integers) into an exact rational.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Exact principal square root; throws NonRationalRoot when the root is not
/// rational.
QCplx exact_sqrt(const QCplx& z);

/// Principal complex square root, argument of the result in (-pi/2, pi/2].
/// A negative real radicand always maps to +i*sqrt(|z|), whatever the sign of
/// its zero imaginary part.
inline Cplx principal_sqrt(Cplx z)
{
    if (z.imag() == 0.0) {
        z = Cplx(z.real(), 0.0);
    }
    return std::sqrt(z);
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Cplx> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static Cplx from_rational(const Rational& q) { return {q.convert_to<double>(), 0.0}; }
    static Cplx from_qcplx(const QCplx& z) { return {z.real().convert_to<double>(), z.imag().convert_to<double>()}; }
    static Cplx to_cplx(const Cplx& z) { return z; }
    static double magnitude(const Cplx& z) { return std::abs(z); }
    static bool is_zero(const Cplx& z) { return z == Cplx(0.0, 0.0); }
    static bool is_finite(const Cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
    static Cplx sqrt(const Cplx& z) { return principal_sqrt(z); }
    static Cplx exp(const Cplx& z) { return std::exp(z); }
};

template <>
struct scalar_traits<QCplx> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";

    static QCplx from_rational(const Rational& q) { return {q}; }
    static QCplx from_qcplx(const QCplx& z) { return z; }
    static Cplx to_cplx(const QCplx& z) { return scalar_traits<Cplx>::from_qcplx(z); }
    static double magnitude(const QCplx& z) { return std::abs(to_cplx(z)); }
    static bool is_zero(const QCplx& z) { return z.is_zero(); }
    static bool is_finite(const QCplx&) { return true; }
    static QCplx sqrt(const QCplx& z) { return exact_sqrt(z); }
    static QCplx exp(const QCplx& z)
    {
        if (!z.is_zero()) {
            throw std::domain_error("exact exponential is only defined at zero");
        }
        return {1};
    }
};

/// Field of coefficients accepted by every container in this library.
template <class S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { scalar_traits<S>::magnitude(a) } -> std::convertible_to<double>;
    { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Scalar S>
void require_finite(const S& z, const char* where)
{
    if (!scalar_traits<S>::is_finite(z)) {
        throw NonFiniteValue(std::string(where) + ": non-finite coefficient");
    }
}

template <Scalar S>
S from_int(std::int64_t n)
{
    return scalar_traits<S>::from_rational(Rational(n));
}

/// 1/n! as an exact rational.
Rational inverse_factorial(unsigned n);

} // namespace kgfam
