#pragma once

// Arithmetic in the commutative associative algebra with basis
// {1, rho, ..., rho^(n-1)} and rho^n = 0 (truncated power series in rho).

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgfam/errors.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

template <Scalar S>
class NilElement {
public:
    /// Zero element of order n.
    explicit NilElement(std::size_t order) : coeffs_(order, S(0))
    {
        if (order == 0) {
            throw std::invalid_argument("NilElement: order must be positive");
        }
    }

    /// Coefficient r of the vector belongs to rho^r; the order is its length.
    explicit NilElement(std::vector<S> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("NilElement: order must be positive");
        }
        for (const auto& c : coeffs_) {
            require_finite(c, "NilElement");
        }
    }

    static NilElement unit(std::size_t order)
    {
        NilElement e(order);
        e.coeffs_[0] = S(1);
        return e;
    }

    /// The nilpotent generator rho (zero when order == 1).
    static NilElement rho(std::size_t order)
    {
        NilElement e(order);
        if (order > 1) {
            e.coeffs_[1] = S(1);
        }
        return e;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
    [[nodiscard]] std::span<const S> coeffs() const { return coeffs_; }
    [[nodiscard]] const S& operator[](std::size_t r) const { return coeffs_.at(r); }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& c : coeffs_) {
            if (!scalar_traits<S>::is_zero(c)) {
                return false;
            }
        }
        return true;
    }

    /// Largest coefficient modulus.
    [[nodiscard]] double max_magnitude() const
    {
        double m = 0.0;
        for (const auto& c : coeffs_) {
            m = std::max(m, scalar_traits<S>::magnitude(c));
        }
        return m;
    }

    friend NilElement operator+(const NilElement& a, const NilElement& b)
    {
        check_orders(a, b, "add");
        NilElement out(a.order());
        for (std::size_t r = 0; r < a.order(); ++r) {
            out.coeffs_[r] = a.coeffs_[r] + b.coeffs_[r];
        }
        return out;
    }

    friend NilElement operator-(const NilElement& a, const NilElement& b)
    {
        check_orders(a, b, "subtract");
        NilElement out(a.order());
        for (std::size_t r = 0; r < a.order(); ++r) {
            out.coeffs_[r] = a.coeffs_[r] - b.coeffs_[r];
        }
        return out;
    }

    friend NilElement operator-(const NilElement& a)
    {
        NilElement out(a.order());
        for (std::size_t r = 0; r < a.order(); ++r) {
            out.coeffs_[r] = -a.coeffs_[r];
        }
        return out;
    }

    // Truncated Cauchy product: products landing on rho^n and above vanish.
    friend NilElement operator*(const NilElement& a, const NilElement& b)
    {
        check_orders(a, b, "multiply");
        const std::size_t n = a.order();
        NilElement out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (scalar_traits<S>::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend NilElement operator*(const S& c, const NilElement& a)
    {
        NilElement out(a.order());
        for (std::size_t r = 0; r < a.order(); ++r) {
            out.coeffs_[r] = c * a.coeffs_[r];
        }
        return out;
    }

    friend bool operator==(const NilElement& a, const NilElement& b) { return a.coeffs_ == b.coeffs_; }

private:
    static void check_orders(const NilElement& a, const NilElement& b, const char* op)
    {
        if (a.order() != b.order()) {
            throw OrderMismatch(std::string("NilElement ") + op + ": order " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
        }
    }

    std::vector<S> coeffs_;
};

/// Vectors e0..e3 spanning the space of zeta = x0 e0 + x1 e1 + x2 e2 + x3 e3.
template <Scalar S>
struct BasisVectors {
    BasisVectors(NilElement<S> e0_, NilElement<S> e1_, NilElement<S> e2_, NilElement<S> e3_)
        : e0(std::move(e0_)), e1(std::move(e1_)), e2(std::move(e2_)), e3(std::move(e3_))
    {
        const auto n = e0.order();
        if (e1.order() != n || e2.order() != n || e3.order() != n) {
            throw OrderMismatch("BasisVectors: all four vectors must share one order");
        }
    }

    [[nodiscard]] std::size_t order() const { return e0.order(); }

    NilElement<S> e0;
    NilElement<S> e1;
    NilElement<S> e2;
    NilElement<S> e3;
};

template <Scalar S>
NilElement<S> nil_add(const NilElement<S>& a, const NilElement<S>& b)
{
    return a + b;
}

template <Scalar S>
NilElement<S> nil_mul(const NilElement<S>& a, const NilElement<S>& b)
{
    return a * b;
}

/// exp(a) = exp(a0) * sum_{r<n} nu^r / r!, where a = a0 + nu and nu^n = 0.
/// In exact mode the scalar part must vanish.
template <Scalar S>
NilElement<S> nil_exp(const NilElement<S>& a)
{
    const std::size_t n = a.order();
    const S scalar = a[0];
    std::vector<S> nu_coeffs(a.coeffs().begin(), a.coeffs().end());
    nu_coeffs[0] = S(0);
    const NilElement<S> nu(std::move(nu_coeffs));

    NilElement<S> sum = NilElement<S>::unit(n);
    NilElement<S> power = NilElement<S>::unit(n);
    for (std::size_t r = 1; r < n; ++r) {
        power = power * nu;
        if (power.is_zero()) {
            break;
        }
        sum = sum + scalar_traits<S>::from_rational(inverse_factorial(static_cast<unsigned>(r))) * power;
    }
    return scalar_traits<S>::exp(scalar) * sum;
}

/// e0^2 - e1^2 - e2^2 - e3^2 + mass; zero iff the basis solves the
/// characteristic equation.
template <Scalar S>
NilElement<S> char_residual(const BasisVectors<S>& basis, const S& mass)
{
    return basis.e0 * basis.e0 - basis.e1 * basis.e1 - basis.e2 * basis.e2 - basis.e3 * basis.e3 +
           mass * NilElement<S>::unit(basis.order());
}

/// Componentwise size of the terms summed in char_residual:
/// sum_i (|e0_i||e0_{r-i}| + ... + |e3_i||e3_{r-i}|) + |mass| at r = 0.
template <Scalar S>
std::vector<double> char_residual_scale(const BasisVectors<S>& basis, const S& mass)
{
    const std::size_t n = basis.order();
    std::vector<double> scale(n, 0.0);
    for (const auto* e : {&basis.e0, &basis.e1, &basis.e2, &basis.e3}) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i <= r; ++i) {
                scale[r] += scalar_traits<S>::magnitude((*e)[i]) * scalar_traits<S>::magnitude((*e)[r - i]);
            }
        }
    }
    scale[0] += scalar_traits<S>::magnitude(mass);
    return scale;
}

/// max_r |residual_r| / scale_r, zero where both vanish.
template <Scalar S>
double char_residual_relative(const BasisVectors<S>& basis, const S& mass)
{
    const auto res = char_residual(basis, mass);
    const auto scale = char_residual_scale(basis, mass);
    double worst = 0.0;
    for (std::size_t r = 0; r < res.order(); ++r) {
        const double m = scalar_traits<S>::magnitude(res[r]);
        if (m > 0.0) {
            worst = std::max(worst, scale[r] > 0.0 ? m / scale[r] : m);
        }
    }
    return worst;
}

} // namespace kgfam
