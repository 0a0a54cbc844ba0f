#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "kgfam/charsys.hpp"
#include "kgfam/nilalgebra.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Complex number with modulus <= radius.
    Cplx cplx(double radius = 2.0) { return std::polar(uniform(0.0, radius), uniform(-M_PI, M_PI)); }

    /// Small rational complex (p/q with |p| <= 9, 1 <= q <= 6).
    QCplx qcplx()
    {
        return {Rational(integer(-9, 9), integer(1, 6)), Rational(integer(-9, 9), integer(1, 6))};
    }

    template <Scalar S>
    S scalar()
    {
        if constexpr (std::is_same_v<S, QCplx>) {
            return qcplx();
        } else {
            return cplx();
        }
    }

    template <Scalar S>
    NilElement<S> element(std::size_t n)
    {
        std::vector<S> c(n);
        for (auto& v : c) {
            v = scalar<S>();
        }
        return NilElement<S>(std::move(c));
    }

    template <Scalar S>
    SparsePoly<S> poly(std::size_t nvars, std::size_t terms, std::uint32_t max_exp)
    {
        SparsePoly<S> p(nvars);
        for (std::size_t t = 0; t < terms; ++t) {
            Exponents e(nvars);
            for (auto& x : e) {
                x = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_exp)));
            }
            p.add_term(std::move(e), scalar<S>());
        }
        return p.normalize();
    }

    /// Random direction table with |coefficients| <= 2 respecting dim.
    DirectionTable<Cplx> table(int dim, std::size_t R)
    {
        DirectionTable<Cplx> t;
        t.dim = dim;
        for (std::size_t r = 0; r <= R; ++r) {
            const Cplx m = cplx();
            const Cplx g = dim >= 3 ? cplx() : Cplx(0.0);
            const Cplx d = dim >= 4 ? cplx() : Cplx(0.0);
            t.rows.push_back({m, g, d});
        }
        return t;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double rel_diff(Cplx a, Cplx b, double floor = 1.0)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

template <Scalar S>
double max_rel_diff(const NilElement<S>& a, const NilElement<S>& b)
{
    double scale = std::max({a.max_magnitude(), b.max_magnitude(), 1e-300});
    double worst = 0.0;
    for (std::size_t r = 0; r < a.order(); ++r) {
        worst = std::max(worst, std::abs(scalar_traits<S>::to_cplx(a[r]) - scalar_traits<S>::to_cplx(b[r])) / scale);
    }
    return worst;
}

/// exp(a) by summing a^r / r! term by term with the algebra product, r up to
/// n - 1 + ceil(|a0|) + 40.
inline NilElement<Cplx> exp_series_oracle(const NilElement<Cplx>& a)
{
    const std::size_t n = a.order();
    const auto terms = n - 1 + static_cast<std::size_t>(std::ceil(std::abs(a[0]))) + 40;
    NilElement<Cplx> sum = NilElement<Cplx>::unit(n);
    NilElement<Cplx> term = NilElement<Cplx>::unit(n);
    for (std::size_t r = 1; r <= terms; ++r) {
        term = (Cplx(1.0 / static_cast<double>(r))) * (term * a);
        sum = sum + term;
    }
    return sum;
}

} // namespace kgfam::testing
