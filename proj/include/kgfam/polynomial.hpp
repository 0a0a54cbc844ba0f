#pragma once

// Sparse multivariate polynomials with complex coefficients.
//
// Two variable universes are used: x-polynomials (nvars = 4, variables
// x0..x3) and xi-polynomials (variables xi_1..xi_R, stored at indices 0..R-1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgfam/errors.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

using Exponents = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

/// Graded lexicographic order: lower total degree first; within a degree, the
/// larger exponent of the leading variable comes first.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) {
            return da < db;
        }
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Relative magnitude below which float coefficients are treated as zero.
inline constexpr double kFloatPruneRelative = 1e-14;

template <Scalar S>
class SparsePoly {
public:
    using TermMap = std::map<Exponents, S, GradedLexLess>;

    explicit SparsePoly(std::size_t nvars) : nvars_(nvars)
    {
        if (nvars == 0) {
            throw std::invalid_argument("SparsePoly: nvars must be positive");
        }
    }

    static SparsePoly constant(std::size_t nvars, const S& c)
    {
        SparsePoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static SparsePoly variable(std::size_t nvars, std::size_t var)
    {
        SparsePoly p(nvars);
        Exponents e(nvars, 0);
        e.at(var) = 1;
        p.add_term(std::move(e), S(1));
        return p;
    }

    static SparsePoly monomial(Exponents exps, const S& c)
    {
        SparsePoly p(exps.size());
        p.add_term(std::move(exps), c);
        return p;
    }

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] std::uint32_t degree() const
    {
        // Graded order keeps the highest degree last.
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    [[nodiscard]] double max_magnitude() const
    {
        double m = 0.0;
        for (const auto& [e, c] : terms_) {
            m = std::max(m, scalar_traits<S>::magnitude(c));
        }
        return m;
    }

    /// Coefficient of the given monomial (zero when absent).
    [[nodiscard]] S coeff(const Exponents& e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    /// Accumulates c into the monomial; does not prune.
    void add_term(Exponents exps, const S& c)
    {
        if (exps.size() != nvars_) {
            throw OrderMismatch("SparsePoly: exponent vector of length " + std::to_string(exps.size()) +
                                " in a polynomial of " + std::to_string(nvars_) + " variables");
        }
        require_finite(c, "SparsePoly");
        if (scalar_traits<S>::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (scalar_traits<S>::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    /// Drops zero terms; in float mode also terms below kFloatPruneRelative
    /// times the largest coefficient.
    SparsePoly& normalize()
    {
        double cutoff = 0.0;
        if constexpr (!scalar_traits<S>::exact) {
            cutoff = kFloatPruneRelative * max_magnitude();
        }
        std::erase_if(terms_, [cutoff](const auto& kv) {
            return scalar_traits<S>::is_zero(kv.second) || scalar_traits<S>::magnitude(kv.second) < cutoff;
        });
        return *this;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b)
    {
        check_nvars(a, b);
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) {
            out.add_term(e, c);
        }
        return out.normalize();
    }

    friend SparsePoly operator-(const SparsePoly& a) { return a.scaled(S(-1)); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        check_nvars(a, b);
        SparsePoly out(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out.normalize();
    }

    [[nodiscard]] SparsePoly scaled(const S& c) const
    {
        SparsePoly out(nvars_);
        if (scalar_traits<S>::is_zero(c)) {
            return out;
        }
        for (const auto& [e, v] : terms_) {
            out.add_term(e, v * c);
        }
        return out.normalize();
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    static void check_nvars(const SparsePoly& a, const SparsePoly& b)
    {
        if (a.nvars_ != b.nvars_) {
            throw OrderMismatch("SparsePoly: " + std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_) +
                                " variables");
        }
    }

    std::size_t nvars_;
    TermMap terms_;
};

/// Complex linear form k*x0 + m*x1 + g*x2 + d*x3.
template <Scalar S>
struct LinearForm {
    S k{0};
    S m{0};
    S g{0};
    S d{0};

    [[nodiscard]] S coeff(std::size_t j) const
    {
        switch (j) {
        case 0: return k;
        case 1: return m;
        case 2: return g;
        case 3: return d;
        default: throw std::out_of_range("LinearForm: index " + std::to_string(j));
        }
    }

    [[nodiscard]] SparsePoly<S> to_poly() const
    {
        SparsePoly<S> p(4);
        for (std::size_t j = 0; j < 4; ++j) {
            Exponents e(4, 0);
            e[j] = 1;
            p.add_term(std::move(e), coeff(j));
        }
        return p;
    }

    [[nodiscard]] Cplx eval(std::span<const double> x) const
    {
        Cplx v(0.0);
        for (std::size_t j = 0; j < std::min<std::size_t>(4, x.size()); ++j) {
            v += scalar_traits<S>::to_cplx(coeff(j)) * x[j];
        }
        return v;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

template <Scalar S>
SparsePoly<S> poly_mul(const SparsePoly<S>& a, const SparsePoly<S>& b)
{
    return a * b;
}

template <Scalar S>
SparsePoly<S> poly_scale(const SparsePoly<S>& a, const S& c)
{
    return a.scaled(c);
}

template <Scalar S>
SparsePoly<S> poly_diff(const SparsePoly<S>& a, std::size_t var)
{
    if (var >= a.nvars()) {
        throw std::out_of_range("poly_diff: variable " + std::to_string(var) + " of " + std::to_string(a.nvars()));
    }
    SparsePoly<S> out(a.nvars());
    for (const auto& [e, c] : a.terms()) {
        if (e[var] == 0) {
            continue;
        }
        Exponents de = e;
        --de[var];
        out.add_term(std::move(de), c * from_int<S>(e[var]));
    }
    return out.normalize();
}

template <Scalar S>
S poly_eval(const SparsePoly<S>& a, std::span<const S> point)
{
    if (point.size() != a.nvars()) {
        throw OrderMismatch("poly_eval: point of length " + std::to_string(point.size()) + " for " +
                            std::to_string(a.nvars()) + " variables");
    }
    S total(0);
    for (const auto& [e, c] : a.terms()) {
        S term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t p = 0; p < e[i]; ++p) {
                term = term * point[i];
            }
        }
        total += term;
    }
    return total;
}

/// Evaluates any polynomial numerically at a complex point.
template <Scalar S>
Cplx poly_eval_numeric(const SparsePoly<S>& a, std::span<const Cplx> point)
{
    if (point.size() != a.nvars()) {
        throw OrderMismatch("poly_eval_numeric: point length mismatch");
    }
    Cplx total(0.0);
    for (const auto& [e, c] : a.terms()) {
        Cplx term = scalar_traits<S>::to_cplx(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t p = 0; p < e[i]; ++p) {
                term *= point[i];
            }
        }
        total += term;
    }
    return total;
}

/// Replaces xi_r (variable index r-1) by forms[r-1], yielding an x-polynomial.
template <Scalar S>
SparsePoly<S> substitute_linear(const SparsePoly<S>& a, std::span<const LinearForm<S>> forms)
{
    if (forms.size() != a.nvars()) {
        throw OrderMismatch("substitute_linear: " + std::to_string(forms.size()) + " forms for " +
                            std::to_string(a.nvars()) + " variables");
    }
    // powers[v][p] = forms[v]^p, filled lazily.
    std::vector<std::vector<SparsePoly<S>>> powers(forms.size());
    const auto power = [&](std::size_t v, std::uint32_t p) -> const SparsePoly<S>& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(SparsePoly<S>::constant(4, S(1)));
        }
        while (cache.size() <= p) {
            cache.push_back(cache.back() * forms[v].to_poly());
        }
        return cache[p];
    };

    SparsePoly<S> out(4);
    for (const auto& [e, c] : a.terms()) {
        SparsePoly<S> term = SparsePoly<S>::constant(4, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] != 0) {
                term = term * power(v, e[v]);
            }
        }
        for (const auto& [te, tc] : term.terms()) {
            out.add_term(te, tc);
        }
    }
    return out.normalize();
}

/// Converts an exact polynomial into the given scalar kind.
template <Scalar S>
SparsePoly<S> convert_poly(const SparsePoly<QCplx>& a)
{
    SparsePoly<S> out(a.nvars());
    for (const auto& [e, c] : a.terms()) {
        out.add_term(e, scalar_traits<S>::from_qcplx(c));
    }
    return out.normalize();
}

} // namespace kgfam
