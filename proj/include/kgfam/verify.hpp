#pragma once

// Certifies that U = P(x) exp(xi0(x)) is annihilated by the Klein-Gordon
// operator d^2/dx0^2 - sum_{j<dim} d^2/dxj^2 + mass, exactly (on the
// polynomial factor) and numerically (finite differences on U itself).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kgfam/charsys.hpp"
#include "kgfam/family.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

using Point = std::array<double, 4>;

struct Signature {
    int dim = 4;
    std::vector<int> signs;

    /// (+1, -1, ..., -1) of length dim.
    static Signature klein_gordon(int dim);
};

struct VerificationReport {
    std::size_t r = 0;
    /// max |coeff of the residual factor Q| / max |coeff of P|.
    double symbolic_max_coeff = 0.0;
    /// Largest scaled finite-difference residual; negative when not run.
    double numeric_max_residual = -1.0;
    bool passed = false;
    std::string notes;
};

struct VerifyOptions {
    double tol = 1e-10;
    bool numeric = false;
    std::size_t points = 20;
    double h = 1e-3;
    std::uint64_t seed = 42;
    double numeric_tol = 1e-6;
};

/// Detailed outcome of a finite-difference check.
struct NumericResidual {
    /// max over points of |(box + mass) U|.
    double absolute = 0.0;
    /// max over points of |(box + mass) U| / max(1, |mass U| + sum_j |d^2U/dxj^2|).
    double relative = 0.0;
};

namespace detail {

template <Scalar S>
void check_dimension(const SolutionTerm<S>& u, const Signature& sig)
{
    if (sig.dim < 1 || sig.dim > 4 || sig.signs.size() != static_cast<std::size_t>(sig.dim)) {
        throw DimensionMismatch("signature of dimension " + std::to_string(sig.dim));
    }
    if (u.poly.nvars() != 4) {
        throw DimensionMismatch("solution polynomial must be over x0..x3");
    }
    for (std::size_t j = static_cast<std::size_t>(sig.dim); j < 4; ++j) {
        if (!scalar_traits<S>::is_zero(u.xi0.coeff(j))) {
            throw DimensionMismatch("xi0 depends on x" + std::to_string(j) + " in dimension " +
                                    std::to_string(sig.dim));
        }
        for (const auto& [e, c] : u.poly.terms()) {
            if (e[j] != 0) {
                throw DimensionMismatch("polynomial depends on x" + std::to_string(j) + " in dimension " +
                                        std::to_string(sig.dim));
            }
        }
    }
}

} // namespace detail

/// Q with (box + mass)(P e^{xi0}) = Q e^{xi0}:
/// Q = sum_j s_j (P_jj + 2 l_j P_j) + (sum_j s_j l_j^2 + mass) P.
template <Scalar S>
SparsePoly<S> apply_kg_operator(const SolutionTerm<S>& u, const S& mass, const Signature& sig)
{
    detail::check_dimension(u, sig);
    S symbol = mass;
    SparsePoly<S> q(4);
    for (std::size_t j = 0; j < static_cast<std::size_t>(sig.dim); ++j) {
        const S sign = from_int<S>(sig.signs[j]);
        const S l = u.xi0.coeff(j);
        symbol += sign * l * l;
        const auto first = poly_diff(u.poly, j);
        const auto second = poly_diff(first, j);
        q = q + (second + first.scaled(S(2) * l)).scaled(sign);
    }
    return q + u.poly.scaled(symbol);
}

/// Flattened polynomial for repeated numeric evaluation.
class CompiledPoly {
public:
    template <Scalar S>
    explicit CompiledPoly(const SparsePoly<S>& p)
    {
        if (p.nvars() != 4) {
            throw DimensionMismatch("CompiledPoly: expected an x-polynomial");
        }
        for (const auto& [e, c] : p.terms()) {
            coeffs_.push_back(scalar_traits<S>::to_cplx(c));
            exps_.push_back({e[0], e[1], e[2], e[3]});
            for (std::size_t j = 0; j < 4; ++j) {
                max_exp_ = std::max(max_exp_, e[j]);
            }
        }
    }

    [[nodiscard]] Cplx operator()(const Point& x) const;

private:
    std::vector<Cplx> coeffs_;
    std::vector<std::array<std::uint32_t, 4>> exps_;
    std::uint32_t max_exp_ = 0;
};

/// Uniform points in [-1, 1]^dim (remaining coordinates zero).
std::vector<Point> sample_points(int dim, std::size_t count, std::uint64_t seed);

NumericResidual numeric_residual_detail(const CompiledPoly& poly, const LinearForm<Cplx>& xi0, Cplx mass,
                                        const Signature& sig, std::span<const Point> points, double h);

/// 4th-order central differences (5-point stencil per second derivative).
template <Scalar S>
NumericResidual numeric_residual_detail(const SolutionTerm<S>& u, const S& mass, const Signature& sig,
                                        std::span<const Point> points, double h)
{
    detail::check_dimension(u, sig);
    const LinearForm<Cplx> xi0{scalar_traits<S>::to_cplx(u.xi0.k), scalar_traits<S>::to_cplx(u.xi0.m),
                               scalar_traits<S>::to_cplx(u.xi0.g), scalar_traits<S>::to_cplx(u.xi0.d)};
    return numeric_residual_detail(CompiledPoly(u.poly), xi0, scalar_traits<S>::to_cplx(mass), sig, points, h);
}

/// max over points of |(box + mass) U|, finite-difference estimate.
template <Scalar S>
double numeric_residual(const SolutionTerm<S>& u, const S& mass, const Signature& sig,
                        std::span<const Point> points, double h)
{
    return numeric_residual_detail(u, mass, sig, points, h).absolute;
}

template <Scalar S>
VerificationReport verify_solution(const SolutionTerm<S>& u, const S& mass, const Signature& sig,
                                   const VerifyOptions& opts)
{
    VerificationReport rep;
    rep.r = u.r;
    const auto q = apply_kg_operator(u, mass, sig);
    const double scale = u.poly.max_magnitude();
    if (q.is_zero()) {
        rep.symbolic_max_coeff = 0.0;
    } else {
        rep.symbolic_max_coeff = scale > 0.0 ? q.max_magnitude() / scale : q.max_magnitude();
    }
    bool ok = rep.symbolic_max_coeff <= opts.tol;
    if (!ok) {
        rep.notes = "residual polynomial has " + std::to_string(q.term_count()) + " nonzero terms";
    }
    if (opts.numeric) {
        const auto pts = sample_points(sig.dim, opts.points, opts.seed);
        const auto res = numeric_residual_detail(u, mass, sig, pts, opts.h);
        rep.numeric_max_residual = res.relative;
        if (res.relative > opts.numeric_tol) {
            ok = false;
            rep.notes += (rep.notes.empty() ? "" : "; ") + std::string("finite-difference residual above tolerance");
        }
    }
    rep.passed = ok;
    return rep;
}

enum class RadicandForm {
    subtracted_mass, ///< k0^2 = m0^2 + g0^2 + d0^2 - mass (from the characteristic system)
    added_mass,      ///< k0^2 = mass + m0^2 + g0^2 + d0^2
};

struct RadicandVerdict {
    Cplx subtracted_residual{0.0};
    Cplx added_residual{0.0};
    bool subtracted_passes = false;
    bool added_passes = false;
    std::string text;
};

/// U_0 built with the given radicand convention (plus branch).
SolutionTerm<Cplx> u0_with_radicand(Cplx mass, const DirectionRow<Cplx>& row0, RadicandForm form);

/// Builds U_0 under both radicand conventions and reports which one is
/// annihilated by the operator.
RadicandVerdict adjudicate_radicand(Cplx mass, const DirectionRow<Cplx>& row0, int dim);

} // namespace kgfam
