#pragma once

// The polynomial-exponential solution family U_r = exp(xi0) * At_r(xi_1..xi_r).
//
// The polynomials At_r are produced three independent ways:
//   - the weighted recurrence At_r = (1/r) sum_{i<r} (r-i) xi_{r-i} At_i,
//   - expanding the resolvent (t - zeta)^{-1} in powers of rho and replacing
//     every pole (t - xi0)^{-s} by its residue weight 1/(s-1)!,
//   - enumerating integer partitions of r (coefficient of rho^r in
//     exp(sum_j xi_j rho^j)).
// Numerically, component r of exp(zeta) in the algebra is a fourth route.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kgfam/charsys.hpp"
#include "kgfam/nilalgebra.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

/// Exact polynomial in xi_1..xi_R (variable index j-1 holds xi_j).
using XiPoly = SparsePoly<QCplx>;

struct AtildeFamily {
    std::size_t max_index = 0;
    std::vector<XiPoly> polys;
};

/// A_r as numerators per pole order s of (t - xi0)^{-s}.
struct ResolventExpansion {
    std::size_t r = 0;
    std::map<std::size_t, XiPoly> parts;
};

/// U_r = poly(x) * exp(xi0(x)).
template <Scalar S>
struct SolutionTerm {
    std::size_t r = 0;
    SparsePoly<S> poly{4};
    LinearForm<S> xi0;
};

/// Number of xi variables used for a family up to index R.
inline std::size_t xi_vars(std::size_t R) { return R == 0 ? 1 : R; }

AtildeFamily atilde_recurrence(std::size_t R);

std::vector<ResolventExpansion> resolvent_expand(std::size_t R);

/// Residue map (t - xi0)^{-s} -> 1/(s-1)!.
XiPoly apply_P(const ResolventExpansion& a);

/// At_r by explicit partition enumeration; nvars defaults to xi_vars(r).
XiPoly partition_oracle(std::size_t r, std::size_t nvars = 0);

/// Number of integer partitions of r.
std::size_t partition_count(std::size_t r);

/// Smallest and largest weighted degree sum_j j*c_j over the monomials of p
/// (xi_j has weight j). Both are zero for the zero polynomial.
std::pair<std::size_t, std::size_t> weighted_degree_range(const XiPoly& p);

/// Components 0..R of exp(zeta) in the algebra of order R+1 at a real point.
std::vector<Cplx> exp_component_path(const KChain<Cplx>& chain, const DirectionTable<Cplx>& table,
                                     std::span<const double> point, std::size_t R);

/// Evaluates each At_r (r <= R) at xi values, returning exp(xi0) * At_r.
std::vector<Cplx> evaluate_family_at(const AtildeFamily& fam, std::span<const Cplx> xi);

/// exp(Re xi0) * sum |c| prod |xi_j|^e: a bound on the size of every term in
/// exp(xi0) At_r, used as the scale of relative comparisons.
std::vector<double> family_envelope(const AtildeFamily& fam, std::span<const Cplx> xi);

template <Scalar S>
std::vector<SolutionTerm<S>> build_solutions(const S& mass, const DirectionTable<S>& table, Branch branch,
                                             std::size_t R)
{
    const auto chain = solve_chain(mass, table, branch, R);
    const auto forms = xi_forms(chain, table);
    const auto fam = atilde_recurrence(R);

    std::vector<LinearForm<S>> higher(xi_vars(R));
    for (std::size_t r = 1; r <= R; ++r) {
        higher[r - 1] = forms[r];
    }

    std::vector<SolutionTerm<S>> out;
    out.reserve(R + 1);
    for (std::size_t r = 0; r <= R; ++r) {
        auto poly = substitute_linear<S>(convert_poly<S>(fam.polys[r]), higher);
        out.push_back({r, std::move(poly), forms[0]});
    }
    return out;
}

} // namespace kgfam
