#pragma once

// Solving the characteristic equation e0^2 - e1^2 - e2^2 - e3^2 + mass = 0
// coefficient by coefficient: the rho^0 part is quadratic in k0, every higher
// part r is linear in k_r once k_0..k_{r-1} are known.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kgfam/errors.hpp"
#include "kgfam/nilalgebra.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

enum class Branch { plus, minus };

inline const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

/// Coefficients of x1, x2, x3 in xi_r (the spatial directions), free parameters.
template <Scalar S>
struct DirectionRow {
    S m{0};
    S g{0};
    S d{0};

    friend bool operator==(const DirectionRow&, const DirectionRow&) = default;
};

template <Scalar S>
struct DirectionTable {
    int dim = 4;
    std::vector<DirectionRow<S>> rows;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const
    {
        if (dim < 2 || dim > 4) {
            throw std::invalid_argument("dim must be 2, 3 or 4 (got " + std::to_string(dim) + ")");
        }
        if (rows.empty()) {
            throw std::invalid_argument("rows must not be empty");
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            require_finite(row.m, "rows.m");
            require_finite(row.g, "rows.g");
            require_finite(row.d, "rows.d");
            if (dim <= 3 && !scalar_traits<S>::is_zero(row.d)) {
                throw std::invalid_argument("rows[" + std::to_string(r) + "].d must be zero for dim=" +
                                            std::to_string(dim));
            }
            if (dim == 2 && !scalar_traits<S>::is_zero(row.g)) {
                throw std::invalid_argument("rows[" + std::to_string(r) + "].g must be zero for dim=2");
            }
        }
    }

    [[nodiscard]] std::vector<S> column(S DirectionRow<S>::*field) const
    {
        std::vector<S> out;
        out.reserve(rows.size());
        for (const auto& row : rows) {
            out.push_back(row.*field);
        }
        return out;
    }
};

template <Scalar S>
struct KChain {
    Branch branch = Branch::plus;
    std::vector<S> k;
};

template <Scalar S>
struct K0Root {
    S value{0};
    bool degenerate = false;
};

/// Coefficient of rho^r in c^2: sum over i + j = r of c_i c_j.
template <Scalar S>
S conv_B(std::span<const S> c, std::size_t r)
{
    if (r >= c.size()) {
        throw std::out_of_range("conv_B: index " + std::to_string(r) + " with " + std::to_string(c.size()) +
                                " coefficients");
    }
    S sum(0);
    for (std::size_t i = 0; i <= r; ++i) {
        sum += c[i] * c[r - i];
    }
    return sum;
}

namespace detail {

template <Scalar S>
bool radicand_vanishes(const S& radicand, const S& mass, const DirectionRow<S>& row0)
{
    if constexpr (scalar_traits<S>::exact) {
        return radicand.is_zero();
    } else {
        const double scale = std::norm(row0.m) + std::norm(row0.g) + std::norm(row0.d) + std::abs(mass);
        return std::abs(radicand) <= 1e-14 * scale;
    }
}

} // namespace detail

/// k0 = +-sqrt(m0^2 + g0^2 + d0^2 - mass) on the principal branch.
template <Scalar S>
K0Root<S> solve_k0(const S& mass, const DirectionRow<S>& row0, Branch branch)
{
    const S radicand = row0.m * row0.m + row0.g * row0.g + row0.d * row0.d - mass;
    if (detail::radicand_vanishes(radicand, mass, row0)) {
        return {S(0), true};
    }
    const S root = scalar_traits<S>::sqrt(radicand);
    return {branch == Branch::plus ? root : S(-root), false};
}

/// k_r = (B_r(m) + B_r(g) + B_r(d) - sum_{i+j=r, 0<i,j<r} k_i k_j) / (2 k0).
template <Scalar S>
S solve_kr(std::size_t r, std::span<const S> kpartial, const DirectionTable<S>& table)
{
    if (r == 0 || kpartial.size() < r) {
        throw std::invalid_argument("solve_kr: need k_0..k_" + std::to_string(r - 1) + " for r=" +
                                    std::to_string(r));
    }
    if (r >= table.rows.size()) {
        throw std::out_of_range("solve_kr: table has no row " + std::to_string(r));
    }
    if (scalar_traits<S>::is_zero(kpartial[0])) {
        throw DegenerateK0("k0 = 0: the equation for k_" + std::to_string(r) + " has no unique solution");
    }
    const auto m = table.column(&DirectionRow<S>::m);
    const auto g = table.column(&DirectionRow<S>::g);
    const auto d = table.column(&DirectionRow<S>::d);
    S rhs = conv_B<S>(m, r) + conv_B<S>(g, r) + conv_B<S>(d, r);
    for (std::size_t i = 1; i < r; ++i) {
        rhs -= kpartial[i] * kpartial[r - i];
    }
    return rhs / (S(2) * kpartial[0]);
}

template <Scalar S>
KChain<S> solve_chain(const S& mass, const DirectionTable<S>& table, Branch branch, std::size_t R)
{
    table.validate();
    if (table.rows.size() < R + 1) {
        throw std::invalid_argument("rows: need " + std::to_string(R + 1) + " rows for R=" + std::to_string(R) +
                                    ", got " + std::to_string(table.rows.size()));
    }
    const auto k0 = solve_k0(mass, table.rows[0], branch);
    if (k0.degenerate && R >= 1) {
        throw DegenerateK0("m0^2 + g0^2 + d0^2 - mass = 0, so k0 = 0 and k_1.. are undetermined");
    }
    KChain<S> chain{branch, {k0.value}};
    chain.k.reserve(R + 1);
    for (std::size_t r = 1; r <= R; ++r) {
        chain.k.push_back(solve_kr<S>(r, chain.k, table));
    }
    return chain;
}

/// xi_r = k_r x0 + m_r x1 + g_r x2 + d_r x3 for r = 0..R.
template <Scalar S>
std::vector<LinearForm<S>> xi_forms(const KChain<S>& chain, const DirectionTable<S>& table)
{
    std::vector<LinearForm<S>> forms;
    forms.reserve(chain.k.size());
    for (std::size_t r = 0; r < chain.k.size(); ++r) {
        const auto& row = table.rows.at(r);
        forms.push_back({chain.k[r], row.m, row.g, row.d});
    }
    return forms;
}

/// e0..e3 in the algebra of order R+1 built from the chain and the table.
template <Scalar S>
BasisVectors<S> basis_from_chain(const KChain<S>& chain, const DirectionTable<S>& table)
{
    const std::size_t n = chain.k.size();
    std::vector<S> m(n);
    std::vector<S> g(n);
    std::vector<S> d(n);
    for (std::size_t r = 0; r < n; ++r) {
        m[r] = table.rows.at(r).m;
        g[r] = table.rows.at(r).g;
        d[r] = table.rows.at(r).d;
    }
    return {NilElement<S>(chain.k), NilElement<S>(std::move(m)), NilElement<S>(std::move(g)),
            NilElement<S>(std::move(d))};
}

} // namespace kgfam
