#pragma once

// Reference forms transcribed by hand from the published tables, plus the
// hand-derived closed forms of the first three solutions. Used by the
// reproduce-paper command and by the acceptance suite.

#include <string>
#include <string_view>
#include <vector>

#include "kgfam/charsys.hpp"
#include "kgfam/family.hpp"

namespace kgfam {

/// Parses "xi4 + 2/2*xi1*xi3 + 1/2*xi2^2" into an exact xi-polynomial. Terms
/// are joined by '+' or '-', factors by '*'; like terms are merged.
XiPoly parse_xi_poly(std::string_view text, std::size_t nvars);

struct GoldenCorpus {
    std::size_t nvars = 6;
    std::vector<XiPoly> atilde;                  ///< At_0..At_5
    std::vector<ResolventExpansion> resolvent;   ///< A_0..A_6
    XiPoly p_of_a3{6};                           ///< P applied to A_3
    std::vector<std::string> atilde_text;        ///< the source strings
    std::vector<std::vector<std::string>> resolvent_text;
    std::string p_of_a3_text;
};

const GoldenCorpus& golden_corpus();

/// First three family members written out by hand in terms of the direction
/// coefficients: k0 = +-sqrt(rad), k1 = +-(m0m1+g0g1+d0d1)/sqrt(rad),
/// k2 = +-[m1^2+2m0m2+g1^2+2g0g2+d1^2+2d0d2 - (m0m1+g0g1+d0d1)^2/rad]/(2 sqrt(rad)),
/// U_0 = e^{xi0}, U_1 = xi1 e^{xi0}, U_2 = (xi2 + xi1^2/2) e^{xi0}.
/// rad is m0^2+g0^2+d0^2-mass when subtract_mass is set, otherwise
/// mass+m0^2+g0^2+d0^2.
template <Scalar S>
std::vector<SolutionTerm<S>> closed_form_first_solutions(const S& mass, const DirectionTable<S>& table,
                                                          Branch branch, bool subtract_mass = true)
{
    if (table.rows.size() < 3) {
        throw std::invalid_argument("closed_form_first_solutions: need three rows");
    }
    const auto& [m0, g0, d0] = table.rows[0];
    const auto& [m1, g1, d1] = table.rows[1];
    const auto& [m2, g2, d2] = table.rows[2];
    const S spatial = m0 * m0 + g0 * g0 + d0 * d0;
    const S rad = subtract_mass ? spatial - mass : mass + spatial;
    const S sign = branch == Branch::plus ? S(1) : S(-1);
    const S root = scalar_traits<S>::sqrt(rad);
    const S dot = m0 * m1 + g0 * g1 + d0 * d1;

    const S k0 = sign * root;
    const S k1 = sign * dot / root;
    const S k2 = sign / (S(2) * root) *
                 (m1 * m1 + S(2) * m0 * m2 + g1 * g1 + S(2) * g0 * g2 + d1 * d1 + S(2) * d0 * d2 - dot * dot / rad);

    const LinearForm<S> xi0{k0, m0, g0, d0};
    const auto xi1 = LinearForm<S>{k1, m1, g1, d1}.to_poly();
    const auto xi2 = LinearForm<S>{k2, m2, g2, d2}.to_poly();
    const S half = scalar_traits<S>::from_rational(Rational(1, 2));
    return {
        {0, SparsePoly<S>::constant(4, S(1)), xi0},
        {1, xi1, xi0},
        {2, xi2 + (xi1 * xi1).scaled(half), xi0},
    };
}

} // namespace kgfam
