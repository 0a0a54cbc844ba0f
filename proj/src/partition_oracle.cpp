// Brute-force construction of At_r from integer partitions. Shares no code
// with the recurrence or resolvent routes.

#include <functional>

#include "kgfam/family.hpp"

namespace kgfam {

namespace {

// Enumerates multiplicity vectors counts[j-1] = c_j with sum_j j*c_j == r,
// parts taken in decreasing size.
void enumerate(std::size_t remaining, std::size_t max_part, std::vector<std::uint32_t>& counts,
               const std::function<void(const std::vector<std::uint32_t>&)>& visit)
{
    if (remaining == 0) {
        visit(counts);
        return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++counts[part - 1];
        enumerate(remaining - part, part, counts, visit);
        --counts[part - 1];
    }
}

} // namespace

XiPoly partition_oracle(std::size_t r, std::size_t nvars)
{
    if (nvars == 0) {
        nvars = xi_vars(r);
    }
    if (nvars < r) {
        throw std::invalid_argument("partition_oracle: " + std::to_string(nvars) + " variables cannot hold xi_" +
                                    std::to_string(r));
    }
    XiPoly out(nvars);
    std::vector<std::uint32_t> counts(nvars, 0);
    enumerate(r, r, counts, [&out](const std::vector<std::uint32_t>& c) {
        Rational coeff(1);
        for (const auto cj : c) {
            coeff *= inverse_factorial(cj);
        }
        out.add_term(Exponents(c.begin(), c.end()), QCplx(coeff));
    });
    return out;
}

std::size_t partition_count(std::size_t r)
{
    // Standard coin-change DP over part sizes.
    std::vector<std::size_t> ways(r + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 1; part <= r; ++part) {
        for (std::size_t total = part; total <= r; ++total) {
            ways[total] += ways[total - part];
        }
    }
    return ways[r];
}

} // namespace kgfam
