#include "kgfam/family.hpp"

#include <cmath>

namespace kgfam {

namespace {

XiPoly xi_variable(std::size_t nvars, std::size_t j) { return XiPoly::variable(nvars, j - 1); }

// Values of xi_1..xi_nvars taken from xi (xi[0] is xi0); missing ones are zero.
std::vector<Cplx> higher_xi(std::span<const Cplx> xi, std::size_t nvars)
{
    std::vector<Cplx> out(nvars, Cplx(0.0));
    for (std::size_t j = 1; j < xi.size() && j <= nvars; ++j) {
        out[j - 1] = xi[j];
    }
    return out;
}

} // namespace

AtildeFamily atilde_recurrence(std::size_t R)
{
    const std::size_t nvars = xi_vars(R);
    AtildeFamily fam{R, {}};
    fam.polys.reserve(R + 1);
    fam.polys.push_back(XiPoly::constant(nvars, QCplx(1)));
    for (std::size_t r = 1; r <= R; ++r) {
        XiPoly acc(nvars);
        for (std::size_t i = 0; i < r; ++i) {
            const QCplx weight(Rational(static_cast<long>(r - i), static_cast<long>(r)));
            acc = acc + (xi_variable(nvars, r - i) * fam.polys[i]).scaled(weight);
        }
        fam.polys.push_back(std::move(acc));
    }
    return fam;
}

std::vector<ResolventExpansion> resolvent_expand(std::size_t R)
{
    const std::size_t nvars = xi_vars(R);
    std::vector<ResolventExpansion> out;
    out.reserve(R + 1);

    ResolventExpansion a0{0, {}};
    a0.parts.emplace(1, XiPoly::constant(nvars, QCplx(1)));
    out.push_back(std::move(a0));

    for (std::size_t r = 1; r <= R; ++r) {
        // sum_{i<r} xi_{r-i} A_i, then one more factor 1/(t - xi0).
        std::map<std::size_t, XiPoly> acc;
        for (std::size_t i = 0; i < r; ++i) {
            const XiPoly xi = xi_variable(nvars, r - i);
            for (const auto& [s, numerator] : out[i].parts) {
                auto [it, inserted] = acc.try_emplace(s + 1, nvars);
                it->second = it->second + xi * numerator;
            }
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
        out.push_back({r, std::move(acc)});
    }
    return out;
}

XiPoly apply_P(const ResolventExpansion& a)
{
    if (a.parts.empty()) {
        throw std::invalid_argument("apply_P: empty resolvent expansion");
    }
    XiPoly out(a.parts.begin()->second.nvars());
    for (const auto& [s, numerator] : a.parts) {
        out = out + numerator.scaled(QCplx(inverse_factorial(static_cast<unsigned>(s - 1))));
    }
    return out;
}

std::pair<std::size_t, std::size_t> weighted_degree_range(const XiPoly& p)
{
    if (p.is_zero()) {
        return {0, 0};
    }
    std::size_t lo = SIZE_MAX;
    std::size_t hi = 0;
    for (const auto& [e, c] : p.terms()) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < e.size(); ++j) {
            w += (j + 1) * e[j];
        }
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    return {lo, hi};
}

std::vector<Cplx> exp_component_path(const KChain<Cplx>& chain, const DirectionTable<Cplx>& table,
                                     std::span<const double> point, std::size_t R)
{
    if (chain.k.size() < R + 1) {
        throw std::invalid_argument("exp_component_path: chain shorter than R+1");
    }
    const auto forms = xi_forms(chain, table);
    std::vector<Cplx> zeta(R + 1);
    for (std::size_t r = 0; r <= R; ++r) {
        zeta[r] = forms[r].eval(point);
    }
    const auto e = nil_exp(NilElement<Cplx>(std::move(zeta)));
    return {e.coeffs().begin(), e.coeffs().end()};
}

std::vector<Cplx> evaluate_family_at(const AtildeFamily& fam, std::span<const Cplx> xi)
{
    const std::size_t nvars = xi_vars(fam.max_index);
    const auto point = higher_xi(xi, nvars);
    const Cplx scale = std::exp(xi.empty() ? Cplx(0.0) : xi[0]);
    std::vector<Cplx> out;
    out.reserve(fam.polys.size());
    for (const auto& p : fam.polys) {
        out.push_back(scale * poly_eval_numeric(p, std::span<const Cplx>(point)));
    }
    return out;
}

std::vector<double> family_envelope(const AtildeFamily& fam, std::span<const Cplx> xi)
{
    const std::size_t nvars = xi_vars(fam.max_index);
    auto point = higher_xi(xi, nvars);
    for (auto& v : point) {
        v = std::abs(v);
    }
    const double scale = std::exp(xi.empty() ? 0.0 : xi[0].real());
    std::vector<double> out;
    out.reserve(fam.polys.size());
    for (const auto& p : fam.polys) {
        double total = 0.0;
        for (const auto& [e, c] : p.terms()) {
            double term = scalar_traits<QCplx>::magnitude(c);
            for (std::size_t j = 0; j < e.size(); ++j) {
                term *= std::pow(point[j].real(), e[j]);
            }
            total += term;
        }
        out.push_back(scale * total);
    }
    return out;
}

} // namespace kgfam
