#include "kgfam/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace kgfam {

Signature Signature::klein_gordon(int dim)
{
    if (dim < 2 || dim > 4) {
        throw DimensionMismatch("Klein-Gordon signature needs dim 2, 3 or 4 (got " + std::to_string(dim) + ")");
    }
    Signature sig{dim, std::vector<int>(static_cast<std::size_t>(dim), -1)};
    sig.signs[0] = 1;
    return sig;
}

Cplx CompiledPoly::operator()(const Point& x) const
{
    // pw[j][p] = x_j^p
    std::array<std::vector<double>, 4> pw;
    for (std::size_t j = 0; j < 4; ++j) {
        pw[j].resize(max_exp_ + 1);
        pw[j][0] = 1.0;
        for (std::uint32_t p = 1; p <= max_exp_; ++p) {
            pw[j][p] = pw[j][p - 1] * x[j];
        }
    }
    Cplx total(0.0);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        const auto& e = exps_[t];
        total += coeffs_[t] * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]]);
    }
    return total;
}

std::vector<Point> sample_points(int dim, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<Point> pts(count, Point{0.0, 0.0, 0.0, 0.0});
    for (auto& p : pts) {
        for (int j = 0; j < dim; ++j) {
            p[static_cast<std::size_t>(j)] = coord(rng);
        }
    }
    return pts;
}

NumericResidual numeric_residual_detail(const CompiledPoly& poly, const LinearForm<Cplx>& xi0, Cplx mass,
                                        const Signature& sig, std::span<const Point> points, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("numeric_residual: step h must be positive");
    }
    const auto u = [&](const Point& x) {
        const Cplx p = poly(x);
        return p == Cplx(0.0) ? p : p * std::exp(xi0.eval(x));
    };

    NumericResidual out;
    for (const auto& x : points) {
        const Cplx centre = u(x);
        Cplx value = mass * centre;
        double scale = std::abs(mass * centre);
        for (std::size_t j = 0; j < static_cast<std::size_t>(sig.dim); ++j) {
            const auto shifted = [&](double offset) {
                Point y = x;
                y[j] += offset;
                return u(y);
            };
            const Cplx second =
                (-shifted(2 * h) + 16.0 * shifted(h) - 30.0 * centre + 16.0 * shifted(-h) - shifted(-2 * h)) /
                (12.0 * h * h);
            value += static_cast<double>(sig.signs[j]) * second;
            scale += std::abs(second);
        }
        const double abs_res = std::abs(value);
        out.absolute = std::max(out.absolute, abs_res);
        out.relative = std::max(out.relative, abs_res / std::max(1.0, scale));
    }
    return out;
}

SolutionTerm<Cplx> u0_with_radicand(Cplx mass, const DirectionRow<Cplx>& row0, RadicandForm form)
{
    const Cplx spatial = row0.m * row0.m + row0.g * row0.g + row0.d * row0.d;
    const Cplx radicand = form == RadicandForm::subtracted_mass ? spatial - mass : mass + spatial;
    SolutionTerm<Cplx> u;
    u.r = 0;
    u.poly = SparsePoly<Cplx>::constant(4, Cplx(1.0));
    u.xi0 = {principal_sqrt(radicand), row0.m, row0.g, row0.d};
    return u;
}

RadicandVerdict adjudicate_radicand(Cplx mass, const DirectionRow<Cplx>& row0, int dim)
{
    const auto sig = Signature::klein_gordon(dim);
    DirectionTable<Cplx> table{dim, {row0}};
    table.validate();

    const double scale =
        std::max(1.0, std::abs(mass) + std::norm(row0.m) + std::norm(row0.g) + std::norm(row0.d));
    const auto residual = [&](RadicandForm form) {
        const auto q = apply_kg_operator(u0_with_radicand(mass, row0, form), mass, sig);
        return q.coeff(Exponents(4, 0));
    };

    RadicandVerdict v;
    v.subtracted_residual = residual(RadicandForm::subtracted_mass);
    v.added_residual = residual(RadicandForm::added_mass);
    v.subtracted_passes = std::abs(v.subtracted_residual) <= 1e-12 * scale;
    v.added_passes = std::abs(v.added_residual) <= 1e-12 * scale;

    std::ostringstream os;
    if (v.subtracted_passes && v.added_passes) {
        os << "radicands coincide (𝔪 = 0); both forms annihilate operator";
    } else if (v.subtracted_passes) {
        os << "system form (−𝔪) annihilates operator; printed form (+𝔪) does not";
    } else if (v.added_passes) {
        os << "printed form (+𝔪) annihilates operator; system form (−𝔪) does not";
    } else {
        os << "neither radicand form annihilates operator";
    }
    v.text = os.str();
    return v;
}

} // namespace kgfam
