#include <doctest.h>

#include "kgfam/golden.hpp"
#include "kgfam/polynomial.hpp"
#include "support.hpp"

using namespace kgfam;
using kgfam::testing::Gen;

namespace {

using QPoly = SparsePoly<QCplx>;

QPoly xi(std::string_view text, std::size_t nvars = 3) { return parse_xi_poly(text, nvars); }

QPoly x_var(std::size_t j) { return QPoly::variable(4, j); }

} // namespace

TEST_CASE("poly_mul")
{
    CHECK(poly_mul(xi("xi1"), xi("xi2")) == xi("xi1*xi2"));
    CHECK(poly_mul(xi("xi1"), xi("xi1")) == xi("xi1^2"));
    CHECK(poly_mul(xi("xi2 + 1/2*xi1^2"), xi("xi1")) == xi("xi1*xi2 + 1/2*xi1^3"));
    CHECK_THROWS_AS(poly_mul(xi("xi1", 2), xi("xi1", 3)), OrderMismatch);
}

TEST_CASE("poly_scale")
{
    const auto a = xi("xi1 + 3*xi2^2");
    CHECK(poly_scale(a, QCplx(1)) == a);
    CHECK(poly_scale(a, QCplx(0)).is_zero());
    CHECK(poly_scale(xi("xi1"), QCplx(Rational(1, 2))) == xi("1/2*xi1"));
}

TEST_CASE("poly_diff")
{
    const auto x0 = x_var(0);
    const auto x1 = x_var(1);
    CHECK(poly_diff(x0 * x0, 0) == x0.scaled(QCplx(2)));
    CHECK(poly_diff(x0, 1).is_zero());
    CHECK(poly_diff(x0 * x0 * x1, 0) == (x0 * x1).scaled(QCplx(2)));
    CHECK_THROWS_AS(poly_diff(x0, 4), std::out_of_range);

    Gen gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen.poly<QCplx>(4, 6, 4);
        const auto i = static_cast<std::size_t>(gen.integer(0, 3));
        const auto j = static_cast<std::size_t>(gen.integer(0, 3));
        CHECK(poly_diff(poly_diff(p, i), j) == poly_diff(poly_diff(p, j), i));
    }
}

TEST_CASE("poly_eval")
{
    const std::vector<QCplx> three{3};
    CHECK(poly_eval(xi("xi1", 1), std::span<const QCplx>(three)) == QCplx(3));
    const std::vector<QCplx> any{7, 8, 9};
    CHECK(poly_eval(QPoly(3), std::span<const QCplx>(any)) == QCplx(0));
    const std::vector<QCplx> pt{2, 5};
    CHECK(poly_eval(xi("xi2 + 1/2*xi1^2", 2), std::span<const QCplx>(pt)) == QCplx(7));
    CHECK_THROWS_AS(poly_eval(xi("xi1", 2), std::span<const QCplx>(three)), OrderMismatch);
}

TEST_CASE("ring laws and evaluation homomorphism")
{
    Gen gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen.poly<QCplx>(3, 4, 3);
        const auto b = gen.poly<QCplx>(3, 4, 3);
        const auto c = gen.poly<QCplx>(3, 4, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        const std::vector<QCplx> pt{gen.qcplx(), gen.qcplx(), gen.qcplx()};
        const std::span<const QCplx> s(pt);
        CHECK(poly_eval(a * b, s) == poly_eval(a, s) * poly_eval(b, s));
        CHECK(poly_eval(a + b, s) == poly_eval(a, s) + poly_eval(b, s));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen.poly<Cplx>(3, 4, 3);
        const auto b = gen.poly<Cplx>(3, 4, 3);
        const std::vector<Cplx> pt{gen.cplx(1.0), gen.cplx(1.0), gen.cplx(1.0)};
        const std::span<const Cplx> s(pt);
        const Cplx lhs = poly_eval(a * b, s);
        const Cplx rhs = poly_eval(a, s) * poly_eval(b, s);
        CHECK(kgfam::testing::rel_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("substitute_linear")
{
    const std::vector<LinearForm<QCplx>> f1{{QCplx(2), QCplx(-1), QCplx(Rational(1, 3)), QCplx(5)}};
    CHECK(substitute_linear(xi("xi1", 1), std::span<const LinearForm<QCplx>>(f1)) == f1[0].to_poly());

    const std::vector<LinearForm<QCplx>> fx0{{QCplx(1), 0, 0, 0}};
    CHECK(substitute_linear(xi("xi1^2", 1), std::span<const LinearForm<QCplx>>(fx0)) == x_var(0) * x_var(0));

    // xi1 = x1, xi2 = x0
    const std::vector<LinearForm<QCplx>> forms{{0, QCplx(1), 0, 0}, {QCplx(1), 0, 0, 0}};
    CHECK(substitute_linear(xi("xi2 + 1/2*xi1^2", 2), std::span<const LinearForm<QCplx>>(forms)) ==
          x_var(0) + (x_var(1) * x_var(1)).scaled(QCplx(Rational(1, 2))));

    CHECK_THROWS_AS(substitute_linear(xi("xi1", 2), std::span<const LinearForm<QCplx>>(f1)), OrderMismatch);
}

TEST_CASE("substitution composes with evaluation")
{
    Gen gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen.poly<QCplx>(3, 5, 3);
        std::vector<LinearForm<QCplx>> forms(3);
        for (auto& f : forms) {
            f = {gen.qcplx(), gen.qcplx(), gen.qcplx(), gen.qcplx()};
        }
        const std::vector<QCplx> x{gen.qcplx(), gen.qcplx(), gen.qcplx(), gen.qcplx()};
        std::vector<QCplx> xis;
        for (const auto& f : forms) {
            xis.push_back(poly_eval(f.to_poly(), std::span<const QCplx>(x)));
        }
        const auto substituted = substitute_linear(p, std::span<const LinearForm<QCplx>>(forms));
        CHECK(poly_eval(substituted, std::span<const QCplx>(x)) == poly_eval(p, std::span<const QCplx>(xis)));
    }
}

TEST_CASE("float pruning is relative")
{
    SparsePoly<Cplx> p(2);
    p.add_term({1, 0}, Cplx(1e6));
    p.add_term({0, 1}, Cplx(1e-9));
    p.add_term({0, 0}, Cplx(1e-3));
    p.normalize();
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({0, 1}) == Cplx(0.0));

    SparsePoly<Cplx> small(1);
    small.add_term({1}, Cplx(1e-30));
    small.add_term({0}, Cplx(1e-31));
    small.normalize();
    CHECK(small.term_count() == 2);
}

TEST_CASE("graded lexicographic order")
{
    const auto p = xi("xi2^2 + xi1*xi3 + xi1 + 1");
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms()) {
        order.push_back(e);
    }
    CHECK(order == std::vector<Exponents>{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 2, 0}});
}
