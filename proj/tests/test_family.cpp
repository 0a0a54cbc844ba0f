#include <doctest.h>

#include "kgfam/family.hpp"
#include "kgfam/golden.hpp"
#include "kgfam/render.hpp"
#include "support.hpp"

using namespace kgfam;
using kgfam::testing::Gen;

namespace {

XiPoly xi(std::string_view text, std::size_t nvars) { return parse_xi_poly(text, nvars); }

} // namespace

TEST_CASE("atilde_recurrence first members")
{
    const auto fam = atilde_recurrence(5);
    CHECK(fam.polys.size() == 6);
    CHECK(fam.polys[0] == xi("1", 5));
    CHECK(fam.polys[1] == xi("xi1", 5));
    CHECK(fam.polys[2] == xi("xi2 + 1/2*xi1^2", 5));
    CHECK(fam.polys[3] == xi("xi3 + xi1*xi2 + 1/6*xi1^3", 5));
    CHECK(fam.polys[5] ==
          xi("xi5 + xi1*xi4 + xi2*xi3 + 1/2*xi1*xi2^2 + 1/2*xi1^2*xi3 + 1/6*xi1^3*xi2 + 1/120*xi1^5", 5));

    const auto zero = atilde_recurrence(0);
    CHECK(zero.polys.size() == 1);
    CHECK(zero.polys[0] == XiPoly::constant(1, QCplx(1)));
}

TEST_CASE("resolvent_expand")
{
    const auto a = resolvent_expand(6);
    REQUIRE(a.size() == 7);
    CHECK(a[0].parts.size() == 1);
    CHECK(a[0].parts.at(1) == xi("1", 6));
    CHECK(a[1].parts.size() == 1);
    CHECK(a[1].parts.at(2) == xi("xi1", 6));
    CHECK(a[3].parts.at(2) == xi("xi3", 6));
    CHECK(a[3].parts.at(3) == xi("2*xi1*xi2", 6));
    CHECK(a[3].parts.at(4) == xi("xi1^3", 6));
    CHECK(a[6].parts.at(7) == xi("xi1^6", 6));

    // for r >= 1 only pole orders 2..r+1, each numerator of weighted degree r
    for (std::size_t r = 1; r <= 6; ++r) {
        CHECK(a[r].parts.begin()->first == 2);
        CHECK(a[r].parts.rbegin()->first == r + 1);
        for (const auto& [s, numerator] : a[r].parts) {
            CHECK(weighted_degree_range(numerator) == std::pair<std::size_t, std::size_t>{r, r});
            CHECK(numerator.degree() == s - 1);
        }
    }
}

TEST_CASE("apply_P")
{
    const auto a = resolvent_expand(12);
    CHECK(apply_P(a[3]) == xi("xi3 + xi1*xi2 + 1/6*xi1^3", 12));
    CHECK(apply_P(a[1]) == xi("xi1", 12));
    CHECK(apply_P(a[0]) == xi("1", 12));

    const auto fam = atilde_recurrence(12);
    for (std::size_t r = 0; r <= 12; ++r) {
        CHECK(apply_P(a[r]) == fam.polys[r]);
    }
}

TEST_CASE("partition_oracle")
{
    CHECK(partition_oracle(2) == xi("xi2 + 1/2*xi1^2", 2));
    CHECK(partition_oracle(0) == xi("1", 1));
    // ξ4 + (2ξ1ξ3+ξ2²)/2! + 3ξ1²ξ2/3! + ξ1⁴/4!
    CHECK(partition_oracle(4) == xi("xi4 + 2/2*xi1*xi3 + 1/2*xi2^2 + 3/6*xi1^2*xi2 + 1/24*xi1^4", 4));

    const auto fam = atilde_recurrence(12);
    for (std::size_t r = 0; r <= 12; ++r) {
        CHECK(partition_oracle(r, 12) == fam.polys[r]);
    }
}

TEST_CASE("partition counts and homogeneity")
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::size_t r = 0; r < p.size(); ++r) {
        CHECK(partition_count(r) == p[r]);
    }
    const auto fam = atilde_recurrence(16);
    for (std::size_t r = 0; r <= 16; ++r) {
        CHECK(fam.polys[r].term_count() == partition_count(r));
        CHECK(weighted_degree_range(fam.polys[r]) == std::pair<std::size_t, std::size_t>{r, r});
    }
}

TEST_CASE("scaling xi_j by lambda^j scales At_r by lambda^r")
{
    const auto fam = atilde_recurrence(8);
    Gen gen(31);
    for (int trial = 0; trial < 10; ++trial) {
        QCplx lambda = gen.qcplx();
        if (lambda.is_zero()) {
            lambda = QCplx(3);
        }
        for (std::size_t r = 0; r <= 8; ++r) {
            XiPoly scaled(8);
            for (const auto& [e, c] : fam.polys[r].terms()) {
                QCplx factor(1);
                for (std::size_t j = 0; j < e.size(); ++j) {
                    for (std::uint32_t k = 0; k < (j + 1) * e[j]; ++k) {
                        factor *= lambda;
                    }
                }
                scaled.add_term(e, c * factor);
            }
            QCplx lr(1);
            for (std::size_t k = 0; k < r; ++k) {
                lr *= lambda;
            }
            CHECK(scaled.normalize() == fam.polys[r].scaled(lr));
        }
    }
}

TEST_CASE("exp_component_path")
{
    DirectionTable<Cplx> zero{4, std::vector<DirectionRow<Cplx>>(4)};
    const auto chain = solve_chain(Cplx(-1.0), zero, Branch::plus, 3);
    const std::vector<double> pt{1.0, 0.0, 0.0, 0.0};
    const auto comps = exp_component_path(chain, zero, pt, 3);
    CHECK(std::abs(comps[0] - std::exp(1.0)) < 1e-15);
    CHECK(comps[1] == Cplx(0.0));
    CHECK(comps[3] == Cplx(0.0));

    // zeta = rho: xi0 = 0, xi1 = 1
    const KChain<Cplx> k{Branch::plus, {0.0, 1.0, 0.0}};
    const DirectionTable<Cplx> none{4, std::vector<DirectionRow<Cplx>>(3)};
    const auto rho = exp_component_path(k, none, pt, 2);
    CHECK(rho == std::vector<Cplx>{1.0, 1.0, 0.5});
}

TEST_CASE("exp components agree with the recurrence")
{
    Gen gen(32);
    const auto fam = atilde_recurrence(8);
    for (int trial = 0; trial < 10; ++trial) {
        const auto table = gen.table(4, 8);
        const Cplx mass = gen.cplx();
        const auto chain = solve_chain(mass, table, Branch::plus, 8);
        const auto forms = xi_forms(chain, table);
        for (int p = 0; p < 20; ++p) {
            const std::vector<double> x{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
            std::vector<Cplx> xis;
            for (const auto& f : forms) {
                xis.push_back(f.eval(x));
            }
            const auto expected = evaluate_family_at(fam, xis);
            const auto envelope = family_envelope(fam, xis);
            const auto got = exp_component_path(chain, table, x, 8);
            for (std::size_t r = 0; r <= 8; ++r) {
                CHECK(std::abs(got[r] - expected[r]) <= 1e-9 * envelope[r]);
            }
        }
    }
}

TEST_CASE("build_solutions")
{
    DirectionTable<QCplx> zero{4, {{}}};
    const auto u0 = build_solutions(QCplx(-1), zero, Branch::plus, 0);
    REQUIRE(u0.size() == 1);
    CHECK(u0[0].poly == SparsePoly<QCplx>::constant(4, QCplx(1)));
    CHECK(u0[0].xi0 == LinearForm<QCplx>{QCplx(1), 0, 0, 0});

    Gen gen(33);
    for (int trial = 0; trial < 20; ++trial) {
        DirectionTable<QCplx> t{4, {}};
        for (int r = 0; r < 3; ++r) {
            t.rows.push_back({gen.qcplx(), gen.qcplx(), gen.qcplx()});
        }
        const QCplx s(gen.integer(1, 5), gen.integer(-3, 3));
        const auto& row0 = t.rows[0];
        const QCplx mass = row0.m * row0.m + row0.g * row0.g + row0.d * row0.d - s * s;

        const auto sols = build_solutions(mass, t, Branch::plus, 2);
        const auto closed = closed_form_first_solutions(mass, t, Branch::plus);
        for (std::size_t r = 0; r <= 2; ++r) {
            CHECK(sols[r].poly == closed[r].poly);
            CHECK(sols[r].xi0 == closed[r].xi0);
            CHECK(sols[r].poly.degree() <= r);
        }
    }
}

TEST_CASE("rendering in the typeset layout")
{
    const auto a = resolvent_expand(6);
    CHECK(render_resolvent(a[4]) == "ξ4/(t−ξ0)² + (2ξ1ξ3+ξ2²)/(t−ξ0)³ + 3ξ1²ξ2/(t−ξ0)⁴ + ξ1⁴/(t−ξ0)⁵");
    CHECK(render_resolvent(a[0]) == "1/(t−ξ0)");
    const auto fam = atilde_recurrence(5);
    CHECK(render_atilde(fam.polys[4]) == "ξ4 + (2ξ1ξ3+ξ2²)/2! + 3ξ1²ξ2/3! + ξ1⁴/4!");
    CHECK(render_atilde(fam.polys[0]) == "1");
    CHECK(render_atilde(fam.polys[3], Notation::latex) ==
          "\\xi_{3} + \\frac{2\\xi_{1}\\xi_{2}}{2!} + \\frac{\\xi_{1}^{3}}{3!}");
    CHECK(render_resolvent(a[1], Notation::latex) == "\\frac{\\xi_{1}}{(t-\\xi_{0})^{2}}");
}
