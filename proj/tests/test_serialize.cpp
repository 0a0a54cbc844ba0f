#include <doctest.h>

#include "kgfam/golden.hpp"
#include "kgfam/render.hpp"
#include "kgfam/serialize.hpp"
#include "support.hpp"

using namespace kgfam;
using kgfam::testing::Gen;

namespace {

json spec_doc()
{
    return json::parse(R"({"dim": 4, "mass": [-1, 0], "R": 2, "branch": "plus",
        "rows": [{"m": ["3/4", 0], "g": [0, 0], "d": [0, 0]},
                 {"m": [1, 0], "g": [0, 1], "d": [0, 0]},
                 {"m": [0, 0], "g": [0, 0], "d": ["1/3", 0]}]})");
}

template <typename F>
std::string spec_error(F&& f)
{
    try {
        f();
    } catch (const SpecError& e) {
        return e.what();
    }
    return "no error";
}

} // namespace

TEST_CASE("scalars")
{
    CHECK(to_json(Cplx(1.5, -2.0)) == json::array({1.5, -2.0}));
    CHECK(to_json(QCplx(Rational(1, 3), Rational(-2))) == json::array({"1/3", "-2"}));
    CHECK(scalar_from_json<QCplx>(json::array({"1/3", 0.25}), "x") == QCplx(Rational(1, 3), Rational(1, 4)));
    CHECK(scalar_from_json<QCplx>(json(2), "x") == QCplx(2));
    CHECK(scalar_from_json<Cplx>(json("1/4"), "x") == Cplx(0.25));
    CHECK(spec_error([] { (void)scalar_from_json<Cplx>(json::array({1}), "mass"); }).starts_with("mass:"));
    CHECK(spec_error([] { (void)scalar_from_json<QCplx>(json("1/0"), "rows[2].m"); }).starts_with("rows[2].m:"));
}

TEST_CASE("polynomial round trip, rational is bit-exact")
{
    Gen gen(51);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = gen.poly<QCplx>(4, 6, 3);
        p.add_term({1, 0, 0, 0}, QCplx(Rational(Integer("123456789012345678901234567890"), Integer(7)), Rational(-1, 3)));
        p.normalize();
        const auto j = poly_to_json(p);
        CHECK(poly_from_json<QCplx>(json::parse(j.dump()), 4, "poly") == p);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.poly<Cplx>(4, 6, 3);
        CHECK(poly_from_json<Cplx>(json::parse(poly_to_json(p).dump()), 4, "poly") == p);
    }
    const auto term = poly_to_json(SparsePoly<QCplx>::constant(2, QCplx(Rational(1, 2), Rational(3))))[0];
    CHECK(term["num"] == json::array({"1", "3"}));
    CHECK(term["den"] == json::array({"2", "1"}));
    CHECK(spec_error([] { (void)poly_from_json<QCplx>(json::parse(R"([{"exps": [1]}])"), 2, "poly"); })
              .starts_with("poly[0]"));
}

TEST_CASE("problem spec parsing")
{
    const auto spec = parse_problem_spec(spec_doc());
    CHECK(spec.dim == 4);
    CHECK(spec.R == 2);
    CHECK(spec.mode == Mode::floating);
    CHECK(spec.mass_as<QCplx>() == QCplx(-1));
    CHECK(spec.table_as<QCplx>().rows[2].d == QCplx(Rational(1, 3)));

    SpecOverrides o;
    o.R = 1;
    o.branch = Branch::minus;
    o.mode = Mode::rational;
    const auto over = parse_problem_spec(spec_doc(), o);
    CHECK(over.R == 1);
    CHECK(over.branch == Branch::minus);
    CHECK(over.mode == Mode::rational);

    auto no_r = spec_doc();
    no_r.erase("R");
    CHECK(parse_problem_spec(no_r).R == 2);

    auto j = spec_doc();
    j["dim"] = 5;
    CHECK(spec_error([&] { parse_problem_spec(j); }).starts_with("dim"));
    j = spec_doc();
    j["R"] = 7;
    CHECK(spec_error([&] { parse_problem_spec(j); }).starts_with("rows: need at least"));
    j = spec_doc();
    j["branch"] = "up";
    CHECK(spec_error([&] { parse_problem_spec(j); }).starts_with("branch"));
    j = spec_doc();
    j["rows"][1]["g"] = json::array({"x", 0});
    CHECK(spec_error([&] { parse_problem_spec(j); }).starts_with("rows[1].g"));
    j = spec_doc();
    j["dim"] = 3;
    CHECK(spec_error([&] { parse_problem_spec(j); }) == "rows[2].d must be zero for dim=3");
    j = spec_doc();
    j.erase("rows");
    CHECK(spec_error([&] { parse_problem_spec(j); }).starts_with("rows"));
}

TEST_CASE("family document round trip")
{
    const auto spec = parse_problem_spec(spec_doc());
    const auto mass = spec.mass_as<QCplx>();
    const auto table = spec.table_as<QCplx>();
    FamilyDocument<QCplx> doc{4, mass, Branch::plus, solve_chain(mass, table, Branch::plus, 2).k,
                              build_solutions(mass, table, Branch::plus, 2)};
    const auto j = json::parse(family_to_json(doc).dump());
    CHECK(document_mode(j) == Mode::rational);
    const auto back = family_from_json<QCplx>(j);
    CHECK(back.k == doc.k);
    REQUIRE(back.solutions.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(back.solutions[r].poly == doc.solutions[r].poly);
        CHECK(back.solutions[r].xi0 == doc.solutions[r].xi0);
    }

    const auto fmass = spec.mass_as<Cplx>();
    const auto ftable = spec.table_as<Cplx>();
    FamilyDocument<Cplx> fdoc{4, fmass, Branch::plus, solve_chain(fmass, ftable, Branch::plus, 2).k,
                              build_solutions(fmass, ftable, Branch::plus, 2)};
    const auto fj = json::parse(family_to_json(fdoc).dump());
    CHECK(document_mode(fj) == Mode::floating);
    CHECK(family_from_json<Cplx>(fj).solutions[2].poly == fdoc.solutions[2].poly);
}

TEST_CASE("report json")
{
    VerificationReport rep{3, 1e-14, -1.0, true, ""};
    const auto j = report_to_json(rep);
    CHECK(j["r"] == 3);
    CHECK(j["numeric_max_residual"].is_null());
    CHECK(j["passed"] == true);
}

TEST_CASE("golden text parser")
{
    CHECK(parse_xi_poly("xi1 - xi1", 1).is_zero());
    CHECK(parse_xi_poly("2/4*xi2^2 - 3", 2) == parse_xi_poly("-3 + 1/2*xi2*xi2", 2));
    CHECK_THROWS(parse_xi_poly("xi3", 2));
    CHECK_THROWS(parse_xi_poly("xi1 +", 2));

    const auto& g = golden_corpus();
    CHECK(g.atilde.size() == 6);
    CHECK(g.resolvent.size() == 7);
    CHECK(render_xi_poly(g.atilde[2]) == render_xi_poly(parse_xi_poly("xi2 + 1/2*xi1^2", 6)));
}
