#include <doctest.h>

#include <map>

#include "kscroll/branch.hpp"
#include "kscroll/errors.hpp"

using namespace kscroll;

namespace {

const std::map<std::string, std::pair<std::string, ScrollTriple>> kEquations{
    {"H5", {"(t1^6+t2^6)*x1^4 + x1*x3^3 + t1*t2*x2^4 + x2^2*x3^2", {2, 1, 0}}},
    {"H7", {"(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1^2*x3^2 + x2^2*x3^2", {2, 2, 0}}},
    {"H7 example", {"(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1*x2*x3^2", {2, 2, 0}}},
    {"H8", {"(t1^2+t2^2)*x1^4 + t1*t2*x2^4 + x1^2*x3^2 + x2^2*x3^2", {2, 2, 1}}},
    {"H10", {"x1*(t1*x2^3 + t2*x3^3)", {3, 0, 0}}},
    {"H11", {"(t1^8+t2^8)*x1^4 + t1*t2*x1^2*x3^2 + x1*x2*x3^2 + x2^4", {3, 1, 0}}},
    {"H12", {"x1*((t1^6+t2^6)*x1^3 + x2^3 + x3^3)", {3, 1, 1}}},
    {"H13", {"(t1^6+t2^6)*x1^4 + x1^2*x3^2 + t1*t2*x2^4 + x2^3*x3", {3, 2, 0}}},
    {"H17", {"x1*(x2^3 + x3^3)", {4, 0, 0}}},
};

}  // namespace

TEST_CASE("parsing expands products and collects terms")
{
    const BranchPoly p = parse("x1*(x2^3 + x3^3)");
    REQUIRE(p.monomials().size() == 2);
    CHECK(p.divisible_by_x(1));
    CHECK_FALSE(p.divisible_by_x(2));
    const BranchPoly q = parse("(x1 + x2)^2 - x1^2 - x2^2 + 2", ParseMode::General);
    REQUIRE(q.monomials().size() == 2);
    CHECK(print(q) == "2*x1*x2 + 2");
    CHECK(print(parse("-x1^4 + 3/2*t1*x2^4")) == "-x1^4 + 3/2*x2^4*t1");
}

TEST_CASE("syntax errors carry a position")
{
    try {
        parse("x1*(x2^3 + x3^3");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 15);
    }
    CHECK_THROWS_AS(parse("x1 x2^3"), SyntaxError);
    CHECK_THROWS_AS(parse("x4^4"), SyntaxError);
    CHECK_THROWS_AS(parse("x1^0*x2^4"), SyntaxError);
    CHECK_THROWS_AS(parse("x1^4 - x1^4"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
}

TEST_CASE("branch mode insists on quartics")
{
    CHECK_THROWS_AS(parse("x1*x2"), NonQuarticError);
    CHECK_NOTHROW(parse("x1*x2", ParseMode::General));
    // H11 with x1 in place of x1^2 in the t1 t2 term is not quartic
    CHECK_THROWS_AS(parse("(t1^8+t2^8)*x1^4 + t1*t2*x1*x3^2 + x1*x2*x3^2 + x2^4"), NonQuarticError);
}

TEST_CASE("the family equations round-trip and infer their triples")
{
    for (const auto& [name, entry] : kEquations) {
        CAPTURE(name);
        const BranchPoly p = parse(entry.first);
        CHECK(parse(print(p)).monomials() == p.monomials());
        const auto found = infer_triple(observations(p), 2 * entry.second.sum());
        REQUIRE(found.size() == 1);
        CHECK(found.front() == entry.second);
        for (const auto& m : p.monomials()) {
            CHECK(coefficient_t_degree(entry.second, m) >= 0);
            CHECK(m.t_degree() == coefficient_t_degree(entry.second, m));
        }
    }
}

TEST_CASE("without a degree the equation alone can be ambiguous")
{
    const auto h5 = infer_triple(observations(parse(kEquations.at("H5").first)));
    CHECK(h5 == std::vector<ScrollTriple>{{2, 1, 0}});
    const auto h10 = infer_triple(observations(parse(kEquations.at("H10").first)));
    CHECK(h10.size() == 2);
    CHECK(std::find(h10.begin(), h10.end(), ScrollTriple{3, 0, 0}) != h10.end());
    const auto h17 = infer_triple(observations(parse(kEquations.at("H17").first)));
    CHECK(h17.size() == 3);
}

TEST_CASE("inconsistent t-degrees are rejected")
{
    CHECK_THROWS_AS(observations(parse("t1*x1^4 + t1^2*x1^4")), PreconditionFailed);
}

TEST_CASE("orders and log discrepancies")
{
    const auto t = ScrollTriple::make(3, 0, 0);
    const BranchPoly h10 = parse(kEquations.at("H10").first);
    const auto e = ToricValuation::make(t, {0, 1, -3});
    CHECK(ord_along(e, h10) == 3);
    const auto a = pair_log_discrepancy(e, h10);
    CHECK(a.ambient_a == 4);
    CHECK(a.value == rat(5, 2));
    CHECK(pair_log_discrepancy(ToricValuation::of_ray(t, RayName::E1), h10).value == rat(1, 2));
    CHECK(pair_log_discrepancy(ToricValuation::make(t, {0, 1, -2}), h10).value == 2);
    // a monomial avoiding every coordinate of the cone gives order zero
    for (RayName r : kAllRays)
        for (const auto& [name, entry] : kEquations) {
            const BranchPoly p = parse(entry.first);
            const auto v = ToricValuation::of_ray(entry.second, r);
            const Rational ord = ord_along(v, p);
            CHECK(ord >= 0);
            const bool avoids = std::any_of(p.monomials().begin(), p.monomials().end(),
                                            [&](const Monomial& m) { return m.exponent(r) == 0; });
            if (avoids)
                CHECK(ord == 0);
        }
}

TEST_CASE("monomial classes")
{
    const auto t = ScrollTriple::make(3, 0, 0);
    const Monomial a = parse("t1*x2^3", ParseMode::General).monomials().front();
    const Monomial b = parse("t2*x3^3", ParseMode::General).monomials().front();
    CHECK(monomial_class(t, a) == DivisorClass{3, 1});
    CHECK(monomial_class(t, a) == monomial_class(t, b));
    const Monomial x1 = parse("x1", ParseMode::General).monomials().front();
    CHECK(monomial_class(t, x1) == DivisorClass{1, -3});
}

TEST_CASE("A-values at p3 and terminal bounds")
{
    CHECK(fiber_point_a_value({SingularityKind::Smooth, {}}, {1, 1}) == rat(3, 2));
    CHECK(fiber_point_a_value({SingularityKind::Node, {}}, {1, 1}) == 1);
    CHECK(fiber_point_a_value({SingularityKind::Cusp, {}}, {3, 2}) == 2);
    CHECK(fiber_point_a_value({SingularityKind::Explicit, rat(4)}, {1, 1}) == 0);
    CHECK_THROWS_AS(fiber_point_a_value({SingularityKind::Cusp, {}}, {1, 1}), UnknownSingularity);
    CHECK_THROWS_AS(fiber_point_a_value({SingularityKind::Explicit, {}}, {1, 1}), UnknownSingularity);
    CHECK(a_point_lower_bound(PointContext::GeneralPoint) == rat(1, 2));
    CHECK(a_point_lower_bound(PointContext::CuspExceptional) == rat(1, 3));
    CHECK(parse_singularity("Cusp") == SingularityKind::Cusp);
    CHECK_THROWS(parse_singularity("tacnode"));
}
