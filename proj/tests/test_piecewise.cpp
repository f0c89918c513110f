#include <doctest.h>

#include <random>

#include "kscroll/errors.hpp"
#include "kscroll/piecewise.hpp"

#include "random_inputs.hpp"

using namespace kscroll;

TEST_CASE("polynomial basics")
{
    const Polynomial p({1, 2, 3});  // 1 + 2x + 3x^2
    CHECK(p(2) == 17);
    CHECK(p.degree() == 2);
    CHECK(p.antiderivative() == Polynomial({0, 1, 1, 1}));
    CHECK(p.integrate(0, 1) == 3);
    CHECK(Polynomial({1, 1}) * Polynomial({-1, 1}) == Polynomial({-1, 0, 1}));
    CHECK(Polynomial({1, 0, 0}).degree() == 0);
}

TEST_CASE("interpolation recovers a cubic")
{
    const Polynomial p({rat(1, 2), -3, 0, 2});
    std::vector<Rational> xs{0, 1, 2, 5}, ys;
    for (const auto& x : xs)
        ys.push_back(p(x));
    CHECK(Polynomial::interpolate(xs, ys) == p);
}

TEST_CASE("integrate_piecewise matches the antiderivative for random cubics")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const Polynomial p({testing::random_rational(rng), testing::random_rational(rng),
                            testing::random_rational(rng), testing::random_rational(rng)});
        const Rational a = testing::random_rational(rng);
        const Rational b = a + Rational(testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 5));
        const Rational mid = (a + b) / 3;
        std::vector<Rational> bps{a, b};
        if (mid > a && mid < b)
            bps = {a, mid, b};
        CHECK(integrate_piecewise([&](const Rational& x) { return p(x); }, bps) == p.integrate(a, b));
    }
}

TEST_CASE("a kink between breakpoints is caught")
{
    const SampledFunction kink = [](const Rational& x) { return x < rat(1, 2) ? Rational(rat(1, 2) - x) : Rational(x - rat(1, 2)); };
    CHECK_THROWS_AS(integrate_piecewise(kink, {0, 1}), DegreeMismatch);
    CHECK(integrate_piecewise(kink, {0, rat(1, 2), 1}) == rat(1, 4));
}

TEST_CASE("piecewise evaluation and bad input")
{
    const SampledFunction f = [](const Rational& x) { return x * x * x; };
    const auto pw = PiecewisePoly::from_samples(f, {0, 1, 3});
    CHECK(pw(2) == 8);
    CHECK(pw.integral() == rat(81, 4));
    CHECK_THROWS(integrate_piecewise(f, {1, 0}));
    CHECK_THROWS(integrate_piecewise(f, {0}));
    CHECK_THROWS(integrate_piecewise(f, {0, 1}, 4));
}
