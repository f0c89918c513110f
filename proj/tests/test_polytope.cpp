#include <doctest.h>

#include <random>

#include "kscroll/errors.hpp"
#include "kscroll/polytope.hpp"
#include "kscroll/scroll.hpp"

#include "random_inputs.hpp"

using namespace kscroll;

namespace {

Polytope box(int a, int b, int c)
{
    return Polytope({HalfSpace({1, 0, 0}, 0), HalfSpace({-1, 0, 0}, a), HalfSpace({0, 1, 0}, 0),
                     HalfSpace({0, -1, 0}, b), HalfSpace({0, 0, 1}, 0), HalfSpace({0, 0, -1}, c)});
}

Polytope unit_simplex()
{
    return Polytope(
        {HalfSpace({1, 0, 0}, 0), HalfSpace({0, 1, 0}, 0), HalfSpace({0, 0, 1}, 0), HalfSpace({-1, -1, -1}, 1)});
}

using Mat = std::array<std::array<std::int64_t, 3>, 3>;

// Image of p under y -> A y for unimodular A: the normal n becomes A^{-T} n.
Polytope transform(const Polytope& p, const Mat& inverse)
{
    std::vector<HalfSpace> hs;
    for (const auto& h : p.halfspaces()) {
        IVec3 n{};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
                n[j] += inverse[i][j] * h.normal[i];
        hs.emplace_back(n, h.offset);
    }
    return Polytope(hs);
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == rat(3, 2));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK(to_decimal(rat(3, 4), 4) == "0.7500");
    CHECK(to_decimal(rat(-1, 3), 3) == "-0.333");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
}

TEST_CASE("box and simplex volumes")
{
    CHECK(volume(box(1, 1, 1)) == 1);
    CHECK(volume(box(2, 3, 5)) == 30);
    CHECK(volume(unit_simplex()) == rat(1, 6));
    CHECK(unit_simplex().vertices().size() == 4);
    CHECK(box(2, 3, 5).vertices().size() == 8);
}

TEST_CASE("cached vertices satisfy every inequality and are distinct")
{
    const auto t = ScrollTriple::make(3, 2, 1);
    const Polytope p = moment_polytope(t, class_to_rays(t, tautological()));
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        CHECK(p.contains(vs[i]));
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            CHECK(vs[i] != vs[j]);
    }
}

TEST_CASE("unbounded, empty and flat polytopes")
{
    CHECK_THROWS_AS(Polytope({HalfSpace({1, 0, 0}, 0), HalfSpace({0, 1, 0}, 0), HalfSpace({0, 0, 1}, 0)}).vertices(),
                    UnboundedPolytope);
    CHECK_THROWS_AS(volume(Polytope({HalfSpace({1, 0, 0}, 0)})), UnboundedPolytope);
    const Polytope empty({HalfSpace({1, 0, 0}, -2), HalfSpace({-1, 0, 0}, 1), HalfSpace({0, 1, 0}, 0),
                          HalfSpace({0, -1, 0}, 1), HalfSpace({0, 0, 1}, 0), HalfSpace({0, 0, -1}, 1)});
    CHECK(empty.empty());
    CHECK(volume(empty) == 0);
    CHECK(volume(box(1, 1, 0)) == 0);
    CHECK_THROWS(HalfSpace({0, 0, 0}, 1));
}

TEST_CASE("integrate_affine and minimize_linear")
{
    const Polytope p = box(1, 1, 1);
    CHECK(integrate_affine(p, {0, 0, 0}, 1) == volume(p));
    CHECK(integrate_affine(p, {1, 0, 0}, 0) == rat(1, 2));
    CHECK(integrate_affine(unit_simplex(), {1, 1, 1}, 0) == rat(1, 8));
    CHECK(minimize_linear(p, {1, -2, 3}) == -2);
}

TEST_CASE("clip additivity on random half-spaces")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const ScrollTriple t = testing::random_triple(rng, 6);
        const Polytope p = moment_polytope(t, class_to_rays(t, tautological()));
        const HalfSpace h = testing::random_halfspace(rng);
        CHECK(volume(clip(p, h)) + volume(clip(p, h.complement())) == volume(p));
    }
}

TEST_CASE("integrate_affine is linear in (c, c0)")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        const ScrollTriple t = testing::random_triple(rng, 5);
        const Polytope p = moment_polytope(t, class_to_rays(t, tautological()));
        const Vec3 c1 = testing::random_vec(rng), c2 = testing::random_vec(rng);
        const Rational a0 = testing::random_rational(rng), b0 = testing::random_rational(rng);
        const Rational x = testing::random_rational(rng), y = testing::random_rational(rng);
        const Vec3 mix{x * c1[0] + y * c2[0], x * c1[1] + y * c2[1], x * c1[2] + y * c2[2]};
        CHECK(integrate_affine(p, mix, x * a0 + y * b0) ==
              x * integrate_affine(p, c1, a0) + y * integrate_affine(p, c2, b0));
    }
}

TEST_CASE("volume is invariant under unimodular maps")
{
    // A = [[1,2,0],[0,1,0],[1,1,1]], det 1, with integer inverse below.
    const Mat inverse{{{1, -2, 0}, {0, 1, 0}, {-1, 1, 1}}};
    CHECK(volume(transform(unit_simplex(), inverse)) == rat(1, 6));
    for (const auto& t : {ScrollTriple{2, 1, 0}, ScrollTriple{3, 2, 1}, ScrollTriple{4, 4, 4}}) {
        const Polytope p = moment_polytope(t, class_to_rays(t, tautological()));
        CHECK(volume(transform(p, inverse)) == volume(p));
    }
}

TEST_CASE("triangulation covers the volume")
{
    const auto t = ScrollTriple::make(3, 1, 0);
    const Polytope p = moment_polytope(t, class_to_rays(t, tautological()));
    Rational sum = 0;
    for (const auto& tet : triangulate(p)) {
        Rational d = det3(tet[1] - tet[0], tet[2] - tet[0], tet[3] - tet[0]);
        sum += (d < 0 ? Rational(-d) : d) / 6;
    }
    CHECK(sum == volume(p));
}
