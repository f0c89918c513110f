#include "kscroll/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kscroll/piecewise.hpp"

namespace kscroll {

ScrollTriple ScrollTriple::make(int d1, int d2, int d3)
{
    if (!(d1 >= d2 && d2 >= d3 && d3 >= 0))
        throw InvalidTriple("scroll triple must satisfy d1 >= d2 >= d3 >= 0, got " +
                            to_string(ScrollTriple{d1, d2, d3}));
    if (d1 == 0)
        throw InvalidTriple("scroll triple (0,0,0) is not supported");
    return ScrollTriple{d1, d2, d3};
}

int ScrollTriple::d(int i) const
{
    switch (i) {
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    default: throw std::out_of_range("scroll index must be 1, 2 or 3");
    }
}

std::string to_string(const ScrollTriple& t)
{
    return "(" + std::to_string(t.d1) + "," + std::to_string(t.d2) + "," + std::to_string(t.d3) + ")";
}

std::string_view ray_label(RayName r)
{
    static constexpr std::string_view labels[] = {"e1", "e2", "e3", "u1", "u2"};
    return labels[static_cast<int>(r)];
}

std::string_view divisor_label(RayName r)
{
    static constexpr std::string_view labels[] = {"D1", "D2", "D3", "F1", "F2"};
    return labels[static_cast<int>(r)];
}

RayName parse_ray(std::string_view text)
{
    for (RayName r : kAllRays)
        if (text == ray_label(r) || text == divisor_label(r))
            return r;
    throw std::invalid_argument("unknown ray or divisor '" + std::string(text) + "'");
}

Fan fan(const ScrollTriple& t)
{
    Fan f{{{
              {RayName::E1, {1, 0, 0}},
              {RayName::E2, {0, 1, 0}},
              {RayName::E3, {-1, -1, 0}},
              {RayName::U1, {t.d1 - t.d3, t.d2 - t.d3, 1}},
              {RayName::U2, {0, 0, -1}},
          }},
          {}};
    for (RayName u : {RayName::U1, RayName::U2}) {
        f.maximal_cones.push_back({u, RayName::E1, RayName::E2});
        f.maximal_cones.push_back({u, RayName::E1, RayName::E3});
        f.maximal_cones.push_back({u, RayName::E2, RayName::E3});
    }
    return f;
}

RayDivisor class_to_rays(const ScrollTriple& t, const DivisorClass& c)
{
    RayDivisor rd;
    rd[RayName::E3] = c.m;
    rd[RayName::U1] = c.m * t.d3 + c.l;
    return rd;
}

Vec3 pairing_functional(const IVec3& w)
{
    return {Rational(w[0]), Rational(w[1]), Rational(-w[2])};
}

Polytope moment_polytope(const ScrollTriple& t, const RayDivisor& rd)
{
    const Fan f = fan(t);
    std::vector<HalfSpace> hs;
    for (const Ray& ray : f.rays) {
        const IVec3& v = ray.vector;
        hs.emplace_back(IVec3{v[0], v[1], -v[2]}, rd[ray.name]);
    }
    return Polytope(std::move(hs));
}

Rational vol(const ScrollTriple& t, const DivisorClass& c)
{
    return 6 * volume(moment_polytope(t, class_to_rays(t, c)));
}

DegreeGenus degree_and_genus(const ScrollTriple& t)
{
    const int degree = 2 * t.sum();
    return {degree, degree / 2 + 1};
}

ToricValuation ToricValuation::make(const ScrollTriple& t, IVec3 w)
{
    const auto g = std::gcd(std::gcd(std::abs(w[0]), std::abs(w[1])), std::abs(w[2]));
    if (g == 0)
        throw std::invalid_argument("valuation vector must be non-zero");
    if (g != 1)
        throw std::invalid_argument("valuation vector must be primitive");

    const Fan f = fan(t);
    const Vec3 target = to_vec3(w);
    for (const auto& cone : f.maximal_cones) {
        const Vec3 a = to_vec3(f.vector(cone[0]));
        const Vec3 b = to_vec3(f.vector(cone[1]));
        const Vec3 c = to_vec3(f.vector(cone[2]));
        const Rational det = det3(a, b, c);
        // w = x a + y b + z c; the generators are the columns.
        const Rational x = det3(target, b, c) / det;
        const Rational y = det3(a, target, c) / det;
        const Rational z = det3(a, b, target) / det;
        if (x < 0 || y < 0 || z < 0)
            continue;
        ToricValuation v;
        v.w = w;
        v.cone_coefficients[static_cast<int>(cone[0])] = x;
        v.cone_coefficients[static_cast<int>(cone[1])] = y;
        v.cone_coefficients[static_cast<int>(cone[2])] = z;
        return v;
    }
    throw std::logic_error("fan is not complete");
}

ToricValuation ToricValuation::of_ray(const ScrollTriple& t, RayName r)
{
    return make(t, fan(t).vector(r));
}

Rational ToricValuation::log_discrepancy() const
{
    Rational a = 0;
    for (const auto& c : cone_coefficients)
        a += c;
    return a;
}

Rational s_toric_vector(const ScrollTriple& t, const DivisorClass& H, const IVec3& w)
{
    if (!(H.m > 0) || H.l < 0)
        throw std::invalid_argument("S-values are only defined here for nef and big H");
    if (w == IVec3{0, 0, 0})
        throw std::invalid_argument("zero lattice vector");
    const Polytope p = moment_polytope(t, class_to_rays(t, H));
    const Rational size = volume(p);
    if (size == 0)
        throw NotBig("vol(H) = 0");
    const Vec3 c = pairing_functional(w);
    return integrate_affine(p, c, 0) / size - minimize_linear(p, c);
}

Rational s_toric_valuation(const ScrollTriple& t, const DivisorClass& H, const ToricValuation& v)
{
    return s_toric_vector(t, H, v.w);
}

Rational s_closed_form(const ScrollTriple& t, RayName which)
{
    const Rational sum = t.sum();
    switch (which) {
    case RayName::E1: return (1 + t.d1 / sum) / 4;
    case RayName::E2: return (1 + t.d2 / sum) / 4;
    case RayName::E3: return (1 + t.d3 / sum) / 4;
    case RayName::U1:
    case RayName::U2: return Rational(t.quadratic()) / (4 * sum);
    }
    throw std::logic_error("unreachable");
}

namespace {

std::vector<Rational> sorted_breakpoints(std::vector<Rational> pts, const Rational& end)
{
    std::vector<Rational> out;
    for (auto& p : pts)
        if (p >= 0 && p < end)
            out.push_back(std::move(p));
    out.push_back(end);
    out.push_back(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Rational fiber_s_lower_bound(const ScrollTriple& t, const Rational& u_max)
{
    if (!(u_max > 0))
        throw std::invalid_argument("u_max must be positive");
    const Rational end = std::min(u_max, Rational(t.d1));
    auto f = [&](const Rational& u) { return vol(t, {1, -u}); };
    const auto bps = sorted_breakpoints({Rational(t.d3), Rational(t.d2), Rational(t.d1)}, end);
    return integrate_piecewise(f, bps) / t.sum();
}

ClassSValue s_divisor_class(const ScrollTriple& t, const DivisorClass& c)
{
    const Rational sum = t.sum();
    if (c.m < 0 || (c.m == 0 && !(c.l > 0)))
        throw std::invalid_argument("class must be aM + bL with a > 0, or a = 0 and b > 0");

    if (c.m == 0) {
        const Rational end = t.d1 / c.l;
        auto f = [&](const Rational& u) { return vol(t, {1, -u * c.l}); };
        const auto bps = sorted_breakpoints({t.d3 / c.l, t.d2 / c.l, end}, end);
        return {integrate_piecewise(f, bps) / sum, true};
    }
    if (c.l <= 0) {
        const Rational end = 1 / c.m;
        auto f = [&](const Rational& u) { return vol(t, {1 - u * c.m, -u * c.l}); };
        return {integrate_piecewise(f, {Rational(0), end}) / sum, true};
    }
    const Rational along_m = 1 / (4 * c.m);
    const Rational along_l = s_closed_form(t, RayName::U1) / c.l;
    return {std::min(along_m, along_l), false};
}

}  // namespace kscroll
