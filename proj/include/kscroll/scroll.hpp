#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kscroll/polytope.hpp"
#include "kscroll/rational.hpp"

namespace kscroll {

/// The scroll F(d1,d2,d3) = P(O(d1) + O(d2) + O(d3)) over P^1, with d1 >= d2 >= d3 >= 0, d1 > 0.
struct ScrollTriple {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;

    /// Throws InvalidTriple unless d1 >= d2 >= d3 >= 0 and d1 > 0.
    static ScrollTriple make(int d1, int d2, int d3);

    int sum() const { return d1 + d2 + d3; }
    /// d_i for i in {1,2,3}.
    int d(int i) const;
    /// d1^2 + d2^2 + d3^2 + d1 d2 + d2 d3 + d3 d1
    int quadratic() const { return d1 * d1 + d2 * d2 + d3 * d3 + d1 * d2 + d2 * d3 + d3 * d1; }

    friend bool operator==(const ScrollTriple&, const ScrollTriple&) = default;
    friend auto operator<=>(const ScrollTriple&, const ScrollTriple&) = default;
};

std::string to_string(const ScrollTriple& t);

/// The five rays of the fan. Torus-invariant divisors: D_i = V(e_i), F_j = V(u_j).
enum class RayName { E1 = 0, E2 = 1, E3 = 2, U1 = 3, U2 = 4 };

inline constexpr std::array<RayName, 5> kAllRays{RayName::E1, RayName::E2, RayName::E3, RayName::U1, RayName::U2};

/// "e1".."u2"
std::string_view ray_label(RayName r);
/// "D1".."F2"
std::string_view divisor_label(RayName r);
/// Accepts either a ray label or a divisor label.
RayName parse_ray(std::string_view text);

struct Ray {
    RayName name;
    IVec3 vector;
};

struct Fan {
    std::array<Ray, 5> rays;
    std::vector<std::array<RayName, 3>> maximal_cones;

    const IVec3& vector(RayName r) const { return rays[static_cast<int>(r)].vector; }
};

Fan fan(const ScrollTriple& t);

/// m*M + l*L in Pic(F) = Z M + Z L.
struct DivisorClass {
    Rational m;
    Rational l;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass tautological() { return {1, 0}; }

/// Torus-invariant divisor sum_rho a_rho V(rho).
struct RayDivisor {
    std::array<Rational, 5> coefficients{};

    Rational& operator[](RayName r) { return coefficients[static_cast<int>(r)]; }
    const Rational& operator[](RayName r) const { return coefficients[static_cast<int>(r)]; }
};

/// Canonical representative M -> D3 + d3 F1, L -> F1.
RayDivisor class_to_rays(const ScrollTriple& t, const DivisorClass& c);

/// { y : <y, v_rho> >= -a_rho } written in coordinates with y3 reflected, so that
/// P(M) reads 0 <= y3 <= d3 + (d1-d3) y1 + (d2-d3) y2 over the standard triangle.
Polytope moment_polytope(const ScrollTriple& t, const RayDivisor& rd);

/// The linear functional y |-> <w, y> on the reflected coordinates of moment_polytope.
Vec3 pairing_functional(const IVec3& w);

/// vol(c) = 3! * volume of the moment polytope; 0 when c is not big.
Rational vol(const ScrollTriple& t, const DivisorClass& c);

struct DegreeGenus {
    int degree;
    int genus;
};

/// (-K_X)^3 = 2 M^3 and g = (-K_X)^3 / 2 + 1.
DegreeGenus degree_and_genus(const ScrollTriple& t);

/// Divisorial valuation of a primitive lattice vector w, with w expressed in the
/// rays of the smallest fan cone containing it.
struct ToricValuation {
    IVec3 w{};
    std::array<Rational, 5> cone_coefficients{};

    /// Throws std::invalid_argument for zero or non-primitive w.
    static ToricValuation make(const ScrollTriple& t, IVec3 w);
    static ToricValuation of_ray(const ScrollTriple& t, RayName r);

    const Rational& coefficient(RayName r) const { return cone_coefficients[static_cast<int>(r)]; }
    /// Toric log discrepancy A_F(w): the sum of cone coefficients.
    Rational log_discrepancy() const;
};

/// S(H; v_w) = mean of <w, .> over P(H) minus its minimum. H must be nef (m > 0, l >= 0).
/// Throws NotBig when vol(H) = 0.
Rational s_toric_valuation(const ScrollTriple& t, const DivisorClass& H, const ToricValuation& v);

/// Same quantity for any non-zero lattice vector; k w gives k times the value for w.
Rational s_toric_vector(const ScrollTriple& t, const DivisorClass& H, const IVec3& w);

/// S(M; D_i) = (1 + d_i / sum) / 4 and S(M; F_j) = quadratic / (4 sum).
Rational s_closed_form(const ScrollTriple& t, RayName which);

/// (1/sum) * integral_0^{min(u_max, d1)} vol(M - uL) du, a lower bound for S_X(F).
Rational fiber_s_lower_bound(const ScrollTriple& t, const Rational& u_max);

/// S(M; E) for a prime divisor E of class c, or an upper bound for it.
struct ClassSValue {
    Rational value;
    bool exact;
};

/// Exact when c = bL (b > 0) or c = aM + bL with a > 0, b <= 0 (then M - uc stays nef
/// until it vanishes). For a, b > 0 returns the bound min(S(M; aM), S(M; bL)), which
/// holds because vol is monotone under subtracting effective classes.
ClassSValue s_divisor_class(const ScrollTriple& t, const DivisorClass& c);

}  // namespace kscroll
