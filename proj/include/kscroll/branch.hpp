#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kscroll/rational.hpp"
#include "kscroll/scroll.hpp"

namespace kscroll {

/// c * x1^m1 x2^m2 x3^m3 t1^k1 t2^k2 in the Cox coordinates of the scroll.
struct Monomial {
    std::array<int, 3> x{};
    std::array<int, 2> t{};
    Rational coefficient{1};

    int x_degree() const { return x[0] + x[1] + x[2]; }
    int t_degree() const { return t[0] + t[1]; }
    /// Exponent of the coordinate attached to a ray: x_i to e_i, t_j to u_j.
    int exponent(RayName r) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Expanded polynomial with distinct exponent vectors and non-zero coefficients.
class BranchPoly {
public:
    BranchPoly(std::vector<Monomial> monomials, std::string source_text);

    const std::vector<Monomial>& monomials() const { return monomials_; }
    const std::string& source_text() const { return source_text_; }

    /// True when x_i divides every monomial.
    bool divisible_by_x(int i) const;

private:
    std::vector<Monomial> monomials_;
    std::string source_text_;
};

enum class ParseMode {
    /// Every monomial must have x-degree 4 (members of |4M + 2(2 - sum)L|).
    Branch,
    /// No degree restriction.
    General,
};

/// poly := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
/// factor := coeff | var ('^' n)? | '(' poly ')'. A leading sign is also accepted.
/// Throws SyntaxError (with position) or NonQuarticError.
BranchPoly parse(std::string_view text, ParseMode mode = ParseMode::Branch);

/// Canonical text; parse(print(p)) has the same monomials as p.
std::string print(const BranchPoly& p);

/// Degree in (t1, t2) of the coefficient of x^m in a section of 4M + 2(2 - sum)L.
/// Negative means the monomial cannot occur on this scroll.
int coefficient_t_degree(const ScrollTriple& t, const std::array<int, 3>& x_exponents);
inline int coefficient_t_degree(const ScrollTriple& t, const Monomial& m) { return coefficient_t_degree(t, m.x); }

struct TDegreeObservation {
    std::array<int, 3> x_exponents;
    int t_degree;

    friend bool operator==(const TDegreeObservation&, const TDegreeObservation&) = default;
};

/// One observation per distinct x-exponent vector. Throws PreconditionFailed when one
/// x-exponent vector occurs with two different t-degrees (non-homogeneous input).
std::vector<TDegreeObservation> observations(const BranchPoly& p);

inline constexpr int kInferTripleMaxD1 = 12;

/// All triples with kInferTripleMaxD1 >= d1 >= d2 >= d3 >= 0, d1 > 0 satisfying every
/// observation. When `degree` is given, (-K_X)^3 = 2 sum is imposed as well.
std::vector<ScrollTriple> infer_triple(const std::vector<TDegreeObservation>& obs,
                                       std::optional<int> degree = std::nullopt);

/// Weighted order of the polynomial along a toric valuation.
Rational ord_along(const ToricValuation& v, const BranchPoly& p);

/// Log discrepancy of the pair (F, S/2) along a toric valuation.
struct PairLogDiscrepancy {
    Rational ambient_a;
    Rational branch_ord;
    Rational value;
};

PairLogDiscrepancy pair_log_discrepancy(const ToricValuation& v, const BranchPoly& p);

/// Class of the divisor cut out by a monomial: x_i has class M - d_i L, t_j has class L.
DivisorClass monomial_class(const ScrollTriple& t, const Monomial& m);

/// Local type of the plane quartic S|F0 at the special point p3.
enum class SingularityKind { Smooth, Node, Cusp, Explicit };

struct BranchLocalType {
    SingularityKind kind = SingularityKind::Smooth;
    /// Weighted order of the local equation; only read for Explicit.
    std::optional<Rational> explicit_order;
};

std::string_view to_string(SingularityKind k);
/// "smooth", "node", "cusp" (case-insensitive).
SingularityKind parse_singularity(std::string_view text);

/// (a1 + a2) - ord/2 for the exceptional curve of the (a1, a2) weighted blowup at p3.
/// Smooth/(1,1) has ord 1, Node/(1,1) ord 2, Cusp/(3,2) ord 6; Explicit uses the supplied order.
/// Throws UnknownSingularity for other combinations.
Rational fiber_point_a_value(const BranchLocalType& sing, std::pair<int, int> weights);

enum class PointContext {
    /// Any point on a curve of a flag refined at a general point or at p3 for
    /// smooth or nodal branch curves.
    GeneralPoint,
    /// A point on the exceptional curve of the (3,2) blowup of a cusp.
    CuspExceptional,
};

/// Stored lower bounds for A at the terminal point of a flag: 1/2 and 1/3.
Rational a_point_lower_bound(PointContext context);

}  // namespace kscroll
