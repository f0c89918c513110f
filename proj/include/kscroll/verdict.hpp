#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kscroll/branch.hpp"
#include "kscroll/family.hpp"
#include "kscroll/flags.hpp"
#include "kscroll/rational.hpp"
#include "kscroll/scroll.hpp"

namespace kscroll {

enum class Status { KUnstable, KStableCertified, KPolystableCertified, Inconclusive };

enum class InstabilityReason { ToricFiber, AlphaBound, NormalizedVolume, Divisibility, FiberBeta };

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater };

std::string_view to_string(Status s);
std::string_view to_string(InstabilityReason r);
std::string_view to_string(Relation r);
Status parse_status(std::string_view text);
InstabilityReason parse_reason(std::string_view text);
Relation parse_relation(std::string_view text);

/// A named exact quantity and the inequality it witnesses: value <relation> bound.
struct CertificateItem {
    std::string name;
    Rational value;
    Relation relation;
    Rational bound;
    std::string provenance;

    bool holds() const;
    friend bool operator==(const CertificateItem&, const CertificateItem&) = default;
};

struct Verdict {
    Status status = Status::Inconclusive;
    /// Every instability test that fired, in evaluation order.
    std::vector<InstabilityReason> reasons;
    std::vector<CertificateItem> certificate;
    AssertedHypotheses asserted;
    std::vector<std::string> notes;

    /// Re-evaluates every stored inequality from its stored operands.
    bool revalidate() const;
    bool has_reason(InstabilityReason r) const;
    const CertificateItem* find(std::string_view name) const;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Instability tests. Each returns a KUnstable verdict when it fires, nothing otherwise.
// All comparisons are strict: equality never fires.

/// S(M; F_j) = quadratic / (4 sum) > 1.
std::optional<Verdict> check_toric_instability(const ScrollTriple& t);
/// alpha(X) <= 1/d1 < 1/4, i.e. d1 >= 5.
std::optional<Verdict> check_alpha_instability(const ScrollTriple& t);

int duval_group_order(const DuValType& d);

/// (-K_X)^3 > 64 / |G| for a Du Val type transversal to a singular curve.
std::optional<Verdict> check_volume_instability(int degree, const std::vector<DuValType>& singular_locus);

inline constexpr int kDelPezzoFiberDegree = 2;

/// d1 = 4, d3 != 0 and 4 does not divide (-K_F)^2.
std::optional<Verdict> check_divisibility_obstruction(const ScrollTriple& t,
                                                      int fiber_degree = kDelPezzoFiberDegree);

inline constexpr int kFiberBetaRange = 3;

/// fiber_s_lower_bound(t, 3) > 1.
std::optional<Verdict> check_fiber_beta(const ScrollTriple& t);

/// Reasons among the tests that need only the triple (toric, alpha, divisibility,
/// fiber-beta); the certifiers refuse to run when this is non-empty.
std::vector<InstabilityReason> triple_instability_reasons(const ScrollTriple& t);

/// The flag steps covering one class of points of a general fiber.
struct PointClassInputs {
    std::string label;
    std::vector<DeltaInput> entries;
};

/// Flag data behind certify_stable. Throws PreconditionFailed when the branch does not
/// live on t or the line component does not divide it, UnknownSingularity for p3 types
/// without a stored terminal bound.
std::vector<PointClassInputs> stable_point_classes(const ScrollTriple& t, const BranchPoly& branch,
                                                   std::optional<SingularityKind> p3_type,
                                                   std::optional<int> line_component);

/// Certificate assembly from point-class inputs; Certified iff every class is strict.
Verdict certify_from_point_classes(const std::vector<PointClassInputs>& classes, const AssertedHypotheses& asserted);

/// KStableCertified when every point class of a general fiber has delta_p > 1 by a flag
/// certificate and the group-theoretic hypotheses are asserted.
Verdict certify_stable(const ScrollTriple& t, const BranchPoly& branch, std::optional<SingularityKind> p3_type,
                       std::optional<int> line_component, const AssertedHypotheses& asserted);

/// KPolystableCertified when A(D1) = S(M; D1), A = S along the Futaki valuation, and
/// A > S for every vertical prime divisor of the torus quotient (m1 : m2).
/// Throws PreconditionFailed when x1 does not divide the branch.
Verdict certify_polystable(const ScrollTriple& t, const BranchPoly& branch, const IVec3& futaki_valuation,
                           const std::pair<std::string, std::string>& quotient, const AssertedHypotheses& asserted);

/// Instability tests in order (toric, alpha, volume, divisibility, fiber-beta); if none
/// fires, the certifier matching the record's data.
Verdict full_verdict(const FamilyRecord& record);

}  // namespace kscroll
