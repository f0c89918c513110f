#include "kscroll/verdict.hpp"

#include <algorithm>
#include <stdexcept>

#include "kscroll/errors.hpp"

namespace kscroll {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::KUnstable: return "KUnstable";
    case Status::KStableCertified: return "KStableCertified";
    case Status::KPolystableCertified: return "KPolystableCertified";
    case Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view to_string(InstabilityReason r)
{
    switch (r) {
    case InstabilityReason::ToricFiber: return "ToricFiber";
    case InstabilityReason::AlphaBound: return "AlphaBound";
    case InstabilityReason::NormalizedVolume: return "NormalizedVolume";
    case InstabilityReason::Divisibility: return "Divisibility";
    case InstabilityReason::FiberBeta: return "FiberBeta";
    }
    return "?";
}

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    }
    return "?";
}

Status parse_status(std::string_view text)
{
    for (auto s : {Status::KUnstable, Status::KStableCertified, Status::KPolystableCertified, Status::Inconclusive})
        if (text == to_string(s))
            return s;
    throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

InstabilityReason parse_reason(std::string_view text)
{
    for (auto r : {InstabilityReason::ToricFiber, InstabilityReason::AlphaBound, InstabilityReason::NormalizedVolume,
                   InstabilityReason::Divisibility, InstabilityReason::FiberBeta})
        if (text == to_string(r))
            return r;
    throw std::invalid_argument("unknown reason '" + std::string(text) + "'");
}

Relation parse_relation(std::string_view text)
{
    for (auto r : {Relation::Less, Relation::LessEqual, Relation::Equal, Relation::GreaterEqual, Relation::Greater})
        if (text == to_string(r))
            return r;
    throw std::invalid_argument("unknown relation '" + std::string(text) + "'");
}

bool CertificateItem::holds() const
{
    switch (relation) {
    case Relation::Less: return value < bound;
    case Relation::LessEqual: return value <= bound;
    case Relation::Equal: return value == bound;
    case Relation::GreaterEqual: return value >= bound;
    case Relation::Greater: return value > bound;
    }
    return false;
}

bool Verdict::revalidate() const
{
    return std::all_of(certificate.begin(), certificate.end(), [](const CertificateItem& c) { return c.holds(); });
}

bool Verdict::has_reason(InstabilityReason r) const
{
    return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

const CertificateItem* Verdict::find(std::string_view name) const
{
    for (const auto& c : certificate)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

Relation actual_relation(const Rational& a, const Rational& b)
{
    if (a < b)
        return Relation::Less;
    if (a > b)
        return Relation::Greater;
    return Relation::Equal;
}

Verdict unstable(InstabilityReason reason, std::vector<CertificateItem> items)
{
    Verdict v;
    v.status = Status::KUnstable;
    v.reasons = {reason};
    v.certificate = std::move(items);
    return v;
}

void require_branch_on(const ScrollTriple& t, const BranchPoly& branch)
{
    for (const auto& m : branch.monomials()) {
        const int expected = coefficient_t_degree(t, m);
        if (m.t_degree() != expected)
            throw PreconditionFailed("branch monomial " + print(BranchPoly({m}, "")) + " has t-degree " +
                                     std::to_string(m.t_degree()) + " but " + to_string(t) + " requires " +
                                     std::to_string(expected));
    }
}

// Tests that need only the triple; certifiers refuse to run when any fires.
std::vector<Verdict> triple_instabilities(const ScrollTriple& t)
{
    std::vector<Verdict> fired;
    for (auto check : {check_toric_instability, check_alpha_instability})
        if (auto v = check(t))
            fired.push_back(std::move(*v));
    if (auto v = check_divisibility_obstruction(t))
        fired.push_back(std::move(*v));
    if (auto v = check_fiber_beta(t))
        fired.push_back(std::move(*v));
    return fired;
}

std::optional<Verdict> refuse_if_unstable(const ScrollTriple& t, const AssertedHypotheses& asserted)
{
    auto fired = triple_instabilities(t);
    if (fired.empty())
        return std::nullopt;
    Verdict v;
    v.asserted = asserted;
    for (const auto& f : fired)
        v.notes.push_back("certification refused: instability test " + std::string(to_string(f.reasons.front())) +
                          " fires on " + to_string(t));
    return v;
}

}  // namespace

std::optional<Verdict> check_toric_instability(const ScrollTriple& t)
{
    const int q = t.quadratic();
    const int four_sum = 4 * t.sum();
    if (!(four_sum < q))
        return std::nullopt;
    return unstable(InstabilityReason::ToricFiber,
                    {{"S(M;F1)", Rational(q, four_sum), Relation::Greater, 1,
                      "closed form (d1^2+d2^2+d3^2+d1d2+d2d3+d3d1)/(4(d1+d2+d3)); delta <= A(F1)/S(M;F1) = 1/S"}});
}

std::optional<Verdict> check_alpha_instability(const ScrollTriple& t)
{
    if (t.d1 < 5)
        return std::nullopt;
    return unstable(InstabilityReason::AlphaBound, {{"alpha(X) upper bound 1/d1", Rational(1, t.d1), Relation::Less,
                                                     Rational(1, 4), "alpha(X) <= 1/d1; alpha < 1/4 is destabilizing"}});
}

int duval_group_order(const DuValType& d)
{
    switch (d.kind) {
    case DuValType::Kind::A: return d.n + 1;
    case DuValType::Kind::D: return 4 * (d.n - 2);
    case DuValType::Kind::E6: return 24;
    case DuValType::Kind::E7: return 48;
    case DuValType::Kind::E8: return 120;
    }
    throw std::logic_error("unreachable");
}

std::optional<Verdict> check_volume_instability(int degree, const std::vector<DuValType>& singular_locus)
{
    std::vector<CertificateItem> items;
    for (const auto& d : singular_locus) {
        const Rational threshold(64, duval_group_order(d));
        if (Rational(degree) > threshold)
            items.push_back({"(-K_X)^3 against 64/|G| for " + to_string(d), Rational(degree), Relation::Greater,
                             threshold, "normalized volume 27/|G| of a transversal Du Val point"});
    }
    if (items.empty())
        return std::nullopt;
    return unstable(InstabilityReason::NormalizedVolume, std::move(items));
}

std::optional<Verdict> check_divisibility_obstruction(const ScrollTriple& t, int fiber_degree)
{
    if (t.d1 != 4 || t.d3 == 0 || fiber_degree % 4 == 0)
        return std::nullopt;
    return unstable(InstabilityReason::Divisibility,
                    {{"d1", 4, Relation::Equal, 4, "alpha(X) <= 1/4 forces -K_X ~ 4D when semistable"},
                     {"d3", t.d3, Relation::Greater, 0, "small contraction hypothesis"},
                     {"(-K_F)^2 mod 4", fiber_degree % 4, Relation::Greater, 0,
                      "(-K_F)^2 = 4 (-K_F . D|_F) has no integer solution"}});
}

std::optional<Verdict> check_fiber_beta(const ScrollTriple& t)
{
    const Rational bound = fiber_s_lower_bound(t, kFiberBetaRange);
    if (!(bound > 1))
        return std::nullopt;
    return unstable(InstabilityReason::FiberBeta,
                    {{"S_X(F) lower bound", bound, Relation::Greater, 1,
                      "(1/sum) * integral_0^3 vol(M - uL) du by exact piecewise integration"}});
}

std::vector<InstabilityReason> triple_instability_reasons(const ScrollTriple& t)
{
    std::vector<InstabilityReason> out;
    for (const auto& v : triple_instabilities(t))
        out.push_back(v.reasons.front());
    return out;
}

std::vector<PointClassInputs> stable_point_classes(const ScrollTriple& t, const BranchPoly& branch,
                                                   std::optional<SingularityKind> p3_type,
                                                   std::optional<int> line_component)
{
    require_branch_on(t, branch);
    const DeltaInput fiber{"F0", 1, s_closed_form(t, RayName::U1), Provenance::PaperConstant, Provenance::Computed};

    std::vector<PointClassInputs> classes;
    classes.push_back({"general point",
                       {fiber,
                        {"F0 > l", 1, s_line(t, 3), Provenance::PaperConstant, Provenance::Computed},
                        {"F0 > l > p", a_point_lower_bound(PointContext::GeneralPoint), s_line_point_bound(t, 3),
                         Provenance::Bound, Provenance::Bound}}});

    if (line_component) {
        const int i = *line_component;
        if (i < 1 || i > 3)
            throw PreconditionFailed("line component index must be 1, 2 or 3");
        if (!branch.divisible_by_x(i))
            throw PreconditionFailed("x" + std::to_string(i) + " does not divide the branch polynomial");
        const RayName ray = i == 1 ? RayName::E1 : i == 2 ? RayName::E2 : RayName::E3;
        const Rational a_line = pair_log_discrepancy(ToricValuation::of_ray(t, ray), branch).value;
        const std::string l = "l" + std::to_string(i);
        classes.push_back({"point on " + l,
                           {fiber,
                            {"F0 > " + l, a_line, s_line(t, i), Provenance::Computed, Provenance::Computed},
                            {"F0 > " + l + " > p", a_point_lower_bound(PointContext::GeneralPoint),
                             s_line_point_bound(t, i), Provenance::Bound, Provenance::Bound}}});
    }

    if (p3_type) {
        std::pair<int, int> weights{1, 1};
        PointContext terminal = PointContext::GeneralPoint;
        switch (*p3_type) {
        case SingularityKind::Smooth:
        case SingularityKind::Node: break;
        case SingularityKind::Cusp:
            weights = {3, 2};
            terminal = PointContext::CuspExceptional;
            break;
        case SingularityKind::Explicit:
            throw UnknownSingularity("no stored terminal A-bound for an explicit p3 singularity");
        }
        const Rational a_e = fiber_point_a_value({*p3_type, std::nullopt}, weights);
        const std::string e = "E(" + std::to_string(weights.first) + "," + std::to_string(weights.second) + ")";
        classes.push_back({"p3 (" + std::string(to_string(*p3_type)) + ")",
                           {fiber,
                            {"F0 > " + e, a_e, s_blowup(t, weights.first, weights.second), Provenance::Computed,
                             Provenance::Computed},
                            {"F0 > " + e + " > q", a_point_lower_bound(terminal),
                             s_blowup_point_bound(t, weights.first, weights.second), Provenance::Bound,
                             Provenance::Bound}}});
    }
    return classes;
}

Verdict certify_from_point_classes(const std::vector<PointClassInputs>& classes, const AssertedHypotheses& asserted)
{
    Verdict v;
    v.asserted = asserted;
    bool all_strict = true;
    for (const auto& cls : classes) {
        const DeltaCertificate cert = delta_point_bound(cls.entries);
        for (const auto& r : cert.ratios) {
            v.certificate.push_back(
                {cls.label + " | A/S(" + r.label + ")", r.ratio, r.ratio > 1 ? Relation::Greater : Relation::LessEqual,
                 1,
                 "A = " + to_string(r.a) + " (" + std::string(to_string(r.a_provenance)) + "), S = " + to_string(r.s) +
                     " (" + std::string(to_string(r.s_provenance)) + ")"});
        }
        v.certificate.push_back({cls.label + " | delta_p lower bound", cert.conclusion,
                                 cert.strict ? Relation::Greater : Relation::LessEqual, 1,
                                 "minimum of the flag ratios"});
        if (!cert.strict) {
            all_strict = false;
            const auto& w = cert.weakest();
            v.notes.push_back("ratio A/S(" + w.label + ") = " + to_string(w.ratio) + " <= 1 at " + cls.label);
        }
    }
    v.status = all_strict && !classes.empty() ? Status::KStableCertified : Status::Inconclusive;
    return v;
}

Verdict certify_stable(const ScrollTriple& t, const BranchPoly& branch, std::optional<SingularityKind> p3_type,
                       std::optional<int> line_component, const AssertedHypotheses& asserted)
{
    require_branch_on(t, branch);
    if (auto refused = refuse_if_unstable(t, asserted))
        return *refused;

    std::vector<std::string> missing;
    for (auto h : {Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, Hypothesis::FiniteAutomorphisms})
        if (!asserted.has(h))
            missing.push_back(std::string(to_string(h)));

    if (!p3_type && !line_component) {
        Verdict v;
        v.asserted = asserted;
        v.notes.push_back("special point p3 not covered: supply its singularity type or a line component");
        return v;
    }

    std::vector<PointClassInputs> classes;
    try {
        classes = stable_point_classes(t, branch, p3_type, line_component);
    } catch (const UnknownSingularity& e) {
        Verdict v;
        v.asserted = asserted;
        v.notes.push_back(e.what());
        return v;
    }
    Verdict v;
    try {
        v = certify_from_point_classes(classes, asserted);
    } catch (const NonPositiveEntry& e) {
        v = Verdict{};
        v.asserted = asserted;
        v.notes.push_back(std::string("no flag certificate: ") + e.what());
        return v;
    }
    if (!missing.empty()) {
        v.status = Status::Inconclusive;
        for (const auto& m : missing)
            v.notes.push_back("missing assertion: " + m);
    }
    if (v.status == Status::KStableCertified)
        v.notes.push_back("delta_p > 1 at every point of a general fiber; finite automorphisms make polystable "
                          "equivalent to stable");
    return v;
}

Verdict certify_polystable(const ScrollTriple& t, const BranchPoly& branch, const IVec3& futaki_valuation,
                           const std::pair<std::string, std::string>& quotient, const AssertedHypotheses& asserted)
{
    if (!branch.divisible_by_x(1))
        throw PreconditionFailed("x1 does not divide the branch polynomial");
    require_branch_on(t, branch);
    if (auto refused = refuse_if_unstable(t, asserted))
        return *refused;

    const BranchPoly q1 = parse(quotient.first, ParseMode::General);
    const BranchPoly q2 = parse(quotient.second, ParseMode::General);
    if (q1.monomials().size() != 1 || q2.monomials().size() != 1)
        throw PreconditionFailed("quotient map components must be single monomials");
    const Monomial& m1 = q1.monomials().front();
    const Monomial& m2 = q2.monomials().front();
    const DivisorClass fiber_class = monomial_class(t, m1);
    if (!(fiber_class == monomial_class(t, m2)))
        throw PreconditionFailed("quotient monomials must have the same divisor class");

    const DivisorClass H = tautological();
    Verdict v;
    v.asserted = asserted;
    bool ok = true;
    auto record = [&](std::string name, const Rational& value, Relation wanted, const Rational& bound,
                      std::string provenance) {
        CertificateItem item{std::move(name), value, wanted, bound, std::move(provenance)};
        if (!item.holds()) {
            ok = false;
            v.notes.push_back("fails: " + item.name + " (" + to_string(value) + " " +
                              std::string(to_string(actual_relation(value, bound))) + " " + to_string(bound) + ")");
            item.relation = actual_relation(value, bound);
        }
        v.certificate.push_back(std::move(item));
    };

    // D1 is a component of S with A(D1) = S(M; D1): the pair is not K-stable.
    const ToricValuation d1 = ToricValuation::of_ray(t, RayName::E1);
    const Rational a_d1 = pair_log_discrepancy(d1, branch).value;
    const Rational s_d1 = s_toric_valuation(t, H, d1);
    record("A(D1) against S(M;D1)", a_d1, Relation::Equal, s_d1, "computed: toric log discrepancy, polytope S");

    const ToricValuation fut = ToricValuation::make(t, futaki_valuation);
    const std::string w = "(" + std::to_string(futaki_valuation[0]) + "," + std::to_string(futaki_valuation[1]) + "," +
                          std::to_string(futaki_valuation[2]) + ")";
    const PairLogDiscrepancy a_fut = pair_log_discrepancy(fut, branch);
    const Rational s_fut = s_toric_valuation(t, H, fut);
    record("A(E_w) against S(M;E_w), w = " + w, a_fut.value, Relation::Equal, s_fut,
           "Futaki vanishing witness; ord of branch = " + to_string(a_fut.branch_ord));

    // Vertical prime divisors: torus-invariant components of the special fibers of
    // (m1 : m2) and the fibers themselves (prime, class of m1, A >= 1/2).
    for (RayName r : kAllRays) {
        if (m1.exponent(r) == 0 && m2.exponent(r) == 0)
            continue;
        const ToricValuation vr = ToricValuation::of_ray(t, r);
        const Rational a = pair_log_discrepancy(vr, branch).value;
        const Rational s = s_toric_valuation(t, H, vr);
        record("vertical " + std::string(divisor_label(r)) + ": A against S(M;" + std::string(divisor_label(r)) + ")",
               a, Relation::Greater, s, "computed");
    }
    const ClassSValue fiber_s = s_divisor_class(t, fiber_class);
    record("vertical fiber of class " + to_string(fiber_class.m) + "M + " + to_string(fiber_class.l) +
               "L: S(M;E) against A >= 1/2",
           fiber_s.value, Relation::Less, rat(1, 2),
           fiber_s.exact ? "exact S of the class" : "upper bound min(S(M;aM), S(M;bL))");

    v.status = ok ? Status::KPolystableCertified : Status::Inconclusive;
    if (ok)
        v.notes.push_back("not K-stable (A(D1) = S(M;D1)), vanishing torus Futaki character, and beta > 0 on "
                          "every vertical divisor");
    return v;
}

Verdict full_verdict(const FamilyRecord& record)
{
    std::vector<Verdict> fired;
    if (record.triple) {
        const ScrollTriple& t = *record.triple;
        for (auto check : {check_toric_instability, check_alpha_instability})
            if (auto v = check(t))
                fired.push_back(std::move(*v));
    }
    if (record.degree && !record.singular_locus.empty())
        if (auto v = check_volume_instability(*record.degree, record.singular_locus))
            fired.push_back(std::move(*v));
    if (record.triple) {
        if (auto v = check_divisibility_obstruction(*record.triple))
            fired.push_back(std::move(*v));
        if (auto v = check_fiber_beta(*record.triple))
            fired.push_back(std::move(*v));
    }

    if (!fired.empty()) {
        Verdict v;
        v.status = Status::KUnstable;
        v.asserted = record.asserted;
        for (auto& f : fired) {
            v.reasons.push_back(f.reasons.front());
            for (auto& item : f.certificate)
                v.certificate.push_back(std::move(item));
        }
        return v;
    }

    Verdict inconclusive;
    inconclusive.asserted = record.asserted;
    if (!record.triple) {
        inconclusive.notes.push_back("no scroll data for " + record.id);
        return inconclusive;
    }
    if (!record.branch) {
        inconclusive.notes.push_back("no branch surface for " + record.id + "; no instability test fires");
        return inconclusive;
    }
    const BranchPoly branch = parse(*record.branch);
    if (record.polystable)
        return certify_polystable(*record.triple, branch, record.polystable->futaki_valuation,
                                  record.polystable->quotient, record.asserted);
    if (record.p3_type || record.line_component)
        return certify_stable(*record.triple, branch, record.p3_type, record.line_component, record.asserted);
    inconclusive.notes.push_back("no certification data for " + record.id);
    return inconclusive;
}

}  // namespace kscroll
