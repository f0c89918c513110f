#include "kscroll/reproduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "kscroll/branch.hpp"
#include "kscroll/flags.hpp"
#include "kscroll/piecewise.hpp"
#include "kscroll/verdict.hpp"

namespace kscroll {

bool Report::ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.ok; });
}

WorkedIntegrals h7_worked_integrals()
{
    const Polynomial curve_integrand({8, 0, 0, -8});
    const Rational curve = Rational(1, 8) * curve_integrand.integrate(0, 1);

    // inner(u) = int_0^{2u} 4u(2u - v) dv, a cubic in u
    const SampledFunction inner = [](const Rational& u) {
        const Polynomial in_v({8 * u * u, -4 * u});
        return in_v.integrate(0, 2 * u);
    };
    const Rational point = Rational(3, 8) * integrate_piecewise(inner, {0, 1});
    return {curve, point};
}

const std::vector<std::string>& reproduction_names()
{
    static const std::vector<std::string> names{"lemma-toric", "h10", "h17", "h12", "h14", "h7-worked", "kill-many"};
    return names;
}

namespace {

ReportRow row(std::string label, const Rational& computed, const Rational& expected)
{
    return {std::move(label), to_string(computed), to_string(expected), computed == expected};
}

ReportRow row(std::string label, std::string computed, std::string expected)
{
    const bool ok = computed == expected;
    return {std::move(label), std::move(computed), std::move(expected), ok};
}

Rational s_of(const ScrollTriple& t, const ToricValuation& v)
{
    return s_toric_valuation(t, tautological(), v);
}

Report lemma_toric(int dmax, Execution exec)
{
    Report rep{"lemma-toric", {}};
    for (const auto& r : closed_form_sweep(triples_up_to(dmax), exec))
        rep.rows.push_back({to_string(r.triple) + " S(M;" + std::string(divisor_label(r.ray)) + ")",
                            to_string(r.polytope), to_string(r.closed_form), r.equal()});
    return rep;
}

Report h10()
{
    const auto t = ScrollTriple::make(3, 0, 0);
    const BranchPoly branch = parse("x1*(t1*x2^3 + t2*x3^3)");
    const auto e = ToricValuation::make(t, {0, 1, -3});
    Report rep{"h10", {}};
    rep.rows.push_back(row("S(M;D1)", s_of(t, ToricValuation::of_ray(t, RayName::E1)), rat(1, 2)));
    rep.rows.push_back(row("S(M;F1)", s_of(t, ToricValuation::of_ray(t, RayName::U1)), rat(3, 4)));
    rep.rows.push_back(row("S(M;D3)", s_of(t, ToricValuation::of_ray(t, RayName::E3)), rat(1, 4)));
    rep.rows.push_back(row("S(M;E) for e2+3u2", s_of(t, e), rat(5, 2)));
    rep.rows.push_back(row("A(E) for e2+3u2", pair_log_discrepancy(e, branch).value, rat(5, 2)));
    const Verdict v = certify_polystable(t, branch, {0, 1, -3}, {"t1*x2^3", "t2*x3^3"}, {});
    rep.rows.push_back(row("certify_polystable", std::string(to_string(v.status)), "KPolystableCertified"));
    return rep;
}

Report h17()
{
    const auto t = ScrollTriple::make(4, 0, 0);
    const BranchPoly branch = parse("x1*(x2^3 + x3^3)");
    Report rep{"h17", {}};
    rep.rows.push_back(row("S(M;F1)", s_of(t, ToricValuation::of_ray(t, RayName::U1)), rat(1)));
    rep.rows.push_back(row("S(M;D1)", s_of(t, ToricValuation::of_ray(t, RayName::E1)), rat(1, 2)));
    rep.rows.push_back(row("toric test fires (16 vs 16)", check_toric_instability(t) ? "yes" : "no", "no"));
    const Verdict v = certify_polystable(t, branch, {4, 0, 1}, {"x2", "x3"}, {});
    rep.rows.push_back(row("certify_polystable", std::string(to_string(v.status)), "KPolystableCertified"));
    return rep;
}

Report h12()
{
    const auto t = ScrollTriple::make(3, 1, 1);
    const BranchPoly branch = parse("x1*((t1^6+t2^6)*x1^3 + x2^3 + x3^3)");
    Report rep{"h12", {}};
    rep.rows.push_back(row("S(M;F0)", s_closed_form(t, RayName::U1), rat(9, 10)));
    rep.rows.push_back(row("S(F0 > l3)", s_line(t, 3), rat(3, 10)));
    rep.rows.push_back(row("S(F0 > l1)", s_line(t, 1), rat(2, 5)));
    rep.rows.push_back(row("S(F0 > l1 > p) bound", s_line_point_bound(t, 1), rat(3, 10)));
    AssertedHypotheses asserted;
    asserted.add(Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, "");
    asserted.add(Hypothesis::FiniteAutomorphisms, "");
    const auto classes = stable_point_classes(t, branch, std::nullopt, 1);
    Rational min_ratio = delta_point_bound(classes.front().entries).conclusion;
    for (const auto& c : classes)
        min_ratio = std::min(min_ratio, delta_point_bound(c.entries).conclusion);
    rep.rows.push_back(row("minimum A/S", min_ratio, rat(10, 9)));
    const Verdict v = certify_stable(t, branch, std::nullopt, 1, asserted);
    rep.rows.push_back(row("certify_stable", std::string(to_string(v.status)), "KStableCertified"));
    return rep;
}

Report h14()
{
    const auto t = ScrollTriple::make(3, 2, 1);
    Report rep{"h14", {}};
    rep.rows.push_back(row("(1/6) int_0^3 vol(M - uL) du", fiber_s_lower_bound(t, kFiberBetaRange), rat(25, 24)));
    const auto v = check_fiber_beta(t);
    rep.rows.push_back(row("fiber-beta test", v ? std::string(to_string(v->status)) : "none", "KUnstable"));
    return rep;
}

Report h7_worked()
{
    const auto w = h7_worked_integrals();
    Report rep{"h7-worked", {}};
    rep.rows.push_back(row("(1/8) int_0^1 (8 - 8u^3) du", w.curve, rat(3, 4)));
    rep.rows.push_back(row("(3/8) int_0^1 int_0^{2u} 4u(2u - v) dv du", w.point, rat(3, 4)));
    return rep;
}

Report kill_many()
{
    Report rep{"kill-many", {}};
    const Registry reg = default_registry();
    for (const char* id : {"H5", "H7", "H8", "H10", "H11", "H12", "H13", "H17"}) {
        const ScrollTriple t = *reg.records.at(id).triple;
        const std::string label = std::string(id) + " " + to_string(t) + " Q=" + std::to_string(t.quadratic()) +
                                  " 4sum=" + std::to_string(4 * t.sum());
        rep.rows.push_back(row(label, check_toric_instability(t) ? "fires" : "silent", "silent"));
    }
    for (auto t : {ScrollTriple{3, 3, 1}, ScrollTriple{4, 3, 0}, ScrollTriple{4, 4, 4}}) {
        const std::string label =
            to_string(t) + " Q=" + std::to_string(t.quadratic()) + " 4sum=" + std::to_string(4 * t.sum());
        rep.rows.push_back(row(label, check_toric_instability(t) ? "fires" : "silent", "fires"));
    }
    return rep;
}

}  // namespace

Report reproduce(std::string_view name, int dmax, Execution exec)
{
    if (name == "lemma-toric")
        return lemma_toric(dmax, exec);
    if (name == "h10")
        return h10();
    if (name == "h17")
        return h17();
    if (name == "h12")
        return h12();
    if (name == "h14")
        return h14();
    if (name == "h7-worked")
        return h7_worked();
    if (name == "kill-many")
        return kill_many();
    throw std::invalid_argument("unknown reproduction '" + std::string(name) + "'");
}

}  // namespace kscroll
