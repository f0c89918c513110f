#include "kscroll/flags.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kscroll {

namespace {

RayName d_ray(int i)
{
    switch (i) {
    case 1: return RayName::E1;
    case 2: return RayName::E2;
    case 3: return RayName::E3;
    default: throw std::invalid_argument("line index must be 1, 2 or 3");
    }
}

void check_weights(int a1, int a2)
{
    if (a1 <= 0 || a2 <= 0 || std::gcd(a1, a2) != 1)
        throw std::invalid_argument("blowup weights must be coprime positive integers");
}

// The two indices other than i1, ascending.
std::pair<int, int> others(int i1)
{
    switch (i1) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    case 3: return {1, 2};
    default: throw std::invalid_argument("line index must be 1, 2 or 3");
    }
}

}  // namespace

void FlagSpec::validate() const
{
    if (const auto* line = std::get_if<LineFlag>(&kind))
        d_ray(line->i1);
    else {
        const auto& b = std::get<BlowupFlag>(kind);
        check_weights(b.a1, b.a2);
    }
}

Rational s_line(const ScrollTriple& t, int i1)
{
    return s_closed_form(t, d_ray(i1));
}

Rational s_line_point_bound(const ScrollTriple& t, int i1)
{
    const auto [i2, i3] = others(i1);
    return (1 + Rational(std::max(t.d(i2), t.d(i3)), t.sum())) / 4;
}

Rational s_blowup(const ScrollTriple& t, int a1, int a2)
{
    check_weights(a1, a2);
    return (a1 + a2 + Rational(a1 * t.d1 + a2 * t.d2, t.sum())) / 4;
}

Rational s_blowup_point_bound(const ScrollTriple& t, int a1, int a2)
{
    check_weights(a1, a2);
    const Rational at_q1 = (1 + Rational(t.d1, t.sum())) / (4 * a2);
    const Rational at_q2 = (1 + Rational(t.d2, t.sum())) / (4 * a1);
    return std::max(at_q1, at_q2);
}

Rational s_flag_curve(const ScrollTriple& t, const FlagSpec& flag)
{
    flag.validate();
    if (const auto* line = std::get_if<LineFlag>(&flag.kind))
        return s_closed_form(t, d_ray(line->i1));
    const auto& b = std::get<BlowupFlag>(flag.kind);
    return b.a1 * s_closed_form(t, RayName::E1) + b.a2 * s_closed_form(t, RayName::E2);
}

Rational s_flag_point(const ScrollTriple& t, const FlagSpec& flag)
{
    flag.validate();
    Rational alpha, beta;
    if (const auto* line = std::get_if<LineFlag>(&flag.kind)) {
        const auto [i2, i3] = others(line->i1);
        alpha = s_closed_form(t, d_ray(i2));
        beta = s_closed_form(t, d_ray(i3));
    } else {
        const auto& b = std::get<BlowupFlag>(flag.kind);
        alpha = s_closed_form(t, RayName::E1) / b.a2;
        beta = s_closed_form(t, RayName::E2) / b.a1;
    }
    switch (flag.terminal) {
    case FlagTerminal::TorusPointAlpha: return alpha;
    case FlagTerminal::TorusPointBeta: return beta;
    case FlagTerminal::GeneralPoint: return std::max(alpha, beta);
    }
    throw std::logic_error("unreachable");
}

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::PaperConstant: return "paper-constant";
    case Provenance::Computed: return "computed";
    case Provenance::Bound: return "bound";
    }
    return "?";
}

const DeltaRatio& DeltaCertificate::weakest() const
{
    return *std::min_element(ratios.begin(), ratios.end(),
                             [](const DeltaRatio& a, const DeltaRatio& b) { return a.ratio < b.ratio; });
}

DeltaCertificate delta_point_bound(const std::vector<DeltaInput>& entries)
{
    if (entries.empty())
        throw NonPositiveEntry("delta bound needs at least one flag step");
    DeltaCertificate cert;
    for (const auto& e : entries) {
        if (!(e.a > 0) || !(e.s > 0))
            throw NonPositiveEntry("non-positive entry for '" + e.label + "': A = " + to_string(e.a) +
                                   ", S = " + to_string(e.s));
        cert.ratios.push_back({e.label, e.a, e.s, e.a_provenance, e.s_provenance, e.a / e.s});
    }
    cert.conclusion = cert.weakest().ratio;
    cert.strict = cert.conclusion > 1;
    return cert;
}

}  // namespace kscroll
