#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kscroll/rational.hpp"
#include "kscroll/scroll.hpp"

namespace kscroll {

// Flags F ▷ C ▷ p inside a fiber F ≅ P^2 of the scroll. The refined S-values
// reduce to S-values of torus-invariant divisors of the scroll:
//   line l_i = {t2 = x_i = 0}:    S(F ▷ l_i) = S(M; D_i), endpoints give S(M; D_j), j != i
//   (a1,a2) blowup of x1 = x2 = 0: S(F ▷ E) = a1 S(M; D1) + a2 S(M; D2),
//                                  endpoints give S(M; D1)/a2 and S(M; D2)/a1
// A non-torus-invariant point on the curve is bounded by the larger endpoint value.

struct LineFlag {
    int i1;
};

struct BlowupFlag {
    int a1;
    int a2;
};

enum class FlagTerminal {
    /// First torus-fixed point of the curve: x_{i2} = 0 for lines (i2 < i3), q1 for blowups.
    TorusPointAlpha,
    /// Second torus-fixed point: x_{i3} = 0 for lines, q2 for blowups.
    TorusPointBeta,
    GeneralPoint,
};

struct FlagSpec {
    std::variant<LineFlag, BlowupFlag> kind;
    FlagTerminal terminal = FlagTerminal::GeneralPoint;

    /// Throws std::invalid_argument for a bad line index or non-coprime weights.
    void validate() const;
};

Rational s_line(const ScrollTriple& t, int i1);
Rational s_line_point_bound(const ScrollTriple& t, int i1);
Rational s_blowup(const ScrollTriple& t, int a1, int a2);
Rational s_blowup_point_bound(const ScrollTriple& t, int a1, int a2);

/// S(M; F ▷ C) for the curve of the flag.
Rational s_flag_curve(const ScrollTriple& t, const FlagSpec& flag);
/// S(M; F ▷ C ▷ p): exact at torus-fixed points, the monotonicity bound at a general point.
Rational s_flag_point(const ScrollTriple& t, const FlagSpec& flag);

enum class Provenance { PaperConstant, Computed, Bound };

std::string_view to_string(Provenance p);

struct DeltaInput {
    std::string label;
    Rational a;
    Rational s;
    Provenance a_provenance = Provenance::Computed;
    Provenance s_provenance = Provenance::Computed;
};

struct DeltaRatio {
    std::string label;
    Rational a;
    Rational s;
    Provenance a_provenance;
    Provenance s_provenance;
    Rational ratio;
};

/// delta_p >= min A/S over the steps of a plt flag.
struct DeltaCertificate {
    std::vector<DeltaRatio> ratios;
    Rational conclusion;
    /// conclusion > 1
    bool strict = false;

    /// The step attaining the minimum.
    const DeltaRatio& weakest() const;
};

/// Throws NonPositiveEntry when any A or S is <= 0, or the list is empty.
DeltaCertificate delta_point_bound(const std::vector<DeltaInput>& entries);

}  // namespace kscroll
