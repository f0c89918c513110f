#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kscroll/rational.hpp"
#include "kscroll/sweep.hpp"

namespace kscroll {

struct ReportRow {
    std::string label;
    std::string computed;
    std::string expected;
    bool ok = false;
};

struct Report {
    std::string name;
    std::vector<ReportRow> rows;

    bool ok() const;
};

/// The two integrals over the blowup of the section C in the H7 example:
/// (1/8) int_0^1 (8 - 8u^3) du and (3/8) int_0^1 int_0^{2u} 4u(2u - v) dv du.
struct WorkedIntegrals {
    Rational curve;
    Rational point;
};
WorkedIntegrals h7_worked_integrals();

/// lemma-toric, h10, h17, h12, h14, h7-worked, kill-many
const std::vector<std::string>& reproduction_names();

/// dmax only affects lemma-toric. Throws std::invalid_argument for unknown names.
Report reproduce(std::string_view name, int dmax = 8, Execution exec = Execution::Parallel);

}  // namespace kscroll
