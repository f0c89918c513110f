#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kscroll/registry.hpp"
#include "kscroll/scroll.hpp"
#include "kscroll/verdict.hpp"

namespace kscroll {

/// Serial is the reference path; Parallel fans out over OpenMP threads and must agree with it.
enum class Execution { Serial, Parallel };

/// All triples dmax >= d1 >= d2 >= d3 >= 0 with d1 >= 1, in lexicographic order.
std::vector<ScrollTriple> triples_up_to(int dmax);

struct ClosedFormRow {
    ScrollTriple triple;
    RayName ray;
    Rational polytope;
    Rational closed_form;

    bool equal() const { return polytope == closed_form; }
    friend bool operator==(const ClosedFormRow&, const ClosedFormRow&) = default;
};

/// s_toric_valuation(M, ray) against s_closed_form for the five rays of every triple.
std::vector<ClosedFormRow> closed_form_sweep(const std::vector<ScrollTriple>& triples,
                                             Execution exec = Execution::Parallel);

struct BatchRow {
    std::string id;
    std::optional<Verdict> verdict;
    /// Set when the record raised instead of producing a verdict.
    std::string error;
};

/// full_verdict per record in id order; per-record errors land in the row.
std::vector<BatchRow> batch_verdict(const Registry& reg, Execution exec = Execution::Parallel);

}  // namespace kscroll
