#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kscroll/branch.hpp"
#include "kscroll/rational.hpp"
#include "kscroll/scroll.hpp"

namespace kscroll {

/// Du Val surface singularity type A_n (n >= 1), D_n (n >= 4), E6, E7, E8.
struct DuValType {
    enum class Kind { A, D, E6, E7, E8 };
    Kind kind = Kind::A;
    int n = 1;

    /// Throws std::invalid_argument outside the parameter ranges.
    static DuValType make(Kind kind, int n);
    /// "A7", "D5", "E6", ...
    static DuValType parse(std::string_view text);

    friend bool operator==(const DuValType&, const DuValType&) = default;
};

std::string to_string(const DuValType& d);

enum class Hypothesis {
    ReductiveGroupActsWithoutFixedPointOnBase,
    BranchClassificationSupplied,
    FiniteAutomorphisms,
};

std::string_view to_string(Hypothesis h);
Hypothesis parse_hypothesis(std::string_view text);

/// Facts the engine records but cannot check, each with a note on where it comes from.
struct AssertedHypotheses {
    std::map<Hypothesis, std::string> flags;

    bool has(Hypothesis h) const { return flags.count(h) != 0; }
    void add(Hypothesis h, std::string note) { flags[h] = std::move(note); }

    friend bool operator==(const AssertedHypotheses&, const AssertedHypotheses&) = default;
};

/// Where a registry field came from: "paper", "derived" or "user", plus a traceability note.
struct FieldProvenance {
    std::string tag;
    std::string note;

    friend bool operator==(const FieldProvenance&, const FieldProvenance&) = default;
};

struct AlternateBranch {
    std::string text;
    std::string note;

    friend bool operator==(const AlternateBranch&, const AlternateBranch&) = default;
};

/// Data needed to certify K-polystability through a two-dimensional torus:
/// a valuation witnessing Futaki vanishing and the quotient map (m1 : m2).
struct PolystableData {
    IVec3 futaki_valuation{};
    std::pair<std::string, std::string> quotient;

    friend bool operator==(const PolystableData&, const PolystableData&) = default;
};

struct FamilyRecord {
    std::string id;
    std::optional<ScrollTriple> triple;
    std::optional<int> degree;
    std::optional<std::string> branch;
    std::vector<AlternateBranch> alternate_branches;
    std::optional<SingularityKind> p3_type;
    std::optional<int> line_component;
    std::vector<DuValType> singular_locus;
    AssertedHypotheses asserted;
    std::optional<PolystableData> polystable;
    std::map<std::string, FieldProvenance> provenance;

    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

}  // namespace kscroll
