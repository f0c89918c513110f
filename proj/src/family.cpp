#include "kscroll/family.hpp"

#include <cctype>
#include <stdexcept>

namespace kscroll {

DuValType DuValType::make(Kind kind, int n)
{
    switch (kind) {
    case Kind::A:
        if (n < 1)
            throw std::invalid_argument("A_n needs n >= 1");
        break;
    case Kind::D:
        if (n < 4)
            throw std::invalid_argument("D_n needs n >= 4");
        break;
    case Kind::E6: n = 6; break;
    case Kind::E7: n = 7; break;
    case Kind::E8: n = 8; break;
    }
    return DuValType{kind, n};
}

DuValType DuValType::parse(std::string_view text)
{
    if (text.size() < 2)
        throw std::invalid_argument("bad Du Val type '" + std::string(text) + "'");
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(std::string(text.substr(1)), &used);
        if (used != text.size() - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Du Val type '" + std::string(text) + "'");
    }
    switch (head) {
    case 'A': return make(Kind::A, n);
    case 'D': return make(Kind::D, n);
    case 'E':
        if (n == 6)
            return make(Kind::E6, 6);
        if (n == 7)
            return make(Kind::E7, 7);
        if (n == 8)
            return make(Kind::E8, 8);
        break;
    default: break;
    }
    throw std::invalid_argument("bad Du Val type '" + std::string(text) + "'");
}

std::string to_string(const DuValType& d)
{
    switch (d.kind) {
    case DuValType::Kind::A: return "A" + std::to_string(d.n);
    case DuValType::Kind::D: return "D" + std::to_string(d.n);
    case DuValType::Kind::E6: return "E6";
    case DuValType::Kind::E7: return "E7";
    case DuValType::Kind::E8: return "E8";
    }
    return "?";
}

std::string_view to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase: return "ReductiveGroupActsWithoutFixedPointOnBase";
    case Hypothesis::BranchClassificationSupplied: return "BranchClassificationSupplied";
    case Hypothesis::FiniteAutomorphisms: return "FiniteAutomorphisms";
    }
    return "?";
}

Hypothesis parse_hypothesis(std::string_view text)
{
    for (auto h : {Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, Hypothesis::BranchClassificationSupplied,
                   Hypothesis::FiniteAutomorphisms})
        if (text == to_string(h))
            return h;
    throw std::invalid_argument("unknown hypothesis '" + std::string(text) + "'");
}

}  // namespace kscroll
