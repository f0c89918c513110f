#include "kscroll/branch.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "kscroll/errors.hpp"

namespace kscroll {

int Monomial::exponent(RayName r) const
{
    switch (r) {
    case RayName::E1: return x[0];
    case RayName::E2: return x[1];
    case RayName::E3: return x[2];
    case RayName::U1: return t[0];
    case RayName::U2: return t[1];
    }
    return 0;
}

BranchPoly::BranchPoly(std::vector<Monomial> monomials, std::string source_text)
    : monomials_(std::move(monomials)), source_text_(std::move(source_text))
{
    if (monomials_.empty())
        throw std::invalid_argument("branch polynomial must have at least one monomial");
}

bool BranchPoly::divisible_by_x(int i) const
{
    return std::all_of(monomials_.begin(), monomials_.end(), [&](const Monomial& m) { return m.x.at(i - 1) > 0; });
}

namespace {

using Exponents = std::array<int, 5>;
using Terms = std::map<Exponents, Rational>;

constexpr int kMaxExponent = 1000;

Terms multiply(const Terms& a, const Terms& b)
{
    Terms out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e;
            for (int k = 0; k < 5; ++k) {
                e[k] = ea[k] + eb[k];
                if (e[k] > kMaxExponent)
                    throw Error("exponent exceeds " + std::to_string(kMaxExponent));
            }
            out[e] += ca * cb;
        }
    return out;
}

void accumulate(Terms& into, const Terms& from, int sign)
{
    for (const auto& [e, c] : from)
        into[e] += sign * c;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Terms parse_all()
    {
        Terms result = poly();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::string digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Terms poly()
    {
        Terms acc;
        int sign = 1;
        if (peek('-') || peek('+')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        accumulate(acc, term(), sign);
        while (peek('+') || peek('-')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            accumulate(acc, term(), sign);
        }
        return acc;
    }

    Terms term()
    {
        Terms acc = factor();
        while (peek('*')) {
            ++pos_;
            acc = multiply(acc, factor());
        }
        return acc;
    }

    Terms factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Terms inner = poly();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            const int power = exponent();
            Terms acc = inner;
            for (int k = 1; k < power; ++k)
                acc = multiply(acc, inner);
            return acc;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            if (peek('/')) {
                ++pos_;
                den = Integer(digits());
                if (den == 0)
                    fail("zero denominator");
            }
            return Terms{{Exponents{}, Rational(num, den)}};
        }
        if (c == 'x' || c == 't') {
            ++pos_;
            if (pos_ >= text_.size())
                fail("expected variable index");
            const char idx = text_[pos_];
            int slot = -1;
            if (c == 'x' && idx >= '1' && idx <= '3')
                slot = idx - '1';
            else if (c == 't' && (idx == '1' || idx == '2'))
                slot = 3 + (idx - '1');
            if (slot < 0)
                fail(std::string("unknown variable '") + c + idx + "'");
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("unknown variable");
            Exponents e{};
            e[slot] = exponent();
            return Terms{{e, Rational(1)}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // optional "^k"; 1 when absent
    int exponent()
    {
        if (!peek('^'))
            return 1;
        ++pos_;
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.size() > 4 || std::stoi(d) == 0 || std::stoi(d) > kMaxExponent) {
            pos_ = at;
            fail("exponent must be a positive integer <= " + std::to_string(kMaxExponent));
        }
        return std::stoi(d);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BranchPoly parse(std::string_view text, ParseMode mode)
{
    Terms terms = Parser(text).parse_all();
    std::vector<Monomial> monomials;
    for (const auto& [e, c] : terms) {
        if (c == 0)
            continue;
        Monomial m;
        m.x = {e[0], e[1], e[2]};
        m.t = {e[3], e[4]};
        m.coefficient = c;
        monomials.push_back(m);
    }
    if (monomials.empty())
        throw SyntaxError("polynomial is identically zero", 0);
    if (mode == ParseMode::Branch) {
        for (const auto& m : monomials)
            if (m.x_degree() != 4)
                throw NonQuarticError("monomial of x-degree " + std::to_string(m.x_degree()) +
                                      " in a branch polynomial (every monomial needs m1 + m2 + m3 = 4)");
    }
    // Descending exponent order for a stable printed form.
    std::reverse(monomials.begin(), monomials.end());
    return BranchPoly(std::move(monomials), std::string(text));
}

std::string print(const BranchPoly& p)
{
    static constexpr const char* names[] = {"x1", "x2", "x3", "t1", "t2"};
    std::string out;
    bool first = true;
    for (const Monomial& m : p.monomials()) {
        Rational c = m.coefficient;
        if (c < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        first = false;

        std::vector<std::string> factors;
        const int exps[5] = {m.x[0], m.x[1], m.x[2], m.t[0], m.t[1]};
        for (int k = 0; k < 5; ++k) {
            if (exps[k] == 0)
                continue;
            factors.push_back(exps[k] == 1 ? names[k] : std::string(names[k]) + "^" + std::to_string(exps[k]));
        }
        if (c != 1 || factors.empty())
            factors.insert(factors.begin(), to_string(c));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0)
                out += "*";
            out += factors[i];
        }
    }
    return out;
}

int coefficient_t_degree(const ScrollTriple& t, const std::array<int, 3>& x)
{
    return x[0] * t.d1 + x[1] * t.d2 + x[2] * t.d3 + 2 * (2 - t.sum());
}

std::vector<TDegreeObservation> observations(const BranchPoly& p)
{
    std::map<std::array<int, 3>, int> seen;
    for (const auto& m : p.monomials()) {
        auto [it, inserted] = seen.emplace(m.x, m.t_degree());
        if (!inserted && it->second != m.t_degree())
            throw PreconditionFailed("x-exponents appear with t-degrees " + std::to_string(it->second) + " and " +
                                     std::to_string(m.t_degree()));
    }
    std::vector<TDegreeObservation> out;
    for (const auto& [x, deg] : seen)
        out.push_back({x, deg});
    return out;
}

std::vector<ScrollTriple> infer_triple(const std::vector<TDegreeObservation>& obs, std::optional<int> degree)
{
    std::vector<ScrollTriple> out;
    for (int d1 = 1; d1 <= kInferTripleMaxD1; ++d1)
        for (int d2 = 0; d2 <= d1; ++d2)
            for (int d3 = 0; d3 <= d2; ++d3) {
                const ScrollTriple t{d1, d2, d3};
                if (degree && 2 * t.sum() != *degree)
                    continue;
                const bool ok = std::all_of(obs.begin(), obs.end(), [&](const TDegreeObservation& o) {
                    return coefficient_t_degree(t, o.x_exponents) == o.t_degree;
                });
                if (ok)
                    out.push_back(t);
            }
    return out;
}

Rational ord_along(const ToricValuation& v, const BranchPoly& p)
{
    std::optional<Rational> best;
    for (const auto& m : p.monomials()) {
        Rational value = 0;
        for (RayName r : kAllRays)
            value += v.coefficient(r) * m.exponent(r);
        if (!best || value < *best)
            best = value;
    }
    return *best;
}

PairLogDiscrepancy pair_log_discrepancy(const ToricValuation& v, const BranchPoly& p)
{
    PairLogDiscrepancy out;
    out.ambient_a = v.log_discrepancy();
    out.branch_ord = ord_along(v, p);
    out.value = out.ambient_a - out.branch_ord / 2;
    return out;
}

DivisorClass monomial_class(const ScrollTriple& t, const Monomial& m)
{
    DivisorClass c{m.x_degree(), m.t_degree()};
    c.l -= m.x[0] * t.d1 + m.x[1] * t.d2 + m.x[2] * t.d3;
    return c;
}

std::string_view to_string(SingularityKind k)
{
    switch (k) {
    case SingularityKind::Smooth: return "smooth";
    case SingularityKind::Node: return "node";
    case SingularityKind::Cusp: return "cusp";
    case SingularityKind::Explicit: return "explicit";
    }
    return "?";
}

SingularityKind parse_singularity(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto k : {SingularityKind::Smooth, SingularityKind::Node, SingularityKind::Cusp, SingularityKind::Explicit})
        if (lower == to_string(k))
            return k;
    throw std::invalid_argument("unknown singularity type '" + std::string(text) + "'");
}

Rational fiber_point_a_value(const BranchLocalType& sing, std::pair<int, int> weights)
{
    const auto [a1, a2] = weights;
    if (a1 <= 0 || a2 <= 0 || std::gcd(a1, a2) != 1)
        throw std::invalid_argument("blowup weights must be coprime positive integers");
    Rational order;
    switch (sing.kind) {
    case SingularityKind::Smooth:
        if (weights != std::pair{1, 1})
            throw UnknownSingularity("smooth branch point is tabulated for weights (1,1) only");
        order = 1;
        break;
    case SingularityKind::Node:
        if (weights != std::pair{1, 1})
            throw UnknownSingularity("node is tabulated for weights (1,1) only");
        order = 2;
        break;
    case SingularityKind::Cusp:
        if (weights != std::pair{3, 2})
            throw UnknownSingularity("cusp is tabulated for weights (3,2) only");
        order = 6;
        break;
    case SingularityKind::Explicit:
        if (!sing.explicit_order)
            throw UnknownSingularity("explicit singularity type needs a weighted order");
        order = *sing.explicit_order;
        break;
    }
    return Rational(a1 + a2) - order / 2;
}

Rational a_point_lower_bound(PointContext context)
{
    return context == PointContext::CuspExceptional ? rat(1, 3) : rat(1, 2);
}

}  // namespace kscroll
