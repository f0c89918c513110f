#include "kscroll/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

#include "kscroll/errors.hpp"

namespace kscroll {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values)
{
    if (nodes.size() != values.size())
        throw std::invalid_argument("interpolate: node/value count mismatch");
    Polynomial result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Polynomial basis({Rational(1)});
        Rational denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * Polynomial({-nodes[j], Rational(1)});
            denom *= nodes[i] - nodes[j];
        }
        if (denom == 0)
            throw std::invalid_argument("interpolate: repeated node");
        result = result + (values[i] / denom) * basis;
    }
    return result;
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::antiderivative() const
{
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const
{
    Polynomial F = antiderivative();
    return F(b) - F(a);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        out[k] += b.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p)
{
    std::vector<Rational> out = p.coeffs_;
    for (auto& c : out)
        c *= s;
    return Polynomial(std::move(out));
}

PiecewisePoly PiecewisePoly::from_samples(const SampledFunction& f, std::vector<Rational> breakpoints)
{
    if (breakpoints.size() < 2)
        throw std::invalid_argument("need at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i - 1] < breakpoints[i]))
            throw std::invalid_argument("breakpoints must be strictly increasing");

    PiecewisePoly pp;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const Rational& a = breakpoints[i];
        const Rational h = breakpoints[i + 1] - a;
        std::vector<Rational> nodes, values;
        for (int k = 0; k <= 3; ++k) {
            nodes.push_back(a + h * Rational(k, 3));
            values.push_back(f(nodes.back()));
        }
        Polynomial piece = Polynomial::interpolate(nodes, values);
        const Rational mid = a + h / 2;
        const Rational expected = f(mid);
        if (piece(mid) != expected)
            throw DegreeMismatch("sample at u = " + to_string(mid) + " is " + to_string(expected) +
                                 " but the cubic through [" + to_string(a) + ", " +
                                 to_string(breakpoints[i + 1]) + "] gives " + to_string(piece(mid)));
        pp.pieces_.push_back(std::move(piece));
    }
    pp.breakpoints_ = std::move(breakpoints);
    return pp;
}

Rational PiecewisePoly::operator()(const Rational& x) const
{
    if (pieces_.empty() || x < breakpoints_.front() || x > breakpoints_.back())
        throw std::out_of_range("evaluation outside the breakpoint range");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    idx = idx == 0 ? 0 : std::min(idx - 1, pieces_.size() - 1);
    return pieces_[idx](x);
}

Rational PiecewisePoly::integral() const
{
    Rational total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        total += pieces_[i].integrate(breakpoints_[i], breakpoints_[i + 1]);
    return total;
}

Rational integrate_piecewise(const SampledFunction& f, std::vector<Rational> breakpoints, int degree_bound)
{
    if (degree_bound != 3)
        throw std::invalid_argument("integrate_piecewise supports degree_bound = 3 only");
    return PiecewisePoly::from_samples(f, std::move(breakpoints)).integral();
}

}  // namespace kscroll
