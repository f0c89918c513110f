#pragma once

#include <functional>
#include <vector>

#include "kscroll/rational.hpp"

namespace kscroll {

/// Dense univariate polynomial with exact coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    /// Interpolant through (nodes[i], values[i]); nodes must be distinct.
    static Polynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const;
    Polynomial antiderivative() const;
    Rational integrate(const Rational& a, const Rational& b) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

using SampledFunction = std::function<Rational(const Rational&)>;

/// Piecewise polynomial of degree <= 3 recovered from samples. Each piece is
/// pinned by 4 evenly spaced samples and checked at the interval midpoint.
class PiecewisePoly {
public:
    /// Throws DegreeMismatch when a piece fails its midpoint check.
    static PiecewisePoly from_samples(const SampledFunction& f, std::vector<Rational> breakpoints);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }

    Rational operator()(const Rational& x) const;
    Rational integral() const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

/// Exact integral of f over [breakpoints.front(), breakpoints.back()], given f
/// is polynomial of degree <= degree_bound between consecutive breakpoints.
/// Only degree_bound = 3 is supported.
Rational integrate_piecewise(const SampledFunction& f, std::vector<Rational> breakpoints, int degree_bound = 3);

}  // namespace kscroll
