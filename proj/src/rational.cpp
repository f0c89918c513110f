#include "kscroll/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kscroll {

std::string to_string(const Rational& r)
{
    return r.str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

std::string to_decimal(const Rational& r, int digits)
{
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    Integer whole = num / den;
    Integer rem = num % den;
    out += whole.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / den));
            rem %= den;
        }
    }
    return out;
}

}  // namespace kscroll
