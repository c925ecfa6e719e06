#include "crnv/count.hpp"

#include "crnv/errors.hpp"

#include <algorithm>

namespace crnv {

Count pow2(unsigned k)
{
    Count v = 1;
    v <<= k;
    return v;
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Count parse_count(std::string_view text)
{
    if (!all_digits(text)) {
        throw SchemaError("expected a nonnegative decimal integer, got \"" + std::string(text) + "\"");
    }
    Count v = 0;
    for (char c : text) {
        v *= 10;
        v += c - '0';
    }
    return v;
}

Rational parse_rate(std::string_view text)
{
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac))) {
        throw SchemaError("expected a positive decimal rate, got \"" + std::string(text) + "\"");
    }
    Integer numerator = parse_count(whole);
    Integer denominator = 1;
    for (char c : frac) {
        numerator = numerator * 10 + (c - '0');
        denominator *= 10;
    }
    if (numerator == 0) {
        throw SchemaError("rate must be positive, got \"" + std::string(text) + "\"");
    }
    return Rational(numerator, denominator);
}

std::string to_decimal(const Integer& value)
{
    return value.str();
}

std::string format_rate(const Rational& rate)
{
    Integer num = boost::multiprecision::numerator(rate);
    Integer den = boost::multiprecision::denominator(rate);
    if (den == 1) {
        return num.str();
    }
    // Scale to a power of ten; only denominators of the form 2^a 5^b terminate.
    unsigned digits = 0;
    Integer scale = 1;
    while (scale % den != 0) {
        scale *= 10;
        ++digits;
        if (digits > 4096) {
            throw ParameterError("rate has no finite decimal expansion");
        }
    }
    Integer scaled = num * (scale / den);
    std::string s = scaled.str();
    if (s.size() <= digits) {
        s.insert(0, digits - s.size() + 1, '0');
    }
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') {
        s.pop_back();
    }
    if (s.back() == '.') {
        s.pop_back();
    }
    return s;
}

double to_double(const Integer& value)
{
    return value.convert_to<double>();
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

} // namespace crnv
