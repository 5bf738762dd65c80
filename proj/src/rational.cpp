#include "coop/rational.hpp"

#include <cctype>

namespace coop {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// Validates [+-]digits, returns the magnitude with sign applied.
BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error("malformed rational '" + std::string(whole) + "'");
    }
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.find('/') != std::string_view::npos) {
        throw Error("malformed rational '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_text, text);
    if (den == 0) {
        throw Error("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(std::move(num), std::move(den));
}

std::string to_fraction_string(const Rational& value) {
    const BigInt& den = denominator(value);
    std::string out = numerator(value).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace coop
