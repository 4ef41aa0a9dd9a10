#include "primcoh/rational.hpp"

#include "primcoh/errors.hpp"

#include <cctype>

namespace primcoh {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.find('/') != std::string_view::npos) {
            throw ParseError("invalid rational literal \"" + std::string(text) + "\"");
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) {
        throw ParseError("invalid rational literal \"" + std::string(text) +
                         "\": expected \"p\" or \"p/q\"");
    }
    Int n{std::string(num)};
    if (den.data() == nullptr) return Rational(n);

    if (!all_digits(den)) {
        throw ParseError("invalid rational literal \"" + std::string(text) +
                         "\": denominator must be a positive integer");
    }
    Int d{std::string(den)};
    if (d == 0) {
        throw ParseError("invalid rational literal \"" + std::string(text) +
                         "\": denominator is zero");
    }
    return Rational(n, d);
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

} // namespace primcoh
