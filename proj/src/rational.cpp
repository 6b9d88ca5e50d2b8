#include "cifc/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cifc {

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15) {
            throw std::invalid_argument("unsupported decimal: '" + std::string(text) + "'");
        }
        const bool negative = !whole.empty() && whole.front() == '-';
        if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        const std::int64_t f = parse_int(frac);
        if (w < 0 || f < 0) {
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        }
        const std::int64_t n = w * scale + f;
        return {negative ? -n : n, scale};
    }
    return {parse_int(text)};
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    const auto g = std::gcd(den_, rhs.den_);
    *this = Rational(num_ * (rhs.den_ / g) + rhs.num_ * (den_ / g), den_ / g * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    const auto g1 = std::gcd(num_, rhs.den_);
    const auto g2 = std::gcd(rhs.num_, den_);
    const auto a = g1 == 0 ? num_ : num_ / g1;
    const auto b = g2 == 0 ? rhs.num_ : rhs.num_ / g2;
    const auto c = g2 == 0 ? den_ : den_ / g2;
    const auto d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
    *this = Rational(a * b, c * d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    // Denominators are positive, so cross-multiplication preserves order.
    __extension__ using wide = __int128;
    const wide l = static_cast<wide>(lhs.num_) * rhs.den_;
    const wide r = static_cast<wide>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cifc
