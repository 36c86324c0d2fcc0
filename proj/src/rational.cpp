#include "skossim/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace skossim {

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    __extension__ typedef unsigned __int128 wide;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
    __extension__ typedef unsigned __int128 wide;
    wide scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    // round(num * scale / den), halves rounded up (values are nonnegative).
    wide scaled = (static_cast<wide>(num_) * scale * 2 + den_) / (static_cast<wide>(den_) * 2);
    auto whole = static_cast<std::uint64_t>(scaled / scale);
    auto frac = static_cast<std::uint64_t>(scaled % scale);
    std::string out = std::to_string(whole);
    if (digits > 0) {
        std::string f = std::to_string(frac);
        out += '.';
        out.append(static_cast<std::size_t>(digits) - f.size(), '0');
        out += f;
    }
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto parse_u64 = [&](std::string_view part) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_u64(text), 1);
    }
    std::uint64_t den = parse_u64(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    return Rational(parse_u64(text.substr(0, slash)), den);
}

}  // namespace skossim
