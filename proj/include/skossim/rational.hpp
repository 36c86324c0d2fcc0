#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace skossim {

/// Nonnegative fraction kept in lowest terms. Zero is 0/1.
class Rational {
public:
    constexpr Rational() noexcept = default;
    /// Throws std::invalid_argument on a zero denominator.
    Rational(std::uint64_t numerator, std::uint64_t denominator);

    static Rational zero() noexcept { return {}; }
    static Rational one() noexcept { return Rational(1, 1); }

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "num/den".
    std::string to_string() const;

    /// Fixed-point rendering with `digits` fractional digits, rounding half
    /// away from zero.
    std::string to_decimal(int digits = 6) const;

    /// Parses "num/den" (reducing it) or a bare integer.
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace skossim
