#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucf {

/// Exact non-negative rational stored in lowest terms.
///
/// Every comparison cross-multiplies in 128-bit integers, so ordering and
/// equality are exact for all representable values. No floating point is
/// involved anywhere a verdict depends on the value; to_double() exists only
/// for human-readable output.
class Ratio {
  public:
    constexpr Ratio() noexcept : num_(0), den_(1) {}

    /// Constructs num/den reduced to lowest terms.
    /// Requires num >= 0 and den > 0.
    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ <= 0) {
            throw std::invalid_argument("Ratio: denominator must be positive");
        }
        if (num_ < 0) {
            throw std::invalid_argument("Ratio: numerator must be non-negative");
        }
        reduce();
    }

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }

    [[nodiscard]] std::strong_ordering operator<=>(const Ratio& other) const noexcept {
        const Wide lhs = Wide(num_) * other.den_;
        const Wide rhs = Wide(other.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    [[nodiscard]] bool operator==(const Ratio& other) const noexcept {
        // Lowest terms, so equality is componentwise.
        return num_ == other.num_ && den_ == other.den_;
    }

    [[nodiscard]] Ratio operator+(const Ratio& other) const {
        const Wide n = Wide(num_) * other.den_ + Wide(other.num_) * den_;
        const Wide d = Wide(den_) * other.den_;
        return from_wide(n, d);
    }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num/den" (always with the denominator, even when it is 1).
    [[nodiscard]] std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "num/den" or a bare integer "num".
    static Ratio parse(const std::string& text);

  private:
    using Wide = __int128;

    void reduce() {
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Ratio from_wide(Wide n, Wide d) {
        if (d == 0 || n < 0 || d < 0) {
            throw std::invalid_argument("Ratio: invalid intermediate value");
        }
        const Wide g = wide_gcd(n, d);
        n /= g;
        d /= g;
        constexpr Wide max64 = INT64_MAX;
        if (n > max64 || d > max64) {
            throw std::overflow_error("Ratio: value does not fit in 64 bits");
        }
        Ratio r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static Wide wide_gcd(Wide a, Wide b) noexcept {
        while (b != 0) {
            const Wide t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Ratio Ratio::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return {n, 1};
        }
        const std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("trailing characters");
        const std::string den_part = text.substr(slash + 1);
        const std::int64_t d = std::stoll(den_part, &used);
        if (used != den_part.size()) throw std::invalid_argument("trailing characters");
        return {n, d};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Ratio: cannot parse '" + text + "' (expected NUM or NUM/DEN)");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Ratio: value out of range in '" + text + "'");
    }
}

}  // namespace ucf
