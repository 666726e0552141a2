#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cardoracle {

/// Exact fraction in lowest terms with a positive denominator.
/// Arithmetic throws std::overflow_error rather than wrapping.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_(num) {} // NOLINT(google-explicit-constructor)
    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num/den", always with the denominator ("0/1", "-1/3").
    [[nodiscard]] std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
        const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
        return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
    }

    friend constexpr Rational operator-(const Rational& a) {
        return Rational(checked_mul(a.num_, -1), a.den_);
    }

    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        // Cross-reduce first to keep intermediates small.
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const std::int64_t n1 = g1 == 0 ? a.num_ : a.num_ / g1;
        const std::int64_t d2 = g1 == 0 ? b.den_ : b.den_ / g1;
        const std::int64_t n2 = g2 == 0 ? b.num_ : b.num_ / g2;
        const std::int64_t d1 = g2 == 0 ? a.den_ : a.den_ / g2;
        return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
    }

    constexpr Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

  private:
    static constexpr std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t out = 0;
        if (__builtin_mul_overflow(a, b, &out)) {
            throw std::overflow_error("rational multiply overflow");
        }
        return out;
    }

    static constexpr std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(a, b, &out)) {
            throw std::overflow_error("rational add overflow");
        }
        return out;
    }

    constexpr void normalize() {
        if (den_ == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        if (den_ < 0) {
            num_ = checked_mul(num_, -1);
            den_ = checked_mul(den_, -1);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace cardoracle
