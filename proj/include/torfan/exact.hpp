#pragma once

// Exact scalars. Integer keeps an int64 fast path and promotes to GMP on
// overflow; values that fit in int64 are always stored small.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace torfan {

class Integer {
public:
    Integer() noexcept = default;

    template <std::signed_integral T>
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) {
        if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(kMax))
            small_ = static_cast<std::int64_t>(v);
        else
            big_ = std::make_unique<mpz_class>(static_cast<unsigned long>(v));
    }

    explicit Integer(const mpz_class& v);

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] std::optional<std::int64_t> to_int64() const noexcept {
        if (big_) return std::nullopt;
        return small_;
    }
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] int sign() const noexcept {
        if (!big_) return (small_ > 0) - (small_ < 0);
        return sgn(*big_);
    }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
    [[nodiscard]] std::size_t hash() const;

    Integer operator-() const {
        if (!big_ && small_ != kMin) return Integer(-small_);
        return Integer(mpz_class(-to_mpz()));
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
    }
    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        const int c = cmp(a.to_mpz(), b.to_mpz());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

private:
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;  // non-null only when the value does not fit int64
};

Integer abs(const Integer& v);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Floor division; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
/// Division known to be exact; throws std::domain_error otherwise.
Integer exact_div(const Integer& a, const Integer& b);
/// Remainder of floor division (same sign as b).
Integer floor_mod(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);

struct ExtendedGcd {
    Integer g, s, t;  // s*a + t*b = g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

class Rational {
public:
    Rational() = default;
    Rational(Integer v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    Rational(T v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer num, Integer den);

    [[nodiscard]] const Integer& num() const noexcept { return num_; }
    [[nodiscard]] const Integer& den() const noexcept { return den_; }
    [[nodiscard]] bool is_integer() const noexcept { return den_.is_one(); }
    [[nodiscard]] int sign() const noexcept { return num_.sign(); }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] Integer floor() const { return floor_div(num_, den_); }
    [[nodiscard]] Integer ceil() const { return ceil_div(num_, den_); }
    [[nodiscard]] std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_, Normalized{}); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
    struct Normalized {};
    Rational(Integer num, Integer den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_{0};
    Integer den_{1};
};

}  // namespace torfan

template <>
struct std::hash<torfan::Integer> {
    std::size_t operator()(const torfan::Integer& v) const { return v.hash(); }
};
