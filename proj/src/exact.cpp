#include "torfan/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace torfan {

Integer::Integer(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()))
        small_ = v.get_si();
    else
        big_ = std::make_unique<mpz_class>(v);
}

Integer Integer::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed integer literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(mpz_class(s, 10));
}

std::string Integer::to_string() const {
    if (!big_) return std::to_string(small_);
    return big_->get_str(10);
}

mpz_class Integer::to_mpz() const {
    if (big_) return *big_;
    return mpz_class(static_cast<long>(small_));
}

std::size_t Integer::hash() const {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
    auto sa = a.to_int64();
    auto sb = b.to_int64();
    if (sa && sb) {
        auto ua = *sa < 0 ? ~static_cast<std::uint64_t>(*sa) + 1 : static_cast<std::uint64_t>(*sa);
        auto ub = *sb < 0 ? ~static_cast<std::uint64_t>(*sb) + 1 : static_cast<std::uint64_t>(*sb);
        return Integer(std::gcd(ua, ub));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(exact_div(a, gcd(a, b)) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    auto sa = a.to_int64();
    auto sb = b.to_int64();
    if (sa && sb && !(*sa == std::numeric_limits<std::int64_t>::min() && *sb == -1)) {
        std::int64_t q = *sa / *sb;
        if ((*sa % *sb != 0) && ((*sa < 0) != (*sb < 0))) --q;
        return Integer(q);
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return floor_mod(a, d).is_zero();
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    auto sa = a.to_int64();
    auto sb = b.to_int64();
    if (sa && sb && !(*sa == std::numeric_limits<std::int64_t>::min() && *sb == -1)) {
        if (*sa % *sb != 0) throw std::domain_error("inexact division");
        return Integer(*sa / *sb);
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    if (r != 0) throw std::domain_error("inexact division");
    return Integer(q);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    // Iterative Euclid keeping Bezout coefficients.
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        Integer q = floor_div(r0, r1);
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.sign() < 0) return {-r0, -s0, -t0};
    return {r0, s0, t0};
}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (!den_.is_one()) {
        Integer g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_, Integer(1), Rational::Normalized{});
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ - b.num_, Integer(1), Rational::Normalized{});
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_, Integer(1), Rational::Normalized{});
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace torfan
