#ifndef MAXMINPB_RATIONAL_HPP
#define MAXMINPB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maxminpb {

// Arbitrary-precision exact rational. Everything user-facing (LP solutions,
// certificates) is expressed in this type.
using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigRat make_bigrat(std::int64_t num, std::int64_t den = 1) {
    return BigRat(BigInt(num), BigInt(den));
}

// floor() that stays exact; result must fit an int64 (our objective values
// are bounded by the instance budget, which is an int64).
inline std::int64_t rat_floor(const BigRat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r); // > 0, canonical
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return static_cast<std::int64_t>(q);
}

inline bool rat_is_integer(const BigRat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// "3" for integers, "5/6" otherwise. Used in reports; parseable by
// fractions.Fraction on the python side.
inline std::string rat_to_string(const BigRat& r) {
    if (rat_is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline double rat_to_double(const BigRat& r) { return static_cast<double>(r); }

//======================================================================
// Fast-path rational on int64 with overflow detection. The simplex runs
// on this type first and retries with BigRat when a RatOverflow escapes;
// both paths are exact and pivot identically.
//======================================================================

struct RatOverflow {};

class Rat64 {
public:
    Rat64() : num_(0), den_(1) {}
    Rat64(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rat64(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num_ == 0) throw std::domain_error("Rat64: division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat64 operator-() const { return Rat64(-num_, den_); }
    Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
    Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
    Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
    Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

    // cross-multiplication fits __int128 for any pair of int64 operands
    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

    BigRat to_bigrat() const { return make_bigrat(num_, den_); }

private:
    static Rat64 from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat64: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw RatOverflow{};
        Rat64 r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a ? a : 1;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat64: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Shared helpers so the simplex template works over either number type.
inline BigRat to_bigrat(const BigRat& r) { return r; }
inline BigRat to_bigrat(const Rat64& r) { return r.to_bigrat(); }
inline bool is_zero(const BigRat& r) { return r == 0; }
inline bool is_zero(const Rat64& r) { return r.num() == 0; }

} // namespace maxminpb

#endif
