#ifndef GRAPHLIM_BIGINT_HPP
#define GRAPHLIM_BIGINT_HPP

#include <cstdint>
#include <vector>
#include <string>
#include <stdexcept>
#include <utility>
#include <iosfwd>

namespace graphlim {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
/// Geometry coordinates compound through several construction stages,
/// so a fixed-width type is not enough there.
class BigInt {
public:
    BigInt() : neg_(false) {}
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
    BigInt operator-() const {
        BigInt r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const { return divmod(o).first; }
    BigInt operator%(const BigInt& o) const { return divmod(o).second; }

    /// Truncated division; remainder has the sign of the dividend.
    std::pair<BigInt, BigInt> divmod(const BigInt& o) const;

    BigInt operator<<(unsigned bits) const;
    BigInt shr(size_t bits) const;

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);

    /// floor(sqrt(v)) for v >= 0.
    static BigInt isqrt(const BigInt& v);

    size_t bit_length() const;
    double to_double() const;
    std::string str() const;

private:
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();

    bool neg_;
    std::vector<uint32_t> mag_; // little-endian limbs
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational over BigInt; always normalized.  The workhorse of every
/// geometric predicate and construction: no floating point enters any
/// decision.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    BigRat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static BigRat from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    BigRat operator-() const {
        BigRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    BigRat operator+(const BigRat& o) const {
        return BigRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    BigRat operator-(const BigRat& o) const {
        return BigRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    BigRat operator*(const BigRat& o) const { return BigRat(num_ * o.num_, den_ * o.den_); }
    BigRat operator/(const BigRat& o) const {
        if (o.num_.is_zero()) throw std::domain_error("rational division by zero");
        return BigRat(num_ * o.den_, den_ * o.num_);
    }
    BigRat& operator+=(const BigRat& o) { return *this = *this + o; }
    BigRat& operator-=(const BigRat& o) { return *this = *this - o; }
    BigRat& operator*=(const BigRat& o) { return *this = *this * o; }
    BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

    bool operator==(const BigRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRat& o) const { return !(*this == o); }
    bool operator<(const BigRat& o) const { return (num_ * o.den_) < (o.num_ * den_); }
    bool operator>(const BigRat& o) const { return o < *this; }
    bool operator<=(const BigRat& o) const { return !(o < *this); }
    bool operator>=(const BigRat& o) const { return !(*this < o); }

    double to_double() const;
    std::string str() const { return num_.str() + "/" + den_.str(); }

    /// Largest r = m/2^shift with r^2 <= *this (requires *this >= 0).
    /// Used to derive safe rational length bounds from exact squared
    /// distances; the result never overshoots sqrt.
    BigRat sqrt_lower(unsigned precision_bits = 48) const;

private:
    void normalize();
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& v);

} // namespace graphlim

#endif
