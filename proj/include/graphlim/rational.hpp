#ifndef GRAPHLIM_RATIONAL_HPP
#define GRAPHLIM_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace graphlim {

using int128 = __int128;

/// Thrown when an exact computation would exceed the 128-bit envelope.
/// Callers are expected to treat this as "out of envelope", never as
/// an approximation license.
struct RationalOverflow : std::runtime_error {
    RationalOverflow() : std::runtime_error("exact rational arithmetic exceeded the 128-bit envelope") {}
};

namespace detail {
inline int128 i128_abs(int128 x) { return x < 0 ? -x : x; }

inline int128 i128_gcd(int128 a, int128 b) {
    a = i128_abs(a);
    b = i128_abs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw RationalOverflow();
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw RationalOverflow();
    return r;
}

std::string i128_to_string(int128 v);
int128 i128_from_string(const std::string& s);
} // namespace detail

/// Exact rational number backed by 128-bit integers.  Always normalized
/// (positive denominator, gcd 1).  Arithmetic throws RationalOverflow
/// instead of losing exactness.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

    static Rat from_string(const std::string& s);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const { return Rat(unchecked{}, -num_, den_); }

    Rat operator+(const Rat& o) const {
        int128 g = detail::i128_gcd(den_, o.den_);
        int128 l = detail::checked_mul(den_ / g, o.den_);
        int128 n = detail::checked_add(detail::checked_mul(num_, o.den_ / g),
                                       detail::checked_mul(o.num_, den_ / g));
        return Rat(n, l);
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator*(const Rat& o) const {
        int128 g1 = detail::i128_gcd(num_, o.den_);
        int128 g2 = detail::i128_gcd(o.num_, den_);
        return Rat(unchecked{},
                   detail::checked_mul(num_ / g1, o.num_ / g2),
                   detail::checked_mul(den_ / g2, o.den_ / g1));
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        int128 g1 = detail::i128_gcd(num_, o.num_);
        int128 g2 = detail::i128_gcd(o.den_, den_);
        Rat r(unchecked{},
              detail::checked_mul(num_ / g1, o.den_ / g2),
              detail::checked_mul(den_ / g2, o.num_ / g1));
        if (r.den_ < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
        return r;
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        // cross multiplication; overflow-checked
        return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Canonical "p/q" form, e.g. "19/32", "-1/2", "3/1".
    std::string str() const {
        return detail::i128_to_string(num_) + "/" + detail::i128_to_string(den_);
    }

private:
    struct unchecked {};
    Rat(unchecked, int128 n, int128 d) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int128 g = detail::i128_gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    int128 num_;
    int128 den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace graphlim

#endif
