#include "graphlim/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <cctype>

namespace graphlim {

BigInt::BigInt(long long v) : neg_(v < 0) {
    unsigned long long u = neg_ ? static_cast<unsigned long long>(-(v + 1)) + 1
                                : static_cast<unsigned long long>(v);
    while (u > 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (mag_.empty() || o.mag_.empty()) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + static_cast<uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::operator<<(unsigned bits) const {
    if (mag_.empty()) return BigInt();
    BigInt r = *this;
    unsigned words = bits / 32, rem = bits % 32;
    if (rem) {
        uint32_t carry = 0;
        for (auto& limb : r.mag_) {
            uint64_t cur = (static_cast<uint64_t>(limb) << rem) | carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = static_cast<uint32_t>(cur >> 32);
        }
        if (carry) r.mag_.push_back(carry);
    }
    r.mag_.insert(r.mag_.begin(), words, 0);
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& o) const {
    if (o.mag_.empty()) throw std::domain_error("BigInt division by zero");
    if (cmp_mag(mag_, o.mag_) < 0) return {BigInt(), *this};

    BigInt q, rem;
    q.mag_.assign(mag_.size(), 0);

    if (o.mag_.size() == 1) {
        // single-limb fast path
        const uint64_t d = o.mag_[0];
        uint64_t r = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            const uint64_t cur = (r << 32) | mag_[i];
            q.mag_[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        if (r) rem.mag_.push_back(static_cast<uint32_t>(r));
    } else {
        // in-place bitwise long division; rem kept in a fixed buffer
        const size_t dn = o.mag_.size();
        std::vector<uint32_t> r(dn + 1, 0);
        auto shift_in = [&](uint32_t bit) {
            uint32_t carry = bit;
            for (size_t w = 0; w < r.size(); ++w) {
                const uint32_t next = r[w] >> 31;
                r[w] = (r[w] << 1) | carry;
                carry = next;
            }
        };
        auto r_ge = [&]() {
            if (r[dn] != 0) return true;
            for (size_t w = dn; w-- > 0;) {
                if (r[w] != o.mag_[w]) return r[w] > o.mag_[w];
            }
            return true;
        };
        auto r_sub = [&]() {
            int64_t borrow = 0;
            for (size_t w = 0; w < dn; ++w) {
                int64_t s = static_cast<int64_t>(r[w]) - borrow - o.mag_[w];
                if (s < 0) {
                    s += (1ll << 32);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                r[w] = static_cast<uint32_t>(s);
            }
            r[dn] -= static_cast<uint32_t>(borrow);
        };
        for (size_t i = bit_length(); i-- > 0;) {
            shift_in((mag_[i / 32] >> (i % 32)) & 1u);
            if (r_ge()) {
                r_sub();
                q.mag_[i / 32] |= (1u << (i % 32));
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        rem.mag_ = std::move(r);
    }

    q.neg_ = neg_ != o.neg_;
    rem.neg_ = neg_;
    q.trim();
    rem.trim();
    return {q, rem};
}

namespace {
size_t trailing_zero_bits(const std::vector<uint32_t>& mag) {
    size_t tz = 0;
    for (size_t w = 0; w < mag.size(); ++w) {
        if (mag[w] == 0) {
            tz += 32;
        } else {
            tz += static_cast<size_t>(__builtin_ctz(mag[w]));
            break;
        }
    }
    return tz;
}
} // namespace

namespace {
// in-place right shift of a limb vector
void shr_inplace(std::vector<uint32_t>& m, size_t bits) {
    if (m.empty() || bits == 0) return;
    const size_t words = bits / 32, rem = bits % 32;
    if (words >= m.size()) {
        m.clear();
        return;
    }
    if (words) m.erase(m.begin(), m.begin() + static_cast<long>(words));
    if (rem) {
        for (size_t w = 0; w < m.size(); ++w) {
            m[w] >>= rem;
            if (w + 1 < m.size()) m[w] |= m[w + 1] << (32 - rem);
        }
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
}

// in-place a -= b on magnitudes; requires |a| >= |b|
void sub_inplace(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<uint32_t>(s);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}
} // namespace

BigInt BigInt::gcd(BigInt a, BigInt b) {
    // binary gcd, fully in place: normalization dominates the exact
    // geometry, so allocation-free rounds matter
    a.neg_ = false;
    b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<uint32_t>&x = a.mag_, &y = b.mag_;
    const size_t zx = trailing_zero_bits(x);
    const size_t zy = trailing_zero_bits(y);
    const size_t shared = std::min(zx, zy);
    shr_inplace(x, zx);
    shr_inplace(y, zy);
    while (true) {
        int c = cmp_mag(x, y);
        if (c == 0) break;
        if (c < 0) x.swap(y);
        sub_inplace(x, y); // both odd: the difference is even and nonzero
        shr_inplace(x, trailing_zero_bits(x));
    }
    BigInt r;
    r.mag_ = std::move(x);
    r.trim();
    return r << static_cast<unsigned>(shared);
}

BigInt BigInt::shr(size_t bits) const {
    if (mag_.empty() || bits == 0) return *this;
    const size_t words = bits / 32, rem = bits % 32;
    BigInt r;
    if (words >= mag_.size()) return r;
    r.mag_.assign(mag_.begin() + static_cast<long>(words), mag_.end());
    if (rem) {
        for (size_t w = 0; w < r.mag_.size(); ++w) {
            r.mag_[w] >>= rem;
            if (w + 1 < r.mag_.size()) r.mag_[w] |= r.mag_[w + 1] << (32 - rem);
        }
    }
    r.neg_ = neg_;
    r.trim();
    return r;
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    size_t bits = (mag_.size() - 1) * 32;
    uint32_t top = mag_.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigInt::to_double() const {
    if (mag_.empty()) return 0.0;
    // top ~96 bits carry all double precision; track the rest as an exponent
    const size_t take = std::min<size_t>(mag_.size(), 3);
    double r = 0;
    for (size_t i = 0; i < take; ++i) r = r * 4294967296.0 + mag_[mag_.size() - 1 - i];
    r = std::ldexp(r, static_cast<int>(32 * (mag_.size() - take)));
    return neg_ ? -r : r;
}

BigInt BigInt::isqrt(const BigInt& v) {
    if (v.sign() < 0) throw std::domain_error("isqrt of negative value");
    if (v.is_zero()) return BigInt();
    // initial guess from bit length, then Newton iteration
    size_t bits = v.bit_length();
    BigInt x = BigInt(1) << static_cast<unsigned>(bits / 2 + 1);
    while (true) {
        BigInt y = (x + v / x).divmod(BigInt(2)).first;
        if (y >= x) break;
        x = y;
    }
    // x = floor(sqrt(v)) now; guard against off-by-one
    while (x * x > v) x = x - BigInt(1);
    while ((x + BigInt(1)) * (x + BigInt(1)) <= v) x = x + BigInt(1);
    return x;
}

std::string BigInt::str() const {
    if (mag_.empty()) return "0";
    std::vector<uint32_t> m = mag_;
    std::string out;
    while (!m.empty()) {
        // divide magnitude by 10^9
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (neg_) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    BigInt v;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad integer literal: " + s);
        v = v * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) v = -v;
    return v;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

void BigRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_zero() && g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (num_.is_zero()) den_ = BigInt(1);
}

BigRat BigRat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt::from_string(s), BigInt(1));
    return BigRat(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

double BigRat::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale both sides down to ~64-bit mantissas and restore the exponent
    const long nb = static_cast<long>(num_.bit_length());
    const long db = static_cast<long>(den_.bit_length());
    const long ns = std::max(0l, nb - 64);
    const long ds = std::max(0l, db - 64);
    BigInt sn = ns ? num_.abs().divmod(BigInt(1) << static_cast<unsigned>(ns)).first : num_.abs();
    BigInt sd = ds ? den_.divmod(BigInt(1) << static_cast<unsigned>(ds)).first : den_;
    double r = std::ldexp(sn.to_double() / sd.to_double(), static_cast<int>(ns - ds));
    return num_.sign() < 0 ? -r : r;
}

BigRat BigRat::sqrt_lower(unsigned precision_bits) const {
    if (sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (is_zero()) return BigRat();
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^p so the floor sqrt keeps p bits
    BigInt scaled = (num_ * den_) << (2 * precision_bits);
    BigInt root = BigInt::isqrt(scaled);
    return BigRat(root, den_ << precision_bits);
}

std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.str(); }

} // namespace graphlim
