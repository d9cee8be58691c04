#include "graphlim/rng.hpp"

#include <stdexcept>

namespace graphlim {

namespace {
// draw/2^64 < num/den  <=>  draw * den < num * 2^64, exactly in 128 bits
bool below(uint64_t draw, const Rat& r) {
    unsigned __int128 den = static_cast<unsigned __int128>(r.den());
    unsigned __int128 num = static_cast<unsigned __int128>(r.num());
    if (r.den() > (int128(1) << 62))
        throw std::domain_error("rational denominator too large for exact 64-bit sampling");
    return static_cast<unsigned __int128>(draw) * den < (num << 64);
}
} // namespace

int sample_block(const std::vector<Rat>& boundaries, uint64_t draw) {
    // boundaries: 0 = c_0 < c_1 < ... < c_k = 1
    const int k = static_cast<int>(boundaries.size()) - 1;
    for (int i = 1; i < k; ++i)
        if (below(draw, boundaries[static_cast<size_t>(i)])) return i - 1;
    return k - 1;
}

bool bernoulli_exact(const Rat& p, uint64_t draw) {
    if (p.sign() < 0 || p > Rat(1)) throw std::invalid_argument("probability outside [0,1]");
    if (p.is_zero()) return false;
    if (p.is_one()) return true;
    return below(draw, p);
}

} // namespace graphlim
