#ifndef GRAPHLIM_RNG_HPP
#define GRAPHLIM_RNG_HPP

#include "graphlim/rational.hpp"

#include <cstdint>
#include <vector>

namespace graphlim {

/// Counter-mode generator built on the SplitMix64 finalizer.  Every draw
/// is a pure function of (seed, tag, index), so identical seeds reproduce
/// identical outputs bit for bit and independent streams can be consumed
/// in parallel.  Derivation rule (documented contract, also in README):
///   stream(s)        = mix(master xor mix(s + GOLDEN))
///   at(seed, tag, i) = mix(seed xor mix(tag * GOLDEN + i + 1))
/// with mix the SplitMix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.
class CounterRng {
public:
    static constexpr uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    explicit CounterRng(uint64_t master) : master_(master) {}

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    uint64_t master() const { return master_; }

    /// Seed of derived stream s (e.g. one stream per trial).
    uint64_t derive(uint64_t stream) const { return mix(master_ ^ mix(stream + GOLDEN)); }

    /// i-th draw of the (seed, tag) stream.
    static uint64_t at(uint64_t seed, uint64_t tag, uint64_t index) {
        return mix(seed ^ mix(tag * GOLDEN + index + 1));
    }

    /// Map a 64-bit draw to [0,1).
    static double unit(uint64_t bits) {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    uint64_t master_;
};

/// Index of the block containing the uniform draw u/2^64, decided by exact
/// integer comparison against the rational cumulative boundaries.
int sample_block(const std::vector<Rat>& boundaries, uint64_t draw);

/// Exact Bernoulli(p) coin from a 64-bit draw: true iff draw/2^64 < p.
bool bernoulli_exact(const Rat& p, uint64_t draw);

} // namespace graphlim

#endif
