#pragma once

#include <cstdint>

namespace icdof {

/// splitmix64: tiny, splittable, platform-independent stream.  Used for every
/// randomized suite so a (seed, index) pair pins the instance exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.  Modulo bias is irrelevant at these ranges.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Independent substream for instance i of a named suite.
    SplitMix64 split(std::uint64_t i) const {
        SplitMix64 g(s_ ^ (0x2545f4914f6cdd1dULL * (i + 1)));
        g.next();
        return g;
    }

private:
    std::uint64_t s_;
};

}  // namespace icdof
