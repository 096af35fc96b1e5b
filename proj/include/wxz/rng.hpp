#pragma once

#include <cstdint>
#include <string>

#include "wxz/scalar.hpp"

namespace wxz {

/// Deterministic generator with hand-rolled draws, so reports are
/// byte-identical across platforms and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    /// Derives an independent stream for one (entry, index) work item.
    static Rng derive(std::uint64_t seed, const std::string& tag, std::uint64_t index);

    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);      // uniform in [0, n)
    long range(long lo, long hi);              // uniform in [lo, hi]
    bool coin() { return (next() & 1u) != 0; }
    int sign() { return coin() ? 1 : -1; }

    /// Small-height rational: numerator in [-max_num, max_num], denominator in
    /// [1, max_den]; optionally excluding zero.
    Rational rational(bool nonzero, long max_num = 4, long max_den = 3);

    /// Exact scalar draw; when `gaussian`, the imaginary part may be nonzero.
    Scalar scalar(bool nonzero, bool gaussian = false);

private:
    std::uint64_t state_;
};

} // namespace wxz
