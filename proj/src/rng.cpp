#include "wxz/rng.hpp"

namespace wxz {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Rng Rng::derive(std::uint64_t seed, const std::string& tag, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix(s);
    s ^= fnv1a(tag);
    std::uint64_t b = splitmix(s);
    s ^= index * 0xd1342543de82ef95ull + 1;
    std::uint64_t c = splitmix(s);
    return Rng(a ^ (b << 1) ^ c);
}

std::uint64_t Rng::next() {
    return splitmix(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
    return n ? next() % n : 0;
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Rng::rational(bool nonzero, long max_num, long max_den) {
    for (;;) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        if (nonzero && num == 0) continue;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
}

Scalar Rng::scalar(bool nonzero, bool gaussian) {
    for (;;) {
        Rational re = rational(false);
        Rational im = gaussian && coin() ? rational(false) : Rational(0);
        if (nonzero && sgn(re) == 0 && sgn(im) == 0) continue;
        return Scalar(re, im);
    }
}

} // namespace wxz
