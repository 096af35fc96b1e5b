#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wxz/matrix.hpp"
#include "wxz/rng.hpp"

namespace wxz {

/// W' = omega (T(x)T) W (T(x)T)^-1, X' = xi (T(x)S) X (T(x)S)^-1,
/// Z' = zeta (S(x)S) Z (S(x)S)^-1.
struct ContinuousSym {
    SquareMatrix t, s;  // 2x2, invertible
    Scalar omega{1}, xi{1}, zeta{1};

    static ContinuousSym identity();
    /// The symmetry equal to applying `first`, then `second`.
    static ContinuousSym composed(const ContinuousSym& second, const ContinuousSym& first);
};

WxzTriple apply_continuous(const ContinuousSym& sym, const WxzTriple& triple);

/// The discrete repertoire: global transpose, the hash family on W/Z, the
/// flip-inverse family (X -> X^-1), the W/Z exchange (X -> X^+), and the
/// antidiagonal transposition applied to all three.
struct DiscreteSym {
    enum class Tag { TransposeAll, HashWZ, FlipInvWZ, SwapWZ, AntiDiag };
    Tag tag = Tag::TransposeAll;
    bool w_hash = false, z_hash = false;  // HashWZ: apply # to W / Z
    int c = 1, d = 1;                     // FlipInvWZ / SwapWZ: +1 => Y^+, -1 => Y^-

    std::string str() const;
};

WxzTriple apply_discrete(const DiscreteSym& sym, const WxzTriple& triple);

enum class Lemma1Variant { LeftX, RightX, ConjW };
enum class Lemma2Variant { LeftX, RightX, ConjZ };

/// Conditional symmetry on the W side. Requires [W, T(x)T] = 0 and one of
/// X (T(x)1) = (A(x)1) X or (T(x)1) X = X (A(x)1); raises HypothesisViolated
/// otherwise. LeftX: X' = (T(x)1)X; RightX: X' = X(T(x)1);
/// ConjW: W' = (T(x)1) W (T(x)1)^-1.
WxzTriple apply_lemma1(const SquareMatrix& t, const SquareMatrix& a, Lemma1Variant variant,
                       const WxzTriple& triple);

/// Mirror on the Z side, with S acting in the second tensor slot of X:
/// requires [Z, S(x)S] = 0 and one of X (1(x)S) = (1(x)A) X or
/// (1(x)S) X = X (1(x)A). LeftX: X' = (1(x)S)X; RightX: X' = X(1(x)S);
/// ConjZ: Z' = (S(x)1) Z (S(x)1)^-1.
WxzTriple apply_lemma2(const SquareMatrix& s, const SquareMatrix& a, Lemma2Variant variant,
                       const WxzTriple& triple);

/// Bounded random walk over the symmetry repertoire. Every emitted triple
/// satisfies the residual check; singular draws are resampled. Returns the
/// trajectory, starting with the input.
std::vector<WxzTriple> orbit_sample(const WxzTriple& triple, int depth, std::uint64_t seed);

/// Draws a random invertible 2x2 conjugator with small-height rational entries.
SquareMatrix random_conjugator(Rng& rng);

} // namespace wxz
