#include "wxz/symmetry.hpp"

namespace wxz {

ContinuousSym ContinuousSym::identity() {
    ContinuousSym s;
    s.t = SquareMatrix::identity(2);
    s.s = SquareMatrix::identity(2);
    return s;
}

ContinuousSym ContinuousSym::composed(const ContinuousSym& second, const ContinuousSym& first) {
    ContinuousSym out;
    out.t = second.t * first.t;
    out.s = second.s * first.s;
    out.omega = second.omega * first.omega;
    out.xi = second.xi * first.xi;
    out.zeta = second.zeta * first.zeta;
    return out;
}

WxzTriple apply_continuous(const ContinuousSym& sym, const WxzTriple& triple) {
    if (sym.omega.is_zero() || sym.xi.is_zero() || sym.zeta.is_zero()) {
        throw PreconditionViolated("continuous symmetry scale must be nonzero");
    }
    SquareMatrix tt = kron(sym.t, sym.t);
    SquareMatrix ts = kron(sym.t, sym.s);
    SquareMatrix ss = kron(sym.s, sym.s);
    WxzTriple out;
    out.w = sym.omega * (tt * triple.w * matrix_inverse(tt));
    out.x = sym.xi * (ts * triple.x * matrix_inverse(ts));
    out.z = sym.zeta * (ss * triple.z * matrix_inverse(ss));
    return out;
}

std::string DiscreteSym::str() const {
    switch (tag) {
        case Tag::TransposeAll: return "transpose";
        case Tag::HashWZ:
            return std::string("hash(") + (w_hash ? "#" : "id") + "," + (z_hash ? "#" : "id") + ")";
        case Tag::FlipInvWZ:
            return std::string("flipinv(") + (c > 0 ? "+" : "-") + "," + (d > 0 ? "+" : "-") + ")";
        case Tag::SwapWZ:
            return std::string("swap(") + (c > 0 ? "+" : "-") + "," + (d > 0 ? "+" : "-") + ")";
        case Tag::AntiDiag: return "antidiag";
    }
    return "?";
}

namespace {

SquareMatrix pm(const SquareMatrix& y, int sign) {
    return sign > 0 ? op_plus(y) : op_inv(y);
}

} // namespace

WxzTriple apply_discrete(const DiscreteSym& sym, const WxzTriple& triple) {
    WxzTriple out;
    switch (sym.tag) {
        case DiscreteSym::Tag::TransposeAll:
            out.w = triple.w.transpose();
            out.x = triple.x.transpose();
            out.z = triple.z.transpose();
            return out;
        case DiscreteSym::Tag::HashWZ:
            out.w = sym.w_hash ? op_hash(triple.w) : triple.w;
            out.x = triple.x;
            out.z = sym.z_hash ? op_hash(triple.z) : triple.z;
            return out;
        case DiscreteSym::Tag::FlipInvWZ:
            out.w = pm(triple.w, sym.c);
            out.x = op_inv(triple.x);
            out.z = pm(triple.z, sym.d);
            return out;
        case DiscreteSym::Tag::SwapWZ:
            out.w = pm(triple.z, sym.c);
            out.x = op_plus(triple.x);
            out.z = pm(triple.w, sym.d);
            return out;
        case DiscreteSym::Tag::AntiDiag:
            out.w = op_antidiag(triple.w);
            out.x = op_antidiag(triple.x);
            out.z = op_antidiag(triple.z);
            return out;
    }
    throw Error("bad discrete tag");
}

namespace {

// X (C(x)1) = (A(x)1) X or (C(x)1) X = X (A(x)1), and the 1(x)C mirror.
void check_intertwine(const SquareMatrix& x, const SquareMatrix& c, const SquareMatrix& a,
                      bool second_slot, const char* who) {
    SquareMatrix ce = second_slot ? kron(SquareMatrix::identity(2), c)
                                  : kron(c, SquareMatrix::identity(2));
    SquareMatrix ae = second_slot ? kron(SquareMatrix::identity(2), a)
                                  : kron(a, SquareMatrix::identity(2));
    bool right = (x * ce - ae * x).is_zero();
    bool left = (ce * x - x * ae).is_zero();
    if (!right && !left) {
        throw HypothesisViolated(std::string(who) + ": X does not intertwine with the conjugator");
    }
}

} // namespace

namespace {

// The X-multiplication variants follow from the hypotheses alone; the
// conjugation variants do not (a flip W with a generic diagonal T satisfies
// every hypothesis yet leaves the solution manifold), so those verify their
// image and refuse when the data is outside the sound regime.
void gate_conjugated_image(const WxzTriple& out, const char* who) {
    if (!wxz_residual(out.w, out.x, out.z).pass(approx_tolerance())) {
        throw HypothesisViolated(std::string(who) +
                                 ": conjugated triple leaves the solution manifold");
    }
}

} // namespace

WxzTriple apply_lemma1(const SquareMatrix& t, const SquareMatrix& a, Lemma1Variant variant,
                       const WxzTriple& triple) {
    SquareMatrix tt = kron(t, t);
    if (!(triple.w * tt - tt * triple.w).is_zero()) {
        throw HypothesisViolated("lemma1: [W, T(x)T] != 0");
    }
    check_intertwine(triple.x, t, a, /*second_slot=*/false, "lemma1");
    SquareMatrix te = kron(t, SquareMatrix::identity(2));
    WxzTriple out = triple;
    switch (variant) {
        case Lemma1Variant::LeftX: out.x = te * triple.x; break;
        case Lemma1Variant::RightX: out.x = triple.x * te; break;
        case Lemma1Variant::ConjW:
            out.w = te * triple.w * matrix_inverse(te);
            gate_conjugated_image(out, "lemma1");
            break;
    }
    return out;
}

WxzTriple apply_lemma2(const SquareMatrix& s, const SquareMatrix& a, Lemma2Variant variant,
                       const WxzTriple& triple) {
    SquareMatrix ss = kron(s, s);
    if (!(triple.z * ss - ss * triple.z).is_zero()) {
        throw HypothesisViolated("lemma2: [Z, S(x)S] != 0");
    }
    check_intertwine(triple.x, s, a, /*second_slot=*/true, "lemma2");
    SquareMatrix se2 = kron(SquareMatrix::identity(2), s);
    SquareMatrix se1 = kron(s, SquareMatrix::identity(2));
    WxzTriple out = triple;
    switch (variant) {
        case Lemma2Variant::LeftX: out.x = se2 * triple.x; break;
        case Lemma2Variant::RightX: out.x = triple.x * se2; break;
        case Lemma2Variant::ConjZ:
            out.z = se1 * triple.z * matrix_inverse(se1);
            gate_conjugated_image(out, "lemma2");
            break;
    }
    return out;
}

SquareMatrix random_conjugator(Rng& rng) {
    for (;;) {
        std::vector<Scalar> e;
        for (int k = 0; k < 4; ++k) e.push_back(Scalar(rng.rational(false, 3, 3)));
        SquareMatrix m(2, std::move(e));
        if (matrix_invertible(m)) return m;
    }
}

namespace {

bool triple_ok(const WxzTriple& t) {
    return wxz_residual(t.w, t.x, t.z).pass(approx_tolerance());
}

// Diagonal conjugators commute with a large part of the catalog, which makes
// them good candidates for satisfiable lemma hypotheses.
SquareMatrix random_diag(Rng& rng) {
    std::vector<Scalar> e = {Scalar(rng.rational(true, 3, 2)), Scalar(0), Scalar(0),
                             Scalar(rng.rational(true, 3, 2))};
    return SquareMatrix(2, std::move(e));
}

} // namespace

std::vector<WxzTriple> orbit_sample(const WxzTriple& triple, int depth, std::uint64_t seed) {
    if (!triple_ok(triple)) {
        throw PreconditionViolated("orbit_sample: input triple does not verify");
    }
    std::vector<WxzTriple> walk{triple};
    Rng rng = Rng::derive(seed, "orbit", 0);
    WxzTriple cur = triple;
    int steps = 0;
    int guard = 0;
    while (steps < depth && guard < 200 * (depth + 1)) {
        ++guard;
        WxzTriple next;
        try {
            switch (rng.below(4)) {
                case 0: {
                    ContinuousSym sym;
                    sym.t = random_conjugator(rng);
                    sym.s = random_conjugator(rng);
                    sym.omega = Scalar(rng.rational(true, 3, 2));
                    sym.xi = Scalar(rng.rational(true, 3, 2));
                    sym.zeta = Scalar(rng.rational(true, 3, 2));
                    next = apply_continuous(sym, cur);
                    break;
                }
                case 1: {
                    DiscreteSym sym;
                    switch (rng.below(5)) {
                        case 0: sym.tag = DiscreteSym::Tag::TransposeAll; break;
                        case 1:
                            sym.tag = DiscreteSym::Tag::HashWZ;
                            sym.w_hash = rng.coin();
                            sym.z_hash = rng.coin();
                            break;
                        case 2:
                            sym.tag = DiscreteSym::Tag::FlipInvWZ;
                            sym.c = rng.sign();
                            sym.d = rng.sign();
                            break;
                        case 3:
                            sym.tag = DiscreteSym::Tag::SwapWZ;
                            sym.c = rng.sign();
                            sym.d = rng.sign();
                            break;
                        default: sym.tag = DiscreteSym::Tag::AntiDiag; break;
                    }
                    next = apply_discrete(sym, cur);
                    break;
                }
                case 2: {
                    SquareMatrix t = random_diag(rng);
                    auto variant = static_cast<Lemma1Variant>(rng.below(3));
                    next = apply_lemma1(t, t, variant, cur);
                    break;
                }
                default: {
                    SquareMatrix s = random_diag(rng);
                    auto variant = static_cast<Lemma2Variant>(rng.below(3));
                    next = apply_lemma2(s, s, variant, cur);
                    break;
                }
            }
        } catch (const SingularMatrix&) {
            continue;
        } catch (const HypothesisViolated&) {
            continue;
        }
        if (!triple_ok(next)) {
            if (next.w.is_exact() && next.x.is_exact() && next.z.is_exact()) {
                throw Error("orbit_sample: symmetry image failed the residual check");
            }
            continue;  // numerical drift on the approximate path; try another op
        }
        cur = next;
        walk.push_back(cur);
        ++steps;
    }
    return walk;
}

} // namespace wxz
