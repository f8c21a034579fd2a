#pragma once

#include "chatelet/fold.hpp"
#include "chatelet/laurent.hpp"
#include "chatelet/symbols.hpp"

namespace chatelet {

struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Place of Q: the real place or a finite prime.
struct QPlace {
    bool is_real = false;
    BigInt prime = 0;

    static QPlace real() { return QPlace{true, 0}; }
    static QPlace finite(BigInt p) { return QPlace{false, std::move(p)}; }
    bool operator==(const QPlace& o) const { return is_real == o.is_real && prime == o.prime; }
    bool operator<(const QPlace& o) const {
        if (is_real != o.is_real) return !is_real;  // finite places first, real last
        return prime < o.prime;
    }
    std::string to_string() const { return is_real ? "real" : prime.get_str(); }
    BigInt residue_cardinality() const {
        if (is_real) throw std::domain_error("QPlace: real place has no residue field");
        return prime;
    }
};

/// Place of F_q(t): a monic irreducible of F_q[t], or the place at infinity
/// (uniformizer 1/t, residue field F_q).
struct FPlace {
    bool is_infinity = false;
    Poly<FFElem> pi;  // finite places only
    FqCtxPtr F;

    static FPlace infinity(FqCtxPtr F) { return FPlace{true, {}, std::move(F)}; }
    static FPlace finite(Poly<FFElem> pi_) {
        if (pi_.degree() < 1 || !pi_.lc().is_one())
            throw std::invalid_argument("FPlace: need a monic irreducible");
        FqCtxPtr F = pi_.lc().ctx();
        return FPlace{false, std::move(pi_), F};
    }
    long degree() const { return is_infinity ? 1 : pi.degree(); }
    BigInt residue_cardinality() const {
        BigInt q = F->q;
        BigInt r = 1;
        for (long i = 0; i < degree(); ++i) r *= q;
        return r;
    }
    bool operator==(const FPlace& o) const { return is_infinity == o.is_infinity && pi == o.pi; }
    bool operator<(const FPlace& o) const {
        if (is_infinity != o.is_infinity) return !is_infinity;
        return poly_less(pi, o.pi);
    }
    std::string to_string() const { return is_infinity ? "infinity" : pi.to_string("t"); }
};

/// t -> 1/s coordinate flip: moves the place at infinity to the place (s).
/// With both numerator and denominator reversed at a common degree D, the
/// ratio rev_D(num)/rev_D(den) equals x(1/s) exactly.
inline RatFunc flip_to_infinity_chart(const RatFunc& x) {
    if (x.is_zero()) return x;
    unsigned D = (unsigned)std::max(x.num().degree(), x.den().degree());
    return RatFunc(reverse_poly(x.num(), D), reverse_poly(x.den(), D));
}

inline std::optional<long> valuation(const RatFunc& x, const FPlace& v) {
    if (x.is_zero()) return std::nullopt;
    if (v.is_infinity) return valuation_at_infinity(x);
    return valuation(x, v.pi);
}

inline std::optional<long> valuation(const Rat& x, const QPlace& v) {
    if (v.is_real) throw std::domain_error("valuation: real place");
    return valuation(x, v.prime);
}

/// pi-adic expansion of a rational function at a finite place, to absolute
/// precision absprec; coefficients live in the residue field F_q[t]/(pi).
LaurentSeries<QuotElem> expand_at(const RatFunc& x, const FPlace& v, long absprec);

/// Residue of a place-unit at the place (the leading expansion coefficient).
QuotElem residue_at(const RatFunc& x, const FPlace& v);

/// The residue field of a place as a quotient context (t - 0 is replaced by
/// s at infinity; degree-1 modulus).
QuotCtxPtr residue_field(const FPlace& v);

/// inv_v of the cyclic algebra (chi_K, b) at a place of Q (p = 2, Kummer).
InvariantValue symbol_at(const KummerExt& ext, const Rat& b, const QPlace& v);

/// inv_v of (chi_K, b) at a place of F_q(t) (Artin-Schreier, char p), via
/// the Schmid residue formula on pi-adic expansions.  Precision follows the
/// fixed policy 2*pole(gamma) + 2*|v(b)| + 8 and retries once doubled.
InvariantValue symbol_at(const ArtinSchreierExt& ext, const RatFunc& b, const FPlace& v);

/// Does K split locally at v (K tensor k_v not a field)?  Split places are
/// soluble with identically vanishing invariants.
bool place_splits(const KummerExt& ext, const QPlace& v);
bool place_splits(const ArtinSchreierExt& ext, const FPlace& v);

template <class K>
struct PlaceOf;
template <>
struct PlaceOf<Rat> {
    using type = QPlace;
};
template <>
struct PlaceOf<RatFunc> {
    using type = FPlace;
};

/// Finite set S of potentially bad places: places over p and the
/// archimedean/infinite place, plus the support of disc(P), lc(P), the
/// content, and the extension generator.
std::vector<QPlace> bad_places(const QFold& f);
std::vector<FPlace> bad_places(const FFold& f);

/// Canonical residue representatives: integers [0, v) over Q; polynomial
/// lifts of F_q[t]/(pi) (or constants at infinity) over F_q(t).
std::vector<Rat> residue_reps(const QPlace& v);
std::vector<RatFunc> residue_reps(const FPlace& v);

/// The uniformizer as a global element (v over Q; pi(t) or 1/t over F_q(t)).
Rat uniformizer(const QPlace& v);
RatFunc uniformizer(const FPlace& v);

/// Stability slack for unit classes in symbols: how far beyond the
/// valuation the unit part must be pinned before the symbol is constant.
long symbol_slack(const KummerExt& ext, const QPlace& v);
long symbol_slack(const ArtinSchreierExt& ext, const FPlace& v);

}  // namespace chatelet
