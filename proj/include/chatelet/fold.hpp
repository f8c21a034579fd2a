#pragma once

#include <optional>
#include <variant>

#include "chatelet/extension.hpp"
#include "chatelet/poly_io.hpp"

namespace chatelet {

struct NotSeparable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Splitting field of an irreducible factor equal to K?  Supported regimes:
/// p = 2 Kummer over Q (discriminant square-class test) and Artin-Schreier
/// extensions with constant gamma (root search over the degree-p constant
/// field extension).  Throws UnsupportedRegime outside these.
bool splitting_field_equals_K(const Poly<Rat>& factor_poly, const KummerExt& ext);
bool splitting_field_equals_K(const Poly<RatFunc>& factor_poly, const ArtinSchreierExt& ext);

template <class K>
struct ExtOf;
template <>
struct ExtOf<Rat> {
    using type = KummerExt;
};
template <>
struct ExtOf<RatFunc> {
    using type = ArtinSchreierExt;
};

/// The (smooth proper model of the) normic bundle N_{K/k}(z) = P(x), stored
/// symbolically: P, its homogenization, the cached factorization, the norm
/// form, and per-factor splitting-field flags.  Immutable after build_fold.
template <class K>
struct FoldData {
    using Ext = typename ExtOf<K>::type;

    Ext ext;
    Poly<K> P;
    HomForm<K> Ptilde;
    Factorization<K> fac;
    MultiPoly<K> norm = MultiPoly<K>::zero_like(1);
    std::vector<std::optional<bool>> flags;  // splitting field == K, per factor
    bool is_chatelet = false;

    unsigned p() const { return ext.p; }
    long degP() const { return P.degree(); }
};

using QFold = FoldData<Rat>;
using FFold = FoldData<RatFunc>;
using Fold = std::variant<QFold, FFold>;

/// Validated construction: requires P separable of degree a positive
/// multiple of p and a non-split extension.  Splitting-field flags are
/// filled where the regime supports the test, left unset otherwise.
template <class K>
FoldData<K> build_fold(const typename ExtOf<K>::type& ext, const Poly<K>& P) {
    validate(ext);
    FoldData<K> f;
    f.ext = ext;
    if (P.is_zero() || P.degree() < 1) throw BadDegree("build_fold: P must be nonconstant");
    if (P.degree() % (long)ext.p != 0)
        throw BadDegree("build_fold: deg P must be divisible by p");
    if (!is_separable(P)) throw NotSeparable("build_fold: P must be separable");
    f.P = P;
    f.Ptilde = homogenize(P, (unsigned)P.degree());
    f.fac = factor(P);
    f.norm = norm_form(ext);
    f.is_chatelet = (P.degree() == 2 * (long)ext.p);
    for (const auto& g : f.fac.factors) {
        try {
            f.flags.push_back(splitting_field_equals_K(g, ext));
        } catch (const UnsupportedRegime&) {
            f.flags.push_back(std::nullopt);
        }
    }
    return f;
}

/// rank Pic X^s = deg(P) (p - 1) + 2.
template <class K>
long picard_rank(const FoldData<K>& f) {
    return f.degP() * ((long)f.p() - 1) + 2;
}

inline long picard_rank_formula(unsigned p, long degP) { return degP * ((long)p - 1) + 2; }

template <class K>
struct FiberComponent {
    Poly<K> factor;
    long degree;
    std::optional<bool> splitting_field_is_K;
};

/// Degenerate fibers lie over the roots of P: one entry per irreducible
/// factor, tagged with its splitting-field flag.
template <class K>
std::vector<FiberComponent<K>> degenerate_fiber_locus(const FoldData<K>& f) {
    std::vector<FiberComponent<K>> out;
    for (size_t i = 0; i < f.fac.factors.size(); ++i)
        out.push_back({f.fac.factors[i], f.fac.factors[i].degree(), f.flags[i]});
    return out;
}

/// Point on one of the two standard charts.  finite_x: coordinate = x and
/// the equation is N(z) = P(x) * wprime^p; infinite_x: coordinate = y = 1/x
/// and P is replaced by its degree-reversal.
template <class K>
struct AffinePoint {
    enum class Chart { finite_x, infinite_x };
    Chart chart = Chart::finite_x;
    K coord;
    std::vector<K> z;
    K wprime;
};

/// Exact re-substitution check of the chart equation.
template <class K>
bool point_satisfies_chart(const FoldData<K>& f, const AffinePoint<K>& pt) {
    K lhs = f.norm.eval(pt.z);
    Poly<K> model = pt.chart == AffinePoint<K>::Chart::finite_x
                        ? f.P
                        : reverse_poly(f.P, (unsigned)f.P.degree());
    K w = pt.wprime;
    K wp = w.one();
    for (unsigned i = 0; i < f.p(); ++i) wp = wp * w;
    K rhs = model.eval(pt.coord) * wp;
    return lhs == rhs;
}

/// Flat serialization record (JSON layer lives in json_io).
struct FoldRecord {
    std::string field;  // "Q" or "Fq(t)"
    unsigned p = 2;
    unsigned q_p = 0, q_s = 0;  // constant field, char-p case
    std::string ext_kind;       // "kummer" | "artin_schreier"
    std::string generator;      // alpha or gamma as text
    std::string P;              // polynomial text
};

FoldRecord to_record(const Fold& fold);
Fold fold_from_record(const FoldRecord& rec);

}  // namespace chatelet
