#include "chatelet/place.hpp"

#include <set>

namespace chatelet {

namespace {

Poly<FFElem> var_t_poly(const FqCtxPtr& F) { return Poly<FFElem>::x(FFElem::from_int_in(F, 1)); }

// residue of a v-unit at a finite place
QuotElem residue_of_unit(const RatFunc& u, const QuotCtxPtr& C) {
    const Poly<FFElem>& pi = C->pi;
    Poly<FFElem> A = u.num(), B = u.den();
    long a = valuation_at(A, pi);
    long b = valuation_at(B, pi);
    if (a != b) throw std::logic_error("residue_of_unit: not a unit");
    for (long i = 0; i < a; ++i) {
        A = A / pi;
        B = B / pi;
    }
    return reduce_mod(C, A) * reduce_mod(C, B).inv();
}

}  // namespace

QuotCtxPtr residue_field(const FPlace& v) {
    if (v.is_infinity) return QuotCtx::make(v.F, var_t_poly(v.F));
    return QuotCtx::make(v.F, v.pi);
}

LaurentSeries<QuotElem> expand_at(const RatFunc& x, const FPlace& v, long absprec) {
    if (v.is_infinity) {
        FPlace s_place = FPlace::finite(var_t_poly(v.F));
        return expand_at(flip_to_infinity_chart(x), s_place, absprec);
    }
    QuotCtxPtr C = residue_field(v);
    QuotElem zero = QuotElem::from_index(C, 0);
    if (x.is_zero()) return LaurentSeries<QuotElem>(zero, absprec);
    long e = *valuation(x, v);
    if (e >= absprec) return LaurentSeries<QuotElem>(zero, absprec);

    // strip the pi-power, then expand the unit A/B as A * B^(-1) mod pi^N
    // in plain polynomial arithmetic (no rational-function normalization)
    Poly<FFElem> A = x.num(), B = x.den();
    for (long i = valuation_at(A, v.pi); i > 0; --i) A = A / v.pi;
    for (long i = valuation_at(B, v.pi); i > 0; --i) B = B / v.pi;
    long n = absprec - e;
    Poly<FFElem> M = v.pi.pow((unsigned)n);
    Poly<FFElem> u, w;
    Poly<FFElem> g = poly_ext_gcd(B % M, M, u, w);
    if (g.degree() != 0) throw std::logic_error("expand_at: denominator not a unit at the place");
    Poly<FFElem> cur = (A % M) * u % M;  // g is the monic gcd = 1

    std::vector<QuotElem> coeffs;
    coeffs.reserve((size_t)n);
    for (long i = 0; i < n; ++i) {
        QuotElem d = reduce_mod(C, cur);
        coeffs.push_back(d);
        cur = (cur - lift(d)) / v.pi;
    }
    return LaurentSeries<QuotElem>(zero, e, std::move(coeffs), absprec);
}

QuotElem residue_at(const RatFunc& x, const FPlace& v) {
    if (v.is_infinity) {
        FPlace s_place = FPlace::finite(var_t_poly(v.F));
        return residue_at(flip_to_infinity_chart(x), s_place);
    }
    return residue_of_unit(x, residue_field(v));
}

InvariantValue symbol_at(const KummerExt& ext, const Rat& b, const QPlace& v) {
    if (ext.p != 2)
        throw UnsupportedRegime("symbol_at: Kummer symbols over Q implemented for p = 2 only");
    if (b.is_zero()) throw std::invalid_argument("symbol_at: zero argument");
    if (v.is_real) return hilbert_symbol_real(ext.alpha, b);
    return hilbert_symbol(ext.alpha, b, v.prime);
}

InvariantValue symbol_at(const ArtinSchreierExt& ext, const RatFunc& b, const FPlace& v) {
    if (b.is_zero()) throw std::invalid_argument("symbol_at: zero argument");
    // gamma here is the Artin-Schreier parameter: K = k[T]/(T^p - T - gamma)
    auto vg = valuation(ext.gamma, v);
    long pole_g = (vg && *vg < 0) ? -*vg : 0;
    long vb = *valuation(b, v);
    long prec = 2 * pole_g + 2 * std::abs(vb) + 8;
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            auto a_ser = expand_at(ext.gamma, v, (vg ? std::min(*vg, 0l) : 0l) + prec);
            auto b_ser = expand_at(b, v, vb + prec);
            return schmid_symbol(a_ser, b_ser, ext.p);
        } catch (const InsufficientPrecision&) {
            prec *= 2;
        }
    }
    throw InsufficientPrecision("symbol_at: residue not certified at tripled precision");
}

bool place_splits(const KummerExt& ext, const QPlace& v) {
    if (ext.p != 2)
        throw UnsupportedRegime("place_splits: Kummer case over Q implemented for p = 2 only");
    if (v.is_real) return ext.alpha.sign() > 0;
    return is_square_in_Qv(ext.alpha, v.prime);
}

bool place_splits(const ArtinSchreierExt& ext, const FPlace& v) {
    // split iff T^p - T - gamma has a root in k_v: reduce gamma mod ℘ of
    // k_v; a surviving pole means ramified (a field), otherwise the residue
    // must have zero absolute trace
    auto vg = valuation(ext.gamma, v);
    long pole_g = (vg && *vg < 0) ? -*vg : 0;
    long prec = 2 * pole_g + 4;
    auto red = artin_schreier_reduce(expand_at(ext.gamma, v, prec), ext.p);
    if (red.is_zero_to_precision()) return true;
    if (red.valuation() < 0) return false;
    if (red.valuation() > 0) return true;
    return red.coeff(0).trace_to_prime() == 0;
}

long symbol_slack(const KummerExt& ext, const QPlace& v) {
    (void)ext;
    if (v.is_real) return 0;
    return v.prime == 2 ? 3 : 1;
}

long symbol_slack(const ArtinSchreierExt& ext, const FPlace& v) {
    auto vg = valuation(ext.gamma, v);
    long pole_g = (vg && *vg < 0) ? -*vg : 0;
    return 1 + pole_g;
}

std::vector<QPlace> bad_places(const QFold& f) {
    std::set<BigInt> primes;
    primes.insert(BigInt(f.p()));
    auto add_support = [&](const Rat& x) {
        if (x.is_zero()) return;
        for (auto& [p, e] : factor_integer(x.num())) {
            (void)e;
            primes.insert(p);
        }
        for (auto& [p, e] : factor_integer(x.den())) {
            (void)e;
            primes.insert(p);
        }
    };
    add_support(discriminant(f.P));
    add_support(Rat(f.P.lc()));
    add_support(f.fac.content);
    add_support(f.ext.alpha);
    std::vector<QPlace> out;
    for (const auto& p : primes) out.push_back(QPlace::finite(p));
    out.push_back(QPlace::real());
    return out;
}

std::vector<FPlace> bad_places(const FFold& f) {
    std::vector<FPlace> out;
    std::set<std::string> seen;
    auto add_place = [&](const FPlace& v) {
        if (seen.insert(v.to_string()).second) out.push_back(v);
    };
    auto add_support = [&](const RatFunc& x) {
        if (x.is_zero()) return;
        for (const auto& pi : poly_support(x.num()))
            if (pi.degree() >= 1) add_place(FPlace::finite(pi));
        for (const auto& pi : poly_support(x.den()))
            if (pi.degree() >= 1) add_place(FPlace::finite(pi));
    };
    add_support(discriminant(f.P));
    add_support(f.P.lc());
    add_support(f.fac.content);
    add_support(f.ext.gamma);
    add_place(FPlace::infinity(f.ext.gamma.field()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> residue_reps(const QPlace& v) {
    if (v.is_real) throw std::domain_error("residue_reps: real place");
    if (!v.prime.fits_ulong_p()) throw std::domain_error("residue_reps: place too large");
    std::vector<Rat> out;
    for (unsigned long i = 0; i < v.prime.get_ui(); ++i) out.emplace_back(BigInt((long)i));
    return out;
}

std::vector<RatFunc> residue_reps(const FPlace& v) {
    std::vector<RatFunc> out;
    if (v.is_infinity) {
        for (const auto& c : all_elements(v.F)) out.push_back(RatFunc::from_const(c));
        return out;
    }
    auto C = residue_field(v);
    if (!C->q.fits_ulong_p()) throw std::domain_error("residue_reps: place too large");
    for (unsigned long i = 0; i < C->q.get_ui(); ++i) {
        Poly<FFElem> rep = lift(QuotElem::from_index(C, i));
        out.push_back(rep.is_zero() ? RatFunc::with_field(v.F, 0) : RatFunc(rep));
    }
    return out;
}

Rat uniformizer(const QPlace& v) {
    if (v.is_real) throw std::domain_error("uniformizer: real place");
    return Rat(v.prime);
}

RatFunc uniformizer(const FPlace& v) {
    if (v.is_infinity)
        return RatFunc::with_field(v.F, 1) / RatFunc::var_t(v.F);
    return RatFunc(v.pi);
}

}  // namespace chatelet
