#include "chatelet/fold.hpp"

namespace chatelet {

namespace {

// image of the small field's generator inside the big field (a root of the
// small modulus), found by enumeration; fields here are tiny
FFElem embed_generator(const FqCtxPtr& small, const FqCtxPtr& big) {
    if (small->p != big->p) throw std::invalid_argument("embed: mixed characteristic");
    for (auto& cand : all_elements(big)) {
        FFElem acc = FFElem::from_int_in(big, 0);
        FFElem pw = FFElem::from_int_in(big, 1);
        for (size_t i = 0; i < small->modulus.size(); ++i) {
            acc = acc + pw.scale_int((long)small->modulus[i]);
            pw = pw * cand;
        }
        if (acc.is_zero()) return cand;
    }
    throw std::logic_error("embed: no root of the small modulus in the big field");
}

FFElem map_elem(const FFElem& x, const FFElem& gen_image) {
    FFElem acc = FFElem::from_int_in(gen_image.ctx(), 0);
    FFElem pw = FFElem::from_int_in(gen_image.ctx(), 1);
    for (unsigned c : x.coeffs()) {
        acc = acc + pw.scale_int((long)c);
        pw = pw * gen_image;
    }
    return acc;
}

RatFunc map_ratfunc(const RatFunc& x, const FFElem& gen_image) {
    if (x.is_zero()) return RatFunc::with_field(gen_image.ctx(), 0);
    auto map_poly = [&](const Poly<FFElem>& f) {
        std::vector<FFElem> c;
        for (const auto& a : f.coeffs()) c.push_back(map_elem(a, gen_image));
        return Poly<FFElem>(std::move(c));
    };
    return RatFunc(map_poly(x.num()), map_poly(x.den()));
}

}  // namespace

bool splitting_field_equals_K(const Poly<Rat>& factor_poly, const KummerExt& ext) {
    if (ext.p != 2)
        throw UnsupportedRegime("splitting_field_equals_K: Kummer case implemented for p = 2 only");
    long d = factor_poly.degree();
    if (d != 2) return false;  // deg 1 splits over Q; deg > 2 exceeds [K:Q]
    Rat disc = discriminant(factor_poly);
    return is_square_rat(disc * ext.alpha);
}

bool splitting_field_equals_K(const Poly<RatFunc>& factor_poly, const ArtinSchreierExt& ext) {
    if (!ext.gamma.is_constant())
        throw UnsupportedRegime(
            "splitting_field_equals_K: Artin-Schreier case implemented for constant gamma only");
    long d = factor_poly.degree();
    if (d != (long)ext.p) return false;  // only degree-p factors can have splitting field K
    FqCtxPtr F = ext.gamma.field();
    auto big = FqCtx::make(F->p, F->s * ext.p);
    FFElem gen = embed_generator(F, big);
    std::vector<RatFunc> coeffs;
    for (const auto& c : factor_poly.coeffs()) coeffs.push_back(map_ratfunc(c, gen));
    Poly<RatFunc> lifted(std::move(coeffs));
    // K/k is Galois of prime degree: an irreducible degree-p factor has
    // splitting field K iff it acquires a root in K = F_{q^p}(t)
    return !ratfunc_roots(lifted).empty();
}

FoldRecord to_record(const Fold& fold) {
    FoldRecord rec;
    if (std::holds_alternative<QFold>(fold)) {
        const QFold& f = std::get<QFold>(fold);
        rec.field = "Q";
        rec.p = f.p();
        rec.ext_kind = "kummer";
        rec.generator = f.ext.alpha.to_string();
        rec.P = f.P.to_string();
    } else {
        const FFold& f = std::get<FFold>(fold);
        rec.field = "Fq(t)";
        rec.p = f.p();
        FqCtxPtr F = f.ext.gamma.field();
        rec.q_p = F->p;
        rec.q_s = F->s;
        rec.ext_kind = "artin_schreier";
        rec.generator = f.ext.gamma.to_string();
        rec.P = f.P.to_string();
    }
    return rec;
}

Fold fold_from_record(const FoldRecord& rec) {
    if (rec.field == "Q") {
        if (rec.ext_kind != "kummer")
            throw std::invalid_argument("fold record: base Q requires a Kummer extension");
        KummerExt ext{rec.p, parse_rat(rec.generator)};
        return build_fold<Rat>(ext, parse_poly_q(rec.P));
    }
    if (rec.field == "Fq(t)") {
        if (rec.ext_kind != "artin_schreier")
            throw std::invalid_argument("fold record: base Fq(t) requires an Artin-Schreier extension");
        if (rec.q_p == 0) throw std::invalid_argument("fold record: missing constant field");
        auto F = FqCtx::make(rec.q_p, rec.q_s == 0 ? 1 : rec.q_s);
        ArtinSchreierExt ext{rec.p, parse_ratfunc(rec.generator, F)};
        return build_fold<RatFunc>(ext, parse_poly_kfq(rec.P, F));
    }
    throw std::invalid_argument("fold record: unknown base field '" + rec.field + "'");
}

}  // namespace chatelet
