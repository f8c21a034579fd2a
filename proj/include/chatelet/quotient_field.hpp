#pragma once

#include <memory>

#include "chatelet/finite_field.hpp"
#include "chatelet/poly.hpp"

namespace chatelet {

using PolyFq = Poly<FFElem>;

/// Residue field F_q[t]/(pi) with pi monic irreducible over F_q = F_{p^s}.
/// Used for the residue fields of places of F_q(t) and as the base of the
/// pi-adic factorization; absolute degree over F_p is s * deg(pi).
struct QuotCtx {
    FqCtxPtr base;
    PolyFq pi;
    BigInt q;  // |F_q|^deg(pi)

    static std::shared_ptr<const QuotCtx> make(FqCtxPtr base, PolyFq pi);
    bool same(const QuotCtx& o) const { return base->same(*o.base) && pi == o.pi; }
    unsigned p() const { return base->p; }
    unsigned abs_degree() const { return base->s * (unsigned)pi.degree(); }
};

using QuotCtxPtr = std::shared_ptr<const QuotCtx>;

class QuotElem {
public:
    QuotElem() = default;
    QuotElem(QuotCtxPtr C, PolyFq rep) : C_(std::move(C)), r_(std::move(rep)) {
        if (!C_) throw std::invalid_argument("QuotElem: null context");
        if (!r_.is_zero() && r_.degree() >= C_->pi.degree()) r_ = r_ % C_->pi;
    }

    const QuotCtxPtr& ctx() const { return C_; }
    const PolyFq& rep() const { return r_; }

    bool is_zero() const { return r_.is_zero(); }
    bool is_one() const { return r_.degree() == 0 && r_.coeffs()[0].is_one(); }

    QuotElem operator+(const QuotElem& o) const { return QuotElem(C_, r_ + o.r_); }
    QuotElem operator-(const QuotElem& o) const { return QuotElem(C_, r_ - o.r_); }
    QuotElem operator-() const { return QuotElem(C_, -r_); }
    QuotElem operator*(const QuotElem& o) const { return QuotElem(C_, r_ * o.r_); }
    QuotElem operator/(const QuotElem& o) const { return *this * o.inv(); }
    bool operator==(const QuotElem& o) const { return r_ == o.r_; }
    bool operator!=(const QuotElem& o) const { return !(*this == o); }

    QuotElem inv() const {
        if (is_zero()) throw std::domain_error("QuotElem: inverse of zero");
        PolyFq u, v;
        Poly<FFElem> g = poly_ext_gcd(r_, C_->pi, u, v);
        if (g.degree() != 0) throw std::logic_error("QuotElem: modulus not irreducible");
        return QuotElem(C_, u);
    }

    QuotElem pow(const BigInt& e_in) const {
        BigInt e = e_in;
        if (e < 0) return inv().pow(-e);
        QuotElem base = *this, r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    QuotElem frobenius_p() const { return pow(BigInt(C_->p())); }
    QuotElem pth_root() const {
        unsigned n = C_->abs_degree();
        return pow(pow_bigint(BigInt(C_->p()), n == 0 ? 0 : n - 1));
    }
    unsigned trace_to_prime() const {
        QuotElem acc = *this, fr = *this;
        for (unsigned i = 1; i < C_->abs_degree(); ++i) {
            fr = fr.frobenius_p();
            acc = acc + fr;
        }
        // the result lies in F_p embedded as a constant
        if (acc.is_zero()) return 0;
        if (acc.r_.degree() != 0) throw std::logic_error("QuotElem: trace not in prime field");
        const FFElem& c = acc.r_.coeffs()[0];
        for (size_t i = 1; i < c.coeffs().size(); ++i)
            if (c.coeffs()[i]) throw std::logic_error("QuotElem: trace not in prime field");
        return c.coeffs().empty() ? 0 : c.coeffs()[0];
    }

    QuotElem zero() const { return QuotElem(C_, PolyFq()); }
    QuotElem one() const {
        return QuotElem(C_, PolyFq::constant(FFElem::from_int_in(C_->base, 1)));
    }
    QuotElem from_int(long n) const {
        return QuotElem(C_, PolyFq::constant(FFElem::from_int_in(C_->base, n)));
    }
    QuotElem scale_int(long n) const { return *this * from_int(n); }

    unsigned long index() const {
        unsigned long qb = C_->base->q.get_ui();
        unsigned long idx = 0;
        for (long i = (long)C_->pi.degree() - 1; i >= 0; --i)
            idx = idx * qb + ((size_t)i < r_.coeffs().size() ? r_.coeffs()[i].index() : 0);
        return idx;
    }
    static QuotElem from_index(const QuotCtxPtr& C, unsigned long idx) {
        unsigned long qb = C->base->q.get_ui();
        std::vector<FFElem> c;
        for (long i = 0; i < C->pi.degree(); ++i) {
            c.push_back(FFElem::from_index(C->base, idx % qb));
            idx /= qb;
        }
        return QuotElem(C, PolyFq(std::move(c)));
    }

    std::string to_string() const { return r_.to_string("t"); }

private:
    QuotCtxPtr C_;
    PolyFq r_;
};

inline std::shared_ptr<const QuotCtx> QuotCtx::make(FqCtxPtr base, PolyFq pi) {
    if (pi.degree() < 1) throw std::invalid_argument("QuotCtx: modulus must have degree >= 1");
    if (!pi.lc().is_one()) throw std::invalid_argument("QuotCtx: modulus must be monic");
    auto ctx = std::make_shared<QuotCtx>();
    ctx->q = 1;
    for (long i = 0; i < pi.degree(); ++i) ctx->q *= base->q;
    ctx->base = std::move(base);
    ctx->pi = std::move(pi);
    return ctx;
}

inline std::vector<QuotElem> all_elements(const QuotCtxPtr& C) {
    if (!C->q.fits_ulong_p()) throw std::domain_error("all_elements: field too large");
    unsigned long n = C->q.get_ui();
    std::vector<QuotElem> out;
    out.reserve(n);
    for (unsigned long i = 0; i < n; ++i) out.push_back(QuotElem::from_index(C, i));
    return out;
}

inline bool elem_less(const QuotElem& a, const QuotElem& b) { return a.index() < b.index(); }
inline BigInt field_cardinality(const QuotElem& like) { return like.ctx()->q; }
inline unsigned field_char(const QuotElem& like) { return like.ctx()->p(); }
inline QuotElem element_from_index(const QuotElem& like, unsigned long idx) {
    return QuotElem::from_index(like.ctx(), idx);
}

/// Canonical map F_q[t] -> F_q[t]/(pi).
inline QuotElem reduce_mod(const QuotCtxPtr& C, const PolyFq& f) { return QuotElem(C, f); }

/// Canonical lift back to F_q[t], degree < deg(pi).
inline PolyFq lift(const QuotElem& e) { return e.rep(); }

}  // namespace chatelet
