#pragma once

#include "chatelet/finite_field.hpp"
#include "chatelet/poly.hpp"

namespace chatelet {

/// Element of the rational function field F_q(t): num/den with den monic and
/// gcd(num, den) = 1.  This is the base field "k" in characteristic p.
/// Carries its field context so that zero values still know their field.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly<FFElem> num) : n_(std::move(num)) {
        if (!n_.is_zero()) {
            F_ = n_.lc().ctx();
            d_ = Poly<FFElem>::constant(n_.lc().one());
        }
    }
    RatFunc(Poly<FFElem> num, Poly<FFElem> den) : n_(std::move(num)), d_(std::move(den)) {
        if (d_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        F_ = d_.lc().ctx();
        normalize();
    }

    const Poly<FFElem>& num() const { return n_; }
    const Poly<FFElem>& den() const {
        if (!F_ ) throw std::logic_error("RatFunc: fieldless value");
        return d_;
    }
    const FqCtxPtr& field() const { return F_; }

    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return !is_zero() && n_.degree() == 0 && d_.degree() == 0 && n_.coeffs()[0].is_one(); }
    bool is_polynomial() const { return is_zero() || d_.degree() == 0; }
    /// Constant (element of F_q) or zero.
    bool is_constant() const { return is_zero() || (n_.degree() == 0 && d_.degree() == 0); }
    FFElem constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
        if (is_zero()) return FFElem::from_int_in(require_field(), 0);
        return n_.coeffs()[0];
    }

    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o.with_hint(F_);
        if (o.is_zero()) return *this;
        return RatFunc(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.n_ = -r.n_;
        return r;
    }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) {
            RatFunc z;
            z.F_ = F_ ? F_ : o.F_;
            if (z.F_) z.d_ = Poly<FFElem>::constant(FFElem::from_int_in(z.F_, 1));
            return z;
        }
        return RatFunc(n_ * o.n_, d_ * o.d_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
    bool operator==(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
        return n_ == o.n_ && d_ == o.d_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(d_, n_);
    }
    RatFunc zero() const { return with_field(require_field(), 0); }
    RatFunc one() const { return with_field(require_field(), 1); }
    RatFunc from_int(long k) const { return with_field(require_field(), k); }
    RatFunc scale_int(long k) const { return *this * from_int(k); }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    static RatFunc with_field(const FqCtxPtr& F, long n) {
        if (!F) throw std::invalid_argument("RatFunc: null field context");
        FFElem c = FFElem::from_int_in(F, n);
        RatFunc r;
        r.F_ = F;
        r.n_ = c.is_zero() ? Poly<FFElem>() : Poly<FFElem>::constant(c);
        r.d_ = Poly<FFElem>::constant(FFElem::from_int_in(F, 1));
        return r;
    }
    static RatFunc from_const(const FFElem& c) {
        RatFunc r = with_field(c.ctx(), 0);
        if (!c.is_zero()) r.n_ = Poly<FFElem>::constant(c);
        return r;
    }
    static RatFunc var_t(const FqCtxPtr& F) {
        RatFunc r = with_field(F, 1);
        r.n_ = Poly<FFElem>::x(FFElem::from_int_in(F, 1));
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string ns = n_.to_string("t");
        if (is_polynomial()) return ns;
        std::string ds = d_.to_string("t");
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+-*^") != std::string::npos ? "(" + s + ")" : s;
        };
        return wrap(ns) + "/" + wrap(ds);
    }

private:
    FqCtxPtr F_;
    Poly<FFElem> n_, d_;  // normalized: den monic, gcd(num, den) = 1
    const FqCtxPtr& require_field() const {
        if (!F_) throw std::logic_error("RatFunc: fieldless value used where context is needed");
        return F_;
    }
    RatFunc with_hint(const FqCtxPtr& F) const {
        if (F_ || !F) return *this;
        RatFunc r = *this;
        r.F_ = F;
        r.d_ = Poly<FFElem>::constant(FFElem::from_int_in(F, 1));
        return r;
    }
    void normalize() {
        if (n_.is_zero()) {
            d_ = Poly<FFElem>::constant(d_.lc().one());
            return;
        }
        Poly<FFElem> g = poly_gcd(n_, d_);
        if (g.degree() > 0) {
            n_ = n_ / g;
            d_ = d_ / g;
        }
        FFElem s = d_.lc().inv();
        n_ = n_ * s;
        d_ = d_ * s;
    }
};

inline bool elem_less(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
    auto key = [](const Poly<FFElem>& f) {
        std::vector<unsigned long> k{(unsigned long)f.degree()};
        for (size_t i = f.coeffs().size(); i-- > 0;) k.push_back(f.coeffs()[i].index());
        return k;
    };
    auto ka = key(a.num()), kb = key(b.num());
    if (ka != kb) return ka < kb;
    return key(a.den()) < key(b.den());
}

/// Valuation of a nonzero f at a finite place (monic irreducible pi):
/// multiplicity of pi in num minus in den.
inline long valuation_at(const Poly<FFElem>& f, const Poly<FFElem>& pi) {
    if (f.is_zero()) throw std::domain_error("valuation_at: zero");
    long e = 0;
    Poly<FFElem> g = f, q, r;
    while (true) {
        divmod(g, pi, q, r);
        if (!r.is_zero()) return e;
        ++e;
        g = q;
    }
}

inline std::optional<long> valuation(const RatFunc& x, const Poly<FFElem>& pi) {
    if (x.is_zero()) return std::nullopt;
    return valuation_at(x.num(), pi) - valuation_at(x.den(), pi);
}

/// Valuation at the place at infinity of F_q(t): -deg for polynomials.
inline std::optional<long> valuation_at_infinity(const RatFunc& x) {
    if (x.is_zero()) return std::nullopt;
    return x.den().degree() - x.num().degree();
}

}  // namespace chatelet
