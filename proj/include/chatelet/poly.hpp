#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace chatelet {

/// Dense univariate polynomial over a field.  Coefficients low degree first,
/// no trailing zeros; the zero polynomial has an empty coefficient vector.
///
/// K must provide value semantics, field operators, and the member protocol
/// is_zero() / inv() / one() / zero() / from_int(long) / to_string().
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const K& constant) : c_{constant} { trim(); }

    static Poly x(const K& like) { return Poly(std::vector<K>{like.zero(), like.one()}); }
    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }  // -1 for zero

    const K& lc() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    K coeff(size_t i) const {
        if (i < c_.size()) return c_[i];
        if (c_.empty()) throw std::domain_error("Poly: coefficient of zero polynomial needs context");
        return c_[0].zero();
    }
    /// Convenience: coefficient with an explicit context fallback.
    K coeff_or(size_t i, const K& zero_like) const {
        return i < c_.size() ? c_[i] : zero_like.zero();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& a : c_) r.push_back(-a);
        return Poly(std::move(r));
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size())
                r.push_back(c_[i] + o.c_[i]);
            else if (i < c_.size())
                r.push_back(c_[i]);
            else
                r.push_back(o.c_[i]);
        }
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, c_[0].zero());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const K& s) const {
        if (s.is_zero()) return Poly();
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& a : c_) r.push_back(a * s);
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        if (c_.empty()) return x.zero();
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly pow(unsigned e) const {
        if (e == 0) {
            if (c_.empty()) throw std::domain_error("Poly: 0^0 needs context");
            return constant(c_[0].one());
        }
        Poly base = *this, r = base;
        --e;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

template <class K>
Poly<K> derivative(const Poly<K>& f) {
    if (f.degree() <= 0) return Poly<K>();
    std::vector<K> r;
    r.reserve(f.degree());
    for (long i = 1; i <= f.degree(); ++i)
        r.push_back(f.coeffs()[i] * f.coeffs()[i].from_int(i));
    return Poly<K>(std::move(r));
}

template <class K>
Poly<K> monic(const Poly<K>& f) {
    if (f.is_zero()) return f;
    return f * f.lc().inv();
}

template <class K>
void divmod(const Poly<K>& a, const Poly<K>& b, Poly<K>& q, Poly<K>& r) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    r = a;
    q = Poly<K>();
    if (a.degree() < b.degree()) return;
    K linv = b.lc().inv();
    std::vector<K> qc((size_t)(a.degree() - b.degree() + 1), b.lc().zero());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K c = r.lc() * linv;
        size_t shift = (size_t)(r.degree() - b.degree());
        qc[shift] = c;
        std::vector<K> sub((size_t)r.degree() + 1, c.zero());
        for (long i = 0; i <= b.degree(); ++i) sub[shift + i] = b.coeffs()[i] * c;
        r = r - Poly<K>(std::move(sub));
    }
    q = Poly<K>(std::move(qc));
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    divmod(a, b, q, r);
    return r;
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    divmod(a, b, q, r);
    return q;
}

/// Monic gcd.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = b;
        b = r;
    }
    return monic(a);
}

/// gcd with Bezout data: g = u*a + v*b, g monic.
template <class K>
Poly<K> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& u, Poly<K>& v) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0, u1, v0, v1;
    if (!a.is_zero()) {
        u0 = Poly<K>::constant(a.lc().one());
        v1 = Poly<K>::constant(a.lc().one());
    } else if (!b.is_zero()) {
        u0 = Poly<K>();
        v1 = Poly<K>::constant(b.lc().one());
    }
    u1 = Poly<K>();
    v0 = Poly<K>();
    while (!r1.is_zero()) {
        Poly<K> q, r;
        divmod(r0, r1, q, r);
        Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) { u = u0; v = v0; return r0; }
    K s = r0.lc().inv();
    u = u0 * s;
    v = v0 * s;
    return r0 * s;
}

/// Resultant via the Euclidean remainder sequence; exact over any field.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
    if (a.is_zero() || b.is_zero()) {
        if (!a.is_zero()) return a.lc().zero();
        if (!b.is_zero()) return b.lc().zero();
        throw std::domain_error("resultant: both arguments zero");
    }
    K acc = a.lc().one();
    bool neg = false;
    while (true) {
        if (b.degree() == 0) {
            K r = acc;
            Poly<K> bpow = Poly<K>::constant(b.lc()).pow((unsigned)std::max<long>(a.degree(), 0));
            r = r * bpow.coeffs()[0];
            return neg ? -r : r;
        }
        Poly<K> rem = a % b;
        if (rem.is_zero()) return a.lc().zero();
        long da = a.degree(), db = b.degree(), dr = rem.degree();
        if ((da * db) % 2 == 1) neg = !neg;
        K lpow = b.lc().one();
        for (long i = 0; i < da - dr; ++i) lpow = lpow * b.lc();
        acc = acc * lpow;
        a = b;
        b = rem;
    }
}

/// disc(P) = (-1)^(n(n-1)/2) * Res(P, P') / lc(P).  Zero iff P inseparable;
/// in char p a vanishing derivative yields zero directly.
template <class K>
K discriminant(const Poly<K>& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
    Poly<K> fp = derivative(f);
    if (fp.is_zero()) return f.lc().zero();
    K res = resultant(f, fp);
    long n = f.degree();
    K d = res * f.lc().inv();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

/// gcd(P, P') constant?  Catches P in k[x^p] as well (P' = 0 there).
template <class K>
bool is_separable(const Poly<K>& f) {
    if (f.is_zero()) throw std::domain_error("is_separable: zero polynomial");
    if (f.degree() == 0) return true;
    Poly<K> fp = derivative(f);
    if (fp.is_zero()) return false;
    return poly_gcd(f, fp).degree() == 0;
}

/// Homogeneous bivariate form of degree D: coeff[i] multiplies x^i w^(D-i).
template <class K>
struct HomForm {
    unsigned degree = 0;
    std::vector<K> coeff;  // size degree+1

    K eval(const K& x, const K& w) const {
        K acc = coeff[0].zero();
        K xp = coeff[0].one();
        // sum coeff[i] x^i w^(D-i)
        std::vector<K> wp(degree + 1, coeff[0].one());
        for (unsigned i = 1; i <= degree; ++i) wp[i] = wp[i - 1] * w;
        for (unsigned i = 0; i <= degree; ++i) {
            acc = acc + coeff[i] * xp * wp[degree - i];
            xp = xp * x;
        }
        return acc;
    }

    Poly<K> dehomogenize() const {  // w = 1
        return Poly<K>(coeff);
    }
};

struct DegreeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// w^D * P(x/w): requires deg P <= D.
template <class K>
HomForm<K> homogenize(const Poly<K>& f, unsigned D) {
    if (f.is_zero()) throw std::domain_error("homogenize: zero polynomial");
    if ((long)D < f.degree()) throw DegreeTooLarge("homogenize: target degree too small");
    HomForm<K> h;
    h.degree = D;
    h.coeff.assign(D + 1, f.coeffs()[0].zero());
    for (long i = 0; i <= f.degree(); ++i) h.coeff[i] = f.coeffs()[i];
    return h;
}

/// y^D * P(1/y) with D >= deg P (the chart at infinity).
template <class K>
Poly<K> reverse_poly(const Poly<K>& f, unsigned D) {
    if (f.is_zero()) return f;
    if ((long)D < f.degree()) throw std::invalid_argument("reverse_poly: target degree too small");
    std::vector<K> r(D + 1, f.coeffs()[0].zero());
    for (long i = 0; i <= f.degree(); ++i) r[D - i] = f.coeffs()[i];
    return Poly<K>(std::move(r));
}

/// P(c*x).
template <class K>
Poly<K> scale_arg(const Poly<K>& f, const K& c) {
    if (f.is_zero()) return f;
    std::vector<K> r = f.coeffs();
    K cp = c.one();
    for (size_t i = 1; i < r.size(); ++i) {
        cp = cp * c;
        r[i] = r[i] * cp;
    }
    return Poly<K>(std::move(r));
}

template <class K>
std::string Poly<K>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool neg = cs.size() > 1 && cs[0] == '-';
        if (out.empty()) {
            // leading term keeps its own sign
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool needs_paren = cs.find_first_of("+-*/") != std::string::npos && !(cs[0] == '-' && cs.find_first_of("+-*/", 1) == std::string::npos);
        if (i == 0) {
            out += needs_paren ? "(" + cs + ")" : cs;
        } else {
            std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
            if (cs == "1")
                out += xs;
            else if (cs == "-1")
                out += "-" + xs;
            else
                out += (needs_paren ? "(" + cs + ")" : cs) + "*" + xs;
        }
    }
    return out;
}

}  // namespace chatelet
