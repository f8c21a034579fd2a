#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chatelet {

struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated Laurent series sum_{i >= val} c[i - val] * pi^i + O(pi^prec)
/// over a finite field K (FFElem or QuotElem).  Invariants: val < prec,
/// leading coefficient nonzero unless the series is zero to precision
/// (empty coefficient list, val == prec).
///
/// Precision propagates through arithmetic; extracting data beyond the
/// certified window throws InsufficientPrecision rather than guessing.
template <class K>
class LaurentSeries {
public:
    LaurentSeries(K like, long prec) : like_(like.zero()), val_(prec), prec_(prec) {}
    LaurentSeries(K like, long val, std::vector<K> coeffs, long prec)
        : like_(like.zero()), val_(val), c_(std::move(coeffs)), prec_(prec) {
        if ((long)c_.size() > prec_ - val_) c_.resize(prec_ - val_);
        normalize();
    }

    static LaurentSeries from_const(const K& c, long prec) {
        if (prec <= 0) throw InsufficientPrecision("LaurentSeries: constant needs prec > 0");
        return LaurentSeries(c, 0, {c}, prec);
    }
    static LaurentSeries uniformizer(const K& like, long prec) {
        if (prec <= 1) throw InsufficientPrecision("LaurentSeries: uniformizer needs prec > 1");
        return LaurentSeries(like, 1, {like.one()}, prec);
    }

    bool is_zero_to_precision() const { return c_.empty(); }
    long valuation() const {
        if (c_.empty()) throw InsufficientPrecision("LaurentSeries: valuation of zero-to-precision");
        return val_;
    }
    long precision() const { return prec_; }
    const K& leading() const {
        if (c_.empty()) throw InsufficientPrecision("LaurentSeries: leading of zero-to-precision");
        return c_[0];
    }
    /// Coefficient of pi^i; throws if i is beyond the certified window.
    K coeff(long i) const {
        if (i >= prec_) throw InsufficientPrecision("LaurentSeries: coefficient beyond precision");
        if (c_.empty() || i < val_) return like_;
        return (size_t)(i - val_) < c_.size() ? c_[i - val_] : like_;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    LaurentSeries operator+(const LaurentSeries& o) const {
        long prec = std::min(prec_, o.prec_);
        long lo = std::min(c_.empty() ? prec : val_, o.c_.empty() ? prec : o.val_);
        if (lo >= prec) return LaurentSeries(like_, prec);
        std::vector<K> r((size_t)(prec - lo), like_);
        accumulate(r, lo, *this, prec);
        accumulate(r, lo, o, prec);
        return LaurentSeries(like_, lo, std::move(r), prec);
    }
    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }
    LaurentSeries operator*(const LaurentSeries& o) const {
        if (c_.empty() || o.c_.empty()) {
            // O(pi^a) * (c pi^b + O(pi^p)) = O(pi^(a+b))
            long a = c_.empty() ? prec_ : val_;
            long b = o.c_.empty() ? o.prec_ : o.val_;
            long p1 = c_.empty() ? prec_ + (o.c_.empty() ? o.prec_ : o.val_) : prec_ + b;
            long p2 = o.c_.empty() ? o.prec_ + a : o.prec_ + a;
            return LaurentSeries(like_, std::min(p1, p2));
        }
        long prec = std::min(prec_ + o.val_, o.prec_ + val_);
        long lo = val_ + o.val_;
        std::vector<K> r((size_t)(prec - lo), like_);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) {
                long k = val_ + (long)i + o.val_ + (long)j;
                if (k >= prec) continue;
                r[k - lo] = r[k - lo] + c_[i] * o.c_[j];
            }
        return LaurentSeries(like_, lo, std::move(r), prec);
    }
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

    LaurentSeries inverse() const {
        if (c_.empty()) throw InsufficientPrecision("LaurentSeries: inverse of zero-to-precision");
        long n = prec_ - val_;  // relative precision
        // invert the unit part u = c0 (1 + eps): Newton iteration on coefficients
        std::vector<K> u(c_);
        u.resize(n, like_);
        std::vector<K> w(n, like_);
        K c0inv = u[0].inv();
        w[0] = c0inv;
        for (long k = 1; k < n; ++k) {
            K acc = like_;
            for (long j = 1; j <= k; ++j) acc = acc + u[j] * w[k - j];
            w[k] = -(c0inv * acc);
        }
        return LaurentSeries(like_, -val_, std::move(w), -val_ + n);
    }

    /// Formal derivative with respect to the uniformizer.
    LaurentSeries derivative() const {
        if (c_.empty()) return LaurentSeries(like_, prec_ - 1);
        std::vector<K> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            long e = val_ + (long)i;
            r.push_back(c_[i] * like_.from_int(e));
        }
        return LaurentSeries(like_, val_ - 1, std::move(r), prec_ - 1);
    }

    /// Coefficient of pi^(-1); the certified window must reach index -1.
    K residue() const {
        if (prec_ < 0) throw InsufficientPrecision("LaurentSeries: residue beyond precision");
        return coeff(-1);
    }

    LaurentSeries shifted(long e) const {  // multiply by pi^e
        LaurentSeries r = *this;
        r.val_ += e;
        r.prec_ += e;
        return r;
    }

    LaurentSeries truncated(long prec) const {
        if (prec > prec_) throw InsufficientPrecision("LaurentSeries: cannot raise precision");
        if (c_.empty() || val_ >= prec) return LaurentSeries(like_, prec);
        std::vector<K> r(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), (size_t)(prec - val_)));
        return LaurentSeries(like_, val_, std::move(r), prec);
    }

    std::string to_string(const std::string& pi = "pi") const {
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long e = val_ + (long)i;
            if (!out.empty()) out += " + ";
            std::string cs = c_[i].to_string();
            bool paren = cs.find_first_of("+-*") != std::string::npos;
            std::string term = paren ? "(" + cs + ")" : cs;
            if (e != 0) {
                if (term == "1")
                    term = "";
                else
                    term += "*";
                term += pi + "^" + std::to_string(e);
            }
            out += term;
        }
        if (out.empty()) out = "0";
        out += " + O(" + pi + "^" + std::to_string(prec_) + ")";
        return out;
    }

private:
    K like_;  // zero of the coefficient field (context carrier)
    long val_ = 0;
    std::vector<K> c_;
    long prec_ = 0;

    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + lead);
            val_ += (long)lead;
        }
        if (c_.empty()) val_ = prec_;
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static void accumulate(std::vector<K>& r, long lo, const LaurentSeries& s, long prec) {
        for (size_t i = 0; i < s.c_.size(); ++i) {
            long k = s.val_ + (long)i;
            if (k >= prec) break;
            r[k - lo] = r[k - lo] + s.c_[i];
        }
    }
};

}  // namespace chatelet
