#include "chatelet/padic.hpp"

namespace chatelet {

PadicApprox::PadicApprox(BigInt prime, long val, BigInt unit, long relprec)
    : v_(std::move(prime)), val_(val), unit_(std::move(unit)), relprec_(relprec) {
    if (relprec_ < 1 && unit_ != 0) throw std::invalid_argument("PadicApprox: relprec must be >= 1");
    BigInt m = pow_bigint(v_, (unsigned long)std::max(relprec_, 0l));
    unit_ %= m;
    if (unit_ < 0) unit_ += m;
    if (unit_ != 0 && mpz_divisible_p(unit_.get_mpz_t(), v_.get_mpz_t()))
        throw std::invalid_argument("PadicApprox: unit part divisible by prime");
    if (unit_ == 0) {
        val_ = val + relprec_;  // only the absolute precision survives
        relprec_ = 0;
    }
}

PadicApprox PadicApprox::zero_to(const BigInt& prime, long absprec) {
    PadicApprox r(prime, 0, 1, 1);
    r.unit_ = 0;
    r.val_ = absprec;
    r.relprec_ = 0;
    return r;
}

PadicApprox PadicApprox::from_rat(const Rat& x, const BigInt& prime, long absprec) {
    if (x.is_zero()) return zero_to(prime, absprec);
    long e = *chatelet::valuation(x, prime);
    if (e >= absprec) return zero_to(prime, absprec);
    Rat u = unit_part(x, prime);
    BigInt rep = residue_mod(u, prime, (unsigned long)(absprec - e));
    return PadicApprox(prime, e, rep, absprec - e);
}

long PadicApprox::valuation() const {
    if (unit_ == 0) throw std::domain_error("PadicApprox: valuation of zero-to-precision");
    return val_;
}

BigInt PadicApprox::integer_rep() const {
    if (unit_ == 0) return 0;
    if (val_ < 0) throw std::domain_error("PadicApprox: negative valuation has no integer representative");
    return pow_bigint(v_, (unsigned long)val_) * unit_;
}

Rat PadicApprox::rat_rep() const {
    if (unit_ == 0) return Rat(0);
    if (val_ >= 0) return Rat(integer_rep());
    return Rat(unit_, pow_bigint(v_, (unsigned long)(-val_)));
}

PadicApprox PadicApprox::operator-() const {
    if (unit_ == 0) return *this;
    BigInt m = pow_bigint(v_, (unsigned long)relprec_);
    return PadicApprox(v_, val_, m - unit_, relprec_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (v_ != o.v_) throw std::invalid_argument("PadicApprox: mixed primes");
    long N = std::min(abs_precision(), o.abs_precision());
    if (unit_ == 0 && o.unit_ == 0) return zero_to(v_, N);
    if (unit_ == 0 || o.unit_ == 0) {
        const PadicApprox& a = unit_ == 0 ? o : *this;
        if (a.val_ >= N) return zero_to(v_, N);
        BigInt m = pow_bigint(v_, (unsigned long)(N - a.val_));
        return PadicApprox(v_, a.val_, a.unit_ % m, N - a.val_);
    }
    long lo = std::min(val_, o.val_);
    if (lo >= N) return zero_to(v_, N);
    BigInt m = pow_bigint(v_, (unsigned long)(N - lo));
    BigInt s = (pow_bigint(v_, (unsigned long)(val_ - lo)) * unit_ +
                pow_bigint(v_, (unsigned long)(o.val_ - lo)) * o.unit_) % m;
    if (s == 0) return zero_to(v_, N);
    long extra = valuation_int(s, v_);
    if (lo + extra >= N) return zero_to(v_, N);
    return PadicApprox(v_, lo + extra, s / pow_bigint(v_, (unsigned long)extra), N - lo - extra);
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (v_ != o.v_) throw std::invalid_argument("PadicApprox: mixed primes");
    if (unit_ == 0 || o.unit_ == 0) {
        long N = unit_ == 0 ? val_ + (o.unit_ == 0 ? o.val_ : o.val_) : val_ + o.val_;
        // O(v^a) * (v^b unit + ...) = O(v^(a+b))
        return zero_to(v_, N);
    }
    long rp = std::min(relprec_, o.relprec_);
    BigInt m = pow_bigint(v_, (unsigned long)rp);
    return PadicApprox(v_, val_ + o.val_, unit_ * o.unit_ % m, rp);
}

std::string PadicApprox::to_string() const {
    if (unit_ == 0) return "O(" + v_.get_str() + "^" + std::to_string(val_) + ")";
    std::string out;
    BigInt u = unit_;
    long e = val_;
    while (u != 0) {
        BigInt d = u % v_;
        if (d != 0) {
            if (!out.empty()) out += " + ";
            if (e == 0)
                out += d.get_str();
            else if (e == 1)
                out += (d == 1 ? "" : d.get_str() + "*") + v_.get_str();
            else
                out += (d == 1 ? "" : d.get_str() + "*") + v_.get_str() + "^" + std::to_string(e);
        }
        u /= v_;
        ++e;
    }
    out += " + O(" + v_.get_str() + "^" + std::to_string(abs_precision()) + ")";
    return out;
}

namespace {

// f with v-integral coefficients evaluated at an integer via Horner, mod v^k
BigInt eval_mod(const Poly<Rat>& f, const BigInt& x, const BigInt& modulus, const BigInt& v) {
    unsigned long k = 0;
    for (BigInt t = modulus; t > 1; t /= v) ++k;
    BigInt acc = 0;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * x % modulus;
        const Rat& c = f.coeffs()[i];
        if (!c.is_zero()) acc = (acc + residue_mod(c, v, k)) % modulus;
    }
    return acc;
}

long val_or_big(const BigInt& x, const BigInt& v, long big) {
    if (x == 0) return big;
    return valuation_int(x, v);
}

}  // namespace

PadicApprox hensel_lift(const Poly<Rat>& f, const PadicApprox& x0, long N) {
    const BigInt& v = x0.prime();
    if (N < 1) throw std::invalid_argument("hensel_lift: target precision must be >= 1");
    for (const Rat& c : f.coeffs())
        if (!c.is_zero() && *valuation(c, v) < 0)
            throw std::invalid_argument("hensel_lift: coefficients must be v-integral");
    if (!x0.is_zero_to_precision() && x0.valuation() < 0)
        throw HenselFailure("hensel_lift: starting point not v-integral");

    Poly<Rat> fp = derivative(f);
    BigInt x = x0.is_zero_to_precision() ? BigInt(0) : x0.integer_rep();

    long guard = 2 * N + 8;
    BigInt bigmod = pow_bigint(v, (unsigned long)guard);
    BigInt fx = eval_mod(f, x, bigmod, v);
    BigInt fpx = eval_mod(fp, x, bigmod, v);
    long m = val_or_big(fx, v, guard);
    long t = val_or_big(fpx, v, guard);
    if (t >= guard || m <= 2 * t)
        throw HenselFailure("hensel_lift: criterion v(f(x0)) > 2 v(f'(x0)) not met");

    // Newton: each step takes m -> at least 2(m - t), derivative valuation stays t
    long target = N + t;  // ensures the final correction is below v^N as well
    while (m < target && m < guard) {
        BigInt unit = fpx / pow_bigint(v, (unsigned long)t);
        BigInt uinv;
        BigInt red = pow_bigint(v, (unsigned long)(guard - t));
        if (mpz_invert(uinv.get_mpz_t(), BigInt(unit % red).get_mpz_t(), red.get_mpz_t()) == 0)
            throw HenselFailure("hensel_lift: derivative unit not invertible");
        BigInt corr = fx / pow_bigint(v, (unsigned long)t) % red * uinv % red;
        x = (x - corr) % bigmod;
        if (x < 0) x += bigmod;
        fx = eval_mod(f, x, bigmod, v);
        fpx = eval_mod(fp, x, bigmod, v);
        long m2 = val_or_big(fx, v, guard);
        if (m2 <= m) throw HenselFailure("hensel_lift: no contraction (criterion violated)");
        m = m2;
        t = val_or_big(fpx, v, guard);
    }

    BigInt rep = x % pow_bigint(v, (unsigned long)N);
    // certify f(rep) == 0 mod v^N on the canonical representative
    BigInt check = eval_mod(f, rep, pow_bigint(v, (unsigned long)N), v);
    if (check != 0) throw HenselFailure("hensel_lift: residual not zero at target precision");
    if (rep == 0) return PadicApprox::zero_to(v, N);
    long e = valuation_int(rep, v);
    return PadicApprox(v, e, rep / pow_bigint(v, (unsigned long)e), N - e);
}

PadicApprox padic_sqrt(const Rat& x, const BigInt& v, long N) {
    if (x.is_zero()) return PadicApprox::zero_to(v, N);
    if (!is_square_in_Qv(x, v)) throw HenselFailure("padic_sqrt: not a square in Q_v");
    long e = *valuation(x, v);
    Rat u = unit_part(x, v);
    // solve y^2 = u, then scale by v^(e/2)
    long extra = (v == 2) ? 3 : 1;
    Poly<Rat> f(std::vector<Rat>{-u, Rat(0), Rat(1)});
    BigInt y0;
    if (v == 2) {
        y0 = 1;  // u = 1 mod 8, y0 = 1 has v(f) >= 3 > 2 = 2 v(f')
    } else {
        // find a square root mod v by exhaustive search (v is small in our uses)
        BigInt r = residue_mod(u, v, 1);
        bool found = false;
        for (BigInt y = 1; y < v; ++y)
            if ((y * y - r) % v == 0) {
                y0 = y;
                found = true;
                break;
            }
        if (!found) throw HenselFailure("padic_sqrt: residue not a square");
    }
    PadicApprox start(v, 0, y0, extra);
    PadicApprox root = hensel_lift(f, start, N);
    return root * PadicApprox(v, e / 2, 1, std::max(N - e / 2, 1l));
}

}  // namespace chatelet
