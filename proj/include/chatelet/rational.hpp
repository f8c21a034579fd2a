#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chatelet {

using BigInt = mpz_class;

/// Exact rational number.  Thin value wrapper around GMP's mpq_class; always
/// kept in lowest terms with positive denominator (mpq canonical form).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }
    Rat scale_int(long n) const { return Rat(mpq_class(v_ * n)); }

    Rat pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rat(n, d);
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline bool elem_less(const Rat& a, const Rat& b) { return a < b; }

inline BigInt pow_bigint(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline BigInt next_prime(const BigInt& n) {
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// v-adic valuation of a nonzero integer (v prime).
inline long valuation_int(const BigInt& n, const BigInt& v) {
    if (n == 0) throw std::domain_error("valuation_int: zero");
    BigInt m = abs(n);
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), v.get_mpz_t())) {
        m /= v;
        ++e;
    }
    return e;
}

/// v-adic valuation; std::nullopt encodes +infinity (x = 0).
inline std::optional<long> valuation(const Rat& x, const BigInt& v) {
    if (x.is_zero()) return std::nullopt;
    return valuation_int(x.num(), v) - valuation_int(x.den(), v);
}

/// Legendre symbol (a|q) for an odd prime q.
inline int legendre(const BigInt& a, const BigInt& q) {
    if (q <= 2 || !is_prime(q)) throw std::invalid_argument("legendre: q must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), q.get_mpz_t());
}

/// Unit part u with x = v^e * u; exact.
inline Rat unit_part(const Rat& x, const BigInt& v) {
    auto e = valuation(x, v);
    if (!e) throw std::domain_error("unit_part: zero");
    BigInt num = x.num(), den = x.den();
    long en = valuation_int(num, v), ed = valuation_int(den, v);
    num /= pow_bigint(v, en);
    den /= pow_bigint(v, ed);
    return Rat(num, den);
}

/// Residue of a v-integral rational modulo v^k (v prime, k >= 1).
inline BigInt residue_mod(const Rat& x, const BigInt& v, unsigned long k) {
    BigInt m = pow_bigint(v, k);
    BigInt den = x.den() % m;
    BigInt dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("residue_mod: denominator not invertible");
    BigInt r = (x.num() % m) * dinv % m;
    if (r < 0) r += m;
    return r;
}

/// x a square in Q_v?  Exact: even valuation and square unit residue
/// (mod v for odd v, mod 8 at v = 2).  x must be nonzero.
inline bool is_square_in_Qv(const Rat& x, const BigInt& v) {
    auto e = valuation(x, v);
    if (!e) throw std::domain_error("is_square_in_Qv: zero");
    if (*e % 2 != 0) return false;
    Rat u = unit_part(x, v);
    if (v == 2) return residue_mod(u, 2, 3) == 1;
    return legendre(residue_mod(u, v, 1), v) == 1;
}

inline bool is_square_rat(const Rat& x) {
    if (x.sign() < 0) return false;
    if (x.is_zero()) return true;
    return mpz_perfect_square_p(x.num().get_mpz_t()) && mpz_perfect_square_p(x.den().get_mpz_t());
}

/// Squarefree kernel of a nonzero integer, sign preserved.
BigInt squarefree_part(const BigInt& n);

/// Full factorization of |n| into primes (trial division + Pollard rho).
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

}  // namespace chatelet
