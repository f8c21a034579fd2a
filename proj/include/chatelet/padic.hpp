#pragma once

#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

struct HenselFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Approximation to an element of Q_v: value = v^val * unit, with unit in
/// [0, v^relprec) and coprime to v; the value is certified mod v^(val+relprec).
/// A zero-to-precision approximation has unit = 0 and val = absolute precision.
class PadicApprox {
public:
    PadicApprox(BigInt prime, long val, BigInt unit, long relprec);
    static PadicApprox zero_to(const BigInt& prime, long absprec);
    /// Exact expansion of a rational with v(x) and absolute precision absprec.
    static PadicApprox from_rat(const Rat& x, const BigInt& prime, long absprec);

    const BigInt& prime() const { return v_; }
    bool is_zero_to_precision() const { return unit_ == 0; }
    long valuation() const;
    const BigInt& unit() const { return unit_; }
    long abs_precision() const { return unit_ == 0 ? val_ : val_ + relprec_; }
    long rel_precision() const { return relprec_; }

    /// Canonical integer representative v^val * unit (requires val >= 0).
    BigInt integer_rep() const;
    /// Representative as a rational (valid for any valuation).
    Rat rat_rep() const;

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator-() const;

    std::string to_string() const;

private:
    BigInt v_;
    long val_ = 0;
    BigInt unit_;
    long relprec_ = 0;
};

/// Lift x0 to a root of f modulo v^N via Newton iteration.  Requires f with
/// v-integral coefficients and the criterion v(f(x0)) > 2 v(f'(x0)) at the
/// given approximation; throws HenselFailure otherwise.  The result r
/// satisfies f(integer_rep(r)) == 0 mod v^N exactly.
PadicApprox hensel_lift(const Poly<Rat>& f, const PadicApprox& x0, long N);

/// Square root of a v-adic square to absolute precision N (throws
/// HenselFailure if x is not a square in Q_v).
PadicApprox padic_sqrt(const Rat& x, const BigInt& v, long N);

}  // namespace chatelet
