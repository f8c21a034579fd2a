#pragma once

#include "chatelet/invariant.hpp"
#include "chatelet/laurent.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

/// Hilbert symbol (a, b)_v at a finite prime v of Q, as a value in (1/2)Z/Z:
/// 0 iff z^2 = a x^2 + b y^2 has a nontrivial Q_v-point.  Classical case
/// split: odd v via Legendre symbols and valuations, v = 2 via the epsilon /
/// omega congruences.  Zero inputs are rejected.
InvariantValue hilbert_symbol(const Rat& a, const Rat& b, const BigInt& v);

/// Hilbert symbol at the real place: 1/2 iff a < 0 and b < 0.
InvariantValue hilbert_symbol_real(const Rat& a, const Rat& b);

/// Replace a by a representative of a + ℘(k_v) whose pole order is prime to
/// p or zero: repeatedly strips the top pole c*pi^(-mp) with the shift
/// a -= (c^(1/p) pi^(-m))^p - c^(1/p) pi^(-m).
template <class K>
LaurentSeries<K> artin_schreier_reduce(LaurentSeries<K> a, unsigned p) {
    while (!a.is_zero_to_precision() && a.valuation() < 0 && a.valuation() % (long)p == 0) {
        long m = a.valuation() / (long)p;
        K d = a.leading().pth_root();  // d^p = leading coefficient exactly
        LaurentSeries<K> y(d, m, {d}, a.precision());
        LaurentSeries<K> yp(d, (long)p * m, {a.leading()}, a.precision());
        a = a - yp + y;
    }
    return a;
}

/// Schmid residue symbol [a, b) = Tr_{F_v/F_p}(res(a db/b)) / p for the
/// Artin-Schreier cyclic algebra (chi_{K_a}, b) over F_v((pi)), char p.
/// a is first reduced mod ℘ so its pole order is prime to p or zero.
/// Throws InsufficientPrecision if the truncation cannot certify the
/// residue; zero b is rejected.
template <class K>
InvariantValue schmid_symbol(const LaurentSeries<K>& a_in, const LaurentSeries<K>& b, unsigned p) {
    if (b.is_zero_to_precision())
        throw std::invalid_argument("schmid_symbol: b must be nonzero");
    LaurentSeries<K> a = artin_schreier_reduce(a_in, p);
    if (a.is_zero_to_precision()) {
        // certified zero only if the window really reaches a = 0 usefully:
        // a == O(pi^N) with N >= 1 contributes no residue term
        if (a.precision() < 1)
            throw InsufficientPrecision("schmid_symbol: a known to too low precision");
        return InvariantValue(0, p);
    }
    LaurentSeries<K> dlog = b.derivative() / b;
    K r = (a * dlog).residue();
    long tr = r.trace_to_prime();
    return InvariantValue(tr, p);
}

}  // namespace chatelet
