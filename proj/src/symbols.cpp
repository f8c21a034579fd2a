#include "chatelet/symbols.hpp"

namespace chatelet {

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for an odd 2-adic unit, read off u mod 8
unsigned eps2(const BigInt& u_mod8) { return (((unsigned long)u_mod8.get_ui() - 1) / 2) % 2; }
unsigned omega2(const BigInt& u_mod8) {
    unsigned long u = u_mod8.get_ui();
    return ((u * u - 1) / 8) % 2;
}

}  // namespace

InvariantValue hilbert_symbol(const Rat& a, const Rat& b, const BigInt& v) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("hilbert_symbol: zero argument");
    if (!is_prime(v)) throw std::invalid_argument("hilbert_symbol: v must be prime");
    long alpha = *valuation(a, v), beta = *valuation(b, v);
    Rat u = unit_part(a, v), w = unit_part(b, v);
    int sign;
    if (v == 2) {
        BigInt u8 = residue_mod(u, 2, 3), w8 = residue_mod(w, 2, 3);
        unsigned e = eps2(u8) * eps2(w8) + (unsigned)(alpha & 1) * omega2(w8) +
                     (unsigned)(beta & 1) * omega2(u8);
        sign = (e % 2) ? -1 : +1;
    } else {
        int lu = legendre(residue_mod(u, v, 1), v);
        int lw = legendre(residue_mod(w, v, 1), v);
        long eps = ((v - 1) / 2 % 2 == 1) ? 1 : 0;  // (v-1)/2 mod 2
        sign = 1;
        if ((alpha & 1) && (beta & 1) && eps) sign = -sign;
        if (beta & 1) sign *= lu;
        if (alpha & 1) sign *= lw;
    }
    return InvariantValue(sign == 1 ? 0 : 1, 2);
}

InvariantValue hilbert_symbol_real(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("hilbert_symbol: zero argument");
    return InvariantValue((a.sign() < 0 && b.sign() < 0) ? 1 : 0, 2);
}

}  // namespace chatelet
