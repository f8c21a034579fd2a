#pragma once

#include "chatelet/factor.hpp"
#include "chatelet/multipoly.hpp"
#include "chatelet/ratfunc.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

struct UnsupportedRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateExtension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Degree-p Kummer extension Q(alpha^(1/p)) / Q.  The fixed generator sigma
/// of the Galois group sends theta = alpha^(1/p) to zeta_p * theta; all
/// invariant values in this artifact are relative to that choice (verdicts
/// do not depend on it).
struct KummerExt {
    unsigned p = 2;
    Rat alpha;
};

/// Degree-p Artin-Schreier extension k[T]/(T^p - T - gamma), char k = p.
/// The fixed generator sigma sends theta to theta + 1.
struct ArtinSchreierExt {
    unsigned p = 2;
    RatFunc gamma;
};

inline bool is_pth_power_rat(const Rat& x, unsigned p) {
    if (x.is_zero()) return true;
    if (p % 2 == 0 && x.sign() < 0) return false;
    BigInt n = abs(x.num()), d = x.den();
    BigInt r;
    bool nok = mpz_root(r.get_mpz_t(), n.get_mpz_t(), p) != 0;
    bool dok = mpz_root(r.get_mpz_t(), d.get_mpz_t(), p) != 0;
    return nok && dok;
}

/// Validates alpha not in (Q^x)^p; throws DegenerateExtension otherwise.
inline void validate(const KummerExt& e) {
    if (!is_prime(BigInt(e.p))) throw std::invalid_argument("KummerExt: p must be prime");
    if (e.alpha.is_zero()) throw DegenerateExtension("KummerExt: alpha must be nonzero");
    if (is_pth_power_rat(e.alpha, e.p))
        throw DegenerateExtension("KummerExt: alpha is a p-th power, extension is split");
}

/// The Artin-Schreier polynomial T^p - T - gamma over k.
inline Poly<RatFunc> artin_schreier_poly(const ArtinSchreierExt& e) {
    RatFunc one = RatFunc::with_field(e.gamma.field(), 1);
    std::vector<RatFunc> c((size_t)e.p + 1, one.zero());
    c[0] = -e.gamma;
    c[1] = -one;
    c[e.p] = one;
    return Poly<RatFunc>(std::move(c));
}

/// Validates T^p - T - gamma irreducible (equivalently: no root in k, since
/// p is prime); throws DegenerateExtension if the extension is split.
inline void validate(const ArtinSchreierExt& e) {
    if (!e.gamma.field()) throw std::invalid_argument("ArtinSchreierExt: gamma needs a field");
    if (e.gamma.field()->p != e.p)
        throw std::invalid_argument("ArtinSchreierExt: p must equal the characteristic");
    if (e.gamma.is_zero()) throw DegenerateExtension("ArtinSchreierExt: gamma in image of ℘");
    if (!ratfunc_roots(artin_schreier_poly(e)).empty())
        throw DegenerateExtension("ArtinSchreierExt: gamma in image of ℘, extension is split");
}

namespace detail {

/// Rows of the power-basis reduction: theta^k as a vector over the basis
/// 1, theta, .., theta^(p-1), for k = 0 .. 2p-2.
template <class K>
std::vector<std::vector<K>> theta_power_table(unsigned p, const std::vector<K>& min_poly_tail) {
    // min_poly_tail: coefficients c_0..c_(p-1) with theta^p = c_0 + c_1 theta + ...
    const K zero = min_poly_tail[0].zero();
    const K one = min_poly_tail[0].one();
    std::vector<std::vector<K>> pow;
    for (unsigned k = 0; k < p; ++k) {
        std::vector<K> row(p, zero);
        row[k] = one;
        pow.push_back(row);
    }
    for (unsigned k = p; k <= 2 * p - 2; ++k) {
        const std::vector<K>& prev = pow[k - 1];
        std::vector<K> row(p, zero);
        // theta * prev: shift, then reduce the overflow through theta^p
        K top = prev[p - 1];
        for (unsigned i = p - 1; i >= 1; --i) row[i] = prev[i - 1];
        row[0] = zero;
        for (unsigned i = 0; i < p; ++i) row[i] = row[i] + top * min_poly_tail[i];
        pow.push_back(row);
    }
    return pow;
}

template <class K>
MultiPoly<K> norm_form_from_table(unsigned p, const std::vector<std::vector<K>>& pow) {
    const K zero = pow[0][0].zero();
    std::vector<std::vector<MultiPoly<K>>> M(
        p, std::vector<MultiPoly<K>>(p, MultiPoly<K>::zero_like(p)));
    // column c holds the coordinates of (sum_i z_i theta^(i-1)) * theta^c
    for (unsigned c = 0; c < p; ++c)
        for (unsigned i = 0; i < p; ++i) {
            // z_(i+1) contributes theta^(i+c)
            const std::vector<K>& red = pow[i + c];
            for (unsigned r = 0; r < p; ++r) {
                if (red[r].is_zero()) continue;
                M[r][c] = M[r][c] + MultiPoly<K>::variable(p, i, red[r].one()) * red[r];
            }
        }
    (void)zero;
    return multipoly_det(M);
}

}  // namespace detail

/// Norm form of the Kummer extension in the power basis of theta = alpha^(1/p):
/// det of the multiplication matrix of z1 + z2 theta + ... + zp theta^(p-1).
inline MultiPoly<Rat> norm_form(const KummerExt& e) {
    validate(e);
    std::vector<Rat> tail((size_t)e.p, Rat(0));
    tail[0] = e.alpha;  // theta^p = alpha
    auto pow = detail::theta_power_table(e.p, tail);
    return detail::norm_form_from_table(e.p, pow);
}

/// Norm form of the Artin-Schreier extension (theta^p = theta + gamma).
inline MultiPoly<RatFunc> norm_form(const ArtinSchreierExt& e) {
    validate(e);
    RatFunc one = RatFunc::with_field(e.gamma.field(), 1);
    std::vector<RatFunc> tail((size_t)e.p, one.zero());
    tail[0] = e.gamma;
    tail[1] = one;
    auto pow = detail::theta_power_table(e.p, tail);
    return detail::norm_form_from_table(e.p, pow);
}

/// Multiplication matrix of u = sum z_i theta^(i-1) evaluated at a concrete
/// vector; feeding it to field_det gives the independent norm oracle.
template <class K>
std::vector<std::vector<K>> norm_matrix_at(unsigned p, const std::vector<K>& tail,
                                           const std::vector<K>& z) {
    auto pow = detail::theta_power_table(p, tail);
    std::vector<std::vector<K>> M(p, std::vector<K>(p, tail[0].zero()));
    for (unsigned c = 0; c < p; ++c)
        for (unsigned i = 0; i < p; ++i) {
            const std::vector<K>& red = pow[i + c];
            for (unsigned r = 0; r < p; ++r) M[r][c] = M[r][c] + z[i] * red[r];
        }
    return M;
}

inline std::vector<Rat> kummer_tail(const KummerExt& e) {
    std::vector<Rat> tail((size_t)e.p, Rat(0));
    tail[0] = e.alpha;
    return tail;
}
inline std::vector<RatFunc> artin_schreier_tail(const ArtinSchreierExt& e) {
    RatFunc one = RatFunc::with_field(e.gamma.field(), 1);
    std::vector<RatFunc> tail((size_t)e.p, one.zero());
    tail[0] = e.gamma;
    tail[1] = one;
    return tail;
}

}  // namespace chatelet
