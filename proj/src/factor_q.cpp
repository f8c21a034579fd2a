#include "chatelet/factor.hpp"

namespace chatelet {

namespace {

// dense Z[x] with BigInt coefficients, low degree first
using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(const ZPoly& a, const BigInt& m) {
    ZPoly r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    for (auto& c : r)
        if (c < 0) c += m;
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        BigInt x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        x %= m;
        if (x < 0) x += m;
        r[i] = x;
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        BigInt x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x % m;
    }
    ztrim(r);
    return r;
}

// division by a monic polynomial, coefficients mod m
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly& q, ZPoly& r) {
    if (b.empty() || b.back() != 1) throw std::logic_error("zdivmod_monic: divisor must be monic");
    r = zreduce(a, m);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, BigInt(0));
    while (r.size() >= b.size() && !r.empty()) {
        BigInt c = r.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            BigInt x = (r[shift + i] - c * b[i]) % m;
            if (x < 0) x += m;
            r[shift + i] = x;
        }
        ztrim(r);
    }
}

struct LiftPair {
    ZPoly g, h, s, t;
};

// one quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// to the same congruences mod m^2; f, g, h monic
LiftPair hensel_step(const ZPoly& f, const LiftPair& in, const BigInt& m) {
    BigInt m2 = m * m;
    ZPoly e = zsub(zreduce(f, m2), zmul(in.g, in.h, m2), m2);
    ZPoly q, r;
    zdivmod_monic(zmul(in.t, e, m2), in.g, m2, q, r);
    LiftPair out;
    out.g = zadd(in.g, r, m2);
    out.h = zadd(in.h, zadd(zmul(in.s, e, m2), zmul(q, in.h, m2), m2), m2);
    ZPoly delta = zsub(zadd(zmul(in.s, out.g, m2), zmul(in.t, out.h, m2), m2), ZPoly{BigInt(1)}, m2);
    ZPoly q2, r2;
    zdivmod_monic(zmul(in.s, delta, m2), out.h, m2, q2, r2);
    out.s = zsub(in.s, r2, m2);
    out.t = zsub(in.t, zadd(zmul(in.t, delta, m2), zmul(q2, out.g, m2), m2), m2);
    return out;
}

ZPoly from_ff(const Poly<FFElem>& f) {
    ZPoly r;
    for (const auto& c : f.coeffs()) r.push_back(BigInt(c.coeffs().empty() ? 0 : c.coeffs()[0]));
    ztrim(r);
    return r;
}

Poly<FFElem> to_ff(const ZPoly& f, const FqCtxPtr& F) {
    std::vector<FFElem> c;
    for (const auto& x : f) c.push_back(FFElem::from_int_in(F, (long)mpz_fdiv_ui(x.get_mpz_t(), F->p)));
    return Poly<FFElem>(std::move(c));
}

// lift the mod-l factorization of monic f to mod l^(2^k) >= l^e, recursively
void lift_tree(const ZPoly& f, const std::vector<Poly<FFElem>>& base, const BigInt& ell,
               const BigInt& target, std::vector<ZPoly>& out) {
    if (base.size() == 1) {
        out.push_back(zreduce(f, target));
        return;
    }
    size_t half = base.size() / 2;
    std::vector<Poly<FFElem>> L(base.begin(), base.begin() + half);
    std::vector<Poly<FFElem>> R(base.begin() + half, base.end());
    Poly<FFElem> G = L[0];
    for (size_t i = 1; i < L.size(); ++i) G = G * L[i];
    Poly<FFElem> H = R[0];
    for (size_t i = 1; i < R.size(); ++i) H = H * R[i];
    Poly<FFElem> S, T;
    Poly<FFElem> one = poly_ext_gcd(G, H, S, T);
    if (one.degree() != 0) throw std::logic_error("lift_tree: factors not coprime mod l");

    LiftPair cur{from_ff(G), from_ff(H), from_ff(S), from_ff(T)};
    BigInt m = ell;
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    cur.g = zreduce(cur.g, target);
    cur.h = zreduce(cur.h, target);
    lift_tree(cur.g, L, ell, target, out);
    lift_tree(cur.h, R, ell, target, out);
}

Rat zpoly_coeff_rat(const ZPoly& f, size_t i) { return i < f.size() ? Rat(f[i]) : Rat(0); }

Poly<Rat> to_rat_poly(const ZPoly& f) {
    std::vector<Rat> c;
    for (const auto& x : f) c.push_back(Rat(x));
    return Poly<Rat>(std::move(c));
}

}  // namespace

Factorization<Rat> factor(const Poly<Rat>& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization<Rat> out;
    out.content = f_in.lc();
    if (f_in.degree() == 0) return out;
    if (f_in.degree() > 8) throw UnsupportedDegree("factor over Q: degree > 8 not supported");
    if (!is_separable(f_in)) throw std::invalid_argument("factor: input not separable");
    Poly<Rat> fm = monic(f_in);
    if (f_in.degree() == 1) {
        out.factors.push_back(fm);
        return out;
    }

    // primitive integer model
    BigInt den = 1;
    for (const auto& c : f_in.coeffs()) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        den = den / g * c.den();
    }
    ZPoly zf;
    for (const auto& c : f_in.coeffs()) zf.push_back(c.num() * (den / c.den()));
    BigInt cont = 0;
    for (const auto& c : zf) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
    for (auto& c : zf) c /= cont;
    if (zf.back() < 0)
        for (auto& c : zf) c = -c;

    // pick the prime with the fewest modular factors among the first few good ones
    Poly<Rat> frat = to_rat_poly(zf);
    Rat disc_res = resultant(frat, derivative(frat));
    BigInt bad = abs(disc_res.num() * zf.back());
    std::vector<std::pair<BigInt, Factorization<FFElem>>> candidates;
    BigInt ell = 2;
    while (candidates.size() < 3) {
        ell = next_prime(ell);
        if (mpz_divisible_p(bad.get_mpz_t(), ell.get_mpz_t())) continue;
        auto F = FqCtx::make((unsigned)ell.get_ui());
        auto ffac = factor_over_finite_field(to_ff(zf, F));
        candidates.emplace_back(ell, std::move(ffac));
        if (candidates.back().second.factors.size() == 1) break;  // irreducible mod ell
    }
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.second.factors.size() < b.second.factors.size();
                                 });
    ell = best->first;
    std::vector<Poly<FFElem>> modular = best->second.factors;
    if (modular.size() == 1) {
        out.factors.push_back(fm);
        return out;
    }

    // Landau-Mignotte style bound: factors of zf have |coeff| <= 2^n sqrt(n+1) H |lc|
    long n = (long)zf.size() - 1;
    BigInt H = 0;
    for (const auto& c : zf) H = std::max(H, BigInt(abs(c)));
    BigInt B = (pow_bigint(BigInt(2), (unsigned long)n) * (n + 1) * H * abs(zf.back())) * 2 + 1;
    BigInt target = ell;
    while (target < B) target *= target;

    // monic model mod target and lift
    BigInt lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), zf.back().get_mpz_t(), target.get_mpz_t()) == 0)
        throw std::logic_error("factor: leading coefficient not invertible");
    ZPoly fmonic = zf;
    for (auto& c : fmonic) c = c * lcinv % target;
    fmonic = zreduce(fmonic, target);
    std::vector<ZPoly> lifted;
    lift_tree(fmonic, modular, ell, target, lifted);

    // subset recombination against the rational polynomial
    std::vector<bool> used(lifted.size(), false);
    Poly<Rat> rem = fm;
    size_t remaining = lifted.size();
    for (size_t sz = 1; sz <= lifted.size() / 2 + 1; ++sz) {
        // iterate index subsets of size sz in lexicographic order
        std::vector<size_t> idx(sz);
        std::function<bool(size_t, size_t)> scan = [&](size_t pos, size_t start) -> bool {
            if (pos == sz) {
                ZPoly cand{zf.back() % target};
                for (size_t i : idx) cand = zmul(cand, lifted[i], target);
                // symmetric representatives, then primitive part
                Poly<Rat> crat;
                {
                    std::vector<Rat> cc;
                    for (auto& x : cand) {
                        BigInt y = x;
                        if (y * 2 > target) y -= target;
                        cc.emplace_back(y);
                    }
                    crat = Poly<Rat>(std::move(cc));
                }
                if (crat.is_zero()) return false;
                Poly<Rat> q, r;
                divmod(rem, monic(crat), q, r);
                if (!r.is_zero()) return false;
                out.factors.push_back(monic(crat));
                rem = q;
                for (size_t i : idx) used[i] = true;
                remaining -= sz;
                return true;
            }
            for (size_t i = start; i < lifted.size(); ++i) {
                if (used[i]) continue;
                idx[pos] = i;
                if (scan(pos + 1, i + 1)) return true;
            }
            return false;
        };
        while (remaining >= sz && scan(0, 0)) {
            // factor extracted; retry the same subset size
        }
        if (remaining == 0) break;
    }
    if (rem.degree() > 0) out.factors.push_back(rem);
    sort_factors(out.factors);

    // exactness audit: content * product must reproduce the input
    if (!(out.expand() == f_in)) throw std::logic_error("factor over Q: recombination failed");
    return out;
}

}  // namespace chatelet
