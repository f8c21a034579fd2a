#pragma once

#include <algorithm>
#include <functional>

#include "chatelet/finite_field.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/quotient_field.hpp"
#include "chatelet/ratfunc.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

struct UnsupportedDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Complete factorization P = content * prod(factors), content = lc(P),
/// factors monic irreducible and pairwise distinct (input is separable).
template <class K>
struct Factorization {
    K content;
    std::vector<Poly<K>> factors;

    Poly<K> expand() const {
        Poly<K> r = Poly<K>::constant(content);
        for (const auto& f : factors) r = r * f;
        return r;
    }
};

/// Canonical order: by degree, then coefficient-wise from the top.
template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.coeffs().size(); i-- > 0;) {
        const K& x = a.coeffs()[i];
        const K& y = b.coeffs()[i];
        if (elem_less(x, y)) return true;
        if (elem_less(y, x)) return false;
    }
    return false;
}

template <class K>
void sort_factors(std::vector<Poly<K>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const Poly<K>& a, const Poly<K>& b) { return poly_less(a, b); });
}

template <class K>
Poly<K> powmod(const Poly<K>& base, BigInt e, const Poly<K>& mod) {
    if (mod.degree() < 1) throw std::invalid_argument("powmod: modulus must have degree >= 1");
    Poly<K> b = base % mod;
    Poly<K> r = Poly<K>::constant(mod.lc().one());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

namespace detail {

/// Equal-degree splitting of a monic squarefree product of degree-d
/// irreducibles; deterministic trial sequence over polynomials of degree < 2d.
template <class K>
void edf(const Poly<K>& f, long d, std::vector<Poly<K>>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const K like = f.lc().zero();
    const BigInt Q = field_cardinality(f.lc());
    const unsigned p = field_char(f.lc());
    const bool char2 = (p == 2);
    unsigned long qsz = Q.fits_ulong_p() ? Q.get_ui() : 0;
    if (qsz == 0) throw std::domain_error("edf: field too large for trial enumeration");

    const Poly<K> x = Poly<K>::x(like);
    // trial polynomials of degree < 2d, enumerated by a base-q counter
    std::vector<unsigned long> ctr(2 * (size_t)d, 0);
    auto advance = [&]() {
        for (size_t i = 0; i < ctr.size(); ++i) {
            if (++ctr[i] < qsz) return true;
            ctr[i] = 0;
        }
        return false;
    };
    // skip the constants (they never split)
    ctr[0] = qsz - 1;

    for (unsigned long tries = 0; tries < 100000; ++tries) {
        if (!advance()) throw std::logic_error("edf: trial space exhausted");
        std::vector<K> tc;
        tc.reserve(ctr.size());
        for (auto idx : ctr) tc.push_back(element_from_index(like, idx));
        Poly<K> T(std::move(tc));
        Poly<K> w;
        if (char2) {
            // trace map: T + T^2 + T^4 + ... over F_{2^(m d)}
            long md = 0;
            for (BigInt t = Q; t > 1; t /= 2) ++md;
            md *= d;
            Poly<K> acc = T % f, term = T % f;
            for (long i = 1; i < md; ++i) {
                term = (term * term) % f;
                acc = (acc + term) % f;
            }
            w = acc;
        } else {
            BigInt e = 1;
            for (long i = 0; i < d; ++i) e *= Q;
            e = (e - 1) / 2;
            w = powmod(T, e, f) - Poly<K>::constant(like.one());
        }
        Poly<K> g = poly_gcd(w, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out);
            edf(f / g, d, out);
            return;
        }
    }
    throw std::logic_error("edf: no splitter found");
}

}  // namespace detail

/// Cantor-Zassenhaus over a finite field (distinct-degree, then deterministic
/// equal-degree splitting).  Input must be separable.
template <class K>
Factorization<K> factor_over_finite_field(const Poly<K>& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization<K> out;
    out.content = f_in.lc();
    if (f_in.degree() == 0) return out;
    if (!is_separable(f_in)) throw std::invalid_argument("factor: input not separable");
    Poly<K> f = monic(f_in);
    if (f.degree() == 1) {
        out.factors.push_back(f);
        return out;
    }
    const K like = f.lc().zero();
    const BigInt Q = field_cardinality(f.lc());
    const Poly<K> x = Poly<K>::x(like);

    Poly<K> res = f;
    Poly<K> h = x % res;  // x^(Q^d) mod res, incrementally
    long d = 0;
    while (2 * (d + 1) <= res.degree()) {
        ++d;
        h = powmod(h, Q, res);
        Poly<K> g = poly_gcd(h - x, res);
        if (g.degree() > 0) {
            detail::edf(g, d, out.factors);
            res = res / g;
            if (res.degree() == 0) break;
            h = h % res;
        }
    }
    if (res.degree() > 0) out.factors.push_back(res);
    sort_factors(out.factors);
    return out;
}

inline Factorization<FFElem> factor(const Poly<FFElem>& f) { return factor_over_finite_field(f); }
inline Factorization<QuotElem> factor(const Poly<QuotElem>& f) { return factor_over_finite_field(f); }

/// Rabin irreducibility test.
template <class K>
bool is_irreducible(const Poly<K>& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const K like = f.lc().zero();
    const BigInt Q = field_cardinality(f.lc());
    const Poly<K> x = Poly<K>::x(like);
    long n = f.degree();
    Poly<K> fm = monic(f);
    BigInt qn = 1;
    for (long i = 0; i < n; ++i) qn *= Q;
    if (!(powmod(x, qn, fm) == x % fm)) return false;
    for (long r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool is_pr = true;
        for (long s = 2; s < r; ++s)
            if (r % s == 0) is_pr = false;
        if (!is_pr) continue;
        BigInt qm = 1;
        for (long i = 0; i < n / r; ++i) qm *= Q;
        if (poly_gcd(powmod(x, qm, fm) - x, fm).degree() != 0) return false;
    }
    return true;
}

/// Monic polynomial of the given degree from a lexicographic index
/// (lower-degree coefficients run fastest).
template <class K>
Poly<K> monic_from_index(const K& like, long degree, unsigned long idx) {
    unsigned long q = field_cardinality(like).get_ui();
    std::vector<K> c((size_t)degree + 1, like.zero());
    c[(size_t)degree] = like.one();
    for (long i = 0; i < degree; ++i) {
        c[(size_t)i] = element_from_index(like, idx % q);
        idx /= q;
    }
    return Poly<K>(std::move(c));
}

/// Deterministic stream of monic irreducibles ordered by (degree, index).
template <class K>
class IrreducibleStream {
public:
    explicit IrreducibleStream(K like, long start_degree = 1)
        : like_(like.zero()), deg_(start_degree) {
        q_ = field_cardinality(like).get_ui();
        count_ = ipow(q_, (unsigned long)deg_);
    }
    Poly<K> next() {
        while (true) {
            if (idx_ == count_) {
                ++deg_;
                idx_ = 0;
                count_ = ipow(q_, (unsigned long)deg_);
            }
            Poly<K> f = monic_from_index(like_, deg_, idx_++);
            if (is_irreducible(f)) return f;
        }
    }

private:
    K like_;
    long deg_;
    unsigned long q_ = 0, idx_ = 0, count_ = 0;
    static unsigned long ipow(unsigned long b, unsigned long e) {
        unsigned long r = 1;
        while (e--) r *= b;
        return r;
    }
};

/// Squarefree decomposition over a finite field (char p aware: a vanishing
/// derivative means f = g(x^p) = (entrywise p-th root)^p).  Returns monic
/// squarefree parts with multiplicities; product reproduces monic(f).
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& f_in) {
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = monic(f_in);
    if (f.degree() <= 0) return out;
    const unsigned p = field_char(f.lc());

    std::function<void(const Poly<K>&, int)> go = [&](const Poly<K>& g, int mult) {
        if (g.degree() <= 0) return;
        Poly<K> gp = derivative(g);
        if (gp.is_zero()) {
            // g = h(x^p); take p-th roots of the surviving coefficients
            std::vector<K> hc;
            for (long i = 0; i <= g.degree(); i += p) hc.push_back(g.coeffs()[(size_t)i].pth_root());
            go(Poly<K>(std::move(hc)), mult * (int)p);
            return;
        }
        Poly<K> c = poly_gcd(g, gp);
        Poly<K> w = g / c;
        int i = 1;
        while (w.degree() > 0) {
            Poly<K> y = poly_gcd(w, c);
            Poly<K> z = w / y;
            if (z.degree() > 0) out.emplace_back(z, mult * i);
            c = c / y;
            w = y;
            ++i;
        }
        if (c.degree() > 0) go(c, mult);  // remaining p-th power part
    };
    go(f, 1);
    return out;
}

/// Distinct monic irreducible divisors of a nonzero polynomial over F_q.
template <class K>
std::vector<Poly<K>> poly_support(const Poly<K>& f) {
    std::vector<Poly<K>> out;
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        (void)mult;
        auto fac = factor_over_finite_field(part);
        for (auto& g : fac.factors) out.push_back(g);
    }
    sort_factors(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Factorization over Q via factorization mod several small primes and
/// Hensel lifting with subset recombination; supported up to degree 8.
Factorization<Rat> factor(const Poly<Rat>& f);

/// Factorization over F_q(t) in x (denominators cleared, then pi-adic
/// lifting over F_q[t] with subset recombination).
Factorization<RatFunc> factor(const Poly<RatFunc>& f);

/// Roots in F_q(t) of a polynomial with F_q(t) coefficients (rational-root
/// enumeration over monic divisors of the cleared leading/trailing
/// coefficients; complete).
std::vector<RatFunc> ratfunc_roots(const Poly<RatFunc>& f);

}  // namespace chatelet
