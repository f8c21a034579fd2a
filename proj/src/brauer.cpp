#include "chatelet/brauer.hpp"

#include <set>

namespace chatelet {

namespace {

using Vec = std::vector<unsigned>;

Vec add_mod(const Vec& a, const Vec& b, unsigned p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

// subgroup generated inside (Z/p)^m, by closure
// canonical order on exponent vectors: lexicographic with the first factor
// most significant, i.e. compare from the last index down ((1,0) < (0,1));
// keeps class representatives supported on the earliest factors
bool canon_less(const Vec& a, const Vec& b) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::set<Vec> span_of(const std::vector<Vec>& gens, unsigned p, unsigned m) {
    std::set<Vec> S{Vec(m, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> cur(S.begin(), S.end());
        for (const auto& x : cur)
            for (const auto& g : gens) {
                Vec y = add_mod(x, g, p);
                if (S.insert(y).second) grew = true;
            }
    }
    return S;
}

}  // namespace

BrauerQuotient brauer_quotient(unsigned p, const std::vector<long>& degrees,
                               const std::vector<bool>& flags) {
    if (!is_prime(BigInt(p))) throw std::invalid_argument("brauer_quotient: p must be prime");
    if (degrees.size() != flags.size())
        throw std::invalid_argument("brauer_quotient: degrees/flags size mismatch");
    unsigned m = (unsigned)degrees.size();
    if (m == 0) throw std::invalid_argument("brauer_quotient: no factors");
    double total = 1;
    for (unsigned i = 0; i < m; ++i) total *= p;
    if (total > 2e6) throw std::invalid_argument("brauer_quotient: p^m too large to enumerate");

    BrauerQuotient q;
    q.p = p;
    q.m = m;
    q.degrees = degrees;
    q.flags = flags;

    long degsum = 0;
    for (long d : degrees) degsum += d;
    if (degsum % (long)p != 0)
        throw std::invalid_argument("brauer_quotient: sum of degrees must be divisible by p");
    for (unsigned i = 0; i < m; ++i)
        if (flags[i] && degrees[i] % (long)p != 0)
            throw std::invalid_argument(
                "brauer_quotient: a factor with splitting field K must have degree divisible by p");

    q.relation_generators.push_back(Vec(m, 1));
    for (unsigned i = 0; i < m; ++i)
        if (flags[i]) {
            Vec e(m, 0);
            e[i] = 1;
            q.relation_generators.push_back(e);
        }

    // enumerate the kernel
    std::vector<Vec> kernel;
    Vec v(m, 0);
    while (true) {
        long s = 0;
        for (unsigned i = 0; i < m; ++i) s += (long)v[i] * degrees[i];
        if (s % (long)p == 0) kernel.push_back(v);
        unsigned i = 0;
        for (; i < m; ++i) {
            if (++v[i] < p) break;
            v[i] = 0;
        }
        if (i == m) break;
    }

    std::set<Vec> R = span_of(q.relation_generators, p, m);
    // cosets: canonical representative = lex-smallest member
    std::set<Vec> seen;
    for (const auto& x : kernel) {
        if (seen.count(x)) continue;
        Vec best = x;
        for (const auto& r : R) {
            Vec y = add_mod(x, r, p);
            seen.insert(y);
            if (canon_less(y, best)) best = y;
        }
        q.representatives.push_back(best);
    }
    std::sort(q.representatives.begin(), q.representatives.end(), canon_less);
    q.order = q.representatives.size();

    // greedy minimal generating set of the quotient
    std::set<Vec> S = R;
    for (const auto& r : q.representatives) {
        if (S.size() >= kernel.size()) break;
        if (S.count(r)) continue;
        q.generators.push_back(r);
        std::vector<Vec> gens = q.relation_generators;
        gens.insert(gens.end(), q.generators.begin(), q.generators.end());
        S = span_of(gens, p, m);
    }
    return q;
}

std::vector<unsigned> BrauerQuotient::canonicalize(const Vec& exps) const {
    if (exps.size() != m) throw std::invalid_argument("canonicalize: wrong length");
    std::set<Vec> R = span_of(relation_generators, p, m);
    Vec best = exps;
    for (auto& x : best) x %= p;
    Vec start = best;
    for (const auto& r : R) {
        Vec y = add_mod(start, r, p);
        if (canon_less(y, best)) best = y;
    }
    return best;
}

AvoidingRep representative_avoiding(const BrauerQuotient& q, const std::vector<unsigned>& exps,
                                    const std::vector<size_t>& forbidden) {
    if (exps.size() != q.m) throw std::invalid_argument("representative_avoiding: wrong length");
    for (unsigned e = 0; e < q.p; ++e) {
        Vec cand(q.m);
        for (unsigned i = 0; i < q.m; ++i) cand[i] = (exps[i] + e) % q.p;
        bool ok = true;
        for (size_t i : forbidden)
            if (cand[i] != 0) ok = false;
        if (ok) return AvoidingRep{cand, e};
    }
    throw NoValidRepresentative("representative_avoiding: no shift avoids the forbidden support");
}

}  // namespace chatelet
