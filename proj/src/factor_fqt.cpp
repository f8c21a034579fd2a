#include "chatelet/factor.hpp"

namespace chatelet {

namespace {

// polynomial in x with F_q[t] coefficients, low x-degree first
using FtPoly = std::vector<PolyFq>;

void fttrim(FtPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FtPoly ftreduce(const FtPoly& a, const PolyFq& m) {
    FtPoly r = a;
    for (auto& c : r) c = c % m;
    fttrim(r);
    return r;
}

FtPoly ftmul(const FtPoly& a, const FtPoly& b, const PolyFq& m) {
    if (a.empty() || b.empty()) return {};
    FtPoly r(a.size() + b.size() - 1, PolyFq());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    fttrim(r);
    return r;
}

FtPoly ftadd(const FtPoly& a, const FtPoly& b, const PolyFq& m) {
    FtPoly r(std::max(a.size(), b.size()), PolyFq());
    for (size_t i = 0; i < r.size(); ++i) {
        PolyFq x;
        if (i < a.size()) x = x + a[i];
        if (i < b.size()) x = x + b[i];
        r[i] = x % m;
    }
    fttrim(r);
    return r;
}

FtPoly ftsub(const FtPoly& a, const FtPoly& b, const PolyFq& m) {
    FtPoly r(std::max(a.size(), b.size()), PolyFq());
    for (size_t i = 0; i < r.size(); ++i) {
        PolyFq x;
        if (i < a.size()) x = x + a[i];
        if (i < b.size()) x = x - b[i];
        r[i] = x % m;
    }
    fttrim(r);
    return r;
}

bool ft_is_monic(const FtPoly& a) {
    return !a.empty() && a.back().degree() == 0 && a.back().lc().is_one();
}

// division by a polynomial monic in x, coefficients mod m
void ftdivmod_monic(const FtPoly& a, const FtPoly& b, const PolyFq& m, FtPoly& q, FtPoly& r) {
    if (!ft_is_monic(b)) throw std::logic_error("ftdivmod_monic: divisor must be monic in x");
    r = ftreduce(a, m);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, PolyFq());
    while (r.size() >= b.size() && !r.empty()) {
        PolyFq c = r.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] = (r[shift + i] - c * b[i]) % m;
        fttrim(r);
    }
}

struct LiftPairFt {
    FtPoly g, h, s, t;
};

LiftPairFt hensel_step_ft(const FtPoly& f, const LiftPairFt& in, const PolyFq& m) {
    PolyFq m2 = m * m;
    FtPoly e = ftsub(ftreduce(f, m2), ftmul(in.g, in.h, m2), m2);
    FtPoly q, r;
    ftdivmod_monic(ftmul(in.t, e, m2), in.g, m2, q, r);
    LiftPairFt out;
    out.g = ftadd(in.g, r, m2);
    out.h = ftadd(in.h, ftadd(ftmul(in.s, e, m2), ftmul(q, in.h, m2), m2), m2);
    FtPoly one{PolyFq::constant(in.g.back().lc().one())};
    FtPoly delta = ftsub(ftadd(ftmul(in.s, out.g, m2), ftmul(in.t, out.h, m2), m2), one, m2);
    FtPoly q2, r2;
    ftdivmod_monic(ftmul(in.s, delta, m2), out.h, m2, q2, r2);
    out.s = ftsub(in.s, r2, m2);
    out.t = ftsub(in.t, ftadd(ftmul(in.t, delta, m2), ftmul(q2, out.g, m2), m2), m2);
    return out;
}

FtPoly from_quot(const Poly<QuotElem>& f) {
    FtPoly r;
    for (const auto& c : f.coeffs()) r.push_back(lift(c));
    fttrim(r);
    return r;
}

Poly<QuotElem> to_quot(const FtPoly& f, const QuotCtxPtr& C) {
    std::vector<QuotElem> c;
    for (const auto& x : f) c.push_back(reduce_mod(C, x));
    return Poly<QuotElem>(std::move(c));
}

void lift_tree_ft(const FtPoly& f, const std::vector<Poly<QuotElem>>& base, const PolyFq& pi,
                  const PolyFq& target, std::vector<FtPoly>& out) {
    if (base.size() == 1) {
        out.push_back(ftreduce(f, target));
        return;
    }
    size_t half = base.size() / 2;
    std::vector<Poly<QuotElem>> L(base.begin(), base.begin() + half);
    std::vector<Poly<QuotElem>> R(base.begin() + half, base.end());
    Poly<QuotElem> G = L[0];
    for (size_t i = 1; i < L.size(); ++i) G = G * L[i];
    Poly<QuotElem> H = R[0];
    for (size_t i = 1; i < R.size(); ++i) H = H * R[i];
    Poly<QuotElem> S, T;
    Poly<QuotElem> one = poly_ext_gcd(G, H, S, T);
    if (one.degree() != 0) throw std::logic_error("lift_tree_ft: factors not coprime mod pi");

    LiftPairFt cur{from_quot(G), from_quot(H), from_quot(S), from_quot(T)};
    PolyFq m = pi;
    while (m.degree() < target.degree()) {
        cur = hensel_step_ft(f, cur, m);
        m = m * m;
    }
    cur.g = ftreduce(cur.g, target);
    cur.h = ftreduce(cur.h, target);
    lift_tree_ft(cur.g, L, pi, target, out);
    lift_tree_ft(cur.h, R, pi, target, out);
}

Poly<RatFunc> to_ratfunc_poly(const FtPoly& f, const FqCtxPtr& F) {
    std::vector<RatFunc> c;
    for (const auto& x : f)
        c.push_back(x.is_zero() ? RatFunc::with_field(F, 0) : RatFunc(x));
    return Poly<RatFunc>(std::move(c));
}

// clear denominators and the t-content: returns primitive F in F_q[t][x]
FtPoly clear_to_primitive(const Poly<RatFunc>& f) {
    FqCtxPtr F = f.lc().field();
    PolyFq den = PolyFq::constant(FFElem::from_int_in(F, 1));
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        PolyFq g = poly_gcd(den, c.den());
        den = den * (c.den() / g);
    }
    FtPoly r;
    for (const auto& c : f.coeffs())
        r.push_back(c.is_zero() ? PolyFq() : c.num() * (den / c.den()));
    fttrim(r);
    PolyFq cont;
    for (const auto& c : r) cont = poly_gcd(cont, c);
    if (cont.degree() > 0)
        for (auto& c : r) c = c / cont;
    // normalize the leading x-coefficient to be monic in t
    FFElem s = r.back().lc().inv();
    for (auto& c : r) c = c * s;
    return r;
}

}  // namespace

Factorization<RatFunc> factor(const Poly<RatFunc>& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization<RatFunc> out;
    out.content = f_in.lc();
    if (f_in.degree() == 0) return out;
    if (!is_separable(f_in)) throw std::invalid_argument("factor: input not separable");
    Poly<RatFunc> fm = monic(f_in);
    if (f_in.degree() == 1) {
        out.factors.push_back(fm);
        return out;
    }
    FqCtxPtr F = f_in.lc().field();
    FFElem ffone = FFElem::from_int_in(F, 1);

    FtPoly Fp = clear_to_primitive(f_in);
    Poly<RatFunc> Fp_rf = to_ratfunc_poly(Fp, F);

    // resultant with the x-derivative controls the bad pi's
    RatFunc res = resultant(Fp_rf, derivative(Fp_rf));
    PolyFq bad = res.num() * Fp.back();

    IrreducibleStream<FFElem> primes(ffone);
    PolyFq pi;
    while (true) {
        pi = primes.next();
        if (valuation_at(bad, pi) == 0) break;
    }
    auto C = QuotCtx::make(F, pi);
    Poly<QuotElem> fbar = monic(to_quot(Fp, C));
    auto base = factor_over_finite_field(fbar);
    if (base.factors.size() == 1) {
        out.factors.push_back(fm);
        return out;
    }

    // lift far enough to recognize true coefficients: deg_t bound for
    // lc * (monic factor) is deg_t(lc) + deg_t(F)
    long degt = 0;
    for (const auto& c : Fp) degt = std::max(degt, c.degree());
    long bound = degt + Fp.back().degree() + 1;
    PolyFq target = pi;
    while (target.degree() < bound) target = target * target;

    // monic model mod target
    PolyFq lc = Fp.back();
    PolyFq u, v;
    PolyFq g = poly_ext_gcd(lc, target, u, v);
    if (g.degree() != 0) throw std::logic_error("factor fqt: lc not invertible mod pi");
    FtPoly fmonic;
    for (const auto& c : Fp) fmonic.push_back(c * u % target);
    fmonic = ftreduce(fmonic, target);

    std::vector<FtPoly> lifted;
    lift_tree_ft(fmonic, base.factors, pi, target, lifted);

    // subset recombination
    std::vector<bool> used(lifted.size(), false);
    Poly<RatFunc> rem = fm;
    size_t remaining = lifted.size();
    for (size_t sz = 1; sz <= lifted.size() / 2 + 1; ++sz) {
        std::vector<size_t> idx(sz);
        std::function<bool(size_t, size_t)> scan = [&](size_t pos, size_t start) -> bool {
            if (pos == sz) {
                FtPoly cand{lc % target};
                for (size_t i : idx) cand = ftmul(cand, lifted[i], target);
                // strip the t-content, then test division over F_q(t)
                PolyFq cont;
                for (const auto& c : cand) cont = poly_gcd(cont, c);
                if (cont.degree() > 0)
                    for (auto& c : cand) c = c / cont;
                Poly<RatFunc> crat = to_ratfunc_poly(cand, F);
                if (crat.is_zero()) return false;
                Poly<RatFunc> q, r;
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
        }
        if (remaining == 0) break;
    }
    if (rem.degree() > 0) out.factors.push_back(rem);
    sort_factors(out.factors);

    if (!(out.expand() == f_in)) throw std::logic_error("factor over F_q(t): recombination failed");
    return out;
}

std::vector<RatFunc> ratfunc_roots(const Poly<RatFunc>& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("ratfunc_roots: zero polynomial");
    std::vector<RatFunc> roots;
    if (f_in.degree() == 0) return roots;
    FqCtxPtr F = f_in.lc().field();
    FFElem ffone = FFElem::from_int_in(F, 1);
    RatFunc zero = RatFunc::with_field(F, 0);

    FtPoly G = clear_to_primitive(f_in);
    // strip x | G
    size_t strip = 0;
    while (strip < G.size() && G[strip].is_zero()) ++strip;
    if (strip > 0) {
        roots.push_back(zero);
        G.erase(G.begin(), G.begin() + strip);
    }
    if (G.size() < 2) return roots;

    auto divisors_of = [&](const PolyFq& h) {
        std::vector<PolyFq> divs{PolyFq::constant(ffone)};
        if (h.degree() > 0) {
            for (auto& [part, mult] : squarefree_decomposition(h)) {
                auto fac = factor_over_finite_field(part);
                for (auto& irr : fac.factors) {
                    std::vector<PolyFq> next;
                    for (const auto& d : divs) {
                        PolyFq acc = d;
                        for (int e = 0; e <= mult; ++e) {
                            next.push_back(acc);
                            if (e < mult) acc = acc * irr;
                        }
                    }
                    divs = std::move(next);
                }
            }
        }
        sort_factors(divs);
        divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
        return divs;
    };

    auto num_divs = divisors_of(G.front());
    auto den_divs = divisors_of(G.back());
    std::vector<FFElem> units;
    for (auto& e : all_elements(F))
        if (!e.is_zero()) units.push_back(e);

    for (const auto& r : num_divs)
        for (const auto& s : den_divs) {
            if (poly_gcd(r, s).degree() != 0) continue;
            for (const auto& lam : units) {
                RatFunc cand(r * lam, s);
                if (f_in.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end(), [](const RatFunc& a, const RatFunc& b) {
        return a.to_string() < b.to_string();
    });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace chatelet
